"""
C-normal sections
=================

Build a five-dimensional section from a block C and four parameters, read the
parameters back, and certify that every Schur product C o X is singular.
"""

from crosssections import GeneralParams, GeneralSequence
from crosssections.general import (
    build_c_normal,
    c_block,
    connection_holds,
    recognize_c_normal,
    rho_of_deletion,
    schur_coefficient,
    schur_singular_identically,
    section,
)
from crosssections.subspaces import adjacency_equal

# points with c_hat[i, j] = i + j
seq = GeneralSequence(0, [-k for k in range(1, 8)], list(range(1, 8)))
c = c_block(seq, 1)
print("C at r=1:")
print(c)

p = GeneralParams(p1=2, p2=3, q2=5, q3=7)
s = build_c_normal(c, p)
for m in s.basis:
    print(m, end="\n\n")
print("recognized:", recognize_c_normal(s, c))

cert = schur_singular_identically(c, p)
print("det(C o X) = 0 on all", cert.points, "grid points:", cert.holds)

# replacing Q1 by a unit matrix breaks singularity; the z1*w1*w3 term survives
bad = schur_singular_identically(c, p, "elementary")
print("elementary variant holds:", bad.holds, "witness", bad.witness)
print("z1*w1*w3 coefficient:", schur_coefficient(c, p, (0, 2, 4), "elementary"))

# two neighbours match when q3 and p1 follow the rho recurrences
c2 = c_block(seq, 2)
left = GeneralParams(1, 2, 3, 3 * 4 * rho_of_deletion(c2, 3, 1))
right = GeneralParams(2 * 5 * rho_of_deletion(c, 1, 1), 5, 4, 1)
print("connection:", connection_holds(seq, 1, left, right),
      " adjacency:", adjacency_equal(section(seq, 1, left), section(seq, 2, right)))
