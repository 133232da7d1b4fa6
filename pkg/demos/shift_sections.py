"""
Sections next to a shift
========================
"""

from fractions import Fraction

from crosssections.shift import (
    Delta,
    ShiftSequence,
    StrongParams,
    T1Params,
    T2Params,
    b_delta,
    build_shift,
    rank_rule_identically,
    recognize_shift,
    section,
    strongify,
)
from crosssections.subspaces import adjacency_equal, equals, image_delete_rc

d = Delta(1, Fraction(1, 2), Fraction(1, 3))
print("b_delta:", [str(v) for v in b_delta(d)])

# rank(Delta X - X J3) <= 2 for the whole section only when q = -x/b1
for q in (-1, 1):
    print(f"strong x=y=1 q={q}: rank rule", rank_rule_identically(d, StrongParams(1, 1, q)).holds)

t2 = T2Params(x=1, y=1, q=-1, qp=-2)
strong = strongify(d, t2)
print(strong, "same span:", equals(build_shift(d, t2), build_shift(d, strong)))
print("recognized as:", recognize_shift(build_shift(d, t2), d))

print("T2 image dims, q' = q/b2 vs not:",
      image_delete_rc(build_shift(d, t2), 3, 3).dim,
      image_delete_rc(build_shift(d, T2Params(1, 1, -1, 5)), 3, 3).dim)

seq = ShiftSequence(0, [Fraction(1, k) for k in range(1, 7)])
print("T1 next to T2:", adjacency_equal(section(seq, 1, T1Params(2, 3)), section(seq, 2, T2Params(Fraction(3, 2), 1, 1, 2))))
