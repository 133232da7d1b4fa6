"""
Exact Gaussian-rational arithmetic
==================================

Scalars are (a + bi)/d with integers a, b, d.  Nothing here ever rounds.
"""

from fractions import Fraction

from crosssections import Mat, Scalar, det, rank
from crosssections.scalar import format_scalar, parse_scalar

z = Scalar(Fraction(1, 2), 3)
w = parse_scalar("(-2/3,1/4)")
print("z =", format_scalar(z), " w =", format_scalar(w))
print("z * w =", format_scalar(z * w))
print("z / w =", format_scalar(z / w))
print("(z / w) * w == z:", (z / w) * w == z)

# a rank-2 Hankel block and its determinant
h = Mat([[2, 3, 4], [3, 4, 5], [4, 5, 6]])
print(h)
print("det =", det(h), " rank =", rank(h))

# fraction-free elimination stays exact on larger complex matrices
m = Mat([[Scalar(i + j, i - j) / (i + 2) for j in range(6)] for i in range(6)])
print("6x6 complex rank:", rank(m))
