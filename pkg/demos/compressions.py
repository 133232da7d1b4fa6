"""
Compressions and windows
========================
"""

import random
from fractions import Fraction

from crosssections import Mat, Scalar
from crosssections.compressions import (
    check_composition_identity,
    check_partial_identity,
    compress,
    window2,
    window3,
)

rng = random.Random(0)
x = Mat([[Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for _ in range(8)] for _ in range(8)])

print("rows/cols 2,5,7:")
print(compress(x, (2, 5, 7)))

# the 3-window at r and the 2-window at r+1 share a corner
r = 3
print("window3 at r=3:")
print(window3(x, r))
print("window2 at r=4:")
print(window2(x, r + 1))

print("partial identity, r = 1..5:", [check_partial_identity(x, r) for r in range(1, 6)])
print("compress then compress again:", check_composition_identity(x, (1, 2, 4, 6, 8), (2, 6, 8)))
