"""Grid certificates for polynomials of degree <= 1 in each variable.

Such a polynomial that vanishes on ``{0, 1}^n`` is identically zero, so
evaluating on a product grid decides identical vanishing exactly.  The
default grid ``{0, 1, 2}`` carries one spare point per axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .scalar import ZERO, Scalar

__all__ = ["GridVerdict", "grid_certificate", "mixed_difference"]

DEFAULT_GRID = (0, 1, 2)


@dataclass(frozen=True)
class GridVerdict:
    """Outcome of a grid certificate.

    ``holds`` means the polynomial vanished at every grid point.  Otherwise
    ``witness`` holds the first offending point and ``value`` the nonzero
    value there.
    """

    holds: bool
    points: int
    witness: tuple | None = None
    value: Scalar | None = None

    def __bool__(self):
        return self.holds


def grid_certificate(f, nvars: int, grid=DEFAULT_GRID) -> GridVerdict:
    """Evaluate ``f(*coords)`` over ``grid ** nvars``; stop at the first nonzero."""
    count = 0
    for point in product(grid, repeat=nvars):
        count += 1
        v = f(*point)
        if v:
            return GridVerdict(False, count, tuple(point), v)
    return GridVerdict(True, count)


def mixed_difference(f, nvars: int, which) -> Scalar:
    """Coefficient of ``prod(x_i for i in which)`` in a multilinear ``f``.

    Inclusion-exclusion over the 0/1 corners of the chosen variables with
    all others pinned at 0.
    """
    which = tuple(which)
    total = ZERO
    for bits in product((0, 1), repeat=len(which)):
        point = [0] * nvars
        for i, b in zip(which, bits):
            point[i] = b
        v = f(*point)
        total = total + v if (len(which) - sum(bits)) % 2 == 0 else total - v
    return total
