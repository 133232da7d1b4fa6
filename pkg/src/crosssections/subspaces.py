"""Linear subspaces of m x n matrices, held as a canonical reduced basis.

Matrices are vectorized row-major.  Reduction runs Gauss-Jordan over a fixed
coordinate priority: for 3x3 ambient spaces the positions (1,1), (1,2),
(1,3), (2,3), (3,3) come first and the remaining four follow row-major.  With
that order every normal-form basis used in this package is already its own
reduced echelon form, so recognition can read parameters straight off the
stored basis.  Two equal subspaces always store identical bases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Mat, ShapeError, delete_rc, rank
from .scalar import ZERO, Scalar

__all__ = [
    "Subspace",
    "TransitivityVerdict",
    "coordinate_order",
    "span_reduce",
    "zero_subspace",
    "contains",
    "equals",
    "image_delete_rc",
    "adjacency_equal",
    "orbit_rank",
    "verify_witness",
    "transitivity",
    "random_gaussian_rational",
]

# 0-based (row, col) positions, pivot priority for 3x3
_PRIORITY_3X3 = ((0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (1, 0), (1, 1), (2, 0), (2, 1))


def coordinate_order(m: int, n: int) -> tuple:
    """Flat row-major indices in pivot-priority order."""
    if (m, n) == (3, 3):
        return tuple(3 * i + j for i, j in _PRIORITY_3X3)
    return tuple(range(m * n))


def _rref(vectors, ncoords):
    """Reduced row echelon form of coordinate vectors (lists of Scalar)."""
    rows = [list(v) for v in vectors if any(v)]
    pivots = []
    r = 0
    for c in range(ncoords):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        prow = [x * inv if x else ZERO for x in rows[r]]
        rows[r] = prow
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


class Subspace:
    """A subspace of ``m x n`` matrices.

    ``basis`` holds the canonical reduced basis as :class:`Mat` objects;
    ``pivots`` lists their pivot positions as 1-based (row, col) pairs.
    """

    __slots__ = ("ambient_rows", "ambient_cols", "basis", "pivots", "_vecs", "_order", "_pivcols")

    def __init__(self, m, n, vecs, pivots):
        self.ambient_rows = m
        self.ambient_cols = n
        self._order = coordinate_order(m, n)
        self._vecs = tuple(tuple(v) for v in vecs)
        basis = []
        for v in self._vecs:
            flat = [ZERO] * (m * n)
            for k, pos in enumerate(self._order):
                flat[pos] = v[k]
            basis.append(Mat._from_flat(m, n, flat))
        self.basis = tuple(basis)
        self._pivcols = tuple(pivots)
        self.pivots = tuple((self._order[c] // n + 1, self._order[c] % n + 1) for c in pivots)

    @property
    def shape(self):
        return (self.ambient_rows, self.ambient_cols)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def _coords(self, mat: Mat):
        if mat.shape != self.shape:
            raise ShapeError(f"{mat.rows}x{mat.cols} matrix against {self.ambient_rows}x{self.ambient_cols} subspace")
        return [mat.entries[p] for p in self._order]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.shape == other.shape and self._vecs == other._vecs

    def __hash__(self):
        return hash((self.shape, self._vecs))

    def __repr__(self):
        return f"<Subspace dim={self.dim} in {self.ambient_rows}x{self.ambient_cols}, pivots={list(self.pivots)}>"


def span_reduce(mats, shape=None) -> Subspace:
    """Canonical subspace spanned by ``mats``.

    An empty list only makes sense with an explicit ``shape``.
    """
    mats = list(mats)
    if not mats:
        if shape is None:
            raise ValueError("empty spanning set needs an explicit shape")
        return zero_subspace(*shape)
    m, n = mats[0].shape
    if shape is not None and tuple(shape) != (m, n):
        raise ShapeError(f"declared shape {shape} but matrices are {m}x{n}")
    if any(x.shape != (m, n) for x in mats):
        raise ShapeError("spanning matrices have mixed shapes")
    order = coordinate_order(m, n)
    vecs = [[x.entries[p] for p in order] for x in mats]
    rows, pivots = _rref(vecs, m * n)
    return Subspace(m, n, rows, pivots)


def zero_subspace(m: int, n: int) -> Subspace:
    if m < 1 or n < 1:
        raise ShapeError("ambient dimensions must be at least 1")
    return Subspace(m, n, [], [])


def contains(s: Subspace, mat: Mat) -> bool:
    """Membership by reducing against the echelon basis and checking the residual."""
    v = s._coords(mat)
    for row, c in zip(s._vecs, s._pivcols):
        f = v[c]
        if f:
            v = [x - f * y if y else x for x, y in zip(v, row)]
    return not any(v)


def equals(s1: Subspace, s2: Subspace) -> bool:
    if s1.shape != s2.shape:
        raise ShapeError(f"comparing subspaces of {s1.shape} and {s2.shape} matrices")
    return s1._vecs == s2._vecs


def image_delete_rc(s: Subspace, k: int, l: int) -> Subspace:
    """Image of a 3x3 subspace under deleting row ``k`` and column ``l``."""
    if s.shape != (3, 3):
        raise ShapeError(f"row/column deletion needs a 3x3 ambient space, got {s.shape}")
    if k not in (1, 2, 3) or l not in (1, 2, 3):
        raise IndexError(f"deletion indices must lie in 1..3, got ({k}, {l})")
    return span_reduce([delete_rc(b, k, l) for b in s.basis], shape=(2, 2))


def adjacency_equal(s_r: Subspace, s_r1: Subspace) -> bool:
    """Do the lower-right 2x2 corners of ``s_r`` match the upper-left corners of ``s_r1``?"""
    return equals(image_delete_rc(s_r, 1, 1), image_delete_rc(s_r1, 3, 3))


# -- transitivity ----------------------------------------------------------------

@dataclass(frozen=True)
class TransitivityVerdict:
    """``kind`` is "not_transitive" (with ``witness``) or "probably_transitive"."""

    kind: str
    witness: tuple | None = None
    trials: int = 0

    @property
    def transitive(self) -> bool:
        return self.kind == "probably_transitive"


def orbit_rank(s: Subspace, x) -> int:
    """Rank of ``[B_1 x ... B_d x]``, i.e. ``dim {Bx : B in s}``."""
    if s.ambient_rows != s.ambient_cols:
        raise ShapeError("orbit rank needs a square ambient space")
    n = s.ambient_rows
    if not s.basis:
        return 0
    cols = [b.apply(x) for b in s.basis]
    return rank(Mat._from_flat(n, len(cols), [cols[j][i] for i in range(n) for j in range(len(cols))]))


def verify_witness(s: Subspace, x) -> bool:
    """True when ``x`` is nonzero and its orbit under ``s`` misses some direction."""
    x = tuple(x)
    if not any(x):
        return False
    return orbit_rank(s, x) < s.ambient_rows


def random_gaussian_rational(rng: random.Random, height: int) -> Scalar:
    def part():
        return Fraction(rng.randint(-height, height), rng.randint(1, height))
    return Scalar(part(), part())


def _candidates(n):
    unit = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    yield from unit
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (1, -1):
                yield tuple(1 if k == i else sgn if k == j else 0 for k in range(n))


def transitivity(s: Subspace, trials: int = 1000, seed: int = 0, height: int = 9) -> TransitivityVerdict:
    """Semi-decide transitivity by searching for a vector with a deficient orbit.

    The deterministic candidates ``e_i`` and ``e_i +- e_j`` are tried first,
    then ``trials`` random Gaussian-rational vectors with numerators in
    ``[-height, height]`` and denominators in ``[1, height]``.  A returned
    witness is always re-verified.  Not finding one proves nothing over C.
    """
    if s.ambient_rows != s.ambient_cols:
        raise ShapeError("transitivity needs a square ambient space")
    n = s.ambient_rows
    for x in _candidates(n):
        if orbit_rank(s, x) < n:
            x = tuple(Scalar(v) for v in x)
            assert verify_witness(s, x)
            return TransitivityVerdict("not_transitive", x, 0)
    rng = random.Random(seed)
    for t in range(trials):
        x = tuple(random_gaussian_rational(rng, height) for _ in range(n))
        if not any(x):
            continue
        if orbit_rank(s, x) < n:
            assert verify_witness(s, x)
            return TransitivityVerdict("not_transitive", x, t + 1)
    return TransitivityVerdict("probably_transitive", None, trials)
