"""Cross-sections against a diagonal ``Delta`` and the 3x3 Jordan cell.

Each window r carries ``Delta_r = diag(b_r, b_(r+1), b_(r+2))`` and a
5-dimensional section in one of three normal forms: :class:`T1Params`,
:class:`T2Params`, or the refined :class:`StrongParams`.  The class of the
parameter object doubles as the variant tag.

In every variant ``L2`` has a zero in position (1,1): ``L2 = [[0,1,0],
[bD3 x, x, 0], [bD2 y, y, 0]]``.  The two-variable general elements that
drive the matching argument need (1,1) and (1,2) to be independent, which the
version with (1,1) = 1 does not give.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .grid import DEFAULT_GRID, GridVerdict, grid_certificate
from .matrices import Mat, det, diag, jordan3, product
from .scalar import ZERO, Scalar, as_scalar
from .subspaces import Subspace, adjacency_equal, span_reduce

__all__ = [
    "ShiftSequence",
    "Delta",
    "T1Params",
    "T2Params",
    "StrongParams",
    "ConstraintError",
    "b_delta",
    "shift_basis",
    "build_shift",
    "shift_general_element",
    "recognize_shift",
    "rank_rule_identically",
    "adjacency_equal",
    "main_constraints",
    "strongify",
    "section",
]

NORMAL_PIVOTS = ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3))


class ConstraintError(ValueError):
    """A parameter relation required by an operation does not hold."""


@dataclass(frozen=True)
class ShiftSequence:
    b0: Scalar
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b0", as_scalar(self.b0))
        object.__setattr__(self, "b", tuple(as_scalar(v) for v in self.b))
        if not self.b:
            raise ValueError("sequence b must be nonempty")
        if not all(self.b):
            raise ValueError("points b_k must be nonzero")
        if len(set(self.b)) != len(self.b):
            raise ValueError("points b_k must be pairwise distinct")

    @property
    def K(self) -> int:
        return len(self.b)

    def delta(self, r: int) -> Delta:
        if r < 1 or r + 2 > self.K:
            raise IndexError(f"Delta_{r} needs b up to index {r + 2}, sequence has {self.K}")
        return Delta(*self.b[r - 1:r + 2])


@dataclass(frozen=True)
class Delta:
    b1: Scalar
    b2: Scalar
    b3: Scalar

    def __post_init__(self):
        vals = []
        for name in ("b1", "b2", "b3"):
            v = as_scalar(getattr(self, name))
            object.__setattr__(self, name, v)
            vals.append(v)
        if not all(vals):
            raise ValueError("diagonal entries must be nonzero")
        if len(set(vals)) != 3:
            raise ValueError("diagonal entries must be distinct")

    def matrix(self) -> Mat:
        return diag((self.b1, self.b2, self.b3))


def _nonzero(obj, names):
    for name in names:
        v = as_scalar(getattr(obj, name))
        if name in _MUST_BE_NONZERO and not v:
            raise ValueError(f"{type(obj).__name__}.{name} must be nonzero")
        object.__setattr__(obj, name, v)


_MUST_BE_NONZERO = {"x", "y", "q"}


@dataclass(frozen=True)
class T1Params:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        _nonzero(self, ("x", "y"))


@dataclass(frozen=True)
class T2Params:
    x: Scalar
    y: Scalar
    q: Scalar
    qp: Scalar = ZERO  # may be zero

    def __post_init__(self):
        _nonzero(self, ("x", "y", "q", "qp"))


@dataclass(frozen=True)
class StrongParams:
    x: Scalar
    y: Scalar
    q: Scalar

    def __post_init__(self):
        _nonzero(self, ("x", "y", "q"))


VARIANT_NAMES = {T1Params: "T1", T2Params: "T2", StrongParams: "Strong"}


def b_delta(d: Delta):
    """``(1/b3 - 1/b2, 1/b3 - 1/b1, 1/b2 - 1/b1)``."""
    i1, i2, i3 = d.b1.inverse(), d.b2.inverse(), d.b3.inverse()
    return (i3 - i2, i3 - i1, i2 - i1)


def shift_basis(d: Delta, p) -> tuple:
    """The five normal-form matrices ``(L1, L2, Q1, Q2, Q3)`` for ``p``'s variant."""
    bd1, bd2, bd3 = b_delta(d)
    b1, b2, b3 = d.b1, d.b2, d.b3
    x, y = p.x, p.y
    L1 = Mat([[1, 0, 0], [x, 0, 0], [y, 0, 0]])
    L2 = Mat([[0, 1, 0], [bd3 * x, x, 0], [bd2 * y, y, 0]])
    if isinstance(p, T1Params):
        Q1 = Mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
        Q2 = Mat([[0, 0, 0], [bd3 / b2, bd3, 1], [0, 0, 0]])
        Q3 = Mat([[0, 0, 0], [0, 0, 0], [bd2 / b3, bd2, 1]])
    elif isinstance(p, T2Params):
        q, qp = p.q, p.qp
        qx, qpx = q / x, qp / x
        Q1 = Mat([[0, 0, 1], [qp, q, 0], [qpx * y + bd1 * qx * y, qx * y, 0]])
        Q2 = Mat([[0, 0, 0], [bd3 / b2 - qpx, bd3 - qx, 1], [0, 0, 0]])
        Q3 = Mat([[0, 0, 0], [0, 0, 0], [bd2 / b3 - bd1 * qx - qpx, bd2 - qx, 1]])
    elif isinstance(p, StrongParams):
        q = p.q
        Q1 = Mat([[0, 0, 1], [q / b2, q, 0], [-y / (b1 * b3), -y / b1, 0]])
        Q2 = Mat([[0, 0, 0], [b2.inverse() ** 2, b2.inverse(), 1], [0, 0, 0]])
        Q3 = Mat([[0, 0, 0], [0, 0, 0], [b3.inverse() ** 2, b3.inverse(), 1]])
    else:
        raise TypeError(f"not a shift parameter set: {p!r}")
    return (L1, L2, Q1, Q2, Q3)


def build_shift(d: Delta, p) -> Subspace:
    return span_reduce(shift_basis(d, p))


def shift_general_element(d: Delta, p, coords) -> Mat:
    """``z1 L1 + z2 L2 + w1 Q1 + w2 Q2 + w3 Q3`` for ``coords = (z1, z2, w1, w2, w3)``."""
    coords = tuple(as_scalar(t) for t in coords)
    if len(coords) != 5:
        raise ValueError("expected five coordinates")
    out = Mat._from_flat(3, 3, [ZERO] * 9)
    for m, t in zip(shift_basis(d, p), coords):
        if t:
            out = out + t * m
    return out


def recognize_shift(s: Subspace, d: Delta):
    """Most specific normal form of ``s`` relative to ``d``, or None.

    Tries Strong, then T2, then T1.  Parameters are read from the canonical
    basis (which coincides with the normal-form basis for all three variants)
    and accepted only if rebuilding reproduces ``s`` entry for entry.
    """
    if s.shape != (3, 3) or s.dim != 5 or s.pivots != NORMAL_PIVOTS:
        return None
    R1, _, R3, _, _ = s.basis
    x, y = R1[1, 0], R1[2, 0]
    if not (x and y):
        return None
    q = R3[1, 1]
    candidates = []
    if q:
        candidates.append(StrongParams(x, y, q))
        candidates.append(T2Params(x, y, q, R3[1, 0]))
    candidates.append(T1Params(x, y))
    for p in candidates:
        if build_shift(d, p) == s:
            return p
    return None


def _commutator_det(d: Delta, p):
    dm, j3 = d.matrix(), jordan3()
    terms = [product(dm, m) - product(m, j3) for m in shift_basis(d, p)]

    def f(*coords):
        out = [ZERO] * 9
        for m, t in zip(terms, coords):
            if t:
                out = [o + t * e if e else o for o, e in zip(out, m.entries)]
        return det(Mat._from_flat(3, 3, out))
    return f


def rank_rule_identically(d: Delta, p, grid=DEFAULT_GRID) -> GridVerdict:
    """Decide ``rank(Delta X - X J3) <= 2`` for every X in the section.

    The map X -> Delta X - X J3 keeps each coordinate inside one row or one
    column, so its determinant has degree <= 1 per coordinate and the grid
    verdict is exact.
    """
    return grid_certificate(_commutator_det(d, p), 5, grid)


def main_constraints(seq: ShiftSequence, r: int, p_r, p_r1) -> bool:
    """Junction conditions between windows r and r+1.

    ``x_(r+1) = y_r / x_r`` and ``q_r = -x_r / b_r``.  A T2 side must also
    satisfy its own ``q' = q / b_2`` relation (``q'_r = q_r / b_(r+1)`` on the
    left, ``q'_(r+1) = q_(r+1) / b_(r+2)`` on the right).
    """
    if r < 1 or r + 3 > seq.K:
        raise IndexError(f"junction r={r} needs b up to index {r + 3}, sequence has {seq.K}")
    for p in (p_r, p_r1):
        if isinstance(p, T1Params):
            raise ConstraintError("type T1 sections cannot match a neighbour")
        if not isinstance(p, (T2Params, StrongParams)):
            raise TypeError(f"not a shift parameter set: {p!r}")
    b = seq.b
    ok = p_r1.x == p_r.y / p_r.x and p_r.q == -p_r.x / b[r - 1]
    if isinstance(p_r, T2Params):
        ok = ok and p_r.qp == p_r.q / b[r]
    if isinstance(p_r1, T2Params):
        ok = ok and p_r1.qp == p_r1.q / b[r + 1]
    return ok


def strongify(d: Delta, p: T2Params) -> StrongParams:
    """Rewrite a T2 parameter set satisfying ``q = -x/b1`` and ``q' = q/b2`` in strong form."""
    if not isinstance(p, T2Params):
        raise TypeError("strongify expects T2 parameters")
    if p.q != -p.x / d.b1:
        raise ConstraintError(f"q = {p.q} but -x/b1 = {-p.x / d.b1}")
    if p.qp != p.q / d.b2:
        raise ConstraintError(f"q' = {p.qp} but q/b2 = {p.q / d.b2}")
    return StrongParams(p.x, p.y, p.q)


def section(seq: ShiftSequence, r: int, p) -> Subspace:
    return build_shift(seq.delta(r), p)


def with_changes(p, **changes):
    """Copy of a parameter set with some fields replaced."""
    names = {f.name for f in fields(p)}
    unknown = set(changes) - names
    if unknown:
        raise ValueError(f"{type(p).__name__} has no field(s) {sorted(unknown)}")
    return replace(p, **changes)
