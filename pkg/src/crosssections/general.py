"""Cross-sections attached to a pair of diagonal point sequences.

The data are a base point ``mu0`` and sequences ``lambda_k``, ``mu_k``; with
``b_i = mu_i - mu0`` and ``a_j = lambda_j - mu0`` the infinite matrix
``c_hat[i, j] = b_i - a_j`` has nonzero entries, and its consecutive 3x3
blocks ``C^r`` parametrise the normal form of the r-th cross-section.

Two readings of the normal form are supported.  ``"printed"`` uses the basis
with ``Q1 = [[0,0,1],[0,0,q2],[0,0,q3]]``; ``"elementary"`` replaces ``Q1`` by
the matrix unit at (1,3), which is what the closed-form general element
written alongside that basis corresponds to.  They span different subspaces
and only the printed one keeps ``det(C o X)`` identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .grid import DEFAULT_GRID, GridVerdict, grid_certificate, mixed_difference
from .matrices import Mat, ShapeError, delete_rc, det, schur
from .scalar import ZERO, Scalar, as_scalar
from .subspaces import Subspace, span_reduce

__all__ = [
    "GeneralSequence",
    "GeneralParams",
    "CoordVector",
    "VARIANTS",
    "c_block",
    "rho",
    "rho_of_deletion",
    "rho_multiplicative",
    "c_normal_basis",
    "build_c_normal",
    "general_element",
    "recognize_c_normal",
    "schur_singular_identically",
    "schur_coefficient",
    "rho_identities",
    "connection_holds",
    "section",
]

VARIANTS = ("printed", "elementary")
C_NORMAL_PIVOTS = ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3))


@dataclass(frozen=True)
class GeneralSequence:
    """Finite prefix ``lambda_1..lambda_K``, ``mu_1..mu_K`` around ``mu0``."""

    mu0: Scalar
    lam: tuple
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu0", as_scalar(self.mu0))
        object.__setattr__(self, "lam", tuple(as_scalar(v) for v in self.lam))
        object.__setattr__(self, "mu", tuple(as_scalar(v) for v in self.mu))
        if len(self.lam) != len(self.mu):
            raise ValueError(f"lambda has {len(self.lam)} points but mu has {len(self.mu)}")
        if not self.lam:
            raise ValueError("sequences must be nonempty")
        for name, pts in (("lambda", self.lam), ("mu", self.mu)):
            for k, v in enumerate(pts, 1):
                if v == self.mu0:
                    raise ValueError(f"{name}_{k} coincides with mu0")
        pts = self.lam + self.mu
        if len(set(pts)) != len(pts):
            raise ValueError("lambda and mu points must be pairwise distinct")

    @property
    def K(self) -> int:
        return len(self.mu)

    def b(self, i: int) -> Scalar:
        return self.mu[i - 1] - self.mu0

    def a(self, j: int) -> Scalar:
        return self.lam[j - 1] - self.mu0

    def c_hat(self, i: int, j: int) -> Scalar:
        return self.b(i) - self.a(j)


@dataclass(frozen=True)
class GeneralParams:
    p1: Scalar
    p2: Scalar
    q2: Scalar
    q3: Scalar

    def __post_init__(self):
        for name in ("p1", "p2", "q2", "q3"):
            v = as_scalar(getattr(self, name))
            if not v:
                raise ValueError(f"parameter {name} must be nonzero")
            object.__setattr__(self, name, v)

    def replace(self, **changes) -> GeneralParams:
        fields = {"p1": self.p1, "p2": self.p2, "q2": self.q2, "q3": self.q3}
        fields.update(changes)
        return GeneralParams(**fields)


class CoordVector(NamedTuple):
    """Coefficients of ``(L1, L2, Q1, Q2, Q3)`` in a general element."""

    z1: Scalar = ZERO
    z2: Scalar = ZERO
    w1: Scalar = ZERO
    w2: Scalar = ZERO
    w3: Scalar = ZERO


def c_block(seq: GeneralSequence, r: int) -> Mat:
    """``C^r[i, j] = c_hat[r+i-1, r+j-1]`` for i, j in 1..3."""
    if r < 1 or r + 2 > seq.K:
        raise IndexError(f"block C^{r} needs points up to index {r + 2}, sequence has {seq.K}")
    return Mat([[seq.c_hat(r + i, r + j) for j in range(3)] for i in range(3)])


def rho(y: Mat) -> Scalar:
    """Cross-ratio ``y11 y22 / (y12 y21)`` of a 2x2 matrix with nonzero entries."""
    if y.shape != (2, 2):
        raise ShapeError(f"rho is defined on 2x2 matrices, got {y.rows}x{y.cols}")
    a, b, c, d = y.entries
    if not (a and b and c and d):
        raise ValueError("rho needs all four entries nonzero")
    return (a * d) / (b * c)


def rho_of_deletion(c: Mat, k: int, l: int) -> Scalar:
    return rho(delete_rc(c, k, l))


def rho_multiplicative(c: Mat) -> bool:
    """``rho(C_21) = rho(C_11) rho(C_31)`` and ``rho(C_22) = rho(C_12) rho(C_32)``."""
    r = {(k, l): rho_of_deletion(c, k, l) for k in (1, 2, 3) for l in (1, 2)}
    return r[2, 1] == r[1, 1] * r[3, 1] and r[2, 2] == r[1, 2] * r[3, 2]


def _check_c(c: Mat):
    if c.shape != (3, 3):
        raise ShapeError(f"expected a 3x3 block, got {c.rows}x{c.cols}")
    if not all(c.entries):
        raise ValueError("block entries must all be nonzero")


def c_normal_basis(c: Mat, p: GeneralParams, variant: str = "printed") -> tuple:
    """The five normal-form matrices ``(L1, L2, Q1, Q2, Q3)``."""
    _check_c(c)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    rk = {(k, l): rho_of_deletion(c, k, l) for k in (1, 2, 3) for l in (1, 2)}
    p1, p2, q2, q3 = p.p1, p.p2, p.q2, p.q3
    L1 = Mat([[1, 0, 0], [rk[3, 2] * q2, 0, 0], [rk[2, 2] * q3, 0, 0]])
    L2 = Mat([[0, 1, 0], [0, rk[3, 1] * q2, 0], [0, rk[2, 1] * q3, 0]])
    if variant == "printed":
        Q1 = Mat([[0, 0, 1], [0, 0, q2], [0, 0, q3]])
    else:
        Q1 = Mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    Q2 = Mat([[0, 0, 0], [p1, p2, 1], [0, 0, 0]])
    Q3 = Mat([[0, 0, 0], [0, 0, 0], [rk[1, 2] * p1, rk[1, 1] * p2, 1]])
    return (L1, L2, Q1, Q2, Q3)


def build_c_normal(c: Mat, p: GeneralParams, variant: str = "printed") -> Subspace:
    return span_reduce(c_normal_basis(c, p, variant))


def _combine(mats, coords):
    out = [ZERO] * 9
    for m, t in zip(mats, coords):
        t = as_scalar(t)
        if t:
            out = [o + t * e if e else o for o, e in zip(out, m.entries)]
    return Mat._from_flat(3, 3, out)


def general_element(c: Mat, p: GeneralParams, coords, variant: str = "printed") -> Mat:
    """``z1 L1 + z2 L2 + w1 Q1 + w2 Q2 + w3 Q3``."""
    coords = CoordVector(*coords)
    return _combine(c_normal_basis(c, p, variant), coords)


def recognize_c_normal(s: Subspace, c: Mat, variant: str = "printed"):
    """Parameters of ``s`` as a C-normal subspace, or None.

    The candidate parameters are read from the canonical basis and accepted
    only if rebuilding from them reproduces ``s`` exactly, so every entry of
    the pattern (including the redundant ones) is checked.
    """
    _check_c(c)
    if s.shape != (3, 3) or s.dim != 5 or s.pivots != C_NORMAL_PIVOTS:
        return None
    R1, _, _, R4, _ = s.basis
    p1, p2 = R4[1, 0], R4[1, 1]
    q2 = R1[1, 0] / rho_of_deletion(c, 3, 2)
    q3 = R1[2, 0] / rho_of_deletion(c, 2, 2)
    if not (p1 and p2 and q2 and q3):
        return None
    params = GeneralParams(p1, p2, q2, q3)
    if build_c_normal(c, params, variant) != s:
        return None
    return params


def _schur_det(c, p, variant):
    terms = [schur(c, b) for b in c_normal_basis(c, p, variant)]

    def f(*coords):
        return det(_combine(terms, coords))
    return f


def schur_singular_identically(c: Mat, p: GeneralParams, variant: str = "printed",
                               grid=DEFAULT_GRID) -> GridVerdict:
    """Decide ``det(C o X) == 0`` for every X in the section.

    Each coordinate sits in a single row or column of X, so the determinant
    has degree <= 1 per coordinate and the grid verdict is exact.
    """
    return grid_certificate(_schur_det(c, p, variant), 5, grid)


def schur_coefficient(c: Mat, p: GeneralParams, which, variant: str = "printed") -> Scalar:
    """Coefficient of a square-free monomial (indices into ``CoordVector``) in ``det(C o X)``."""
    return mixed_difference(_schur_det(c, p, variant), 5, which)


def rho_identities(seq: GeneralSequence, r: int) -> bool:
    """Check the two cross-ratio identities linking blocks ``C^r`` and ``C^(r+1)``."""
    if r < 1 or r + 3 > seq.K:
        raise IndexError(f"blocks C^{r}, C^{r + 1} need {r + 3} points, sequence has {seq.K}")
    c0, c1 = c_block(seq, r), c_block(seq, r + 1)
    r31_0 = rho_of_deletion(c0, 3, 1)
    r21_0 = rho_of_deletion(c0, 2, 1)
    r11_0 = rho_of_deletion(c0, 1, 1)
    r32_1 = rho_of_deletion(c1, 3, 2)
    r31_1 = rho_of_deletion(c1, 3, 1)
    return r31_0 * r32_1 / r21_0 == r31_1 and r32_1 / r31_1 == r11_0


def connection_holds(seq: GeneralSequence, r: int, pr: GeneralParams, pr1: GeneralParams) -> bool:
    """Parameter recurrences between sections r and r+1.

    ``q3_r = q2_r q2_(r+1) rho(C^(r+1)_31)`` and
    ``p1_(r+1) = p2_r p2_(r+1) rho(C^r_11)``.
    """
    if r < 1 or r + 3 > seq.K:
        raise IndexError(f"junction r={r} needs {r + 3} points, sequence has {seq.K}")
    c0, c1 = c_block(seq, r), c_block(seq, r + 1)
    ok_q = pr.q3 == pr.q2 * pr1.q2 * rho_of_deletion(c1, 3, 1)
    ok_p = pr1.p1 == pr.p2 * pr1.p2 * rho_of_deletion(c0, 1, 1)
    return ok_q and ok_p


def section(seq: GeneralSequence, r: int, p: GeneralParams, variant: str = "printed") -> Subspace:
    """The r-th cross-section built on block ``C^r``."""
    return build_c_normal(c_block(seq, r), p, variant)
