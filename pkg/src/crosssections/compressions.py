"""Compressions of finite truncations onto spans of basis vectors.

An operator on the Hilbert space is modelled by an N x N truncation of its
matrix; compressing to ``span{e_i : i in idx}`` is then selecting the
principal submatrix on ``idx``.  Index sets are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import Mat, ShapeError, delete_rc

__all__ = [
    "Window",
    "compress",
    "window3",
    "window2",
    "check_partial_identity",
    "check_composition_identity",
]


@dataclass(frozen=True)
class Window:
    """Consecutive index block ``{start, ..., start + width - 1}``."""

    start: int
    width: int

    def __post_init__(self):
        if self.start < 1:
            raise ValueError(f"window start must be >= 1, got {self.start}")
        if self.width not in (2, 3):
            raise ValueError(f"window width must be 2 or 3, got {self.width}")

    @property
    def indices(self):
        return tuple(range(self.start, self.start + self.width))

    def apply(self, x: Mat) -> Mat:
        return compress(x, self.indices)


def _check_index_set(idx, n):
    idx = tuple(idx)
    if not idx:
        raise ValueError("empty index set")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"index set {idx} is not strictly increasing")
    if idx[0] < 1 or idx[-1] > n:
        raise IndexError(f"index set {idx} leaves 1..{n}")
    return idx


def compress(x: Mat, idx) -> Mat:
    if x.rows != x.cols:
        raise ShapeError("compression needs a square truncation")
    idx = _check_index_set(idx, x.rows)
    n = x.cols
    return Mat._from_flat(
        len(idx), len(idx),
        [x.entries[(i - 1) * n + (j - 1)] for i in idx for j in idx],
    )


def window3(x: Mat, r: int) -> Mat:
    if r < 1 or r + 2 > x.rows:
        raise IndexError(f"3-window at r={r} exceeds the {x.rows}x{x.rows} truncation")
    return Window(r, 3).apply(x)


def window2(x: Mat, r: int) -> Mat:
    if r < 1 or r + 1 > x.rows:
        raise IndexError(f"2-window at r={r} exceeds the {x.rows}x{x.rows} truncation")
    return Window(r, 2).apply(x)


def check_partial_identity(x: Mat, r: int, left=(1, 1), right=(3, 3)) -> bool:
    """Does deleting ``left`` from window r agree with window2 at r+1 and with deleting ``right`` from window r+1?

    ``left``/``right`` default to the identity that actually holds; passing
    other deletion indices is how the check is shown to be discriminating.
    """
    if r < 1 or r + 3 > x.rows:
        raise IndexError(f"partial identity at r={r} needs a truncation of size >= {r + 3}")
    middle = window2(x, r + 1)
    return delete_rc(window3(x, r), *left) == middle == delete_rc(window3(x, r + 1), *right)


def check_composition_identity(x: Mat, outer, inner) -> bool:
    """Compress to ``outer`` then to ``inner`` (positions inside ``outer``), versus directly to ``inner``."""
    outer = _check_index_set(outer, x.rows)
    inner = _check_index_set(inner, x.rows)
    if not set(inner) <= set(outer):
        raise ValueError(f"{inner} is not a subset of {outer}")
    step = compress(x, outer)
    local = [outer.index(i) + 1 for i in inner]
    return compress(step, local) == compress(x, inner)
