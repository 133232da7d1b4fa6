"""Small dense matrices over the Gaussian rationals.

Entry access through ``m[i, j]`` is 0-based like any Python container.  The
functions that mirror the operator-theoretic notation (``delete_rc`` here,
``compress`` and the windows in :mod:`crosssections.compressions`) take
1-based indices, matching the basis numbering ``e_1, e_2, ...``.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar, as_scalar, format_scalar

__all__ = [
    "Mat",
    "ShapeError",
    "schur",
    "delete_rc",
    "det",
    "rank",
    "product",
    "make_special",
    "diag",
    "jordan3",
    "zeros",
    "identity",
    "elementary",
]


class ShapeError(ValueError):
    pass


class Mat:
    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, data, cols=None):
        """Build from nested rows, or from a flat sequence when ``cols`` is given."""
        if cols is None:
            data = [list(row) for row in data]
            if not data or not data[0]:
                raise ShapeError("matrix dimensions must be at least 1x1")
            ncols = len(data[0])
            if any(len(row) != ncols for row in data):
                raise ShapeError("ragged rows")
            flat = [x for row in data for x in row]
            nrows = len(data)
        else:
            flat = list(data)
            if cols < 1 or len(flat) % cols or not flat:
                raise ShapeError(f"{len(flat)} entries do not fill rows of width {cols}")
            ncols, nrows = cols, len(flat) // cols
        self.rows = nrows
        self.cols = ncols
        self.entries = tuple(as_scalar(x) for x in flat)
        self._hash = None

    @classmethod
    def _from_flat(cls, rows, cols, entries):
        obj = object.__new__(cls)
        obj.rows, obj.cols, obj.entries = rows, cols, tuple(entries)
        obj._hash = None
        return obj

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Mat:
        return Mat._from_flat(
            self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    T = property(transpose)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def apply(self, vec):
        """Matrix-vector product with a plain sequence of scalars."""
        if len(vec) != self.cols:
            raise ShapeError(f"vector of length {len(vec)} for {self.rows}x{self.cols} matrix")
        vec = [as_scalar(v) for v in vec]
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, v in zip(self.row(i), vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def _check_same(self, other, op):
        if not isinstance(other, Mat):
            raise TypeError(f"{op} needs two matrices")
        if self.shape != other.shape:
            raise ShapeError(f"{op}: shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same(other, "addition")
        return Mat._from_flat(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same(other, "subtraction")
        return Mat._from_flat(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Mat._from_flat(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, k):
        if isinstance(k, Mat):
            return NotImplemented
        k = as_scalar(k)
        return Mat._from_flat(self.rows, self.cols, [k * a for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return product(self, other)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in self.row(i)) + "]" for i in range(self.rows))
        return f"Mat([{body}])"

    def __str__(self):
        return "\n".join(" ".join(format_scalar(x) for x in self.row(i)) for i in range(self.rows))


def schur(a: Mat, b: Mat) -> Mat:
    """Entrywise (Schur/Hadamard) product."""
    a._check_same(b, "Schur product")
    return Mat._from_flat(a.rows, a.cols, [x * y for x, y in zip(a.entries, b.entries)])


def delete_rc(a: Mat, k: int, l: int) -> Mat:
    """Drop row ``k`` and column ``l`` (both 1-based) of a 3x3 matrix."""
    if a.shape != (3, 3):
        raise ShapeError(f"row/column deletion expects 3x3, got {a.rows}x{a.cols}")
    if k not in (1, 2, 3) or l not in (1, 2, 3):
        raise IndexError(f"deletion indices must lie in 1..3, got ({k}, {l})")
    return Mat._from_flat(
        2, 2,
        [a.entries[3 * i + j] for i in range(3) if i != k - 1 for j in range(3) if j != l - 1],
    )


def product(a: Mat, b: Mat) -> Mat:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, m, p = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    out = []
    for i in range(n):
        for j in range(p):
            acc = ZERO
            for k in range(m):
                x = ae[i * m + k]
                if x:
                    y = be[k * p + j]
                    if y:
                        acc = acc + x * y
            out.append(acc)
    return Mat._from_flat(n, p, out)


def _bareiss(rows, ncols):
    """Fraction-free forward elimination in place.

    Pivot choice is deterministic: for each column in order, the first
    remaining row with a nonzero entry.  Returns ``(rank, swaps, last_pivot)``.
    """
    nrows = len(rows)
    prev = ONE
    r = 0
    swaps = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            swaps += 1
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, ncols):
                v = row[j] * p
                if f and prow[j]:
                    v = v - f * prow[j]
                row[j] = v / prev if prev != ONE else v
            row[c] = ZERO
        prev = p
        r += 1
    return r, swaps, prev


def det(a: Mat) -> Scalar:
    if a.rows != a.cols:
        raise ShapeError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    e = a.entries
    if n == 1:
        return e[0]
    if n == 2:
        return e[0] * e[3] - e[1] * e[2]
    if n == 3:
        return (
            e[0] * (e[4] * e[8] - e[5] * e[7])
            - e[1] * (e[3] * e[8] - e[5] * e[6])
            + e[2] * (e[3] * e[7] - e[4] * e[6])
        )
    rows = [list(a.row(i)) for i in range(n)]
    rk, swaps, last = _bareiss(rows, n)
    if rk < n:
        return ZERO
    return -last if swaps % 2 else last


def rank(a: Mat) -> int:
    """Exact rank by fraction-free elimination."""
    rows = [list(a.row(i)) for i in range(a.rows)]
    return _bareiss(rows, a.cols)[0]


# -- constructors ---------------------------------------------------------------

def diag(values) -> Mat:
    values = [as_scalar(v) for v in values]
    if not values:
        raise ShapeError("diag needs at least one value")
    n = len(values)
    return Mat._from_flat(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])


def jordan3() -> Mat:
    """The nilpotent 3x3 Jordan cell with ones at (2,1) and (3,2)."""
    return Mat([[0, 0, 0], [1, 0, 0], [0, 1, 0]])


def zeros(m: int, n: int) -> Mat:
    if m < 1 or n < 1:
        raise ShapeError("matrix dimensions must be at least 1x1")
    return Mat._from_flat(m, n, [ZERO] * (m * n))


def identity(n: int) -> Mat:
    return diag([ONE] * n)


def elementary(m: int, n: int, i: int, j: int, value=1) -> Mat:
    """Matrix unit with ``value`` at the 1-based position (i, j)."""
    entries = [ZERO] * (m * n)
    entries[(i - 1) * n + (j - 1)] = as_scalar(value)
    return Mat._from_flat(m, n, entries)


def make_special(kind: str, *args) -> Mat:
    """Dispatch on ``kind`` in {"diag", "jordan3", "zero", "identity"}."""
    builders = {"diag": diag, "jordan3": jordan3, "zero": zeros, "identity": identity}
    try:
        build = builders[kind]
    except KeyError:
        raise ValueError(f"unknown special matrix {kind!r}") from None
    return build(*args)
