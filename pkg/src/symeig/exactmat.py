"""Exact integer matrices.

Entries are Python ints stored row-major in a tuple, so values are immutable
and arbitrarily large.  Two independent characteristic polynomial routes are
provided: Faddeev-LeVerrier (used by the builders) and fraction-free Bareiss
elimination over Z[X] (used by the verifier).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from operator import mul
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare, NotSymmetric
from .polyint import IntPoly, _divexact


@dataclass(frozen=True, eq=False)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(x) for x in self.entries)
        if self.rows < 0 or self.cols < 0 or len(ent) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(ent)} entries do not fill a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", ent)

    def __eq__(self, other):
        # shape and entries only, so a SymIntMatrix equals the same IntMatrix
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def symmetric(self) -> SymIntMatrix:
        return SymIntMatrix(self.rows, self.cols, self.entries)

    def with_entry(self, i: int, j: int, value: int) -> IntMatrix:
        ent = list(self.entries)
        ent[i * self.cols + j] = value
        return IntMatrix(self.rows, self.cols, tuple(ent))

    def _same_shape(self, other: IntMatrix):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return matmul(self, other)

    def trace(self) -> int:
        if not self.is_square():
            raise NotSquare(f"trace of a {self.rows}x{self.cols} matrix")
        return sum(self[i, i] for i in range(self.rows))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


class SymIntMatrix(IntMatrix):
    """Square integer matrix whose symmetry is checked at construction."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_symmetric():
            raise NotSymmetric("matrix is not symmetric")

    @property
    def n(self) -> int:
        return self.rows

    def __repr__(self):
        return f"SymIntMatrix({self.to_rows()!r})"


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.entries[j::b.cols] for j in range(b.cols)] if b.cols else []
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum(map(mul, r, c)) for c in bcols)
    return IntMatrix(a.rows, b.cols, tuple(out))


def block_assemble(blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Concatenate a grid of blocks; works for any grid, 2x2 being the usual case."""
    grid = [list(r) for r in blocks]
    if not grid or not grid[0]:
        return IntMatrix.zeros(0, 0)
    heights = [r[0].rows for r in grid]
    widths = [b.cols for b in grid[0]]
    for bi, r in enumerate(grid):
        if len(r) != len(widths):
            raise DimensionMismatch("block rows have different lengths")
        for bj, blk in enumerate(r):
            if blk.shape != (heights[bi], widths[bj]):
                raise DimensionMismatch(
                    f"block ({bi},{bj}) has shape {blk.shape}, "
                    f"expected {(heights[bi], widths[bj])}")
    out = []
    for bi, r in enumerate(grid):
        for i in range(heights[bi]):
            for blk in r:
                out.extend(blk.row(i))
    return IntMatrix(sum(heights), sum(widths), tuple(out))


def direct_sum(mats: Iterable[IntMatrix]) -> IntMatrix:
    mats = list(mats)
    return block_assemble([
        [m if i == j else IntMatrix.zeros(m.rows, other.cols) for j, other in enumerate(mats)]
        for i, m in enumerate(mats)])


# -- determinants ------------------------------------------------------------

def det(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination with row pivoting."""
    if not m.is_square():
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    a = m.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def leading_principal_minors(m: IntMatrix) -> list[int]:
    """Delta_1..Delta_n from one unpivoted Bareiss sweep.

    Bareiss without pivoting leaves the k-th leading minor on the diagonal.
    A zero minor would stall the sweep, so the remaining minors are then taken
    one by one with the pivoted determinant.
    """
    if not m.is_square():
        raise NotSquare("leading principal minors need a square matrix")
    n = m.rows
    a = m.to_rows()
    minors = []
    prev = 1
    for k in range(n):
        akk = a[k][k]
        minors.append(akk)
        if akk == 0:
            for j in range(k + 1, n):
                sub = IntMatrix.from_rows([r[:j + 1] for r in m.to_rows()[:j + 1]])
                minors.append(det(sub))
            return minors
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return minors


def is_positive_definite(m: IntMatrix) -> bool:
    """Sylvester's criterion."""
    return m.is_symmetric() and all(d > 0 for d in leading_principal_minors(m))


def is_positive_semidefinite(m: IntMatrix) -> bool:
    """Symmetric fraction-free elimination; fails on a negative pivot or on a
    zero diagonal entry whose row is not zero."""
    if not m.is_symmetric():
        return False
    a = m.to_rows()
    live = list(range(m.rows))
    while live:
        piv = None
        for i in live:
            d = a[i][i]
            if d < 0:
                return False
            if d == 0:
                if any(a[i][j] for j in live):
                    return False
            elif piv is None:
                piv = i
        if piv is None:
            return True
        live.remove(piv)
        d = a[piv][piv]
        v = a[piv]
        g = 0
        for i in live:
            for j in live:
                a[i][j] = d * a[i][j] - v[i] * v[j]
                g = gcd(g, a[i][j])
        if g > 1:
            for i in live:
                for j in live:
                    a[i][j] //= g
    return True


def cauchy_binet_check(q: IntMatrix) -> bool:
    """det(Q^T Q) against the sum of squared maximal minors of Q."""
    if q.rows < q.cols:
        raise DimensionMismatch(f"need rows >= cols, got {q.shape}")
    lhs = det(matmul(q.T, q))
    rows = q.to_rows()
    rhs = sum(det(IntMatrix.from_rows([rows[i] for i in J], q.cols)) ** 2
              for J in combinations(range(q.rows), q.cols))
    return lhs == rhs


# -- characteristic polynomials ---------------------------------------------

def charpoly(m: IntMatrix) -> IntPoly:
    """det(X*I - M) by Faddeev-LeVerrier; every division by k is exact over Z."""
    if not m.is_square():
        raise NotSquare(f"characteristic polynomial of a {m.rows}x{m.cols} matrix")
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = IntMatrix.identity(n)
    mk = IntMatrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = matmul(m, mk) + ident.scale(coeffs[n - k + 1])
        t = matmul(m, mk).trace()
        c, r = divmod(-t, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact over Z"
        coeffs[n - k] = c
    return IntPoly(coeffs)


def charpoly_bareiss(m: IntMatrix) -> IntPoly:
    """det(X*I - M) by fraction-free elimination over Z[X].

    Leading principal minors of X*I - M are monic in X, so no pivoting is
    needed and every division by the previous pivot is exact.
    """
    if not m.is_square():
        raise NotSquare(f"characteristic polynomial of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return IntPoly((1,))
    a = [[IntPoly((-m[i, j], int(i == j))) for j in range(n)] for i in range(n)]
    prev = IntPoly((1,))
    for k in range(n - 1):
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                num = akk * ri[j] - aik * rk[j]
                ri[j] = _divexact(num, prev) if k else num
        prev = akk
    return a[n - 1][n - 1]


# -- JSON form ---------------------------------------------------------------

def matrix_to_json(m: IntMatrix) -> list[list[str]]:
    return [[str(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(rows, cols: int | None = None) -> IntMatrix:
    """Inverse of matrix_to_json.  ``cols`` disambiguates a matrix with no rows."""
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValueError("matrix must be a list of lists")
    for r in rows:
        for x in r:
            if not isinstance(x, str):
                raise ValueError(f"matrix entries must be decimal strings, got {x!r}")
    width = cols if cols is not None else (len(rows[0]) if rows else 0)
    return IntMatrix.from_rows([[int(x, 10) for x in r] for r in rows], width)
