"""Companion and Bezout matrices of integer polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooHigh, NotMonic
from .exactmat import IntMatrix, SymIntMatrix
from .polyint import IntPoly, derivative, pretty


@dataclass(frozen=True)
class CompanionMatrix:
    n: int
    matrix: IntMatrix


@dataclass(frozen=True)
class BezoutMatrix:
    n: int
    matrix: SymIntMatrix
    f: IntPoly
    g: IntPoly


def _check_monic(f: IntPoly):
    if f.is_zero() or f.degree < 1 or not f.is_monic():
        raise NotMonic(f"expected a monic polynomial of degree >= 1, got {pretty(f)}")


def companion(f: IntPoly) -> CompanionMatrix:
    """Matrix of h -> X*h on Z[X]/(f) in the basis 1, X, ..., X^(n-1).

    Column j is the image of X^j: the unit vector e_(j+1) for j < n-1, and
    -f_0, ..., -f_(n-1) for the last column.
    """
    _check_monic(f)
    n = f.degree
    rows = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        rows[j + 1][j] = 1
    for i in range(n):
        rows[i][n - 1] = -f[i]
    return CompanionMatrix(n, IntMatrix.from_rows(rows, n))


def _bezoutian(f: IntPoly, g: IntPoly) -> dict[tuple[int, int], int]:
    """Coefficients of (f(Y) g(X) - f(X) g(Y)) / (Y - X), keyed by (deg_Y, deg_X).

    The numerator is expanded as a polynomial in Y over Z[X] and divided by
    the monic linear factor Y - X with synthetic division.  The remainder must
    vanish; a nonzero one means a bug, not bad input.
    """
    top = max(f.degree, g.degree)
    # num[k] = coefficient of Y^k, itself a polynomial in X
    num = [f[k] * g - g[k] * f for k in range(top + 1)]
    quot = [IntPoly()] * top
    carry = IntPoly()
    for k in range(top, 0, -1):
        carry = num[k] + carry * IntPoly((0, 1))
        quot[k - 1] = carry
    rem = num[0] + carry * IntPoly((0, 1))
    if not rem.is_zero():
        raise ArithmeticError("Bezoutian numerator not divisible by Y - X")
    out = {}
    for i, q in enumerate(quot):
        for j, c in enumerate(q.coeffs):
            if c:
                out[i, j] = c
    return out


def bezout(f: IntPoly, g: IntPoly) -> BezoutMatrix:
    """B(f, g) with entry (i, j) the coefficient of Y^i X^j (0-indexed)."""
    _check_monic(f)
    n = f.degree
    if g.degree > n - 1:
        raise DegreeTooHigh(f"deg g = {g.degree} exceeds deg f - 1 = {n - 1}")
    coeff = _bezoutian(f, g)
    rows = [[coeff.get((i, j), 0) for j in range(n)] for i in range(n)]
    return BezoutMatrix(n, SymIntMatrix.from_rows(rows, n), f, g)


def bezout_ffprime(f: IntPoly) -> BezoutMatrix:
    return bezout(f, derivative(f))
