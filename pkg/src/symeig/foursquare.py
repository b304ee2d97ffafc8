"""Lagrange four-square decompositions.

``decompose(n)`` returns the lexicographically greatest (a, b, c, d) with
a >= b >= c >= d >= 0 and a^2 + b^2 + c^2 + d^2 = n.  Largest-first greedy
search with backtracking finds it; the sum-of-three-squares test prunes the
choice of a so only a handful of candidates are ever tried.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import NegativeInput


@dataclass(frozen=True)
class FourSquare:
    target: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d != self.target:
            raise ValueError(f"{self.digits} does not square-sum to {self.target}")
        if not self.a >= self.b >= self.c >= self.d >= 0:
            raise ValueError(f"{self.digits} is not in canonical order")

    @property
    def digits(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def nonzero(self) -> tuple[int, ...]:
        return tuple(x for x in self.digits if x)


def _is_sum_of_three_squares(n: int) -> bool:
    # Legendre: exactly the integers not of the form 4^k (8m + 7)
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def _two_squares(n: int, cap: int) -> tuple[int, int] | None:
    """Largest c <= cap with n - c^2 a square d^2, d <= c."""
    m = n
    while m and m % 2 == 0:
        m //= 2
    if m % 4 == 3:
        return None
    c = min(cap, isqrt(n))
    while 2 * c * c >= n:
        d2 = n - c * c
        d = isqrt(d2)
        if d * d == d2:
            return c, d
        c -= 1
    return None


def _three_squares(n: int, cap: int) -> tuple[int, int, int] | None:
    b = min(cap, isqrt(n))
    while 3 * b * b >= n:
        rest = n - b * b
        found = _two_squares(rest, b)
        if found is not None:
            return (b,) + found
        b -= 1
    return None


def decompose(n: int) -> FourSquare:
    if n < 0:
        raise NegativeInput(f"{n} is negative")
    a = isqrt(n)
    while 4 * a * a >= n:
        rest = n - a * a
        if _is_sum_of_three_squares(rest):
            found = _three_squares(rest, a)
            if found is not None:
                return FourSquare(n, a, *found)
        a -= 1
    raise AssertionError(f"no four-square decomposition found for {n}")
