import random
import sys
from fractions import Fraction

import pytest

from symeig.polyint import IntPoly

# the seven polynomials used throughout: X-3, X^2-2, X^2-3, X^2-X-1,
# X^3-3X-1, X^3-X^2-2X+1, X^4-4X^2+2
CORPUS = [
    IntPoly((-3, 1)),
    IntPoly((-2, 0, 1)),
    IntPoly((-3, 0, 1)),
    IntPoly((-1, -1, 1)),
    IntPoly((-1, -3, 0, 1)),
    IntPoly((1, -2, -1, 1)),
    IntPoly((2, 0, -4, 0, 1)),
]


def random_monic(rng, max_deg, bound, min_deg=1):
    d = rng.randint(min_deg, max_deg)
    return IntPoly(tuple(rng.randint(-bound, bound) for _ in range(d)) + (1,))


@pytest.fixture
def rng():
    return random.Random(20261018)


# -- oracles independent of the package's own algorithms ---------------------

def _descartes(coeffs):
    nz = [c for c in coeffs if c]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def _taylor_shift_onto_interval(p, lo, hi):
    """Coefficients of (1+t)^n p((lo + hi t)/(1+t)); its positive roots are p's roots in (lo, hi)."""
    n = len(p) - 1
    out = [Fraction(0)] * (n + 1)
    for k, c in enumerate(p):
        if not c:
            continue
        # c * (lo + hi t)^k (1 + t)^(n-k)
        term = [Fraction(c)]
        for _ in range(k):
            term = _mul(term, [Fraction(lo), Fraction(hi)])
        for _ in range(n - k):
            term = _mul(term, [Fraction(1), Fraction(1)])
        for i, x in enumerate(term):
            out[i] += x
    return out


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def bisection_root_count(sqfree_coeffs):
    """Count the real roots of a squarefree polynomial by interval bisection.

    Intervals are refined until Descartes' rule of signs certifies zero or one
    root; roots landing exactly on a split point are counted separately.
    """
    p = [Fraction(c) for c in sqfree_coeffs]
    if len(p) <= 1:
        return 0
    bound = 1 + max(abs(c) for c in p[:-1]) / abs(p[-1])
    stack = [(-bound, bound)]
    count = 0
    if _eval(p, -bound) == 0:
        count += 1
    while stack:
        lo, hi = stack.pop()
        v = _descartes(_taylor_shift_onto_interval(p, lo, hi))
        if v == 0:
            continue
        if v == 1:
            count += 1
            continue
        mid = (lo + hi) / 2
        if _eval(p, mid) == 0:
            count += 1
        stack += [(lo, mid), (mid, hi)]
    return count


def sylvester_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix, via sympy."""
    import sympy
    m, n = f.degree, g.degree
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (m - 1 - i))
    return int(sympy.Matrix(rows).det())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS.values():
        terminalreporter.write_line(line)
