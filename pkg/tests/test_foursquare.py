from math import isqrt

import pytest

from symeig.errors import NegativeInput
from symeig.foursquare import FourSquare, decompose


def exhaustive_greatest(n):
    best = None
    for a in range(isqrt(n) + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                d2 = n - a * a - b * b - c * c
                if d2 < 0:
                    continue
                d = isqrt(d2)
                if d * d == d2 and d <= c:
                    cand = (a, b, c, d)
                    if best is None or cand > best:
                        best = cand
    return best


@pytest.mark.parametrize("n, digits", [(0, (0, 0, 0, 0)), (7, (2, 1, 1, 1)), (4, (2, 0, 0, 0))])
def test_examples(n, digits):
    assert decompose(n).digits == digits


def test_negative():
    with pytest.raises(NegativeInput):
        decompose(-1)


def test_all_up_to_ten_thousand():
    for n in range(10_001):
        q = decompose(n)
        assert q.a ** 2 + q.b ** 2 + q.c ** 2 + q.d ** 2 == n
        assert q.a >= q.b >= q.c >= q.d >= 0


def test_canonical_against_exhaustive_search():
    for n in range(400):
        assert decompose(n).digits == exhaustive_greatest(n)


def test_deterministic_and_large():
    n = 3 * 10 ** 40 + 7
    assert decompose(n) == decompose(n)
    q = decompose(n)
    assert sum(x * x for x in q.digits) == n


def test_invariants_enforced():
    with pytest.raises(ValueError):
        FourSquare(5, 2, 1, 0, 1)
    with pytest.raises(ValueError):
        FourSquare(6, 2, 1, 0, 0)
