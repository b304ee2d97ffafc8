import pytest
import sympy

from symeig.errors import DegreeTooHigh, NotMonic
from symeig.exactmat import IntMatrix, charpoly, det, is_positive_definite, matmul
from symeig.polyint import IntPoly, derivative, is_strict_real_zero, resultant
from symeig.structmat import bezout, bezout_ffprime, companion

from conftest import CORPUS, random_monic

P = IntPoly
M = IntMatrix.from_rows


def brute_bezout(f, g):
    """Coefficients of (f(Y)g(X) - f(X)g(Y))/(Y - X) straight from sympy."""
    x, y = sympy.symbols("x y")
    fx = sum(c * x ** k for k, c in enumerate(f.coeffs))
    gx = sum(c * x ** k for k, c in enumerate(g.coeffs))
    quo = sympy.cancel((fx.subs(x, y) * gx - fx * gx.subs(x, y)) / (y - x))
    poly = sympy.Poly(sympy.expand(quo), y, x)
    n = f.degree
    return [[int(poly.coeff_monomial(y ** i * x ** j)) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("f, expect", [
    (P((-1, -1, 1)), [[0, 1], [1, 1]]),
    (P((-2, 0, 1)), [[0, 2], [1, 0]]),
    (P((-7, 1)), [[7]]),
])
def test_companion_examples(f, expect):
    assert companion(f).matrix == M(expect)


def test_companion_rejects_non_monic():
    with pytest.raises(NotMonic):
        companion(P((1, 2)))


@pytest.mark.parametrize("f, g, expect", [
    (P((-1, -1, 1)), P((-1, 2)), [[3, -1], [-1, 2]]),
    (P((-2, 0, 1)), P((0, 2)), [[4, 0], [0, 2]]),
    (P((5, 3, 1)), P((1,)), [[3, 1], [1, 0]]),
])
def test_bezout_examples(f, g, expect):
    b = bezout(f, g)
    assert b.matrix == M(expect)
    assert brute_bezout(f, g) == expect


def test_bezout_f_one_invertible():
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert det(bezout(P((b, a, 1)), P((1,))).matrix) == -1


def test_bezout_degree_guard():
    with pytest.raises(DegreeTooHigh):
        bezout(P((-2, 0, 1)), P((0, 0, 1)))
    with pytest.raises(NotMonic):
        bezout(P((1, 3)), P((1,)))


def test_bezout_ffprime_examples():
    b = bezout_ffprime(P((-1, -1, 1)))
    assert b.matrix == M([[3, -1], [-1, 2]])
    assert det(b.matrix) == 5
    assert bezout_ffprime(P((-4, 1))).matrix == M([[1]])
    b = bezout_ffprime(P((1, 0, 1)))
    assert brute_bezout(P((1, 0, 1)), P((0, 2))) == b.matrix.to_rows()
    assert not is_positive_definite(b.matrix)


def test_bezout_matches_bivariate_oracle(rng):
    for _ in range(25):
        f = random_monic(rng, 5, 5, min_deg=2)
        g = P(tuple(rng.randint(-5, 5) for _ in range(f.degree)))
        assert bezout(f, g).matrix.to_rows() == brute_bezout(f, g)


def _pairs(rng, count):
    out = []
    for f in CORPUS:
        out.append((f, derivative(f)))
    while len(out) < count:
        f = random_monic(rng, 6, 6)
        out.append((f, P(tuple(rng.randint(-6, 6) for _ in range(f.degree)))))
    return out


def test_bezout_additive(rng):
    for f, g1 in _pairs(rng, 57):
        g2 = P(tuple(rng.randint(-6, 6) for _ in range(f.degree)))
        assert bezout(f, g1 + g2).matrix == bezout(f, g1).matrix + bezout(f, g2).matrix


def test_intertwining(rng):
    for f, g in _pairs(rng, 57):
        c, b = companion(f).matrix, bezout(f, g).matrix
        assert matmul(c, b) == matmul(b, c.T)


def test_det_is_resultant_up_to_sign(rng):
    polys = list(CORPUS) + [random_monic(rng, 6, 5) for _ in range(60)]
    for f in polys:
        d = det(bezout_ffprime(f).matrix)
        r = resultant(f, derivative(f))
        assert abs(d) == abs(r)
        assert (d != 0) == (f.degree == 1 or is_strict_real_zero(f) or r != 0)


def test_companion_charpoly(rng):
    for f in list(CORPUS) + [random_monic(rng, 6, 9) for _ in range(60)]:
        assert charpoly(companion(f).matrix) == f


def test_positive_definite_iff_strict(rng):
    for _ in range(300):
        f = random_monic(rng, 6, 9)
        assert is_positive_definite(bezout_ffprime(f).matrix) == is_strict_real_zero(f), f
    for f in CORPUS:
        assert is_positive_definite(bezout_ffprime(f).matrix)
