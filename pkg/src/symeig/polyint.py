"""Dense univariate polynomials over the integers.

Coefficients are stored constant term first, so ``IntPoly((-1, -1, 1))`` is
X^2 - X - 1.  The zero polynomial is the empty tuple; its degree is -1 and
operations that need a genuine polynomial reject it.

Everything here is exact.  Real-root decisions go through a Sturm chain built
from integer pseudo-remainders, never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _igcd
from typing import Iterable, Sequence

from .errors import DivisorNotMonic, NotMonic, ParseError, ZeroPolynomial


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self):
        return pretty(self)


def _coerce(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


X = IntPoly((0, 1))


# -- text format -------------------------------------------------------------

def parse_poly(text: str) -> IntPoly:
    """Parse ``"-1,-1,1"`` (constant term first) into X^2 - X - 1."""
    parts = [t.strip() for t in text.split(",")]
    if not parts or any(t == "" for t in parts):
        raise ParseError(f"malformed coefficient list: {text!r}")
    try:
        return IntPoly(tuple(int(t, 10) for t in parts))
    except ValueError as exc:
        raise ParseError(f"malformed coefficient list: {text!r}") from exc


def format_poly(f: IntPoly) -> str:
    return ",".join(str(c) for c in f.coeffs) if f.coeffs else "0"


def pretty(f: IntPoly, var: str = "X") -> str:
    if not f.coeffs:
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- basic arithmetic --------------------------------------------------------

def derivative(f: IntPoly) -> IntPoly:
    return IntPoly(tuple(k * c for k, c in enumerate(f.coeffs))[1:])


def _require_nonzero(f: IntPoly):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial is not allowed here")


def _require_monic(f: IntPoly):
    _require_nonzero(f)
    if not f.is_monic():
        raise NotMonic(f"leading coefficient is {f.lead}, expected 1: {pretty(f)}")


def poly_divrem(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division with remainder by a monic divisor, so everything stays in Z[X]."""
    if g.is_zero() or not g.is_monic() or g.degree < 1:
        raise DivisorNotMonic(f"divisor must be monic of degree >= 1, got {pretty(g)}")
    r = list(f.coeffs)
    dg = g.degree
    if len(r) - 1 < dg:
        return IntPoly(), f
    q = [0] * (len(r) - dg)
    gc = g.coeffs
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c:
            q[k - dg] = c
            for i in range(dg + 1):
                r[k - dg + i] -= c * gc[i]
    return IntPoly(q), IntPoly(r[:dg])


def _divexact(f: IntPoly, g: IntPoly) -> IntPoly:
    """f / g where the quotient is known to lie in Z[X]; raises if it does not."""
    _require_nonzero(g)
    r = list(f.coeffs)
    dg, lg = g.degree, g.lead
    if len(r) - 1 < dg:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return IntPoly()
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c, rem = divmod(r[k], lg)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        if c:
            q[k - dg] = c
            for i in range(dg + 1):
                r[k - dg + i] -= c * g.coeffs[i]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return IntPoly(q)


def prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder of lead(g)^(deg f - deg g + 1) * f by g."""
    _require_nonzero(g)
    r = list(f.coeffs)
    dg, lg = g.degree, g.lead
    if len(r) - 1 < dg:
        return f
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        r = [x * lg for x in r]
        if c:
            for i in range(dg + 1):
                r[k - dg + i] -= c * g.coeffs[i]
    return IntPoly(r[:dg])


def content(f: IntPoly) -> int:
    c = 0
    for a in f.coeffs:
        c = _igcd(c, a)
    return c


def primitive_part(f: IntPoly) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    if f.is_zero():
        return f
    c = content(f)
    if f.lead < 0:
        c = -c
    return IntPoly(tuple(a // c for a in f.coeffs))


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """gcd in Z[X] via the primitive remainder sequence, positive leading coefficient."""
    if f.is_zero():
        return primitive_part(g) * content(g) if g else g
    if g.is_zero():
        return primitive_part(f) * content(f)
    c = _igcd(content(f), content(g))
    a, b = primitive_part(f), primitive_part(g)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, primitive_part(prem(a, b))
    return primitive_part(a) * c


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the subresultant pseudo-remainder sequence."""
    if f.is_zero() or g.is_zero():
        return 0
    s = 1
    a, b = f, g
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    if b.degree == 0:
        return s * b.lead ** a.degree
    ca, cb = content(a), content(b)
    t = ca ** b.degree * cb ** a.degree
    a = IntPoly(tuple(x // ca for x in a.coeffs))
    b = IntPoly(tuple(x // cb for x in b.coeffs))
    g_, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = prem(a, b)
        a = b
        if r.is_zero():
            return 0
        b = IntPoly(tuple(_exact(x, g_ * h ** delta) for x in r.coeffs))
        g_ = a.lead
        h = _exact(g_ ** delta, h ** (delta - 1)) if delta else h
        if b.degree == 0:
            break
    da = a.degree
    h = _exact(b.lead ** da, h ** (da - 1)) if da else h
    return s * t * h


def _exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} not divisible by {b}")
    return q


# -- real roots ----------------------------------------------------------------

def sturm_chain(f: IntPoly) -> list[IntPoly]:
    """Sturm chain f, f', ... with every member scaled by a positive integer.

    Pseudo-remainders multiply by lead^(delta+1); when that factor is negative
    the sign is flipped back so the chain keeps the signs of the rational one.
    """
    _require_nonzero(f)
    chain = [f]
    if f.degree == 0:
        return chain
    chain.append(derivative(f))
    while True:
        a, b = chain[-2], chain[-1]
        r = prem(a, b)
        if r.is_zero():
            break
        if b.lead < 0 and (a.degree - b.degree + 1) % 2:
            r = -r
        r = -r
        chain.append(IntPoly(tuple(x // content(r) for x in r.coeffs)))
    return chain


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sturm_distinct_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots of f."""
    chain = sturm_chain(f)
    at_pos = [_sign(p.lead) for p in chain]
    at_neg = [_sign(p.lead) * (-1) ** p.degree for p in chain]
    return _variations(at_neg) - _variations(at_pos)


def squarefree_part(f: IntPoly) -> IntPoly:
    _require_nonzero(f)
    if f.degree == 0:
        return IntPoly((1,))
    g = poly_gcd(f, derivative(f))
    return primitive_part(_divexact(primitive_part(f), primitive_part(g)))


def is_strict_real_zero(f: IntPoly) -> bool:
    """Real-rooted and squarefree: n distinct real roots for degree n."""
    _require_monic(f)
    return sturm_distinct_real_roots(f) == f.degree


def is_real_zero(f: IntPoly) -> bool:
    _require_monic(f)
    g = squarefree_part(f)
    return sturm_distinct_real_roots(g) == g.degree


@dataclass(frozen=True)
class SquarefreeDecomposition:
    parts: tuple[tuple[IntPoly, int], ...]

    def product(self) -> IntPoly:
        out = IntPoly((1,))
        for g, e in self.parts:
            out = out * g ** e
        return out


def squarefree_decompose(f: IntPoly) -> SquarefreeDecomposition:
    """Yun's algorithm.  Every factor is monic because f is."""
    _require_monic(f)
    if f.degree < 1:
        raise NotMonic("need degree >= 1")
    df = derivative(f)
    a = poly_gcd(f, df)
    b = _divexact(f, a)
    c = _divexact(df, a)
    d = c - derivative(b)
    parts = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = _divexact(b, a)
        c = _divexact(d, a)
        d = c - derivative(b)
        if a.degree > 0:
            parts.append((a, i))
        i += 1
    return SquarefreeDecomposition(tuple(parts))
