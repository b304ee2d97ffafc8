"""Independent re-checking of certificates and a brute-force size oracle.

The verifier deliberately avoids the builders' code paths: the characteristic
polynomial comes from Bareiss elimination over Z[X] instead of
Faddeev-LeVerrier, the Bezout matrix from its closed double-sum formula
instead of bivariate division, and the companion matrix is rebuilt inline.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .certify import SIZE_FACTOR, EigenCertificate
from .errors import BoundsTooLarge, NotMonic
from .exactmat import IntMatrix, SymIntMatrix, charpoly, charpoly_bareiss, direct_sum, matmul
from .polyint import IntPoly, derivative, poly_divrem, pretty

DEFAULT_BUDGET = 1_000_000

FINDING_NAMES = ("symmetric", "psatz_identity", "intertwine", "divides", "size_bound")


@dataclass(frozen=True)
class Finding:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    findings: tuple[Finding, ...]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.findings)

    def failed(self) -> list[str]:
        return [f.name for f in self.findings if not f.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "findings": [{"name": f.name, "pass": f.passed, "detail": f.detail}
                             for f in self.findings]}


def _companion_rows(f: IntPoly) -> list[list[int]]:
    n = f.degree
    return [[(1 if i == j + 1 else 0) if j < n - 1 else -f[i] for j in range(n)]
            for i in range(n)]


def _bezout_rows(f: IntPoly, g: IntPoly) -> list[list[int]]:
    # (Y^a X^b - X^a Y^b)/(Y - X) = sum_{t<a-b} Y^(b+t) X^(a-1-t) for a > b
    n = f.degree
    out = [[0] * n for _ in range(n)]
    for a in range(n + 1):
        for b in range(a):
            w = f[a] * g[b] - f[b] * g[a]
            if w:
                for t in range(a - b):
                    out[b + t][a - 1 - t] += w
    return out


def _check(name: str, fn) -> Finding:
    try:
        ok, detail = fn()
    except Exception as exc:  # malformed input must end up in the report
        return Finding(name, False, f"{type(exc).__name__}: {exc}")
    return Finding(name, bool(ok), detail)


def _symmetric(cert):
    m = cert.m_matrix
    if not m.is_square():
        return False, f"M is {m.rows}x{m.cols}"
    bad = [(i, j) for i in range(m.rows) for j in range(i) if m[i, j] != m[j, i]]
    return not bad, f"asymmetric at {bad[0]}" if bad else f"{m.rows}x{m.rows} symmetric"


def _psatz_one(cert):
    ps = cert.psatz
    n = cert.n
    b = cert.b.matrix
    if ps.s < 1:
        return False, f"s = {ps.s} is not positive"
    if ps.q.cols != n:
        return False, f"Q has {ps.q.cols} columns, expected {n}"
    if ps.q.rows > 8 * n:
        return False, f"m = {ps.q.rows} exceeds 8n = {8 * n}"
    qtq = matmul(ps.q.T, ps.q)
    bad = [(i, j) for i in range(n) for j in range(n)
           if ps.s * b[i, j] - (i == j) - qtq[i, j] != 0]
    if bad:
        return False, f"s*B - I - Q^T Q nonzero at {bad[0]}"
    return True, f"s = {ps.s}, m = {ps.q.rows} <= {8 * n}"


def _intertwine_one(cert):
    f, n = cert.f, cert.n
    if f.degree != n:
        return False, f"n = {n} but deg f = {f.degree}"
    c, b = cert.c.matrix, cert.b.matrix
    if c.to_rows() != _companion_rows(f):
        return False, "C is not the companion matrix of f"
    if b.to_rows() != _bezout_rows(f, derivative(f)):
        return False, "B is not B(f, f')"
    if matmul(c, b) != matmul(b, c.T):
        return False, "C B != B C^T"
    return True, "C = companion(f), B = B(f, f'), C B = B C^T"


def _over_parts(cert, one):
    if not cert.parts:
        return one(cert)
    for i, (p, _) in enumerate(cert.parts):
        ok, detail = one(p)
        if not ok:
            return False, f"part {i}: {detail}"
    return True, f"all {len(cert.parts)} parts"


def _divides(cert):
    f = cert.f
    if not f.is_monic() or f.degree < 1:
        return False, f"f = {pretty(f)} is not monic of positive degree"
    m = cert.m_matrix
    if not m.is_square():
        return False, "M is not square"
    _, r = poly_divrem(charpoly_bareiss(m), f)
    return r.is_zero(), "remainder 0" if r.is_zero() else f"remainder {pretty(r)}"


def _size(cert):
    m, n = cert.m_matrix, cert.f.degree
    if cert.size != m.rows or m.rows != m.cols:
        return False, f"declared size {cert.size}, M is {m.rows}x{m.cols}"
    if cert.parts:
        expect = direct_sum(p.m_matrix for p, e in cert.parts for _ in range(e))
        if expect != m:
            return False, "M is not the direct sum of the part matrices"
        prod = IntPoly((1,))
        for p, e in cert.parts:
            prod = prod * p.f ** e
        if prod != cert.f:
            return False, "parts do not multiply to f"
    elif cert.psatz is not None and m.rows != n + cert.psatz.q.rows:
        return False, f"size {m.rows} != n + m = {n + cert.psatz.q.rows}"
    ok = m.rows <= SIZE_FACTOR * n
    return ok, f"size {m.rows} {'<=' if ok else '>'} {SIZE_FACTOR}*{n}"


def verify_certificate(cert: EigenCertificate) -> VerificationReport:
    return VerificationReport((
        _check("symmetric", lambda: _symmetric(cert)),
        _check("psatz_identity", lambda: _over_parts(cert, _psatz_one)),
        _check("intertwine", lambda: _over_parts(cert, _intertwine_one)),
        _check("divides", lambda: _divides(cert)),
        _check("size_bound", lambda: _size(cert)),
    ))


# -- brute-force oracle ------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    f: IntPoly
    min_size_found: int | None
    witness: SymIntMatrix | None
    search_bounds: tuple[int, int] = field(default=(0, 0))

    def to_json(self) -> dict:
        return {"f": ",".join(map(str, self.f.coeffs)),
                "min_size_found": self.min_size_found,
                "witness": ([[str(x) for x in self.witness.row(i)]
                             for i in range(self.witness.rows)] if self.witness else None),
                "search_bounds": {"max_size": self.search_bounds[0],
                                  "max_entry": self.search_bounds[1]}}


def entry_order(max_entry: int) -> list[int]:
    """0, 1, -1, 2, -2, ...: the per-entry order behind 'lexicographically least'."""
    out = [0]
    for k in range(1, max_entry + 1):
        out += [k, -k]
    return out


def enumeration_count(degree: int, max_size: int, max_entry: int) -> int:
    w = 2 * max_entry + 1
    return sum(w ** (r * (r + 1) // 2) for r in range(max(degree, 1), max_size + 1))


def _fill(r: int, upper) -> IntMatrix:
    rows = [[0] * r for _ in range(r)]
    it = iter(upper)
    for i in range(r):
        for j in range(i, r):
            rows[i][j] = rows[j][i] = next(it)
    return IntMatrix.from_rows(rows, r)


def _scan(f: IntPoly, r: int, values, head: int | None):
    """First witness of size r in canonical order, optionally with a fixed first entry."""
    k = r * (r + 1) // 2
    firsts = values if head is None else [head]
    # at r == deg f the charpoly must equal f, which pins the trace
    diag = [i * r - i * (i - 1) // 2 for i in range(r)]
    want_trace = -f[r - 1] if r == f.degree else None
    for first in firsts:
        for tail in product(values, repeat=k - 1):
            upper = (first,) + tail
            if want_trace is not None and sum(upper[p] for p in diag) != want_trace:
                continue
            m = _fill(r, upper)
            if poly_divrem(charpoly(m), f)[1].is_zero():
                return m.to_rows()
    return None


def _scan_job(args):
    return _scan(*args)


def brute_force_min_size(f: IntPoly, max_size: int, max_entry: int,
                         budget: int = DEFAULT_BUDGET, workers: int = 1) -> OracleResult:
    """Least size r <= max_size of a symmetric matrix with entries in
    [-max_entry, max_entry] whose characteristic polynomial f divides.

    Matrices are compared by their upper triangles read row by row, each entry
    ranked 0 < 1 < -1 < 2 < -2 < ...; the witness is the least one of minimal
    size.  With workers > 1 the scan of each size is split by its first entry
    and the first shard (in that order) holding a witness wins, so the answer
    does not depend on scheduling.
    """
    if f.is_zero() or f.degree < 1 or not f.is_monic():
        raise NotMonic(f"expected a monic polynomial of degree >= 1, got {pretty(f)}")
    if max_size < 0 or max_entry < 0:
        raise ValueError("bounds must be nonnegative")
    count = enumeration_count(f.degree, max_size, max_entry)
    if count > budget:
        raise BoundsTooLarge(f"{count} matrices to enumerate exceeds the budget of {budget}")
    values = entry_order(max_entry)
    for r in range(f.degree, max_size + 1):
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                found = next((w for w in pool.map(_scan_job, [(f, r, values, v) for v in values])
                              if w is not None), None)
        else:
            found = _scan(f, r, values, None)
        if found is not None:
            return OracleResult(f, r, SymIntMatrix.from_rows(found, r), (max_size, max_entry))
    return OracleResult(f, None, None, (max_size, max_entry))
