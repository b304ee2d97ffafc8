"""Symmetric integer matrices whose characteristic polynomial is divisible by f.

For a monic f with n distinct real roots, B = B(f, f') is positive definite,
so there is a certificate s*B = I + Q^T Q with Q of size m x n, m <= 8n.  With
C the companion matrix of f,

    M = [[C - Q^T Q C^T,  C Q^T],
         [Q C^T,          0    ]]

is symmetric (because C B = B C^T) and conjugate over Z to the block lower
triangular

    M' = [[C,      0          ],
          [Q C^T,  -Q C^T Q^T ]]

by Q' = [[I, Q^T], [0, I]], so f divides charpoly(M) and M has size n + m <= 9n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalCertificateFailure, NotMonic, NotRealZero, NotStrictRealZero
from .exactmat import (IntMatrix, SymIntMatrix, block_assemble, charpoly, direct_sum,
                       matmul, matrix_from_json, matrix_to_json)
from .polyint import (IntPoly, derivative, format_poly, is_real_zero, is_strict_real_zero,
                      parse_poly, poly_divrem, pretty, squarefree_decompose,
                      sturm_distinct_real_roots)
from .psatz import PsatzCertificate, certify as psatz_certify
from .structmat import BezoutMatrix, CompanionMatrix, bezout_ffprime, companion

SIZE_FACTOR = 9  # 2 * 4 + 1, four squares suffice over Z


@dataclass(frozen=True)
class EigenCertificate:
    f: IntPoly
    n: int
    c: CompanionMatrix | None
    b: BezoutMatrix | None
    psatz: PsatzCertificate | None
    m_matrix: IntMatrix
    size: int
    checks: dict = field(default_factory=dict)
    q_prime: IntMatrix | None = None
    m_prime: IntMatrix | None = None
    # for direct sums: (certificate, multiplicity) per squarefree factor
    parts: tuple = ()

    @property
    def is_direct_sum(self) -> bool:
        return bool(self.parts)


def _require_monic(f: IntPoly):
    if f.is_zero() or f.degree < 1 or not f.is_monic():
        raise NotMonic(f"expected a monic polynomial of degree >= 1, got {pretty(f)}")


def _divides(f: IntPoly, g: IntPoly) -> bool:
    return poly_divrem(g, f)[1].is_zero()


def build_strict(f: IntPoly) -> EigenCertificate:
    _require_monic(f)
    if not is_strict_real_zero(f):
        roots = sturm_distinct_real_roots(f)
        raise NotStrictRealZero(
            f"{pretty(f)} has {roots} distinct real roots, {f.degree} required")
    n = f.degree
    comp = companion(f)
    bez = bezout_ffprime(f)
    c, b = comp.matrix, bez.matrix
    ct = c.T
    checks = {"intertwine": matmul(c, b) == matmul(b, ct)}

    cert = psatz_certify(b)
    checks["psatz"] = cert.is_valid()
    q = cert.q
    m = q.rows
    qt = q.T
    qct = matmul(q, ct)

    top_left = c - matmul(matmul(qt, q), ct)
    big = block_assemble([[top_left, matmul(c, qt)],
                          [qct, IntMatrix.zeros(m, m)]])
    checks["symmetric"] = big.is_symmetric()

    q_prime = block_assemble([[IntMatrix.identity(n), qt],
                              [IntMatrix.zeros(m, n), IntMatrix.identity(m)]])
    corner = -matmul(qct, qt)
    m_prime = block_assemble([[c, IntMatrix.zeros(n, m)],
                              [qct, corner]])
    checks["similarity"] = matmul(q_prime, big) == matmul(m_prime, q_prime)
    checks["block_factor"] = charpoly(m_prime) == f * charpoly(corner)
    checks["divides"] = _divides(f, charpoly(big))
    checks["size_bound"] = n + m <= SIZE_FACTOR * n

    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise InternalCertificateFailure(f"checks failed for {pretty(f)}: {failed}")
    return EigenCertificate(f, n, comp, bez, cert, big.symmetric(), n + m, checks,
                            q_prime, m_prime)


def build_any(f: IntPoly) -> EigenCertificate:
    """Direct sum over the squarefree decomposition, one block per multiplicity."""
    _require_monic(f)
    if not is_real_zero(f):
        raise NotRealZero(f"{pretty(f)} has non-real roots")
    parts = squarefree_decompose(f).parts
    if len(parts) == 1 and parts[0][1] == 1:
        return build_strict(f)
    sub = tuple((build_strict(g), e) for g, e in parts)
    big = direct_sum(cert.m_matrix for cert, e in sub for _ in range(e))
    size = big.rows
    checks = {
        "symmetric": big.is_symmetric(),
        "parts": all(all(cert.checks.values()) for cert, _ in sub),
        "divides": _divides(f, charpoly(big)),
        "size_bound": size <= SIZE_FACTOR * f.degree,
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise InternalCertificateFailure(f"checks failed for {pretty(f)}: {failed}")
    return EigenCertificate(f, f.degree, None, None, None, big.symmetric(), size, checks,
                            parts=sub)


# -- JSON bundle -------------------------------------------------------------

def psatz_to_json(cert: PsatzCertificate) -> dict:
    return {"s": str(cert.s), "Q": matrix_to_json(cert.q), "m": cert.m, "n": cert.n}


def certificate_to_json(cert: EigenCertificate) -> dict:
    out = {
        "f": format_poly(cert.f),
        "n": cert.n,
        "C": matrix_to_json(cert.c.matrix) if cert.c else None,
        "B": matrix_to_json(cert.b.matrix) if cert.b else None,
        "psatz": psatz_to_json(cert.psatz) if cert.psatz else None,
        "M": matrix_to_json(cert.m_matrix),
        "size": cert.size,
        "checks": dict(cert.checks),
    }
    if cert.q_prime is not None:
        out["Qprime"] = matrix_to_json(cert.q_prime)
        out["Mprime"] = matrix_to_json(cert.m_prime)
    if cert.parts:
        out["parts"] = [{"multiplicity": e, "certificate": certificate_to_json(p)}
                        for p, e in cert.parts]
    return out


def certificate_from_json(data: dict) -> EigenCertificate:
    """Rebuild a certificate without re-validating it; that is the verifier's job.

    Raises ValueError (or KeyError/TypeError) on structurally malformed input.
    """
    if not isinstance(data, dict):
        raise ValueError("certificate bundle must be a JSON object")
    f = parse_poly(data["f"])
    n = int(data["n"])
    c = b = psatz = None
    if data.get("C") is not None:
        c = CompanionMatrix(n, matrix_from_json(data["C"], n))
    if data.get("B") is not None:
        b = BezoutMatrix(n, matrix_from_json(data["B"], n), f, derivative(f))
    if data.get("psatz") is not None:
        ps = data["psatz"]
        q = matrix_from_json(ps["Q"], int(ps["n"]))
        psatz = PsatzCertificate(b.matrix if b else IntMatrix.zeros(n, n), int(ps["s"], 10), q)
    big = matrix_from_json(data["M"])
    parts = tuple((certificate_from_json(p["certificate"]), int(p["multiplicity"]))
                  for p in data.get("parts", ()))
    q_prime = matrix_from_json(data["Qprime"]) if "Qprime" in data else None
    m_prime = matrix_from_json(data["Mprime"]) if "Mprime" in data else None
    return EigenCertificate(f, n, c, b, psatz, big, int(data["size"]),
                            dict(data.get("checks", {})), q_prime, m_prime, parts)
