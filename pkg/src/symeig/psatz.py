"""Integer certificates s*B = I + Q^T Q for positive definite symmetric B.

Over Z every positive integer is already a sum of four squares, so the
certificate is built directly:

1. pick the smallest t >= 1 with t*B - I positive semidefinite;
2. write S*(t*B - I) = Q0^T Q0 by fraction-free rank-one peeling, spending at
   most four rows per pivot;
3. absorb (S - 1)*I into at most 4n more rows using the four-square digits of
   S - 1.

Then s = S*t and Q stacks the rows of step 3 above those of step 2, giving at
most 8n rows for an n x n matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotPositiveDefinite, NotPositiveSemidefinite
from .exactmat import (IntMatrix, SymIntMatrix, is_positive_definite,
                       is_positive_semidefinite, matmul)
from .foursquare import decompose


@dataclass(frozen=True)
class PsatzCertificate:
    b: SymIntMatrix
    s: int
    q: IntMatrix

    @property
    def n(self) -> int:
        return self.b.rows

    @property
    def m(self) -> int:
        return self.q.rows

    def residual(self) -> IntMatrix:
        """s*B - I - Q^T Q, which is zero for a valid certificate."""
        return self.b.scale(self.s) - IntMatrix.identity(self.n) - matmul(self.q.T, self.q)

    def is_valid(self) -> bool:
        if self.s < 1 or self.q.cols != self.n or self.m > 8 * self.n:
            return False
        return not any(self.residual().entries)


def _scaled_minus_identity(b: IntMatrix, t: int) -> IntMatrix:
    return b.scale(t) - IntMatrix.identity(b.rows)


def find_scale(b: SymIntMatrix, strict: bool = True) -> int:
    """Smallest t >= 1 with t*B - I positive definite (semidefinite if not strict).

    t*B - I only gains positivity as t grows, so a doubling search followed by
    bisection finds the threshold.
    """
    if not is_positive_definite(b):
        raise NotPositiveDefinite("find_scale needs a positive definite matrix")
    ok = is_positive_definite if strict else is_positive_semidefinite
    if ok(_scaled_minus_identity(b, 1)):
        return 1
    lo, hi = 1, 2
    while not ok(_scaled_minus_identity(b, hi)):
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(_scaled_minus_identity(b, mid)):
            hi = mid
        else:
            lo = mid
    return hi


def peel_gram(n: IntMatrix) -> tuple[int, IntMatrix]:
    """Return (S, Q) with S*N = Q^T Q and at most four rows of Q per coordinate.

    Each step takes the first positive diagonal pivot d with pivot row v.  If v
    has off-diagonal entries, d*N - v v^T vanishes on the pivot coordinate and
    the recursion continues on it; unwinding multiplies S by d and emits
    a*v for every nonzero four-square digit a of the inner scale.  If v is
    d*e_p already, N = d e_p e_p^T + rest needs no scaling and the pivot
    contributes a*e_p for the digits of d times the inner scale.
    """
    if not n.is_symmetric():
        raise NotPositiveSemidefinite("peel_gram needs a symmetric matrix")
    k = n.rows
    a = n.to_rows()
    live = list(range(k))
    steps = []
    while True:
        piv = None
        for i in live:
            d = a[i][i]
            if d < 0:
                raise NotPositiveSemidefinite(f"negative pivot {d} at index {i}")
            if d == 0:
                if any(a[i][j] for j in live):
                    raise NotPositiveSemidefinite(f"zero pivot with nonzero row at index {i}")
            elif piv is None:
                piv = i
        if piv is None:
            break
        live.remove(piv)
        d = a[piv][piv]
        v = [a[piv][j] if (j == piv or j in live) else 0 for j in range(k)]
        if not any(v[j] for j in live):
            steps.append((False, d, piv))
            a[piv][piv] = 0
            continue
        steps.append((True, d, v))
        for i in live:
            for j in live:
                a[i][j] = d * a[i][j] - v[i] * v[j]
        for j in range(k):
            a[piv][j] = a[j][piv] = 0

    scale, rows = 1, []
    for scaled, d, data in reversed(steps):
        if scaled:
            rows = [[x * c for c in data] for x in decompose(scale).nonzero()] + rows
            scale *= d
        else:
            rows = [[x if j == data else 0 for j in range(k)]
                    for x in decompose(scale * d).nonzero()] + rows
    return scale, IntMatrix.from_rows(rows, k)


def certify(b: IntMatrix) -> PsatzCertificate:
    """Certificate s*B = I + Q^T Q with at most 8n rows in Q."""
    if not b.is_square():
        raise DimensionMismatch(f"expected a square matrix, got {b.shape}")
    b = b if isinstance(b, SymIntMatrix) else b.symmetric()
    n = b.rows
    t = find_scale(b, strict=False)
    big, q0 = peel_gram(_scaled_minus_identity(b, t))
    extra = [[x if j == i else 0 for j in range(n)]
             for x in decompose(big - 1).nonzero() for i in range(n)]
    q = IntMatrix.from_rows(extra + q0.to_rows(), n)
    return PsatzCertificate(b, big * t, q)
