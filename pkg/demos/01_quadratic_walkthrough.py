"""
A symmetric matrix for sqrt(2)
==============================

X^2 - 2 has two real roots, so some symmetric integer matrix has it as a
factor of its characteristic polynomial.  We build one step by step.
"""

# %%
# The companion matrix is not symmetric, but it is self-adjoint for the
# Bezout form of f and f'.
from symeig.exactmat import charpoly, is_positive_definite, matmul
from symeig.polyint import IntPoly, derivative, poly_divrem, pretty
from symeig.structmat import bezout, companion

f = IntPoly((-2, 0, 1))
c = companion(f).matrix
b = bezout(f, derivative(f)).matrix
print(pretty(f), c.to_rows(), b.to_rows())
assert matmul(c, b) == matmul(b, c.T)

# %%
# B is positive definite exactly when f has simple real roots.
print("B positive definite:", is_positive_definite(b))

# %%
# The certificate writes B as (I + Q^T Q) / s and packs C and Q into one
# symmetric matrix.
from symeig.certify import build_strict

cert = build_strict(f)
print("s =", cert.psatz.s, " Q =", cert.psatz.q.to_rows())
for row in cert.m_matrix.to_rows():
    print(row)

# %%
# f divides the characteristic polynomial; the other factor has degree 4.
quo, rem = poly_divrem(charpoly(cert.m_matrix), f)
print("charpoly / f =", pretty(quo), " remainder zero:", rem.is_zero())
