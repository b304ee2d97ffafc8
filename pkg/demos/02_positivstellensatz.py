"""
Sums of squares for a positive definite form
============================================

Every positive definite integer matrix B satisfies s*B = I + Q^T Q for some
integer s >= 1 and an integer Q with at most 8n rows.
"""

# %%
from symeig.exactmat import SymIntMatrix, cauchy_binet_check, det, matmul
from symeig.foursquare import decompose
from symeig.psatz import certify, find_scale, peel_gram

b = SymIntMatrix.from_rows([[3, -1], [-1, 2]])
print("t =", find_scale(b))

# %%
# Peeling tB - I one pivot at a time leaves a Gram matrix; each scale factor
# that shows up is split into four squares.
s, q = peel_gram((b.scale(find_scale(b)) - b.identity(2)).symmetric())
print("peeled:", s, q.to_rows())
print("7 =", " + ".join(f"{x}^2" for x in decompose(7).digits))

# %%
cert = certify(b)
print("s =", cert.s, " rows of Q =", cert.m)
print("residual zero:", not any(cert.residual().entries))

# %%
# det(Q^T Q) is the sum of the squared maximal minors of Q.
print(det(matmul(cert.q.T, cert.q)), cauchy_binet_check(cert.q))
