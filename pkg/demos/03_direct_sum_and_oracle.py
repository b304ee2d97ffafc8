"""
Repeated roots and small witnesses
==================================

A repeated factor is handled by stacking blocks.  An exhaustive search shows
how far the construction is from the smallest matrix.
"""

# %%
from symeig.certify import build_any, build_strict
from symeig.polyint import IntPoly, pretty
from symeig.verify import brute_force_min_size, verify_certificate

f = IntPoly((-2, 0, 1)) ** 2
cert = build_any(f)
print(pretty(f), "size", cert.size, [(pretty(p.f), e) for p, e in cert.parts])
print(verify_certificate(cert).to_json()["passed"])

# %%
# Smallest witnesses with entries in [-3, 3], next to the constructed sizes.
for coeffs in [(-3, 1), (-2, 0, 1), (-1, -1, 1), (-1, -3, 0, 1)]:
    g = IntPoly(coeffs)
    res = brute_force_min_size(g, 3, 3)
    print(f"{pretty(g):>16}  oracle {res.min_size_found}  built {build_strict(g).size}")

# %%
# The oracle only speaks for its entry bound: with |entries| <= 2 the
# smallest witness for X - 3 is 2x2.
print(brute_force_min_size(IntPoly((-3, 1)), 2, 2).witness.to_rows())
