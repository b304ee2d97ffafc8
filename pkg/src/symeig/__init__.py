"""Symmetric integer matrices whose characteristic polynomial has a prescribed
real-rooted factor, with exact certificates and an independent verifier."""

from .certify import EigenCertificate, build_any, build_strict
from .polyint import IntPoly, parse_poly
from .psatz import PsatzCertificate, certify
from .verify import brute_force_min_size, verify_certificate

__all__ = ["EigenCertificate", "IntPoly", "PsatzCertificate", "brute_force_min_size",
           "build_any", "build_strict", "certify", "parse_poly", "verify_certificate"]
