"""Command line: ``symeig certify | check | oracle``.

Polynomials are given constant term first: ``--poly "-1,-1,1"`` is X^2 - X - 1.

Exit codes
  0  success (for ``oracle`` also when no witness exists within the bounds)
  1  a certificate failed verification, or an internal check failed
  2  unparsable input, non-monic polynomial, unreadable or malformed bundle
  3  the polynomial is not real-rooted
  4  real-rooted with repeated roots and --allow-multiplicities not given
  5  oracle enumeration exceeds --budget
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import EigenCertificate, build_any, build_strict, certificate_from_json, certificate_to_json
from .errors import BoundsTooLarge, InternalCertificateFailure, ParseError
from .exactmat import IntMatrix
from .polyint import (IntPoly, is_real_zero, is_strict_real_zero, parse_poly, pretty,
                      squarefree_part, sturm_distinct_real_roots)
from .verify import DEFAULT_BUDGET, brute_force_min_size, verify_certificate

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_NOT_REAL, EXIT_NOT_STRICT, EXIT_BUDGET = range(6)


def _err(msg: str):
    print(f"symeig: {msg}", file=sys.stderr)


def _emit(text: str, path: str | None):
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_matrix(m: IntMatrix) -> str:
    if m.rows == 0:
        return "  []"
    cells = [[str(x) for x in m.row(i)] for i in range(m.rows)]
    w = max(len(c) for r in cells for c in r)
    return "\n".join("  [" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _pretty_certificate(cert: EigenCertificate) -> str:
    lines = [f"f    = {pretty(cert.f)}",
             f"size = {cert.size}  (bound {9 * cert.f.degree})"]
    if cert.psatz is not None:
        lines.append(f"s    = {cert.psatz.s},  m = {cert.psatz.m}")
    for p, e in cert.parts:
        lines.append(f"part {pretty(p.f)}  x{e}  size {p.size}")
    lines.append("M =")
    lines.append(_format_matrix(cert.m_matrix))
    lines.append("checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                        for k, v in cert.checks.items()))
    return "\n".join(lines) + "\n"


def _read_poly(text: str) -> IntPoly:
    f = parse_poly(text)
    if f.degree < 1 or not f.is_monic():
        raise ParseError(f"{pretty(f)} is not monic of positive degree")
    return f


def run_certify(args) -> int:
    try:
        f = _read_poly(args.poly)
    except ParseError as exc:
        _err(str(exc))
        return EXIT_INPUT
    if not is_real_zero(f):
        g = squarefree_part(f)
        _err(f"{pretty(f)} is not real-rooted: Sturm count gives "
             f"{sturm_distinct_real_roots(g)} real roots of {g.degree} required")
        return EXIT_NOT_REAL
    strict = is_strict_real_zero(f)
    if not strict and not args.allow_multiplicities:
        _err(f"{pretty(f)} has repeated roots; pass --allow-multiplicities "
             "to build a direct sum over its squarefree factors")
        return EXIT_NOT_STRICT
    try:
        cert = build_strict(f) if strict else build_any(f)
    except InternalCertificateFailure as exc:
        _err(str(exc))
        return EXIT_FAILED
    if args.json:
        _emit(json.dumps(certificate_to_json(cert), indent=1) + "\n", args.output)
    else:
        _emit(_pretty_certificate(cert), args.output)
    return EXIT_OK


def run_check(args) -> int:
    try:
        if args.input in (None, "-"):
            raw = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                raw = fh.read()
        cert = certificate_from_json(json.loads(raw))
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
        _err(f"cannot read certificate bundle: {exc}")
        return EXIT_INPUT
    report = verify_certificate(cert)
    if args.json:
        _emit(json.dumps(report.to_json(), indent=1) + "\n", args.output)
    else:
        body = "".join(f"{'PASS' if x.passed else 'FAIL'}  {x.name}: {x.detail}\n"
                       for x in report.findings)
        _emit(body + ("certificate verified\n" if report.passed else "verification FAILED\n"),
              args.output)
    if not report.passed:
        _err("failing findings: " + ", ".join(report.failed()))
        return EXIT_FAILED
    return EXIT_OK


def run_oracle(args) -> int:
    try:
        f = _read_poly(args.poly)
    except ParseError as exc:
        _err(str(exc))
        return EXIT_INPUT
    try:
        res = brute_force_min_size(f, args.max_size, args.max_entry,
                                   budget=args.budget, workers=args.workers)
    except BoundsTooLarge as exc:
        _err(str(exc))
        return EXIT_BUDGET
    if args.json:
        _emit(json.dumps(res.to_json(), indent=1) + "\n", args.output)
    elif res.witness is None:
        _emit(f"none: no witness for {pretty(f)} with size <= {args.max_size}, "
              f"|entries| <= {args.max_entry}\n", args.output)
    else:
        _emit(f"min size {res.min_size_found}\n{_format_matrix(res.witness)}\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="symeig",
        description="Symmetric integer matrices with a prescribed real-rooted factor "
                    "of the characteristic polynomial. Coefficients are listed "
                    "constant term first.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("\n\n", 2)[2])
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("certify", help="build a certificate for a monic real-rooted polynomial")
    c.add_argument("--poly", required=True, help='e.g. "-1,-1,1" for X^2 - X - 1')
    c.add_argument("--allow-multiplicities", action="store_true",
                   help="accept repeated roots via a direct sum of blocks")
    c.set_defaults(run=run_certify)

    k = sub.add_parser("check", help="verify a JSON certificate bundle")
    k.add_argument("--input", "-i", default="-", help="bundle path, - for stdin")
    k.set_defaults(run=run_check)

    o = sub.add_parser("oracle", help="exhaustive search for a smallest symmetric witness")
    o.add_argument("--poly", required=True)
    o.add_argument("--max-size", type=int, default=3)
    o.add_argument("--max-entry", type=int, default=2)
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"maximum number of matrices to enumerate (default {DEFAULT_BUDGET})")
    o.add_argument("--workers", type=int, default=1)
    o.set_defaults(run=run_oracle)

    for sp in (c, k, o):
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.add_argument("--output", "-o", default=None, help="output path (default stdout)")
    return p


def _glue_poly(argv: list[str]) -> list[str]:
    # "--poly -1,-1,1" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--poly" and i + 1 < len(argv):
            out.append(f"--poly={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_poly(argv))
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
