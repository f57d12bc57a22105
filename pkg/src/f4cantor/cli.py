"""Command-line interface.

Subcommands: endpoints, bounds, certify, decompose, oracle-check, report.
Exit status is 0 exactly when every pass flag in the emitted document is
true.  Decimal output is display-only; every decision is exact.
"""

from __future__ import annotations

import argparse
import sys

from . import kernels, report
from .surd import DEFAULT_DISC


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="f4cantor",
        description="Exact certification of a continued-fraction Cantor set: "
                    "thickness and log-thickness bounds, cylinder oracles, and "
                    "constructive product decompositions.")
    p.add_argument("--precision", type=int, default=12,
                   help="decimal digits in previews (>= 10, default 12)")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--output", default=None, help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for per-gap checks")
    p.add_argument("--disc", type=int, default=DEFAULT_DISC,
                   help="radicand for parsing surd targets (default 26565)")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("endpoints", help="root and product-interval endpoints")
    sub.add_parser("bounds", help="nine type bounds, lambda, tau, gamma, mu, delta")

    cert = sub.add_parser("certify", help="check every gap to a tree depth")
    cert.add_argument("--depth", type=int, default=12)

    dec = sub.add_parser("decompose", help="factor a target over the set, with witness")
    dec.add_argument("--target", required=True,
                     help="surd '(p + q*sqrt(D))/r', fraction 'a/b', or decimal")
    dec.add_argument("--depth", type=int, default=60, help="refinement steps")
    dec.add_argument("--blocks", type=int, default=12,
                     help="witness blocks to build and verify (0 disables)")

    orc = sub.add_parser("oracle-check", help="subdivision engine vs brute-force cylinders")
    orc.add_argument("--depth", type=int, default=12,
                     help="largest cylinder word length to cross-check")

    rep = sub.add_parser("report", help="run everything and emit one document")
    rep.add_argument("--depth", type=int, default=12)
    rep.add_argument("--oracle-depth", type=int, default=8)
    return p


def run(args: argparse.Namespace) -> tuple[int, str]:
    if args.precision < 10:
        raise SystemExit("--precision must be >= 10")
    precision = args.precision
    params = {"precision": precision, "jobs": args.jobs, "backend": kernels.backend_name()}

    if args.command == "endpoints":
        doc = report.endpoints_doc(precision)
    elif args.command == "bounds":
        doc = report.bounds_doc(precision)
    elif args.command == "certify":
        from .thickness import certify

        params["depth"] = args.depth
        doc = report.certify_doc(certify(args.depth, jobs=args.jobs), precision)
    elif args.command == "decompose":
        params.update(depth=args.depth, target=args.target, disc=args.disc)
        doc = report.decompose_doc(args.target, args.depth, precision,
                                   verify_blocks=args.blocks, disc=args.disc)
    elif args.command == "oracle-check":
        params["depth"] = args.depth
        doc = report.oracle_doc(args.depth)
    elif args.command == "report":
        from . import constants
        from .thickness import certify

        params.update(depth=args.depth, oracle_depth=args.oracle_depth)
        sections = {
            "endpoints": report.endpoints_doc(precision),
            "bounds": report.bounds_doc(precision),
            "certify": report.certify_doc(certify(args.depth, jobs=args.jobs), precision),
            "oracle": report.oracle_doc(args.oracle_depth),
            "decompose": report.decompose_doc(
                constants.MU_BOUND.canonical_text(), 60, precision, verify_blocks=8),
        }
        sections["passed"] = all(s["passed"] for s in sections.values())
        doc = sections
    else:  # pragma: no cover
        raise SystemExit(f"unknown command {args.command}")

    doc = report.stamp(doc, args.command, params)
    text = report.to_json(doc) if args.format == "json" else report.to_markdown(doc)
    return (0 if doc.get("passed", False) else 1), text


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = run(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
