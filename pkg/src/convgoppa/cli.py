"""Command-line front end.

Subcommands:
  build <config>     construct a code from a specification file
  verify-examples    rebuild the built-in reference codes and compare
  bounds             print parameter bounds for (q, m, r)

Set CGC_COLOR=0 to disable ANSI styling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .errors import ConvGoppaError
from .config import parse_config, realize
from .goppa import CodeReport, parameter_bounds
from .reference_codes import REFERENCE_CODES, verify_reference_code


def _use_color(stream) -> bool:
    if os.environ.get("CGC_COLOR", "") == "0":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, code: str, stream) -> str:
    if _use_color(stream):
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _yesno(flag: Optional[bool]) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def render_human(report: CodeReport, emit_matrices: bool = False) -> str:
    lines = []
    d = report.free_distance if report.free_distance is not None else "n/a"
    lines.append(
        f"n={report.n} k={report.k} delta={report.degree} m={report.memory} "
        f"d_free={d} S={report.singleton_bound} MDS={_yesno(report.is_mds)}"
    )
    lines.append(f"forney indices: {list(report.forney_indices)}")
    if report.free_distance_method:
        lines.append(f"distance method: {report.free_distance_method}")
    if report.bruteforce_distance is not None:
        lines.append(
            f"bruteforce distance: {report.bruteforce_distance} "
            f"(deg_bound {report.bruteforce_deg_bound})"
        )
    for w in report.warnings:
        lines.append(f"warning: {w}")
    if emit_matrices:
        lines.append("generator matrix:")
        lines.append(report.generator_matrix.to_text())
        lines.append("canonical matrix:")
        lines.append(report.canonical_matrix.to_text())
        if report.parity_matrix is not None:
            lines.append("parity matrix:")
            lines.append(report.parity_matrix.to_text())
    return "\n".join(lines)


def render_machine(report: CodeReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2)


def cmd_build(args) -> int:
    with open(args.config, encoding="utf-8") as fh:
        cfg = parse_config(fh.read())
    report = realize(
        cfg,
        compute_distance=True if args.distance else None,
        bruteforce_crosscheck=True if args.bruteforce else None,
    )
    if args.machine or cfg.output_format == "machine":
        print(render_machine(report))
    else:
        print(render_human(report, emit_matrices=args.emit_matrices))
    return 0


def cmd_verify_examples(args) -> int:
    failures = 0
    for ref in REFERENCE_CODES:
        mismatches = verify_reference_code(ref, bruteforce=args.bruteforce)
        if mismatches:
            failures += 1
            status = _paint("FAIL", "31", sys.stdout)
            print(f"{status} {ref.name}")
            for msg in mismatches:
                print(f"  mismatch: {msg}")
        else:
            status = _paint("ok", "32", sys.stdout)
            print(f"{status}   {ref.name}")
    total = len(REFERENCE_CODES)
    print(f"{total - failures}/{total} examples verified")
    return 1 if failures else 0


def cmd_bounds(args) -> int:
    n_max, k_max, m_max, delta_max = parameter_bounds(args.q, args.m, args.r)
    print(f"n_max={n_max} k_max={k_max} memory_max={m_max} delta_max={delta_max}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convgoppa",
        description="Construct and analyze convolutional Goppa codes on P^m x A^1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a code from a specification file")
    p_build.add_argument("config", help="path to the code-specification file")
    p_build.add_argument("--distance", action="store_true",
                         help="force the free-distance computation on")
    p_build.add_argument("--bruteforce", action="store_true",
                         help="also run the brute-force distance cross-check")
    p_build.add_argument("--emit-matrices", action="store_true",
                         help="print generator, canonical and parity matrices")
    p_build.add_argument("--machine", action="store_true",
                         help="emit the machine-readable JSON report")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify-examples",
                              help="rebuild the built-in reference codes and compare")
    p_verify.add_argument("--bruteforce", action="store_true",
                          help="cross-check free distances by brute force")
    p_verify.set_defaults(func=cmd_verify_examples)

    p_bounds = sub.add_parser("bounds", help="print parameter bounds for (q, m, r)")
    p_bounds.add_argument("--q", type=int, required=True, help="field size (prime power)")
    p_bounds.add_argument("--m", type=int, required=True, help="fiber dimension")
    p_bounds.add_argument("--r", type=int, required=True, help="twist degree")
    p_bounds.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConvGoppaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 66


if __name__ == "__main__":
    sys.exit(main())
