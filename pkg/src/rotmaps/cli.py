"""Command-line front door: ``rotmap`` with one subcommand per operation.

Exit codes are uniform across subcommands: 0 success, 1 property failure
(an inconsistent map under ``verify``, a failed product check, an exhausted
search budget), 2 malformed input or parameters.  Data goes to ``--output``
or stdout; diagnostics (warnings, cloud summaries) go to stderr.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import families
from . import io as formats
from .adjacency import product_property_check, rotation_from_adjacency, spectrum
from .core import validate
from .exceptions import RotmapsError, SearchBudgetExceededError
from .product import cartesian_rotation
from .shift import build_shift
from .solver import DEFAULT_BUDGET, solve_backtracking, solve_matching

__all__ = ["main", "build_parser"]


def _emit(output: Path | None, text: str) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _load_rot(path: Path, **kwargs):
    return formats.parse_rot(path.read_text(), **kwargs)


def _load_adj(path: Path):
    return formats.parse_adj(path.read_text())


def cmd_generate(args) -> int:
    spec = families.FamilySpec(family=args.family, n=args.n, s=args.s, dimension=args.m)
    _emit(args.output, formats.format_rot(spec.build()))
    return 0


def cmd_product(args) -> int:
    inner = _load_rot(args.inner)
    outer = _load_rot(args.outer)
    rot = cartesian_rotation(inner, outer)
    print(f"{outer.num_vertices} clouds of {inner.num_vertices}", file=sys.stderr)
    _emit(args.output, formats.format_rot(rot))
    return 0


def cmd_verify(args) -> int:
    rot = _load_rot(args.path, require_valid_map=False)
    report = validate(rot)
    print(f"valid map: {'yes' if report.is_valid_map else 'no'}")
    print(f"consistent: {'yes' if report.is_consistent else 'no'}")
    if report.violations:
        print("violations:")
        for violation in report.violations:
            print(f"  {violation}")
    if not report.is_valid_map:
        return 2
    return 0 if report.is_consistent else 1


def cmd_from_adjacency(args) -> int:
    rot = rotation_from_adjacency(_load_adj(args.path))
    _emit(args.output, formats.format_rot(rot))
    return 0


def cmd_solve(args) -> int:
    adj = _load_adj(args.path)
    try:
        if args.method == "matching":
            rot = solve_matching(adj)
        else:
            rot = solve_backtracking(adj, budget=args.budget)
    except SearchBudgetExceededError as exc:
        print(f"inconclusive: {exc} (raise --budget)", file=sys.stderr)
        return 1
    _emit(args.output, formats.format_rot(rot))
    return 0


def cmd_shift(args) -> int:
    shift = build_shift(_load_rot(args.path))
    _emit(args.output, formats.format_perm(shift))
    return 0


def cmd_spectrum(args) -> int:
    a1 = _load_adj(args.path)
    if args.path2 is None:
        spec = spectrum(a1, tol=args.tol)
        print(f"order {a1.order}")
        print(f"degree {a1.degree()}")
        for value in spec.values:
            print(f"{value:.12g}")
        return 0
    a2 = _load_adj(args.path2)
    report = product_property_check(
        a1, a2, spectrum_tol=args.spectrum_tol, jacobi_tol=args.tol
    )

    def mark(ok):
        return "PASS" if ok else "FAIL"

    print(f"vertices: {report.vertices_actual} (expected {report.vertices_expected}) "
          f"{mark(report.vertices_ok)}")
    print(f"regularity: {report.degree_actual} (expected {report.degree_expected}) "
          f"{mark(report.degree_ok)}")
    print(f"edges: {report.edges_actual} (expected {report.edges_expected}) "
          f"{mark(report.edges_ok)}")
    print(f"spectrum additivity: max deviation {report.spectrum_deviation:.3e} "
          f"(tolerance {report.spectrum_tolerance:g}) {mark(report.spectrum_ok)}")
    return 0 if report.all_hold else 1


def cmd_export(args) -> int:
    rot = _load_rot(args.path)
    if args.format == "dot":
        _emit(args.output, formats.format_dot(rot))
    else:
        _emit(args.output, formats.format_json(rot))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotmap",
        description="Build, combine, verify, and export rotation maps of regular graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family rotation map")
    p.add_argument("--family", required=True,
                   choices=["cycle", "complete", "complete-bipartite",
                            "gp", "generalized-petersen", "k2", "hypercube"])
    p.add_argument("--n", type=int, help="vertex parameter (per side for complete-bipartite)")
    p.add_argument("--s", type=int, help="inner step for generalized Petersen graphs")
    p.add_argument("--m", type=int, help="dimension for hypercubes")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("product", help="box product of two rotation maps")
    p.add_argument("inner", type=Path, help=".rot file copied into each cloud")
    p.add_argument("outer", type=Path, help=".rot file routing between clouds")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="report validity and consistency of a map")
    p.add_argument("path", type=Path)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("from-adjacency", help="row-scan reading of an adjacency matrix")
    p.add_argument("path", type=Path)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_from_adjacency)

    p = sub.add_parser("solve", help="construct a consistent map for an adjacency matrix")
    p.add_argument("path", type=Path)
    p.add_argument("--method", choices=["matching", "backtrack"], default="matching")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="node budget for --method backtrack")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("shift", help="dart shift permutation of a rotation map")
    p.add_argument("path", type=Path)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("spectrum", help="eigenvalues, or the product property check for two inputs")
    p.add_argument("path", type=Path)
    p.add_argument("path2", type=Path, nargs="?")
    p.add_argument("--tol", type=float, default=1e-10, help="Jacobi off-diagonal target")
    p.add_argument("--spectrum-tol", type=float, default=1e-8,
                   help="tolerance for spectrum additivity (two-input mode)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("export", help="DOT or JSON view of a rotation map")
    p.add_argument("path", type=Path)
    p.add_argument("--format", required=True, choices=["dot", "json"])
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for record in caught:
            print(f"warning: {record.message}", file=sys.stderr)
        return code
    except (RotmapsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
