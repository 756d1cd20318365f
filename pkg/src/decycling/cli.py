"""Command-line surface: closed forms, constructions, verification, oracle.

Exit codes: 0 success/verified, 2 usage or parse failure, 3 out of range or
resource budget, 4 I/O failure, 5 verification failed or a formula refuted.
The default oracle node budget can be set with DECYCLING_NODE_BUDGET.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .bounds import bound_report
from .certio import dumps, load, save
from .construct import build_certificate, formula_note, nabla_formula
from .errors import (
    BudgetExceededError,
    CertificateFormatError,
    ConstructionInvariantError,
    InvalidParameterError,
    NotCoveredError,
    UniverseMismatchError,
)
from .graphs import (
    POWM,
    FamilySpec,
    Graph,
    adjacency_dump,
    realize,
    to_dot,
)
from .solver import SolverConfig, min_fvs_exact
from .verify import VERIFIED, residual, verify_certificate

_FAMILIES = ("c3xc", "c4xc", "pow2", "pow3", "powm")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_IO = 4
EXIT_FAILED = 5


class _UsageError(Exception):
    pass


def _default_node_budget() -> int:
    raw = os.environ.get("DECYCLING_NODE_BUDGET")
    if raw is None:
        return SolverConfig().node_budget
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"DECYCLING_NODE_BUDGET must be an integer, got {raw!r}")


def _spec_from_args(args: argparse.Namespace) -> FamilySpec:
    family, n, m = args.family, args.n, args.m
    if family == POWM:
        if m is None:
            raise _UsageError("family powm needs both n and m")
        return FamilySpec.powm(n, m)
    if m is not None:
        raise _UsageError(f"family {family} takes a single parameter n")
    return FamilySpec(family, n)


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        vertex_budget=args.vertex_budget,
        node_budget=args.node_budget
        if args.node_budget is not None
        else _default_node_budget(),
        mode=args.mode,
    )


def _add_family_arguments(sub: argparse.ArgumentParser, optional: bool = False):
    if optional:
        sub.add_argument("family", nargs="?", choices=_FAMILIES)
        sub.add_argument("n", nargs="?", type=int)
    else:
        sub.add_argument("family", choices=_FAMILIES)
        sub.add_argument("n", type=int)
    sub.add_argument("m", nargs="?", type=int, default=None,
                     help="power exponent, only for family powm")


def _add_solver_arguments(sub: argparse.ArgumentParser):
    sub.add_argument("--node-budget", type=int, default=None,
                     help="search node limit (default from DECYCLING_NODE_BUDGET)")
    sub.add_argument("--vertex-budget", type=int, default=64)
    sub.add_argument("--mode", choices=("iterative-deepening", "branch-and-bound"),
                     default="iterative-deepening")


def cmd_nabla(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    value = nabla_formula(spec)
    print(f"{value} ({formula_note(spec)})")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    cert = build_certificate(spec)
    if args.output:
        save(cert, args.output)
        print(
            f"{spec.describe()}: cardinality={cert.cardinality} "
            f"lower_bound={cert.lower_bound} status={cert.status} -> {args.output}"
        )
    else:
        sys.stdout.write(dumps(cert))
    return EXIT_OK if cert.status == VERIFIED else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    cert = load(args.certificate)
    try:
        checked = verify_certificate(cert)
    except UniverseMismatchError as err:
        raise CertificateFormatError(str(err))
    if checked.status == VERIFIED:
        print(
            f"verified: {cert.family.describe()} decycled by "
            f"{cert.cardinality} vertices (lower bound {cert.lower_bound})"
        )
        return EXIT_OK
    print(f"failed: {cert.family.describe()}")
    if cert.cardinality != cert.vertex_set.cardinality:
        print(
            f"  claimed cardinality {cert.cardinality} but the set has "
            f"{cert.vertex_set.cardinality} vertices"
        )
    if cert.lower_bound > cert.cardinality:
        print(f"  lower bound {cert.lower_bound} exceeds cardinality {cert.cardinality}")
    report = residual(realize(cert.family), cert.vertex_set)
    if not report.is_forest:
        cycle = " ".join(map(str, report.witness_cycle))
        print(f"  residual cycle: {cycle}")
    return EXIT_FAILED


def _graph_from_edge_list(path: str) -> Graph:
    edges = []
    n = None
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if n is None:
                n = int(line)
                continue
            u, v = line.split()
            edges.append((int(u), int(v)))
    if n is None:
        raise _UsageError(f"{path}: empty edge list")
    return Graph.from_edges(n, edges)


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _solver_config(args)
    if args.edges:
        if args.family is not None:
            raise _UsageError("give either a family or --edges, not both")
        try:
            graph = _graph_from_edge_list(args.edges)
        except ValueError as err:
            raise _UsageError(f"{args.edges}: {err}")
        spec = None
    else:
        if args.family is None or args.n is None:
            raise _UsageError("oracle needs a family and n, or --edges PATH")
        spec = _spec_from_args(args)
        graph = realize(spec)
    result = min_fvs_exact(graph, cfg, spec=spec)
    print(f"minimum {result.minimum}")
    print(f"witness {' '.join(map(str, result.witness.sorted_members()))}")
    print(f"nodes {result.nodes_explored} elapsed {result.elapsed:.2f}s")
    if spec is not None:
        try:
            expected = nabla_formula(spec)
        except NotCoveredError:
            return EXIT_OK
        if expected != result.minimum:
            print(f"refuted: closed form predicts {expected}", file=sys.stderr)
            return EXIT_FAILED
    return EXIT_OK


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    value = int(text)
    return range(value, value + 1)


def cmd_table(args: argparse.Namespace) -> int:
    if args.family == POWM:
        raise _UsageError("table does not take family powm")
    try:
        span = _parse_range(args.range)
    except ValueError:
        raise _UsageError(f"bad range {args.range!r}, expected A..B")
    header = ["n", "formula", "best_bound"]
    if args.oracle:
        header += ["oracle", "nodes", "seconds"]
    rows = []
    refuted = False
    for n in span:
        spec = FamilySpec(args.family, n)
        try:
            formula: int | str = nabla_formula(spec)
        except NotCoveredError:
            formula = "-"
        row = [n, formula, bound_report(spec).best]
        if args.oracle:
            cfg = _solver_config(args)
            start = time.perf_counter()
            result = min_fvs_exact(realize(spec), cfg, spec=spec)
            row += [result.minimum, result.nodes_explored,
                    f"{time.perf_counter() - start:.2f}"]
            if formula != "-" and formula != result.minimum:
                refuted = True
        rows.append(row)
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    for row in [header] + rows:
        print("  ".join(str(cell).rjust(w) for cell, w in zip(row, widths)))
    if refuted:
        print("refuted: oracle disagrees with a closed form", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    graph = realize(spec)
    highlight = frozenset()
    if args.cert:
        cert = load(args.cert)
        if cert.family != spec:
            raise _UsageError(
                f"certificate is for {cert.family.describe()}, not {spec.describe()}"
            )
        highlight = cert.vertex_set.members
    text = (
        adjacency_dump(graph)
        if args.format == "adjacency"
        else to_dot(graph, highlight, torus_rows=spec.torus_rows)
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decycling",
        description="Decycling sets of toroidal cycle products and cycle powers: "
        "closed forms, certified constructions, lower bounds, and an exact oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nabla", help="print the closed-form decycling number")
    _add_family_arguments(p)
    p.set_defaults(func=cmd_nabla)

    p = sub.add_parser("construct", help="build and verify a decycling certificate")
    _add_family_arguments(p)
    p.add_argument("-o", "--output", help="write the certificate JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a certificate JSON file")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact minimum decycling set by search")
    _add_family_arguments(p, optional=True)
    p.add_argument("--edges", help="edge-list file: first line n, then 'u v' lines")
    _add_solver_arguments(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="formula vs. bounds (vs. oracle) over a range")
    p.add_argument("family", choices=_FAMILIES)
    p.add_argument("range", help="e.g. 4..16")
    p.add_argument("--oracle", action="store_true", help="add exact-search columns")
    _add_solver_arguments(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export", help="DOT (or adjacency) dump, set highlighted")
    _add_family_arguments(p)
    p.add_argument("--cert", help="certificate JSON whose set gets highlighted")
    p.add_argument("--format", choices=("dot", "adjacency"), default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except CertificateFormatError as err:
        print(f"certificate error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParameterError, NotCoveredError) as err:
        print(f"out of range: {err}", file=sys.stderr)
        return EXIT_RANGE
    except BudgetExceededError as err:
        extra = f" (best known upper bound {err.best_known})" if err.best_known else ""
        print(f"budget exceeded: {err}{extra}", file=sys.stderr)
        return EXIT_RANGE
    except ConstructionInvariantError as err:
        print(f"construction failed verification: {err}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
