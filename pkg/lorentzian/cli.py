"""
Command-line entry point.

Exit codes: 0 property holds / AGREE, 1 property fails / CONFLICT,
2 usage or input error, 3 INCONCLUSIVE-NEGATIVE.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Sequence

from pydantic import BaseModel

from lorentzian import codes, config
from lorentzian.models.enums import Construction, ReductionStatus
from lorentzian.schemas.reports import (
    CliqueReportOut,
    DirectionalReportOut,
    InertiaOut,
    InertiaReportOut,
    LorentzianReportOut,
    ReductionReportOut,
    SweepReportOut,
    rationals,
)
from lorentzian.services.directional import (
    build_directional_gadget,
    build_graph_directional_gadget,
    gadget_directional_verdict,
)
from lorentzian.services.gadgets.quartic import build_quartic_lc_gadget
from lorentzian.services.gadgets.serialize import bundle_gadget, sidecar_json, write_bundle
from lorentzian.services.gadgets.stability import build_stability_gadget
from lorentzian.services.linalg.matrix import inertia
from lorentzian.services.lorentzian_check import (
    cubic_log_concavity,
    is_lorentzian,
)
from lorentzian.services.oracles.clique import max_clique
from lorentzian.services.oracles.reductions import reduction_sweep, verify_reduction
from lorentzian.services.poly.operations import constant_hessian, hessian_at
from lorentzian.utils.errors import FormatError
from lorentzian.utils.graph_format import read_graph
from lorentzian.utils.poly_format import format_polynomial, parse_rational, read_polynomial

logger = logging.getLogger(__name__)

EXIT_HOLDS = codes.exit_code(codes.HOLDS)
EXIT_FAILS = codes.exit_code(codes.FAILS)
EXIT_USAGE = codes.exit_code(codes.USAGE)


class UsageError(ValueError):
    """Raised when flags are valid individually but not together."""


# -------------------------------------------------
# Parser
# -------------------------------------------------
def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
    common.add_argument("--seed", type=int, default=config.SEED)
    common.add_argument("--trials", type=int, default=config.TRIALS)
    common.add_argument("--threads", type=int, default=config.THREADS)
    common.add_argument("--grid", type=int, default=config.GRID)
    common.add_argument("--grid-points", type=int, default=config.GRID_POINTS)
    common.add_argument("--log-level", default=config.LOG_LEVEL)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="lorentz-check",
        description="Exact Lorentzian / log-concavity tests and clique reduction gadgets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-lorentzian", parents=[common], help="decide Lorentzianity")
    p.add_argument("poly")

    p = sub.add_parser("check-cubic-lc", parents=[common], help="decide log-concavity of a cubic")
    p.add_argument("poly")

    p = sub.add_parser("check-directional", parents=[common], help="log-concavity in the z direction")
    p.add_argument("poly", nargs="?", help="cubic q(x); the gadget z^3 + 3|x|^2 z + 2q is tested")
    p.add_argument("--graph")
    p.add_argument("--k", type=int)

    kinds = [c.value for c in Construction]
    p = sub.add_parser("build-gadget", parents=[common], help="construct a reduction gadget")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--epsilon")
    p.add_argument("--degree", type=int)
    p.add_argument("--out")

    p = sub.add_parser("verify-reduction", parents=[common], help="check a reduction instance end to end")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("clique", parents=[common], help="maximum clique of a graph")
    p.add_argument("graph")

    p = sub.add_parser("inertia", parents=[common], help="Hessian inertia of a polynomial")
    p.add_argument("poly")
    p.add_argument("--at", help="comma-separated rational point; optional for quadratics")

    p = sub.add_parser("sweep", parents=[common], help="verify every small graph and k")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--kinds", default=",".join(kinds))

    return parser


# -------------------------------------------------
# Output
# -------------------------------------------------
def _emit(args: argparse.Namespace, model: BaseModel, text: str) -> None:
    if args.json:
        sys.stdout.write(model.model_dump_json(indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _parse_point(text: str) -> list[Fraction]:
    return [parse_rational(part, column=i + 1) for i, part in enumerate(text.split(","))]


# -------------------------------------------------
# Commands
# -------------------------------------------------
def cmd_check_lorentzian(args: argparse.Namespace) -> int:
    f = read_polynomial(args.poly)
    verdict = is_lorentzian(f, threads=args.threads)
    out = LorentzianReportOut.of("check-lorentzian", f.num_vars, verdict)
    text = "lorentzian" if verdict.is_lorentzian else f"not lorentzian: {out.failure.message}"
    _emit(args, out, text)
    return EXIT_HOLDS if verdict.is_lorentzian else EXIT_FAILS


def cmd_check_cubic_lc(args: argparse.Namespace) -> int:
    f = read_polynomial(args.poly)
    verdict = cubic_log_concavity(f, threads=args.threads)
    holds = verdict.is_lorentzian
    out = LorentzianReportOut.of("check-cubic-lc", f.num_vars, verdict)
    text = "log-concave" if holds else f"not log-concave: {out.failure.message}"
    _emit(args, out, text)
    return EXIT_HOLDS if holds else EXIT_FAILS


def cmd_check_directional(args: argparse.Namespace) -> int:
    if args.graph is not None:
        if args.k is None or args.poly is not None:
            raise UsageError("--graph needs --k and no polynomial argument")
        gadget = build_graph_directional_gadget(read_graph(args.graph), args.k)
    elif args.poly is not None:
        gadget = build_directional_gadget(read_polynomial(args.poly))
    else:
        raise UsageError("give a cubic polynomial file or --graph with --k")

    scan = gadget_directional_verdict(
        gadget, grid=args.grid, max_points=args.grid_points, threads=args.threads
    )
    out = DirectionalReportOut.of(scan)
    mode = "exact" if scan.exact else f"grid scan of {scan.points_scanned} points"
    if scan.verdict:
        text = f"log-concave in z ({mode})"
    else:
        where = out.witness_point or out.witness_grid
        text = f"not log-concave in z ({mode}); witness {where}"
    _emit(args, out, text)
    return EXIT_HOLDS if scan.verdict else EXIT_FAILS


def _build(kind: Construction, args: argparse.Namespace):
    graph = read_graph(args.graph)
    if kind == Construction.STABILITY:
        epsilon = parse_rational(args.epsilon) if args.epsilon is not None else None
        return build_stability_gadget(graph, args.k, epsilon=epsilon)
    if args.epsilon is not None:
        raise UsageError("--epsilon applies to stability gadgets only")
    if kind == Construction.QUARTIC_LC:
        return build_quartic_lc_gadget(graph, args.k)
    return build_graph_directional_gadget(graph, args.k)


def cmd_build_gadget(args: argparse.Namespace) -> int:
    bundle = bundle_gadget(_build(Construction(args.kind), args), degree=args.degree)
    if args.out:
        write_bundle(bundle, args.out)
        logger.info("wrote %s and %s.json", args.out, args.out)
    if args.json:
        sys.stdout.write(sidecar_json(bundle.sidecar))
    elif not args.out:
        sys.stdout.write(format_polynomial(bundle.polynomial))
    return EXIT_HOLDS


def cmd_verify_reduction(args: argparse.Namespace) -> int:
    kind = Construction(args.kind)
    graph = read_graph(args.graph)
    if kind == Construction.STABILITY and args.k == 1:
        # omega <= 1 iff the graph has no edges; no gadget exists for k = 1
        holds = graph.num_edges == 0
        out = ReductionReportOut.direct(
            kind, graph, args.k, omega=len(max_clique(graph)), holds=holds, seed=args.seed
        )
        _emit(args, out, f"omega <= 1: {str(holds).lower()} (decided directly)")
        return EXIT_HOLDS if holds else EXIT_FAILS

    report = verify_reduction(
        kind, graph, args.k, trials=args.trials, seed=args.seed, threads=args.threads
    )
    out = ReductionReportOut.of(report)
    status = report.status.value
    text = (
        f"{status}: {kind.value} k={report.k} omega={report.omega} "
        f"exact={'stable/log-concave' if report.exact_ground_truth else 'not'}"
    )
    if report.witness_source is not None and report.witness is not None:
        text += f" witness={report.witness_source.value}"
    if report.status != ReductionStatus.AGREE:
        text += f"\n{codes.describe(status)}"
    _emit(args, out, text)
    return codes.exit_code(status)


def cmd_clique(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    clique = max_clique(graph)
    out = CliqueReportOut(n=graph.n, omega=len(clique), clique=clique)
    _emit(args, out, f"omega = {len(clique)}: {clique}")
    return EXIT_HOLDS


def cmd_inertia(args: argparse.Namespace) -> int:
    f = read_polynomial(args.poly)
    if args.at is not None:
        point = _parse_point(args.at)
        matrix = hessian_at(f, point)
    elif f.degree is None or f.degree <= 2:
        point = None
        matrix = constant_hessian(f)
    else:
        raise UsageError("--at is required for polynomials of degree > 2")
    inert = inertia(matrix)
    out = InertiaReportOut(
        point=rationals(point),
        matrix=[rationals(row) for row in matrix.rows()],
        inertia=InertiaOut.of(inert),
    )
    _emit(args, out, f"inertia (n+, n0, n-) = {inert.as_tuple()}")
    return EXIT_HOLDS


def cmd_sweep(args: argparse.Namespace) -> int:
    kinds = [Construction(k.strip()) for k in args.kinds.split(",") if k.strip()]
    reports = reduction_sweep(
        args.max_vertices, kinds=kinds, trials=args.trials, seed=args.seed, threads=args.threads
    )
    statuses = [r.status for r in reports]
    out = SweepReportOut(
        max_vertices=args.max_vertices,
        checks=len(reports),
        not_agree=sum(1 for s in statuses if s != ReductionStatus.AGREE),
        reports=[ReductionReportOut.of(r) for r in reports],
    )
    counts = {s.value: statuses.count(s) for s in ReductionStatus}
    _emit(args, out, f"{len(reports)} checks: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return codes.exit_code(codes.worst([s.value for s in statuses]))


COMMANDS = {
    "check-lorentzian": cmd_check_lorentzian,
    "check-cubic-lc": cmd_check_cubic_lc,
    "check-directional": cmd_check_directional,
    "build-gadget": cmd_build_gadget,
    "verify-reduction": cmd_verify_reduction,
    "clique": cmd_clique,
    "inertia": cmd_inertia,
    "sweep": cmd_sweep,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_HOLDS

    config.configure_logging(args.log_level)
    for name in ("trials", "threads", "grid", "grid_points"):
        if getattr(args, name) < 1:
            sys.stderr.write(f"error: --{name.replace('_', '-')} must be >= 1\n")
            return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except FormatError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except ValueError as e:
        # every library error is a ValueError subclass
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
