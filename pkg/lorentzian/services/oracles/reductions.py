"""
End-to-end verification of the clique reductions: build the gadget, get the
exact answer from the clique oracle, and confirm it with a sampler or an
exactly checked witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import networkx as nx

from lorentzian import config
from lorentzian.models.enums import Construction, ReductionStatus, WitnessSource
from lorentzian.services.directional import (
    build_graph_directional_gadget,
    gadget_directional_verdict,
)
from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.gadgets.quartic import build_quartic_lc_gadget, clique_indicator_point
from lorentzian.services.gadgets.stability import (
    StabilityGadget,
    build_stability_gadget,
    clique_point,
)
from lorentzian.services.oracles.clique import OracleError, clique_number, max_clique
from lorentzian.services.oracles.samplers import (
    SampleWitness,
    hessian_witness,
    log_concavity_sampler,
    restriction_witness,
    stability_sampler,
)

logger = logging.getLogger(__name__)

REDUCTION_LIMIT = 12


@dataclass(frozen=True)
class ReductionReport:
    kind: Construction
    graph: Graph
    k: int
    omega: int
    exact_ground_truth: bool
    status: ReductionStatus
    seed: int
    samples_tried: int = 0
    witness: SampleWitness | None = None
    witness_source: WitnessSource | None = None


def stability_verdict_exact(gadget: StabilityGadget) -> bool:
    """p~ is real stable iff omega(G) <= k."""
    return clique_number(gadget.graph) <= gadget.k


def clique_point_witness(gadget: StabilityGadget, clique: list[int]) -> SampleWitness | None:
    """
    Base point x with Mx = (0, w), w the clique point, and direction 1, so
    p~(x + t 1) = p(2m t e0 + (0, w)).
    """
    w = clique_point(gadget.graph, clique)
    half = 1 / (2 * gadget.epsilon)
    x = [c * half for c in w] + [-c * half for c in w]
    v = [Fraction(1)] * (2 * gadget.m)
    found = restriction_witness(gadget.restriction(x, v), x, v)
    if found is None:
        return None
    return SampleWitness(
        point=found.point,
        direction=found.direction,
        restriction=found.restriction,
        source=WitnessSource.CLIQUE_POINT,
    )


def verify_reduction(
    kind: Construction | str,
    graph: Graph,
    k: int,
    *,
    trials: int | None = None,
    seed: int | None = None,
    threads: int | None = None,
    bits: int | None = None,
) -> ReductionReport:
    kind = Construction(kind)
    if graph.n > REDUCTION_LIMIT:
        raise OracleError(f"verify_reduction is limited to n <= {REDUCTION_LIMIT}, got {graph.n}")
    seed = config.SEED if seed is None else seed

    clique = max_clique(graph)
    omega = len(clique)
    truth = omega <= k

    def report(status, *, tried=0, witness=None, source=None) -> ReductionReport:
        result = ReductionReport(
            kind=kind, graph=graph, k=k, omega=omega, exact_ground_truth=truth,
            status=status, seed=seed, samples_tried=tried, witness=witness,
            witness_source=source,
        )
        log = logger.warning if status == ReductionStatus.INCONCLUSIVE_NEGATIVE else logger.info
        log("%s n=%d k=%d omega=%d: %s", kind.value, graph.n, k, omega, status.value)
        return result

    if kind == Construction.STABILITY:
        gadget = build_stability_gadget(graph, k)
        sampled = stability_sampler(gadget, trials=trials, seed=seed, bits=bits, threads=threads)
        if truth:
            status = ReductionStatus.CONFLICT if sampled.falsified else ReductionStatus.AGREE
            return report(status, tried=sampled.samples_tried, witness=sampled.witness,
                          source=WitnessSource.SAMPLED if sampled.falsified else None)
        if sampled.falsified:
            return report(ReductionStatus.AGREE, tried=sampled.samples_tried,
                          witness=sampled.witness, source=WitnessSource.SAMPLED)
        fallback = clique_point_witness(gadget, clique)
        if fallback is not None:
            return report(ReductionStatus.AGREE, tried=sampled.samples_tried,
                          witness=fallback, source=WitnessSource.CLIQUE_POINT)
        return report(ReductionStatus.INCONCLUSIVE_NEGATIVE, tried=sampled.samples_tried)

    if kind == Construction.QUARTIC_LC:
        gadget = build_quartic_lc_gadget(graph, k)
        if not truth:
            point = clique_indicator_point(graph, clique)
            found = hessian_witness(gadget.g, point)
            if found is None:
                return report(ReductionStatus.CONFLICT)
            witness = SampleWitness(point=found.point, inertia=found.inertia,
                                    source=WitnessSource.CLIQUE_INDICATOR)
            return report(ReductionStatus.AGREE, witness=witness,
                          source=WitnessSource.CLIQUE_INDICATOR)
        sampled = log_concavity_sampler(gadget.g, trials=trials, seed=seed, bits=bits, threads=threads)
        status = ReductionStatus.CONFLICT if sampled.falsified else ReductionStatus.AGREE
        return report(status, tried=sampled.samples_tried, witness=sampled.witness,
                      source=WitnessSource.SAMPLED if sampled.falsified else None)

    gadget = build_graph_directional_gadget(graph, k)
    scan = gadget_directional_verdict(gadget, clique=clique)
    status = ReductionStatus.AGREE if scan.verdict == truth else ReductionStatus.CONFLICT
    witness = (
        SampleWitness(point=scan.witness_point, source=WitnessSource.EXACT_COMPARISON)
        if scan.witness_point is not None
        else None
    )
    return report(status, witness=witness, source=WitnessSource.EXACT_COMPARISON)


# -------------------------------------------------
# Sweep over small graphs
# -------------------------------------------------
def atlas_graphs(max_vertices: int) -> Iterator[Graph]:
    """One graph per isomorphism class with 1..max_vertices vertices (max 7)."""
    if max_vertices > 7:
        raise OracleError("the graph atlas covers at most 7 vertices")
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_vertices:
            yield Graph.from_networkx(g)


def valid_ks(kind: Construction, n: int) -> range:
    return range(2, n + 1) if kind == Construction.STABILITY else range(1, n + 1)


def reduction_sweep(
    max_vertices: int = 5,
    *,
    kinds: Iterable[Construction | str] = tuple(Construction),
    trials: int | None = None,
    seed: int | None = None,
    threads: int | None = None,
) -> list[ReductionReport]:
    reports: list[ReductionReport] = []
    kinds = [Construction(k) for k in kinds]
    for graph in atlas_graphs(max_vertices):
        for kind in kinds:
            for k in valid_ks(kind, graph.n):
                reports.append(
                    verify_reduction(kind, graph, k, trials=trials, seed=seed, threads=threads)
                )
    logger.info(
        "sweep up to %d vertices: %d checks, %d not AGREE",
        max_vertices, len(reports),
        sum(1 for r in reports if r.status != ReductionStatus.AGREE),
    )
    return reports
