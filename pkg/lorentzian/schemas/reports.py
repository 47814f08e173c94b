from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from lorentzian import codes
from lorentzian.models.enums import (
    Construction,
    FailureKind,
    ReductionStatus,
    WitnessSource,
)
from lorentzian.services.directional import DirectionalScan
from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.linalg.matrix import Inertia
from lorentzian.services.lorentzian_check import LorentzianVerdict
from lorentzian.services.oracles.reductions import ReductionReport
from lorentzian.services.oracles.samplers import SampleWitness


def rationals(values: Sequence[Fraction] | None) -> list[str] | None:
    if values is None:
        return None
    return [str(Fraction(v)) for v in values]


# -------------------------
# SHARED
# -------------------------
class InertiaOut(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_pos: int
    n_zero: int
    n_neg: int

    @classmethod
    def of(cls, inertia: Inertia | None) -> "InertiaOut | None":
        if inertia is None:
            return None
        return cls(n_pos=inertia.n_pos, n_zero=inertia.n_zero, n_neg=inertia.n_neg)


class WitnessOut(BaseModel):
    point: list[str]
    direction: list[str] | None = None
    restriction: list[str] | None = None
    inertia: InertiaOut | None = None
    source: WitnessSource
    trial: int | None = None

    @classmethod
    def of(cls, witness: SampleWitness | None) -> "WitnessOut | None":
        if witness is None:
            return None
        return cls(
            point=rationals(witness.point),
            direction=rationals(witness.direction),
            restriction=rationals(witness.restriction.coefficients) if witness.restriction else None,
            inertia=InertiaOut.of(witness.inertia),
            source=witness.source,
            trial=witness.trial,
        )


# -------------------------
# LORENTZIAN
# -------------------------
class FailureOut(BaseModel):
    alpha: list[int]
    kind: FailureKind
    inertia: InertiaOut | None = None
    message: str
    description: str


class LorentzianReportOut(BaseModel):
    command: str
    num_vars: int
    degree: int | None
    holds: bool
    derivatives_checked: int
    failure: FailureOut | None = None

    @classmethod
    def of(cls, command: str, num_vars: int, verdict: LorentzianVerdict) -> "LorentzianReportOut":
        w = verdict.failure_witness
        failure = None
        if w is not None:
            failure = FailureOut(
                alpha=list(w.alpha),
                kind=w.kind,
                inertia=InertiaOut.of(w.inertia),
                message=w.describe(),
                description=codes.describe(w.kind.value),
            )
        return cls(
            command=command,
            num_vars=num_vars,
            degree=verdict.degree,
            holds=verdict.is_lorentzian,
            derivatives_checked=verdict.derivatives_checked,
            failure=failure,
        )


# -------------------------
# REDUCTIONS
# -------------------------
class ReductionReportOut(BaseModel):
    kind: Construction
    n: int
    edges: list[tuple[int, int]]
    k: int
    omega: int
    exact_ground_truth: bool
    verdict: ReductionStatus | None = None
    decided_directly: bool = False
    samples_tried: int
    seed: int
    witness: WitnessOut | None = None
    witness_source: WitnessSource | None = None

    @classmethod
    def of(cls, report: ReductionReport) -> "ReductionReportOut":
        return cls(
            kind=report.kind,
            n=report.graph.n,
            edges=list(report.graph.edges),
            k=report.k,
            omega=report.omega,
            exact_ground_truth=report.exact_ground_truth,
            verdict=report.status,
            samples_tried=report.samples_tried,
            seed=report.seed,
            witness=WitnessOut.of(report.witness),
            witness_source=report.witness_source,
        )

    @classmethod
    def direct(
        cls, kind: Construction, graph: Graph, k: int, *, omega: int, holds: bool, seed: int
    ) -> "ReductionReportOut":
        """A verdict reached without a gadget or sampling."""
        return cls(
            kind=kind,
            n=graph.n,
            edges=list(graph.edges),
            k=k,
            omega=omega,
            exact_ground_truth=holds,
            decided_directly=True,
            samples_tried=0,
            seed=seed,
        )


class SweepReportOut(BaseModel):
    max_vertices: int
    checks: int
    not_agree: int
    reports: list[ReductionReportOut]


class DirectionalReportOut(BaseModel):
    holds: bool
    exact: bool
    witness_grid: list[int] | None = None
    witness_point: list[str] | None = None
    points_scanned: int
    subdivisions: int | None = None

    @classmethod
    def of(cls, scan: DirectionalScan) -> "DirectionalReportOut":
        return cls(
            holds=scan.verdict,
            exact=scan.exact,
            witness_grid=list(scan.witness_grid) if scan.witness_grid is not None else None,
            witness_point=rationals(scan.witness_point),
            points_scanned=scan.points_scanned,
            subdivisions=scan.subdivisions,
        )


class CliqueReportOut(BaseModel):
    n: int
    omega: int
    clique: list[int]


class InertiaReportOut(BaseModel):
    point: list[str] | None = None
    matrix: list[list[str]]
    inertia: InertiaOut
