from enum import Enum


class FailureKind(str, Enum):
    DECOMPOSABLE = "decomposable"
    BAD_INERTIA = "bad-inertia"
    NEGATIVE_COEFFICIENT = "negative-coefficient"
    NOT_HOMOGENEOUS = "not-homogeneous"
    ZERO = "zero"


class SampleVerdict(str, Enum):
    FALSIFIED = "falsified"
    NOT_FALSIFIED = "not-falsified"


class ReductionStatus(str, Enum):
    AGREE = "AGREE"
    CONFLICT = "CONFLICT"
    INCONCLUSIVE_NEGATIVE = "INCONCLUSIVE-NEGATIVE"


class Construction(str, Enum):
    STABILITY = "stability"
    QUARTIC_LC = "quartic-lc"
    DIRECTIONAL = "directional"


class WitnessSource(str, Enum):
    SAMPLED = "sampled"
    CLIQUE_POINT = "clique-point"
    CLIQUE_INDICATOR = "clique-indicator"
    EXACT_COMPARISON = "exact-comparison"
