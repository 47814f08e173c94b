# lorentzian/codes.py

DECOMPOSABLE = "decomposable"
BAD_INERTIA = "bad-inertia"
NEGATIVE_COEFFICIENT = "negative-coefficient"
NOT_HOMOGENEOUS = "not-homogeneous"
ZERO = "zero"

AGREE = "AGREE"
CONFLICT = "CONFLICT"
INCONCLUSIVE_NEGATIVE = "INCONCLUSIVE-NEGATIVE"

HOLDS = "holds"
FAILS = "fails"
USAGE = "usage"

FAILURE_CODES = {
    DECOMPOSABLE: {
        "category": "lorentzian",
        "description": "A partial derivative splits into parts on disjoint variables",
    },
    BAD_INERTIA: {
        "category": "lorentzian",
        "description": "A quadratic partial derivative's Hessian lacks exactly one positive eigenvalue",
    },
    NEGATIVE_COEFFICIENT: {
        "category": "lorentzian",
        "description": "The polynomial has a negative coefficient",
    },
    NOT_HOMOGENEOUS: {
        "category": "lorentzian",
        "description": "Monomials of different degrees are present",
    },
    ZERO: {
        "category": "lorentzian",
        "description": "The zero polynomial is never Lorentzian",
    },
}

REDUCTION_CODES = {
    AGREE: {
        "category": "reduction",
        "exit_code": 0,
        "severity": 0,
        "description": "Exact verdict and sampled or witness check agree",
    },
    CONFLICT: {
        "category": "reduction",
        "exit_code": 1,
        "severity": 2,
        "description": "Exact verdict and witness check disagree",
    },
    INCONCLUSIVE_NEGATIVE: {
        "category": "reduction",
        "exit_code": 3,
        "severity": 1,
        "description": "Negative instance whose witness was not found within the trial budget",
    },
}

OUTCOME_CODES = {
    HOLDS: {
        "category": "outcome",
        "exit_code": 0,
        "description": "The property holds",
    },
    FAILS: {
        "category": "outcome",
        "exit_code": 1,
        "description": "The property fails",
    },
    USAGE: {
        "category": "outcome",
        "exit_code": 2,
        "description": "Usage or input error",
    },
}


def _entry(code: str) -> dict:
    entry = FAILURE_CODES.get(code) or REDUCTION_CODES.get(code) or OUTCOME_CODES.get(code)
    if entry is None:
        raise KeyError(f"unknown code {code!r}")
    return entry


def describe(code: str) -> str:
    return _entry(code)["description"]


def exit_code(code: str) -> int:
    entry = _entry(code)
    if "exit_code" not in entry:
        raise KeyError(f"code {code!r} has no exit code")
    return entry["exit_code"]


def worst(values: list[str]) -> str:
    """The most severe reduction code; AGREE for an empty list."""
    return max(values, key=lambda c: REDUCTION_CODES[c]["severity"], default=AGREE)
