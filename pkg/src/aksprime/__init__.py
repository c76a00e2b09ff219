"""Deterministic polynomial-time primality testing.

The decision procedure combines an exact perfect-power check, a search
for a ring exponent r with large multiplicative order, a gcd sweep, and
polynomial congruence checks in Z_n[x]/(x^r - 1).  A separate reference
oracle (trial division / strong pseudoprime tests) is provided for
cross-checking and is never consulted by the decision path.
"""

from .engine import (
    Outcome,
    Reason,
    RunResult,
    SearchParams,
    Step,
    TraceEvent,
    Verdict,
    aks_is_prime,
    find_r,
    loop_bound,
    run,
    threshold,
)
from .errors import DomainError, PrecisionError, SearchWindowError
from .numth import (
    PowerWitness,
    euler_phi,
    gcd,
    integer_root,
    multiplicative_order,
    order_exceeds,
    perfect_power,
    pow_mod,
)
from .oracle import (
    OracleMethod,
    OracleOutcome,
    OracleVerdict,
    strong_probable_prime,
    trial_division,
)
from .polyring import (
    RingParams,
    RingPoly,
    aks_congruence_holds,
    poly_from_linear,
    poly_mul,
    poly_pow,
)

__version__ = "0.1.0"

__all__ = [
    "aks_is_prime",
    "run",
    "threshold",
    "find_r",
    "loop_bound",
    "Outcome",
    "Reason",
    "Verdict",
    "SearchParams",
    "Step",
    "TraceEvent",
    "RunResult",
    "gcd",
    "pow_mod",
    "integer_root",
    "perfect_power",
    "euler_phi",
    "order_exceeds",
    "multiplicative_order",
    "PowerWitness",
    "RingParams",
    "RingPoly",
    "poly_from_linear",
    "poly_mul",
    "poly_pow",
    "aks_congruence_holds",
    "trial_division",
    "strong_probable_prime",
    "OracleVerdict",
    "OracleOutcome",
    "OracleMethod",
    "DomainError",
    "PrecisionError",
    "SearchWindowError",
    "__version__",
]
