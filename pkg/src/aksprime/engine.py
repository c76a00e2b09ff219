"""The AKS decision procedure.

Pipeline for a candidate n >= 2:

  1. perfect-power check            -> composite with a base/exponent witness
  2. search for the ring exponent r -> smallest r with gcd(n, r) > 1 or
                                       ord_r(n) > floor(log2(n)^2)
  3. gcd sweep over a in [2, min(r, n-1)] -> composite with a proper factor
  4. r >= n                          -> prime (n too small to hide a factor)
  5. congruence loop: (x+a)^n == x^(n mod r) + a in Z_n[x]/(x^r - 1) for
     a = 1 .. floor(sqrt(phi(r)) * log2(n)) -> composite with the failing a
  6. all checks passed               -> prime

Real-valued bounds (log2(n)^2 and sqrt(phi(r))*log2(n)) are evaluated with
mpmath at a working precision of max(128, 2*bitlen(n)) bits, floored, and
recomputed at twice that precision; any disagreement aborts the run.  The
only inputs for which these quantities are integers are powers of two
(resp. powers of two paired with square totients), and those take an exact
integer path, so the floors are stable.

This module never consults the reference oracle; the two verdict paths
stay independent so tests can compare them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from math import gcd, isqrt

import mpmath as mp

from . import _kernels
from .errors import DomainError, PrecisionError, SearchWindowError
from .numth import PowerWitness, euler_phi, order_exceeds, perfect_power
from .polyring import aks_congruence_holds

__all__ = [
    "Outcome",
    "Reason",
    "Verdict",
    "SearchParams",
    "Step",
    "TraceEvent",
    "RunResult",
    "threshold",
    "find_r",
    "loop_bound",
    "aks_is_prime",
    "run",
]


class Outcome(Enum):
    PRIME = "prime"
    COMPOSITE = "composite"


class Reason(Enum):
    PERFECT_POWER = "perfect_power"
    SMALL_FACTOR = "small_factor"
    R_AT_LEAST_N = "r_at_least_n"
    CONGRUENCE_FAILED = "congruence_failed"
    ALL_CHECKS_PASSED = "all_checks_passed"


@dataclass(frozen=True)
class Verdict:
    """Final answer plus a machine-checkable justification.

    Composite verdicts always carry a witness (a PowerWitness, a proper
    factor, or the failing congruence index a); prime verdicts carry none.
    """

    outcome: Outcome
    reason: Reason
    witness: PowerWitness | int | None = None

    def __post_init__(self) -> None:
        if self.outcome is Outcome.COMPOSITE and self.witness is None:
            raise ValueError("composite verdicts need a witness")
        if self.outcome is Outcome.PRIME and self.witness is not None:
            raise ValueError("prime verdicts carry no witness")


@dataclass(frozen=True)
class SearchParams:
    """Parameters fixed by steps 2 and 5: the ring exponent r, the order
    threshold it had to beat, and the congruence loop bound l."""

    r: int
    threshold_t: int
    l: int


class Step(Enum):
    PERFECT_POWER = "perfect_power"
    FIND_R = "find_r"
    GCD_SWEEP = "gcd_sweep"
    SMALL_N = "small_n"
    CONGRUENCE = "congruence"
    FINAL = "final"


@dataclass(frozen=True)
class TraceEvent:
    step: Step
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RunResult:
    """Everything one decision produced, for reporting."""

    n: int
    verdict: Verdict
    r: int | None  # populated iff the run reached step 2
    l: int | None  # populated iff the run reached step 5
    search: SearchParams | None
    elapsed_ms: float
    step5_mults: int
    trace: list[TraceEvent] | None


# ---------------------------------------------------------------------------
# real-valued bounds, evaluated exactly enough to floor safely
# ---------------------------------------------------------------------------


def _working_prec(n: int) -> int:
    return max(128, 2 * n.bit_length())


def _is_power_of_two(n: int) -> bool:
    return n & (n - 1) == 0


def _ceil_log2(n: int) -> int:
    return n.bit_length() - 1 if _is_power_of_two(n) else n.bit_length()


def _floor_log2_squared(n: int, prec: int) -> int:
    with mp.workprec(prec):
        L = mp.log(n) / mp.log(2)
        return int(mp.floor(L * L))


def _floor_sqrt_mul_log2(phi: int, n: int, prec: int) -> int:
    with mp.workprec(prec):
        return int(mp.floor(mp.sqrt(phi) * mp.log(n) / mp.log(2)))


def _stable(value_at, n: int, what: str) -> int:
    prec = _working_prec(n)
    first = value_at(prec)
    second = value_at(2 * prec)
    if first != second:
        raise PrecisionError(
            f"{what} changed between precisions {prec} and {2 * prec}: "
            f"{first} != {second}"
        )
    return first


def threshold(n: int) -> int:
    """floor(log2(n)**2), the order bound the r-search must beat.

    For n a power of two the value is exact integer arithmetic; otherwise
    log2(n)**2 is irrational, so the dual-precision floor is stable and
    `ord > threshold(n)` captures `ord > log2(n)**2` exactly.
    """
    if n < 2:
        raise DomainError("threshold requires n >= 2")
    if _is_power_of_two(n):
        k = n.bit_length() - 1
        return k * k
    return _stable(lambda p: _floor_log2_squared(n, p), n, f"threshold({n})")


def find_r(n: int) -> tuple[int, bool]:
    """Smallest r >= 2 with gcd(n, r) > 1 or ord_r(n) > threshold(n).

    Returns (r, gcd_hit).  A suitable r provably exists with
    r <= ceil(log2(n))**5 + 1; exhausting that window means the
    implementation is broken, and raises rather than guessing.
    """
    r, gcd_hit, _ = _find_r_with_threshold(n)
    return r, gcd_hit


def _find_r_with_threshold(n: int) -> tuple[int, bool, int]:
    if n < 2:
        raise DomainError("find_r requires n >= 2")
    t = threshold(n)
    window = _ceil_log2(n) ** 5 + 1
    for r in range(2, window + 1):
        if gcd(n, r) > 1:
            return r, True, t
        if order_exceeds(n, r, t):
            return r, False, t
    raise SearchWindowError(
        f"no suitable r up to {window} for n={n}; this should be impossible"
    )


def loop_bound(n: int, r: int) -> int:
    """floor(sqrt(phi(r)) * log2(n)), the number of congruences to test.

    Exact when both factors are rational (n a power of two and phi(r) a
    perfect square); otherwise the product is irrational and the
    dual-precision floor is stable.  Whenever gcd(n, r) == 1 the result
    is < r, because the search guaranteed phi(r) > log2(n)**2.
    """
    if n < 2:
        raise DomainError("loop_bound requires n >= 2")
    if r < 2:
        raise DomainError("loop_bound requires r >= 2")
    phi = euler_phi(r)
    s = isqrt(phi)
    if _is_power_of_two(n) and s * s == phi:
        return s * (n.bit_length() - 1)
    return _stable(lambda p: _floor_sqrt_mul_log2(phi, n, p), n, f"loop_bound({n},{r})")


# ---------------------------------------------------------------------------
# the decision procedure
# ---------------------------------------------------------------------------


def run(n: int, trace: bool = False) -> RunResult:
    """Decide the primality of n and report how the decision was reached.

    The fused numba sweep handles step 5 for word-sized n; tracing (which
    wants one event per congruence) and larger n take the generic path.
    The two are observationally identical: same verdict, and the witness
    is always the smallest failing a.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError("n must be an integer")
    if n < 2:
        raise DomainError("primality is defined for integers >= 2")

    t_start = time.perf_counter()
    events: list[TraceEvent] | None = [] if trace else None

    def emit(step: Step, **detail) -> None:
        if events is not None:
            detail["elapsed_ms"] = (time.perf_counter() - t_start) * 1000.0
            events.append(TraceEvent(step, detail))

    def done(verdict: Verdict, r=None, l=None, search=None, mults=0) -> RunResult:
        emit(Step.FINAL, outcome=verdict.outcome.value, reason=verdict.reason.value)
        elapsed = (time.perf_counter() - t_start) * 1000.0
        return RunResult(n, verdict, r, l, search, elapsed, mults, events)

    # step 1: perfect powers are composite by construction
    witness = perfect_power(n)
    emit(Step.PERFECT_POWER, found=witness is not None,
         witness=str(witness) if witness else None)
    if witness is not None:
        return done(Verdict(Outcome.COMPOSITE, Reason.PERFECT_POWER, witness))

    # step 2: fix the ring exponent
    r, gcd_hit, t = _find_r_with_threshold(n)
    emit(Step.FIND_R, r=r, gcd_hit=gcd_hit, threshold=t)

    # step 3: any a <= r sharing a nontrivial factor with n settles it
    for a in range(2, min(r, n - 1) + 1):
        g = gcd(a, n)
        if 1 < g < n:
            emit(Step.GCD_SWEEP, a=a, factor=g)
            return done(Verdict(Outcome.COMPOSITE, Reason.SMALL_FACTOR, g), r=r)
    emit(Step.GCD_SWEEP, a_max=min(r, n - 1), factor=None)

    # step 4: no factor up to r, and r >= n means no factor at all
    emit(Step.SMALL_N, triggered=r >= n)
    if r >= n:
        return done(Verdict(Outcome.PRIME, Reason.R_AT_LEAST_N), r=r)

    # step 5: the congruence loop
    l = loop_bound(n, r)
    search = SearchParams(r=r, threshold_t=t, l=l)
    fail_a = 0
    mults = 0
    if events is None and _kernels.backend() == "numba" and n <= _kernels.KERNEL_N_MAX:
        fail_a, mults = _kernels.sweep_via_kernel(n, r, l)
    else:
        for a in range(1, l + 1):
            holds = aks_congruence_holds(n, r, a)
            mults += _pow_mult_count(n)
            emit(Step.CONGRUENCE, a=a, holds=holds)
            if not holds:
                fail_a = a
                break
    if fail_a:
        return done(
            Verdict(Outcome.COMPOSITE, Reason.CONGRUENCE_FAILED, fail_a),
            r=r, l=l, search=search, mults=mults,
        )

    # step 6
    return done(
        Verdict(Outcome.PRIME, Reason.ALL_CHECKS_PASSED),
        r=r, l=l, search=search, mults=mults,
    )


def _pow_mult_count(e: int) -> int:
    # ring multiplications performed by square-and-multiply for exponent e
    return (e.bit_length() - 1) + bin(e).count("1") - 1


def aks_is_prime(n: int, trace: bool = False) -> tuple[Verdict, list[TraceEvent] | None]:
    """Verdict for n, optionally with the step-by-step trace."""
    result = run(n, trace=trace)
    return result.verdict, result.trace
