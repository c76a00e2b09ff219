"""Reference primality checks, independent of the AKS path.

Used by tests and by the CLI's --verify flag to cross-check verdicts.
Nothing in the decision engine imports this module; the two code paths
share no primality logic, which is what makes the comparison meaningful.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

__all__ = [
    "OracleOutcome",
    "OracleMethod",
    "OracleVerdict",
    "trial_division",
    "strong_probable_prime",
    "TRIAL_DIVISION_CAP",
    "DETERMINISTIC_SPRP_BOUND",
]

TRIAL_DIVISION_CAP = 1 << 64

# Strong-pseudoprime testing with the first 13 primes as bases is a proven
# deterministic primality test for all n < 3,317,044,064,679,887,385,961,981
# (Sorenson & Webster, "Strong pseudoprimes to twelve prime bases", 2015).
DETERMINISTIC_SPRP_BOUND = 3317044064679887385961981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class OracleOutcome(Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    UNKNOWN = "unknown"


class OracleMethod(Enum):
    TRIAL_DIVISION = "trial_division"
    STRONG_PSEUDOPRIME = "strong_pseudoprime"


@dataclass(frozen=True)
class OracleVerdict:
    outcome: OracleOutcome
    method: OracleMethod
    factor: int | None = None


def trial_division(n: int, cap: int = TRIAL_DIVISION_CAP) -> OracleVerdict:
    """Exact verdict by searching for a divisor up to sqrt(n).

    Composite results carry the smallest prime factor.  Refuses n above
    `cap` (the cost is on the order of sqrt(n)); use strong_probable_prime
    for larger candidates.
    """
    if n < 2:
        raise DomainError("trial_division requires n >= 2")
    if n > cap:
        raise DomainError(
            f"n exceeds the trial-division cap {cap}; use strong_probable_prime"
        )
    method = OracleMethod.TRIAL_DIVISION
    for p in (2, 3):
        if n == p:
            return OracleVerdict(OracleOutcome.PRIME, method)
        if n % p == 0:
            return OracleVerdict(OracleOutcome.COMPOSITE, method, p)
    # remaining candidate divisors have the form 6k +/- 1
    d = 5
    while d * d <= n:
        if n % d == 0:
            return OracleVerdict(OracleOutcome.COMPOSITE, method, d)
        if n % (d + 2) == 0:
            return OracleVerdict(OracleOutcome.COMPOSITE, method, d + 2)
        d += 6
    return OracleVerdict(OracleOutcome.PRIME, method)


def _strong_test(n: int, base: int, d: int, s: int) -> bool:
    """One strong-pseudoprime round; True means 'probably prime'."""
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def strong_probable_prime(n: int, rounds: int = 25, seed: int | None = None) -> OracleVerdict:
    """Miller-Rabin style strong-pseudoprime verdict.

    Below DETERMINISTIC_SPRP_BOUND the fixed base set makes the answer
    exact (never UNKNOWN).  Above it, `rounds` random bases are drawn from
    random.Random(seed): COMPOSITE is then certain, PRIME means every
    round passed, and rounds == 0 yields UNKNOWN.
    """
    if n < 2:
        raise DomainError("strong_probable_prime requires n >= 2")
    method = OracleMethod.STRONG_PSEUDOPRIME
    if n in (2, 3):
        return OracleVerdict(OracleOutcome.PRIME, method)
    if n % 2 == 0:
        return OracleVerdict(OracleOutcome.COMPOSITE, method, 2)

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < DETERMINISTIC_SPRP_BOUND:
        bases = [b for b in _DETERMINISTIC_BASES if b % n != 0]
    else:
        if rounds < 1:
            return OracleVerdict(OracleOutcome.UNKNOWN, method)
        rng = random.Random(seed)
        bases = [rng.randrange(2, n - 1) for _ in range(rounds)]

    for base in bases:
        if not _strong_test(n, base, d, s):
            return OracleVerdict(OracleOutcome.COMPOSITE, method)
    return OracleVerdict(OracleOutcome.PRIME, method)
