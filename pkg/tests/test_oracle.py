import math

import pytest

from aksprime.engine import Outcome, aks_is_prime
from aksprime.errors import DomainError
from aksprime.numth import pow_mod
from aksprime.oracle import (
    DETERMINISTIC_SPRP_BOUND,
    OracleMethod,
    OracleOutcome,
    strong_probable_prime,
    trial_division,
)


def sieve_primes(limit: int) -> list[int]:
    flags = [True] * (limit + 1)
    flags[0:2] = [False, False]
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return [i for i, ok in enumerate(flags) if ok]


class TestTrialDivision:
    def test_smallest_factor_reported(self):
        v = trial_division(91)
        assert v.outcome is OracleOutcome.COMPOSITE
        assert v.factor == 7
        assert v.method is OracleMethod.TRIAL_DIVISION

    def test_two_is_prime(self):
        v = trial_division(2)
        assert v.outcome is OracleOutcome.PRIME
        assert v.factor is None

    def test_factor_present_iff_composite(self):
        for n in range(2, 5000):
            v = trial_division(n)
            if v.outcome is OracleOutcome.COMPOSITE:
                assert v.factor is not None and n % v.factor == 0
                # smallest factor of a composite is prime
                assert trial_division(v.factor).outcome is OracleOutcome.PRIME
            else:
                assert v.factor is None

    def test_cap_enforced(self):
        with pytest.raises(DomainError):
            trial_division(2**64 + 1)
        assert trial_division(2**64 + 1, cap=2**65).outcome is OracleOutcome.COMPOSITE

    def test_domain(self):
        with pytest.raises(DomainError):
            trial_division(1)


class TestStrongProbablePrime:
    def test_carmichael_number_caught(self):
        # 561 = 3 * 11 * 17 fools the plain Fermat test but not this one
        assert strong_probable_prime(561).outcome is OracleOutcome.COMPOSITE

    def test_prime(self):
        assert strong_probable_prime(4861).outcome is OracleOutcome.PRIME

    def test_small_square(self):
        assert strong_probable_prime(9).outcome is OracleOutcome.COMPOSITE

    def test_never_unknown_below_deterministic_bound(self):
        for n in list(range(2, 2000)) + [2**61 - 1, 2**62 + 1]:
            assert strong_probable_prime(n).outcome is not OracleOutcome.UNKNOWN

    def test_unknown_only_without_rounds_above_bound(self):
        n = DETERMINISTIC_SPRP_BOUND + 2
        assert strong_probable_prime(n, rounds=0).outcome is OracleOutcome.UNKNOWN
        assert strong_probable_prime(n, rounds=10, seed=1).outcome in (
            OracleOutcome.PRIME,
            OracleOutcome.COMPOSITE,
        )

    def test_randomized_path_is_reproducible(self):
        n = DETERMINISTIC_SPRP_BOUND + 2
        a = strong_probable_prime(n, rounds=8, seed=42)
        b = strong_probable_prime(n, rounds=8, seed=42)
        assert a == b

    def test_agrees_with_trial_division_exhaustively(self):
        for n in range(2, 100_001):
            td = trial_division(n).outcome
            spp = strong_probable_prime(n).outcome
            assert td == spp, n


class TestFermatSide:
    def test_fermat_holds_for_all_bases_of_small_primes(self):
        for p in sieve_primes(10_000):
            for a in range(1, p):
                assert pow_mod(a, p - 1, p) == 1, (p, a)

    def test_carmichael_numbers_pass_fermat_yet_are_composite(self):
        # these would slip through a bare Fermat check for every coprime base
        for n in (561, 1105, 1729):
            for a in range(1, n):
                if math.gcd(a, n) == 1:
                    assert pow_mod(a, n - 1, n) == 1, (n, a)
            assert trial_division(n).outcome is OracleOutcome.COMPOSITE
            assert strong_probable_prime(n).outcome is OracleOutcome.COMPOSITE


class TestCrossPath:
    def test_large_order_hit_candidate_agrees_with_decision_path(self):
        # 1307135101 takes the slow all-congruences route when prime
        n = 1307135101
        reference = trial_division(n).outcome is OracleOutcome.PRIME
        verdict, _ = aks_is_prime(n)
        assert (verdict.outcome is Outcome.PRIME) == reference
