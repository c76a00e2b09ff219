import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aksprime import _kernels
from aksprime.errors import DomainError
from aksprime.polyring import (
    RingParams,
    RingPoly,
    _mul_kronecker,
    _mul_reference,
    aks_congruence_holds,
    mul_coeffs,
    poly_add,
    poly_from_linear,
    poly_mul,
    poly_one,
    poly_pow,
    pow_coeffs,
)
from conftest import ref_cyclic_mul, ref_pow_linear


def rand_poly(params: RingParams, rng: random.Random) -> RingPoly:
    return RingPoly(params, tuple(rng.randrange(params.n) for _ in range(params.r)))


class TestConstruction:
    def test_linear_basic(self):
        p = poly_from_linear(RingParams(7, 3), 1)
        assert p.coeffs == (1, 1, 0)

    def test_linear_reduces_constant(self):
        p = poly_from_linear(RingParams(7, 3), 9)
        assert p.coeffs == (2, 1, 0)

    def test_linear_zero_constant(self):
        p = poly_from_linear(RingParams(5, 4), 0)
        assert p.coeffs == (0, 1, 0, 0)

    def test_linear_needs_room_for_x(self):
        with pytest.raises(DomainError):
            poly_from_linear(RingParams(5, 1), 1)

    def test_params_validation(self):
        with pytest.raises(DomainError):
            RingParams(1, 3)
        with pytest.raises(DomainError):
            RingParams(5, 0)

    def test_poly_validation(self):
        with pytest.raises(DomainError):
            RingPoly(RingParams(5, 3), (0, 1))  # wrong length
        with pytest.raises(DomainError):
            RingPoly(RingParams(5, 3), (0, 5, 1))  # unreduced coefficient


class TestMul:
    def test_hand_expansion(self):
        # (x^2+1)(x^2+x) = x^4+x^3+x^2+x = x^2 + 2x + 1 once x^3 wraps to 1
        params = RingParams(5, 3)
        p = RingPoly(params, (1, 0, 1))
        q = RingPoly(params, (0, 1, 1))
        assert poly_mul(p, q).coeffs == (1, 2, 1)

    def test_identity(self):
        params = RingParams(97, 8)
        rng = random.Random(0)
        p = rand_poly(params, rng)
        assert poly_mul(p, poly_one(params)) == p

    def test_nilpotent_example(self):
        # (x+1)^2 = x^2 + 2x + 1 = 1 + 0 + 1 = 0 in Z_2[x]/(x^2-1)
        params = RingParams(2, 2)
        p = poly_from_linear(params, 1)
        assert poly_mul(p, p).coeffs == (0, 0)

    def test_params_mismatch(self):
        p = poly_from_linear(RingParams(7, 3), 1)
        q = poly_from_linear(RingParams(7, 4), 1)
        with pytest.raises(DomainError):
            poly_mul(p, q)

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_matches_brute_force(self, data):
        r = data.draw(st.integers(1, 24))
        n = data.draw(st.integers(2, 10**12))
        c1 = [data.draw(st.integers(0, n - 1)) for _ in range(r)]
        c2 = [data.draw(st.integers(0, n - 1)) for _ in range(r)]
        assert mul_coeffs(c1, c2, n, r) == ref_cyclic_mul(c1, c2, n, r)


class TestBackendsAgree:
    CASES = [
        (2, 1),
        (97, 16),
        (2**31 - 1, 20),
        (_kernels.KERNEL_N_MAX, 17),          # largest kernel-eligible modulus
        (_kernels.KERNEL_N_MAX + 1, 17),      # first Kronecker modulus
        (2**41 + 5, 12),
        (2**84 + 13, 9),
    ]

    @pytest.mark.parametrize("n,r", CASES)
    def test_all_strategies_equal(self, n, r):
        rng = random.Random(n % 997)
        c1 = [rng.randrange(n) for _ in range(r)]
        c2 = [rng.randrange(n) for _ in range(r)]
        expected = ref_cyclic_mul(c1, c2, n, r)
        assert _mul_reference(c1, c2, n, r) == expected
        assert _mul_kronecker(c1, c2, n, r) == expected
        if n <= _kernels.KERNEL_N_MAX and _kernels.HAVE_NUMBA:
            assert _kernels.mul_via_kernel(c1, c2, n, r) == expected

    @pytest.mark.parametrize("n,r", CASES)
    def test_squaring_aliases(self, n, r):
        rng = random.Random(n % 991)
        c = [rng.randrange(n) for _ in range(r)]
        expected = ref_cyclic_mul(c, c, n, r)
        assert _mul_reference(c, c, n, r) == expected
        assert _mul_kronecker(c, c, n, r) == expected
        if n <= _kernels.KERNEL_N_MAX and _kernels.HAVE_NUMBA:
            assert _kernels.mul_via_kernel(c, c, n, r) == expected

    def test_env_flag_selects_fallback(self, monkeypatch):
        monkeypatch.setenv(_kernels.ENV_BACKEND, "numpy")
        assert _kernels.backend() == "numpy"
        assert mul_coeffs([1, 2, 3], [3, 2, 1], 7, 3) == ref_cyclic_mul(
            [1, 2, 3], [3, 2, 1], 7, 3
        )
        monkeypatch.setenv(_kernels.ENV_BACKEND, "bogus")
        with pytest.raises(RuntimeError):
            _kernels.backend()


class TestRingAxioms:
    def test_commutative_associative_distributive(self):
        rng = random.Random(7)
        for _ in range(60):
            r = rng.randrange(1, 17)
            n = rng.randrange(2, 101)
            params = RingParams(n, r)
            p, q, s = (rand_poly(params, rng) for _ in range(3))
            assert poly_mul(p, q) == poly_mul(q, p)
            assert poly_mul(poly_mul(p, q), s) == poly_mul(p, poly_mul(q, s))
            assert poly_mul(p, poly_add(q, s)) == poly_add(
                poly_mul(p, q), poly_mul(p, s)
            )

    def test_composite_modulus_stays_well_defined(self):
        # nothing here may assume the modulus is prime
        rng = random.Random(11)
        for n in (4, 12, 100, 561):
            params = RingParams(n, 6)
            p, q = rand_poly(params, rng), rand_poly(params, rng)
            assert list(poly_mul(p, q).coeffs) == ref_cyclic_mul(
                list(p.coeffs), list(q.coeffs), n, 6
            )


class TestPow:
    def test_power_one(self):
        p = poly_from_linear(RingParams(11, 5), 3)
        assert poly_pow(p, 1) == p

    def test_power_zero(self):
        params = RingParams(11, 5)
        p = poly_from_linear(params, 3)
        assert poly_pow(p, 0) == poly_one(params)

    def test_frobenius_small_prime(self):
        # (x+1)^7 = x^(7 mod 3) + 1 in Z_7[x]/(x^3-1)
        p = poly_from_linear(RingParams(7, 3), 1)
        assert poly_pow(p, 7).coeffs == (1, 1, 0)

    def test_hand_square(self):
        # (x+2)^2 = x^2 + 4x + 4 -> (1+4, 4) = (2, 1) mod 3 with x^2 -> 1
        p = poly_from_linear(RingParams(3, 2), 2)
        assert poly_pow(p, 2).coeffs == (2, 1)

    def test_matches_repeated_multiplication(self):
        rng = random.Random(3)
        for _ in range(25):
            r = rng.randrange(2, 12)
            n = rng.randrange(2, 200)
            e = rng.randrange(0, 33)
            a = rng.randrange(n)
            params = RingParams(n, r)
            got = poly_pow(poly_from_linear(params, a), e)
            assert list(got.coeffs) == ref_pow_linear(n, r, a, e)

    def test_multiplication_budget(self):
        # square-and-multiply: never more than 2*bitlen(e) products
        rng = random.Random(5)
        for _ in range(30):
            e = rng.randrange(1, 10**9)
            _, mults = pow_coeffs([2, 1, 0, 0], e, 1009, 4)
            assert mults <= 2 * e.bit_length()

    def test_negative_exponent_rejected(self):
        p = poly_from_linear(RingParams(7, 3), 1)
        with pytest.raises(DomainError):
            poly_pow(p, -1)


def small_primes(limit: int) -> list[int]:
    sieve = [True] * (limit + 1)
    sieve[0:2] = [False, False]
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, ok in enumerate(sieve) if ok]


class TestCongruence:
    def test_holds_for_prime(self):
        assert aks_congruence_holds(7, 3, 1) is True

    def test_composite_matches_binomial_expansion(self):
        # independent oracle: expand (x+1)^9 with exact binomials, reduce
        # mod (x^2 - 1, 9), and compare with x^(9 mod 2) + 1
        n, r, a = 9, 2, 1
        folded = [0] * r
        for i in range(n + 1):
            folded[i % r] = (folded[i % r] + math.comb(n, i) * a ** (n - i)) % n
        target = [0] * r
        target[n % r] += 1
        target[0] += a
        target = [c % n for c in target]
        assert aks_congruence_holds(n, r, a) == (folded == target)
        assert aks_congruence_holds(n, r, a) is False

    def test_holds_for_4861_at_its_ring(self):
        from aksprime.engine import find_r

        r, _ = find_r(4861)
        assert aks_congruence_holds(4861, r, 1) is True

    def test_domain(self):
        with pytest.raises(DomainError):
            aks_congruence_holds(7, 3, 0)
        with pytest.raises(DomainError):
            aks_congruence_holds(7, 3, 7)
        with pytest.raises(DomainError):
            aks_congruence_holds(1, 3, 1)

    def test_prime_side_small(self):
        # quick slice of the full identity suite in test_acceptance
        for p in small_primes(31):
            for r in range(2, 8):
                for a in range(1, p):
                    assert aks_congruence_holds(p, r, a), (p, r, a)

    def test_binomial_coefficients_vanish_mod_prime(self):
        for p in small_primes(101):
            for i in range(1, p):
                assert math.comb(p, i) % p == 0, (p, i)
