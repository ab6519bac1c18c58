import random

import numpy as np
import pytest
from hypothesis import given, settings
from sympy.functions.combinatorial.numbers import kronecker_symbol as sympy_kronecker
from hypothesis import strategies as st

from quadmds.arith import (
    count_sqrt_mod,
    count_sqrt_mod_bruteforce,
    factorize,
    fundamental_discriminant,
    is_fundamental_discriminant,
    is_probable_prime,
    kronecker_symbol,
    sqrt_count,
)
from quadmds.errors import DomainError, OracleBoundError


def brute(m, n):
    return count_sqrt_mod_bruteforce(m, n).count


class TestFactorize:
    def test_examples(self):
        assert factorize(12).pairs == ((2, 2), (3, 1))
        assert factorize(1).pairs == ()
        assert factorize(97).pairs == ((97, 1),)

    def test_reconstruction(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randrange(1, 10**9)
            fac = factorize(n)
            assert fac.n() == n
            primes = [p for p, _ in fac]
            assert primes == sorted(primes)
            assert all(is_probable_prime(p) for p in primes)

    def test_large_semiprime(self):
        p, q = 1_000_003, 1_000_033
        assert factorize(p * q).pairs == ((p, 1), (q, 1))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            factorize(0)
        with pytest.raises(DomainError):
            factorize(-5)


class TestKronecker:
    def test_examples(self):
        assert kronecker_symbol(1, 7) == 1
        assert kronecker_symbol(5, 5) == 0
        assert kronecker_symbol(-4, 3) == -1

    def test_against_sympy(self):
        rng = random.Random(11)
        for _ in range(500):
            a = rng.randrange(-60, 61)
            n = rng.randrange(-60, 61)
            if a == 0 and n == 0:
                continue
            assert kronecker_symbol(a, n) == sympy_kronecker(a, n), (a, n)

    @given(st.integers(-200, 200), st.integers(-50, 50), st.integers(-50, 50))
    @settings(max_examples=200)
    def test_multiplicative_in_n(self, a, n1, n2):
        if (a == 0 and n1 * n2 == 0) or n1 == 0 or n2 == 0:
            return
        assert kronecker_symbol(a, n1 * n2) == kronecker_symbol(a, n1) * kronecker_symbol(a, n2)

    def test_zero_edge_cases(self):
        assert kronecker_symbol(1, 0) == 1
        assert kronecker_symbol(-1, 0) == 1
        assert kronecker_symbol(2, 0) == 0
        with pytest.raises(DomainError):
            kronecker_symbol(0, 0)


class TestFundamentalDiscriminant:
    def test_examples(self):
        assert fundamental_discriminant(5) == fundamental_discriminant(5).__class__(5, 5, 1)
        d = fundamental_discriminant(45)
        assert (d.fundamental, d.conductor) == (5, 3)
        d = fundamental_discriminant(-4)
        assert (d.fundamental, d.conductor) == (-4, 1)

    def test_perfect_square(self):
        d = fundamental_discriminant(16)
        assert (d.fundamental, d.conductor) == (1, 4)
        d = fundamental_discriminant(9)
        assert (d.fundamental, d.conductor) == (1, 3)

    def test_reconstruction_and_fundamentality(self):
        for d in list(range(-400, 0)) + list(range(1, 401)):
            if d % 4 not in (0, 1):
                continue
            dec = fundamental_discriminant(d)
            assert dec.fundamental * dec.conductor**2 == d
            assert is_fundamental_discriminant(dec.fundamental), d

    def test_domain(self):
        for bad in (2, 3, -5, 7, 0):
            with pytest.raises(DomainError):
                fundamental_discriminant(bad)


class TestCountSqrtMod:
    def test_examples(self):
        assert count_sqrt_mod(1, 0).count == 1
        assert count_sqrt_mod(7, 2).count == 2
        assert count_sqrt_mod(8, 1).count == 4
        assert count_sqrt_mod(8, 2).count == 0

    def test_bruteforce_examples(self):
        assert brute(9, 0) == 3
        assert brute(4, 1) == 2
        assert brute(5, 4) == 2

    def test_bruteforce_refusal(self):
        with pytest.raises(OracleBoundError):
            count_sqrt_mod_bruteforce(10**6 + 1, 1)

    def test_oracle_equivalence_dense(self):
        # exhaustive m <= 300 here; the full m <= 2000 sweep is acceptance #1
        for m in range(1, 301):
            table = np.bincount((np.arange(m, dtype=np.int64) ** 2) % m, minlength=m)
            for n in range(-25, 25):
                assert sqrt_count(m, n) == table[n % m], (m, n)

    def test_crt_multiplicativity(self):
        rng = random.Random(3)
        trials = 0
        while trials < 200:
            m1 = rng.randrange(1, 400)
            m2 = rng.randrange(1, 400)
            if np.gcd(m1, m2) != 1:
                continue
            n = rng.randrange(-500, 500)
            assert sqrt_count(m1 * m2, n) == sqrt_count(m1, n) * sqrt_count(m2, n)
            trials += 1

    def test_hensel_stabilization(self):
        # odd p with p not dividing n: the count is independent of the exponent
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            for n in (1, 2, 3, 5, -1, -2, 10, p + 1):
                if n % p == 0:
                    continue
                base = sqrt_count(p, n)
                for e in range(2, 7):
                    assert sqrt_count(p**e, n) == base, (p, e, n)

    def test_periodicity(self):
        rng = random.Random(5)
        for _ in range(200):
            m = rng.randrange(1, 1000)
            n = rng.randrange(-10**6, 10**6)
            assert sqrt_count(m, n) == sqrt_count(m, n + m)

    def test_vanishing_bad_residues(self):
        for m in range(1, 501):
            for d in (2, 3, -2, -1):  # -2, -1 are 2, 3 mod 4
                assert sqrt_count(4 * m, d) == 0

    def test_negative_residue_reduction(self):
        # A(4m, D) for D < 0 is defined by reducing mod 4m
        assert sqrt_count(4, -4) == sqrt_count(4, 0) == 2
        assert sqrt_count(12, -3) == sqrt_count(12, 9)

    @given(st.integers(1, 2000), st.integers(-2000, 2000))
    @settings(max_examples=300, deadline=None)
    def test_matches_bruteforce(self, m, n):
        assert sqrt_count(m, n) == brute(m, n)
