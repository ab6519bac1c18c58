import cmath
import math
import random

import mpmath
import numpy as np
import pytest
import scipy.special

from quadmds.errors import DomainError, PoleError
from quadmds.specialfn import (
    ThetaIntegralSpec,
    gamma,
    hurwitz_zeta,
    hurwitz_zeta_minus_pole,
    legendre_P,
    riemann_zeta,
    theta_integral,
    theta_minus_closed_form,
    theta_plus_closed_form,
)


class TestGamma:
    def test_known_values(self):
        assert abs(gamma(1) - 1) < 1e-14
        assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14
        assert abs(gamma(4) - 6) < 1e-12

    def test_poles(self):
        for s in (0, -1, -2, -7):
            with pytest.raises(PoleError):
                gamma(s)

    def test_recurrence_random_strip(self):
        rng = random.Random(17)
        for _ in range(100):
            s = complex(rng.uniform(0.1, 5.0), rng.uniform(-5.0, 5.0))
            lhs = gamma(s + 1)
            rhs = s * gamma(s)
            assert abs(lhs - rhs) <= 1e-12 * abs(lhs)

    def test_against_scipy(self):
        rng = random.Random(23)
        for _ in range(100):
            s = complex(rng.uniform(-4.7, 6.0), rng.uniform(-6.0, 6.0))
            if abs(s - round(s.real)) < 1e-2 and s.real <= 0:
                continue
            ours = gamma(s)
            ref = scipy.special.gamma(s)
            assert abs(ours - ref) <= 1e-11 * abs(ref), s


class TestHurwitzZeta:
    def test_reduces_to_riemann(self):
        assert abs(hurwitz_zeta(3.0, 1.0) - riemann_zeta(3.0)) == 0.0

    def test_half_value(self):
        assert abs(hurwitz_zeta(2.0, 0.5) - math.pi**2 / 2) < 1e-12

    def test_index_shift(self):
        a = 0.25
        lhs = hurwitz_zeta(3.0, a) - a**-3
        # zeta(3, 1.25) via zeta(3, 0.25) shift; evaluate independently:
        rhs = complex(mpmath.zeta(3, 1.25))
        assert abs(lhs - rhs) < 1e-12

    def test_riemann_values(self):
        assert abs(riemann_zeta(2.0) - math.pi**2 / 6) < 1e-12
        assert abs(riemann_zeta(0.0) - (-0.5)) < 1e-12
        assert abs(riemann_zeta(-1.0) - (-1.0 / 12.0)) < 1e-12

    def test_complex_against_mpmath(self):
        for s in (2.0, 3.0, 0.5 + 14.0j, 2.5 + 1.0j, -0.5 + 2.0j):
            for a in (1.0, 0.5, 0.25, 0.9):
                ours = hurwitz_zeta(s, a)
                ref = complex(mpmath.zeta(s, a))
                assert abs(ours - ref) <= 1e-12 * max(1.0, abs(ref)), (s, a)

    def test_vectorized_matches_scalar(self):
        s = 2.5 + 1.0j
        avals = np.array([0.1, 0.3, 0.5, 0.7, 1.0])
        vec = hurwitz_zeta(s, avals)
        for i, a in enumerate(avals):
            scalar = hurwitz_zeta(s, float(a))
            assert abs(vec[i] - scalar) <= 1e-14 * abs(scalar)

    def test_pole(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1.0, 0.5)
        with pytest.raises(PoleError):
            riemann_zeta(1.0)

    def test_minus_pole_is_stable_near_one(self):
        # zeta(s, a) - 1/(s-1) -> -psi(a) as s -> 1
        a = 0.25
        ref = -complex(mpmath.digamma(a))
        for eps in (1e-3, 1e-6, 1e-9, 0.0):
            s = 1.0 + eps
            val = hurwitz_zeta_minus_pole(s, a)
            assert abs(val - ref) < 1e-2 * max(abs(ref), 1) if eps == 1e-3 else True
        assert abs(hurwitz_zeta_minus_pole(1.0, a) - ref) < 1e-12

    def test_minus_pole_consistent_away_from_one(self):
        s = 3.0 + 2.0j
        a = 0.7
        assert abs(hurwitz_zeta_minus_pole(s, a) - (hurwitz_zeta(s, a) - 1.0 / (s - 1.0))) < 1e-13


class TestLegendre:
    def test_at_one(self):
        nu = 0.7 + 0.2j
        assert abs(legendre_P(nu, 1.0) - 1.0) < 1e-14

    def test_degree_one_is_identity(self):
        assert abs(legendre_P(1.0, 0.5j) - 0.5j) < 1e-13

    def test_degree_symmetry(self):
        s = 0.7 + 0.2j
        z = 0.3j
        assert abs(legendre_P(s - 1, z) - legendre_P(-s, z)) <= 1e-10

    def test_degree_symmetry_grid(self):
        for sr in (0.3, 0.7, 1.2):
            for si in (0.0, 0.4):
                for zi in (0.1, 0.5, 1.0):
                    s = complex(sr, si)
                    z = complex(0.0, zi)
                    lhs = legendre_P(s - 1, z)
                    rhs = legendre_P(-s, z)
                    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs)), (s, z)

    def test_against_mpmath(self):
        for nu in (0.4, 1.3 + 0.5j, -0.2 + 1.0j):
            for z in (0.9, 0.2 + 0.3j, 1.4):
                ours = legendre_P(nu, z)
                ref = complex(mpmath.legenp(nu, 0, z))
                assert abs(ours - ref) <= 1e-11 * max(1.0, abs(ref)), (nu, z)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            legendre_P(0.5, -1.5)


class TestThetaIntegral:
    def test_s_equal_one_gives_pi(self):
        for sign, u, t in ((1, 0.4, 1.0), (1, 0.0, 2.0), (-1, 0.9, 1.0)):
            spec = ThetaIntegralSpec(sign, u, t, 1.0)
            assert abs(theta_integral(spec) - math.pi) < 1e-12

    def test_u_zero_beta_identity(self):
        for s in (1.2, 1.7, 2.3, 1.4 + 0.3j):
            for t in (0.5, 1.0, 2.0):
                spec = ThetaIntegralSpec(1, 0.0, t, s)
                val = theta_integral(spec)
                expect = (
                    (t / 4.0) ** ((s - 1.0) / 2.0)
                    * math.sqrt(math.pi)
                    * gamma(s / 2.0)
                    / gamma((s + 1.0) / 2.0)
                )
                assert abs(val - expect) < 1e-10 * max(1.0, abs(expect)), (s, t)

    def test_plus_legendre_identity_grid(self):
        # 2u/sqrt(t) < sqrt(3) keeps the Legendre argument in the series domain
        for u in (0.1, 0.3, 0.7):
            for t in (0.5, 1.0, 2.0):
                if 2.0 * u / math.sqrt(t) >= math.sqrt(3.0):
                    continue
                for s in (1.2, 1.4, 1.7):
                    spec = ThetaIntegralSpec(1, u, t, s)
                    val = theta_integral(spec)
                    expect = theta_plus_closed_form(u, t, s)
                    assert abs(val - expect) <= 1e-8, (u, t, s, val, expect)

    def test_minus_legendre_identity_grid(self):
        # u > sqrt(t)/2 with 2u/sqrt(t) < sqrt(3) so the series applies
        for t in (0.5, 1.0, 2.0):
            for ratio in (1.1, 1.4, 1.7):
                u = 0.5 * math.sqrt(t) * ratio
                for s in (1.2, 1.4, 1.7):
                    spec = ThetaIntegralSpec(-1, u, t, s)
                    val = theta_integral(spec)
                    expect = theta_minus_closed_form(u, t, s)
                    assert abs(val - expect) <= 1e-8, (u, t, s)

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            ThetaIntegralSpec(-1, 0.4, 1.0, 1.5)  # u too small for minus branch
        with pytest.raises(DomainError):
            ThetaIntegralSpec(1, 0.4, -1.0, 1.5)
        with pytest.raises(DomainError):
            theta_integral(ThetaIntegralSpec(1, 0.4, 1.0, -0.5))
