"""Numerical evaluation of the triple series xi_+/-(s1, s2, w), the double
series xi_i and xi_i^*, completion factors, and functional-equation residual
checks.

Two evaluation routes exist for the triple series:

direct    the truncated triple sum over the coefficient box m, n <= M,
          |D| <= N, organized through the exact finite-box regrouping
          sum_d d^(1-s1-s2) S_{M/d}(D/d^2, s1) S_{M/d}(D/d^2, s2)
          (an identity for the box sum, verified separately against the
          brute-force oracle and a literal triple loop); rigorous tails.

factored  zeta(2w+s1+s2-1) * sum_E |E|^(-w) B(E,s1) B(E,s2) with B from
          the Euler closed form, valid by continuation for Re(s_i) < 1;
          heuristic tails.

Their agreement at common points is the standing cross-method invariant.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import lseries
from .coefficients import square_divisors
from .errors import ConditioningError, DomainError, PreconditionError
from .specialfn import gamma, riemann_zeta
from .weyl import SpectralPoint, generators

_EPS_DENOM = 1e-300
_BLOCK = 64
FE_W_ANCHOR = 6.0  # default Re(w) placing both members of a reflected pair
                   # inside the reach of the factored evaluation


@dataclass(frozen=True)
class TruncationPolicy:
    """Outer bound (|D|, |E| or n), inner bound (direct m, n), target
    tolerance, and whether tails must be rigorous."""

    max_outer: int = 400
    max_inner: int = 200_000
    tolerance: float = 1e-6
    tail_mode: str = "heuristic"  # 'rigorous' | 'heuristic'
    workers: int = 1

    def __post_init__(self):
        if self.max_outer < 1 or self.max_inner < 1:
            raise DomainError("policy bounds must be positive")
        if self.tolerance <= 0:
            raise DomainError("tolerance must be positive")
        if self.tail_mode not in ("rigorous", "heuristic"):
            raise DomainError("tail_mode must be 'rigorous' or 'heuristic'")
        if self.workers < 1:
            raise DomainError("worker count must be >= 1")


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    reported_error: float
    mode: str  # 'rigorous' | 'heuristic'
    method: str
    policy: TruncationPolicy


@dataclass(frozen=True)
class FeResidualReport:
    point: tuple[complex, ...]
    reflected: tuple[complex, ...]
    value: complex
    reflected_value: complex
    residual: float
    tolerance: float
    passed: bool
    error_mode: str
    error_bound: float
    note: str = ""
    mixed: dict | None = None

    def to_json_dict(self) -> dict:
        out = {
            "point": [[z.real, z.imag] for z in self.point],
            "reflected": [[z.real, z.imag] for z in self.reflected],
            "value": [self.value.real, self.value.imag],
            "reflected_value": [self.reflected_value.real, self.reflected_value.imag],
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "error_mode": self.error_mode,
            "error_bound": self.error_bound,
        }
        if self.note:
            out["note"] = self.note
        if self.mixed is not None:
            out["mixed"] = self.mixed
        return out


# ---------------------------------------------------------------------------
# compensated, deterministically blocked summation


def neumaier_sum(terms: Iterable[complex]) -> complex:
    sre = sim = cre = cim = 0.0
    for t in terms:
        tre, tim = t.real, t.imag
        new = sre + tre
        if abs(sre) >= abs(tre):
            cre += (sre - new) + tre
        else:
            cre += (tre - new) + sre
        sre = new
        new = sim + tim
        if abs(sim) >= abs(tim):
            cim += (sim - new) + tim
        else:
            cim += (tim - new) + sim
        sim = new
    return complex(sre + cre, sim + cim)


def blocked_sum(
    indices: list, term: Callable, workers: int = 1
) -> complex:
    """Sum term(i) over indices with fixed-size blocks; block partials are
    compensated and reduced in ascending order, so the result is identical
    for every worker count."""
    blocks = [indices[k : k + _BLOCK] for k in range(0, len(indices), _BLOCK)]

    def block_value(block):
        return neumaier_sum(term(i) for i in block)

    if workers <= 1 or len(blocks) <= 1:
        partials = [block_value(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(block_value, blocks))
    return neumaier_sum(partials)


# ---------------------------------------------------------------------------
# completion factors


def completion_factor(s: complex, kind: str) -> complex:
    """(2 pi)^(-s) Gamma(s) zeta(2s), with an extra 1/sin(pi s/2) for the
    plus kind.  Raises near the poles and zeros of the apparatus."""
    s = complex(s)
    if kind not in ("plus", "minus"):
        raise DomainError("kind must be 'plus' or 'minus'")
    if abs(2.0 * s - 1.0) < 2e-6:
        raise ConditioningError("zeta(2s) pole at s = 1/2")
    if s.imag == 0.0 and abs(s.real - round(s.real)) < 1e-6:
        n = round(s.real)
        if n <= 0:
            raise ConditioningError(f"gamma pole at s = {n}")
        if kind == "plus" and n % 2 == 0:
            raise ConditioningError(f"sine zero at s = {n}")
    zeta2s = riemann_zeta(2.0 * s)
    if abs(zeta2s) < 1e-6:
        raise ConditioningError("zeta(2s) too close to a zero")
    value = (2.0 * math.pi) ** (-s) * gamma(s) * zeta2s
    if kind == "plus":
        sine = cmath.sin(math.pi * s / 2.0)
        if abs(sine) < 1e-6:
            raise ConditioningError("sin(pi s/2) too close to zero")
        value /= sine
    return value


def completed_prefactor(s1: complex, s2: complex, sign: int) -> complex:
    kind = "plus" if sign > 0 else "minus"
    return completion_factor(s1, kind) * completion_factor(s2, kind)


# ---------------------------------------------------------------------------
# the triple series


def _coerce_point(p: SpectralPoint) -> tuple[complex, complex, complex]:
    return complex(p.s1), complex(p.s2), complex(p.w)


def _outer_values(sign: int, bound: int) -> list[int]:
    # only residues 0, 1 mod 4 can carry nonzero coefficients
    vals = [sign * k for k in range(1, bound + 1)]
    return [d for d in vals if d % 4 in (0, 1)]


def _eval_xi_direct(sign, s1, s2, w, policy: TruncationPolicy) -> SeriesValue:
    if s1.real <= 1.0 or s2.real <= 1.0 or w.real <= 3.0:
        raise PreconditionError(
            "direct triple sum needs Re(s1) > 1, Re(s2) > 1, Re(w) > 3"
        )
    M, N = policy.max_inner, policy.max_outer
    sig1, sig2, sigw = s1.real, s2.real, w.real

    def inner_trunc(E, s, K):
        counts = lseries._counts_cached(E, M, "4m")
        from ._fastseries import truncated_sum

        return truncated_sum(counts, s, K)

    def inner_tail(E, K, sigma):
        if K >= 2:
            return lseries.direct_tail_bound(E, K, sigma)
        zz = float(riemann_zeta(sigma).real)
        return 8.0 * math.sqrt(abs(E)) * zz * zz

    err_inner = 0.0

    def term(D):
        nonlocal err_inner
        total = 0j
        local_err = 0.0
        weight = abs(D) ** (-w)
        for d in square_divisors(abs(D), M):
            E = D // (d * d)
            if E % 4 not in (0, 1):
                continue
            K = M // d
            v1 = inner_trunc(E, s1, K)
            v2 = inner_trunc(E, s2, K)
            scale = d ** (1.0 - s1 - s2)
            total += scale * v1 * v2
            b1 = inner_tail(E, K, sig1)
            b2 = inner_tail(E, K, sig2)
            local_err += abs(scale) * (b1 * abs(v2) + abs(v1) * b2 + b1 * b2)
        err_inner += abs(weight) * local_err
        return weight * total

    outer = _outer_values(sign, N)
    value = blocked_sum(outer, term, policy.workers)

    # outer tail: per-D coefficient mass is at most sigma_1(D) * 64 D
    #   * zeta(sig1)^2 zeta(sig2)^2, and sigma_1(D) <= D (1 + ln D)
    z1 = float(riemann_zeta(sig1).real)
    z2 = float(riemann_zeta(sig2).real)
    if sigw <= 3.0:
        raise PreconditionError("outer tail requires Re(w) > 3")
    a = sigw - 3.0
    tail_outer = (
        64.0 * z1 * z1 * z2 * z2
        * N ** (-a) * ((1.0 + math.log(N)) / a + 1.0 / (a * a))
    )
    return SeriesValue(
        value, err_inner + tail_outer, "rigorous", "direct", policy
    )


def _eval_xi_factored(sign, s1, s2, w, policy: TruncationPolicy) -> SeriesValue:
    zeta_arg = 2.0 * w + s1 + s2 - 1.0
    if zeta_arg.real <= 1.0:
        raise PreconditionError("factored route needs Re(2w + s1 + s2 - 1) > 1")
    mu1 = lseries.growth_exponent(s1)
    mu2 = lseries.growth_exponent(s2)
    decay = w.real - mu1 - mu2
    if decay <= 1.0:
        raise PreconditionError("outer sum needs Re(w) > mu(s1) + mu(s2) + 1")
    N = policy.max_outer
    ratios = [0.0, 0.0]

    def term(E):
        b1 = lseries.inner_value_euler(E, s1)
        b2 = lseries.inner_value_euler(E, s2)
        aE = abs(E)
        ratios[0] = max(ratios[0], abs(b1) / aE**mu1)
        ratios[1] = max(ratios[1], abs(b2) / aE**mu2)
        return aE ** (-w) * b1 * b2

    outer = _outer_values(sign, N)
    total = blocked_sum(outer, term, workers=1)  # lru caches favor one thread
    prefactor = riemann_zeta(zeta_arg)
    value = prefactor * total
    # heuristic tail calibrated on the computed range (growth-bound open
    # question): |B(E,s)| <= 2 ratio |E|^mu on |E| > N
    c1, c2 = 2.0 * ratios[0], 2.0 * ratios[1]
    tail = c1 * c2 * N ** (1.0 - decay) / (decay - 1.0)
    rounding = 1e-12 * (1.0 + abs(value))
    err = abs(prefactor) * tail + rounding
    if policy.tail_mode == "rigorous":
        raise PreconditionError(
            "factored route cannot certify rigorous tails (euler bounds are heuristic)"
        )
    return SeriesValue(value, err, "heuristic", "factored", policy)


def eval_xi(
    sign: int,
    point: SpectralPoint,
    method: str = "factored",
    policy: TruncationPolicy | None = None,
) -> SeriesValue:
    """The triple series at `point` for D > 0 (sign +1) or D < 0 (sign -1)."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    policy = policy or TruncationPolicy()
    s1, s2, w = _coerce_point(point)
    if method == "direct":
        return _eval_xi_direct(sign, s1, s2, w, policy)
    if method == "factored":
        return _eval_xi_factored(sign, s1, s2, w, policy)
    raise DomainError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# the double series


def eval_double_series(
    i: int,
    s: complex,
    w: complex,
    starred: bool = False,
    method: str = "accelerated",
    policy: TruncationPolicy | None = None,
) -> SeriesValue:
    """xi_i(s, w) = 1/2 sum_n B((-1)^(i-1) n, s) n^(-w) and the starred
    variant sum_n B*((-1)^(i-1) n, s) (4n)^(-w)."""
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    policy = policy or TruncationPolicy()
    s, w = complex(s), complex(w)
    sign = 1 if i == 1 else -1
    variant = "m" if starred else "4m"
    N = policy.max_outer

    if method == "accelerated":
        mu = lseries.growth_exponent(s)
        decay = w.real - mu
        if decay <= 1.0:
            raise PreconditionError("accelerated n-sum needs Re(w) > mu(s) + 1")
        ratio = [0.0]

        def term(n):
            E = sign * n
            if variant == "4m" and E % 4 not in (0, 1):
                return 0j
            b = lseries.inner_value_euler(E, s, variant)
            ratio[0] = max(ratio[0], abs(b) / n**mu)
            return b * n ** (-w)

        total = blocked_sum(list(range(1, N + 1)), term, workers=1)
        tail = 2.0 * ratio[0] * N ** (1.0 - decay) / (decay - 1.0)
        err = tail + 1e-12 * (1.0 + abs(total))
        if not starred:
            return SeriesValue(0.5 * total, 0.5 * err, "heuristic", method, policy)
        scale = 4.0 ** (-w)
        return SeriesValue(
            scale * total, abs(scale) * err, "heuristic", method, policy
        )

    if method == "direct":
        if s.real <= 1.0 or w.real <= 1.0:
            raise PreconditionError("direct region is Re(s) > 1, Re(w) > 1")
        M = policy.max_inner
        err_inner = [0.0]

        def term(n):
            E = sign * n
            if variant == "4m" and E % 4 not in (0, 1):
                return 0j
            value, bound = lseries.inner_value_direct(E, s, variant, M)
            err_inner[0] += bound * n ** (-w.real)
            return value * n ** (-w)

        total = blocked_sum(list(range(1, N + 1)), term, workers=1)
        # outer tail, rigorous: |B(E, s)| <= 8 sqrt(|E|) zeta(sigma)^2
        zz = float(riemann_zeta(s.real).real) ** 2
        if w.real - 0.5 <= 1.0:
            raise PreconditionError("rigorous outer tail needs Re(w) > 3/2")
        a = w.real - 0.5 - 1.0
        tail = 8.0 * zz * N ** (-a) / a
        err = err_inner[0] + tail
        if not starred:
            return SeriesValue(0.5 * total, 0.5 * err, "rigorous", method, policy)
        scale = 4.0 ** (-w)
        return SeriesValue(scale * total, abs(scale) * err, "rigorous", method, policy)

    raise DomainError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# functional-equation residuals


def _residual(v1: complex, v2: complex) -> float:
    return abs(v1 - v2) / max(abs(v1), abs(v2), _EPS_DENOM)


def _points_equal(p: tuple, q: tuple) -> bool:
    return all(abs(a - b) < 1e-14 * max(1.0, abs(a)) for a, b in zip(p, q))


def check_fe_s(
    i: int,
    sign: int,
    point: SpectralPoint,
    policy: TruncationPolicy | None = None,
) -> FeResidualReport:
    """Residual of the completed triple series under the involution in
    (s_i, w); plus-kind factors for the positive series, minus-kind for the
    negative one, in both s-variables."""
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    policy = policy or TruncationPolicy(tolerance=1e-5)
    sigma = generators()[i - 1]
    reflected = sigma(point)
    p = _coerce_point(point)
    q = _coerce_point(reflected)
    if _points_equal(p, q):
        return FeResidualReport(
            p, q, 0j, 0j, 0.0, policy.tolerance, True, "exact",
            0.0, note="fixed point of the involution",
        )

    def completed(pt):
        s1, s2, w = pt
        xi = eval_xi(sign, SpectralPoint(s1, s2, w), "factored", policy)
        return completed_prefactor(s1, s2, sign) * xi.value, xi.reported_error

    v1, e1 = completed(p)
    v2, e2 = completed(q)
    res = _residual(v1, v2)
    passed = res <= policy.tolerance
    mixed = None
    if not passed:
        mixed = _mixed_combination_residuals(p, q, policy)
    return FeResidualReport(
        p, q, v1, v2, res, policy.tolerance, passed, "heuristic",
        e1 + e2, mixed=mixed,
        note="" if passed else "component-wise residual above tolerance; "
        "mixed combinations reported",
    )


def _mixed_combination_residuals(p, q, policy) -> dict:
    """Residuals of the 2x2 sign-mixed combinations, reported when a
    component-wise check fails beyond tolerance."""
    out = {}
    vals = {}
    for tag, sgn in (("plus", 1), ("minus", -1)):
        for where, pt in (("point", p), ("reflected", q)):
            s1, s2, w = pt
            xi = eval_xi(sgn, SpectralPoint(s1, s2, w), "factored", policy)
            vals[(tag, where)] = completed_prefactor(s1, s2, sgn) * xi.value
    for a, b in ((1, 1), (1, -1)):
        lhs = vals[("plus", "point")] + a * vals[("minus", "point")]
        rhs = vals[("plus", "reflected")] + b * vals[("minus", "reflected")]
        out[f"plus{'+' if a > 0 else '-'}minus vs plus{'+' if b > 0 else '-'}minus"] = _residual(lhs, rhs)
    out["cross plus->minus"] = _residual(
        vals[("plus", "point")], vals[("minus", "reflected")]
    )
    out["cross minus->plus"] = _residual(
        vals[("minus", "point")], vals[("plus", "reflected")]
    )
    return out


def check_fe_shintani(
    i: int,
    s: complex,
    w: complex,
    policy: TruncationPolicy | None = None,
) -> FeResidualReport:
    """Residual of the completed double series between (s, w) and
    (1 - s, s + w - 1/2): plus-kind completion for the first series,
    minus-kind for the second."""
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    policy = policy or TruncationPolicy(max_outer=3000, tolerance=1e-6)
    s, w = complex(s), complex(w)
    kind = "plus" if i == 1 else "minus"
    refl = (1.0 - s, s + w - 0.5)
    if _points_equal((s, w), refl):
        return FeResidualReport(
            (s, w), refl, 0j, 0j, 0.0, policy.tolerance, True, "exact",
            0.0, note="fixed point of the involution",
        )

    def completed(sv, wv):
        series = eval_double_series(i, sv, wv, method="accelerated", policy=policy)
        return completion_factor(sv, kind) * series.value, series.reported_error

    v1, e1 = completed(s, w)
    v2, e2 = completed(*refl)
    res = _residual(v1, v2)
    passed = res <= policy.tolerance
    return FeResidualReport(
        (s, w), refl, v1, v2, res, policy.tolerance, passed,
        "heuristic", e1 + e2,
        note="" if passed else "completed double-series residual above tolerance",
    )
