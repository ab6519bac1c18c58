"""Bulk kernels for truncated inner Dirichlet sums.

For a fixed second argument E, the congruence counts A(4m, E) (or A(m, E))
are multiplicative in m, so the whole array of counts for m <= M is built
sieve-style: one pass over unramified odd primes (multiplier 2, 1 or 0 by
the quadratic character) and exact-power passes for the finitely many
primes dividing 2E.  Truncated sums then reduce to dot products against a
cached power table m^(-s).
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .arith import (
    count_sqrt_prime_power,
    factorize,
    fundamental_discriminant,
    kronecker_symbol,
    primes_up_to,
)
from .errors import DomainError


@njit(cache=True)
def _apply_unramified(counts, primes, chi):
    for i in range(primes.size):
        p = primes[i]
        c = chi[i]
        if c == 1:
            for j in range(p, counts.size, p):
                counts[j] *= 2
        elif c == -1:
            for j in range(p, counts.size, p):
                counts[j] = 0


@njit(cache=True)
def _apply_special(counts, p, table):
    # multiply position m by table[v_p(m)] (clamped to the last entry)
    h0 = table[0]
    if h0 != 1:
        for j in range(1, counts.size):
            if j % p != 0:
                counts[j] *= h0
    pe = p
    e = 1
    while pe < counts.size:
        h = table[e] if e < table.size else table[table.size - 1]
        step = pe * p
        for j in range(pe, counts.size, pe):
            if j % step != 0:
                counts[j] *= h
        pe *= p
        e += 1


@njit(cache=True)
def _dot_prefix(counts, pow_re, pow_im, k):
    # compensated (Kahan) accumulation of sum counts[j] * m^(-s) for j <= k
    sre = 0.0
    sim = 0.0
    cre = 0.0
    cim = 0.0
    for j in range(1, k + 1):
        c = counts[j]
        if c == 0:
            continue
        yre = c * pow_re[j] - cre
        yim = c * pow_im[j] - cim
        tre = sre + yre
        tim = sim + yim
        cre = (tre - sre) - yre
        cim = (tim - sim) - yim
        sre = tre
        sim = tim
    return sre, sim


def _character_data(E: int, variant: str):
    """Fundamental discriminant for the character and the special primes."""
    if variant == "4m":
        if E % 4 not in (0, 1):
            raise DomainError("variant 4m needs E = 0 or 1 mod 4")
        base = E
    elif variant == "m":
        base = E if E % 4 in (0, 1) else 4 * E
    else:
        raise DomainError(f"unknown variant {variant!r}")
    dec = fundamental_discriminant(base)
    specials = [2]
    for p, _ in factorize(abs(E)):
        if p != 2:
            specials.append(p)
    return dec.fundamental, sorted(specials)


def local_count(p: int, e: int, E: int, variant: str) -> int:
    """The exact-power local count feeding the sieve and the Euler fits."""
    if p == 2 and variant == "4m":
        return count_sqrt_prime_power(2, e + 2, E)
    return count_sqrt_prime_power(p, e, E)


def _special_table(p: int, E: int, variant: str, length: int) -> np.ndarray:
    return np.array(
        [local_count(p, e, E, variant) for e in range(length)], dtype=np.int64
    )


def counts_array(E: int, M: int, variant: str = "4m") -> np.ndarray:
    """int64 array a with a[m] = A(4m, E) (variant '4m') or A(m, E), m <= M."""
    E = int(E)
    if E == 0:
        raise DomainError("E must be nonzero")
    if variant == "4m" and E % 4 not in (0, 1):
        return np.zeros(M + 1, dtype=np.int64)
    d0, specials = _character_data(E, variant)
    q = abs(d0)
    chi_table = np.array([kronecker_symbol(d0, r) for r in range(q)], dtype=np.int8)
    primes = primes_up_to(M)
    chi = chi_table[(primes % q).astype(np.int64)]
    special_set = set(specials)
    for i, p in enumerate(primes):
        if int(p) in special_set:
            chi[i] = 0  # handled by the exact-power pass
    counts = np.ones(M + 1, dtype=np.int64)
    counts[0] = 0
    _apply_unramified(counts, primes, chi)
    for p in specials:
        if p > M:
            # no multiple of p below M; only the exponent-0 factor acts
            h0 = local_count(p, 0, E, variant)
            if h0 != 1:
                counts[1:] *= h0
            continue
        v = 0
        ae = abs(E)
        while ae % p == 0:
            ae //= p
            v += 1
        # counts stabilize past the p-valuation of E; v + 4 entries suffice
        table = _special_table(p, E, variant, v + 4)
        _apply_special(counts, p, table)
    return counts


def truncated_sum(counts: np.ndarray, s: complex, k: int | None = None) -> complex:
    """sum_{m <= k} counts[m] * m^(-s) with compensated accumulation."""
    M = counts.size - 1
    if k is None:
        k = M
    if k > M:
        raise DomainError("prefix length exceeds the counts array")
    pow_re, pow_im = _power_table(complex(s), M)
    re, im = _dot_prefix(counts, pow_re, pow_im, int(k))
    return complex(re, im)


_LOG_CACHE: dict[int, np.ndarray] = {}
_POW_CACHE: dict[tuple[complex, int], tuple[np.ndarray, np.ndarray]] = {}
_POW_CACHE_LIMIT = 4


def _log_table(M: int) -> np.ndarray:
    for size in list(_LOG_CACHE):
        if size >= M:
            return _LOG_CACHE[size][: M + 1]
    _LOG_CACHE.clear()
    arr = np.zeros(M + 1, dtype=np.float64)
    arr[1:] = np.log(np.arange(1, M + 1, dtype=np.float64))
    _LOG_CACHE[M] = arr
    return arr


def _power_table(s: complex, M: int):
    key = (s, M)
    hit = _POW_CACHE.get(key)
    if hit is not None:
        return hit
    logs = _log_table(M)
    z = np.exp(-s * logs)
    z[0] = 0.0
    pair = (np.ascontiguousarray(z.real), np.ascontiguousarray(z.imag))
    if len(_POW_CACHE) >= _POW_CACHE_LIMIT:
        _POW_CACHE.pop(next(iter(_POW_CACHE)))
    _POW_CACHE[key] = pair
    return pair


def clear_power_cache() -> None:
    _POW_CACHE.clear()
    _LOG_CACHE.clear()
