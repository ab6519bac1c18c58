"""Exact integer arithmetic: factorization, quadratic characters, and the
congruence count A(m, n) = #{x mod m : x^2 = n (mod m)}.

A fast multiplicative implementation (Hensel lifting per odd prime power,
a case table at 2) is paired with a brute-force residue-scan oracle; the
two are required to agree exactly on dense ranges.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import DomainError, InconsistencyError, OracleBoundError

SIEVE_MAGIC = b"MDSSPF01"
DEFAULT_SIEVE_BOUND = 10_000_000
DEFAULT_ORACLE_BOUND = 1_000_000
_TRIAL_BOUND = 1_000_000
_MAX_INPUT = 2**63  # inputs beyond 64 bits are rejected

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class PrimeFactorization:
    """Sorted (prime, exponent) pairs; the empty tuple encodes 1."""

    pairs: tuple[tuple[int, int], ...]

    def n(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class CongruenceCount:
    """The value A(m, n): solutions of x^2 = n (mod m) in 0..m-1."""

    modulus: int
    residue: int
    count: int


@dataclass(frozen=True)
class DiscriminantDecomposition:
    """D = D0 * f^2 with D0 a fundamental discriminant (or 1 for squares)."""

    discriminant: int
    fundamental: int
    conductor: int


# ---------------------------------------------------------------------------
# smallest-prime-factor sieve, persisted to the cache directory


def cache_dir() -> Path:
    env = os.environ.get("MDS_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "quadmds"


def _build_spf(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.uint32)
    for i in range(2, int(limit**0.5) + 1):
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[0] = 0
    if limit >= 1:
        spf[1] = 1
    return spf


def _sieve_path(directory: Path) -> Path:
    return directory / "spf.sieve"


def save_sieve(spf: np.ndarray, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "wb") as fh:
        fh.write(SIEVE_MAGIC)
        fh.write(struct.pack("<Q", len(spf)))
        fh.write(np.ascontiguousarray(spf, dtype="<u4").tobytes())
    os.replace(tmp, path)


def load_sieve(path: Path) -> np.ndarray | None:
    try:
        with open(path, "rb") as fh:
            magic = fh.read(8)
            if magic != SIEVE_MAGIC:
                return None
            (n,) = struct.unpack("<Q", fh.read(8))
            data = np.frombuffer(fh.read(4 * n), dtype="<u4")
            if len(data) != n:
                return None
            return data.astype(np.uint32, copy=False)
    except OSError:
        return None


class _SieveState:
    def __init__(self):
        self.spf: np.ndarray | None = None
        self.bound = DEFAULT_SIEVE_BOUND

    def get(self, need: int = 0) -> np.ndarray:
        want = max(self.bound, need)
        if self.spf is not None and len(self.spf) > want:
            return self.spf
        path = _sieve_path(cache_dir())
        cached = load_sieve(path)
        if cached is not None and len(cached) > want:
            self.spf = cached
            return self.spf
        self.spf = _build_spf(want)
        try:
            save_sieve(self.spf, path)
        except OSError:
            pass  # cache is an optimization, never a requirement
        return self.spf


_STATE = _SieveState()


def configure_sieve(bound: int) -> None:
    """Set the persisted sieve bound (default 10^7) for this process."""
    _STATE.bound = int(bound)
    _STATE.spf = None


def smallest_prime_factors(limit: int) -> np.ndarray:
    """The spf array for 0..limit (spf[0]=0, spf[1]=1), sieved and cached."""
    return _STATE.get(limit)


_PRIME_LIST: dict[str, np.ndarray] = {}


def primes_up_to(limit: int) -> np.ndarray:
    cached = _PRIME_LIST.get("primes")
    if cached is not None and cached[-1] >= limit:
        cut = int(np.searchsorted(cached, limit, side="right"))
        return cached[:cut]
    spf = _STATE.get(limit)
    idx = np.arange(len(spf), dtype=np.uint32)
    mask = (spf == idx) & (idx >= 2)
    primes = np.flatnonzero(mask).astype(np.int64)
    primes.setflags(write=False)
    _PRIME_LIST["primes"] = primes
    cut = int(np.searchsorted(primes, limit, side="right"))
    return primes[:cut]


# ---------------------------------------------------------------------------
# primality and factorization


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2^64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    # deterministic parameter sweep; n is odd, composite, not a prime power
    if n % 2 == 0:
        return 2
    import math

    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise InconsistencyError(f"rho failed to split {n}")


def _factor_large(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_large(d, out)
    _factor_large(n // d, out)


def factorize(n: int) -> PrimeFactorization:
    """Exact prime factorization of n >= 1; factorize(1) is empty."""
    if not isinstance(n, (int, np.integer)):
        raise DomainError(f"factorize expects an integer, got {type(n)!r}")
    n = int(n)
    if n <= 0:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    if n >= _MAX_INPUT:
        raise DomainError("inputs beyond 64 bits are rejected")
    if n == 1:
        return PrimeFactorization(())
    spf = _STATE.get()
    pairs: dict[int, int] = {}
    if n < len(spf):
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs[p] = e
    else:
        for p in (2, 3, 5):
            while n % p == 0:
                n //= p
                pairs[p] = pairs.get(p, 0) + 1
        p = 7
        wheel = (4, 2, 4, 2, 4, 6, 2, 6)
        i = 0
        while p * p <= n and p <= _TRIAL_BOUND:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                pairs[p] = e
            p += wheel[i]
            i = (i + 1) % 8
        if n > 1:
            _factor_large(n, pairs)
    return PrimeFactorization(tuple(sorted(pairs.items())))


# ---------------------------------------------------------------------------
# Kronecker symbol and fundamental discriminants


def kronecker_symbol(a: int, n: int) -> int:
    """The Kronecker symbol (a|n), completely multiplicative in n."""
    a, n = int(a), int(n)
    if a == 0 and n == 0:
        raise DomainError("kronecker_symbol(0, 0) is undefined")
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_fundamental_discriminant(d: int) -> bool:
    if d == 1:
        return True
    if d == 0:
        return False
    if d % 4 == 1:
        return _is_squarefree(abs(d))
    if d % 4 == 0:
        k = d // 4
        return k % 4 in (2, 3) and _is_squarefree(abs(k))
    return False


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def fundamental_discriminant(d: int) -> DiscriminantDecomposition:
    """Split d = D0 * f^2 with D0 fundamental; d must be 0 or 1 mod 4."""
    d = int(d)
    if d == 0:
        raise DomainError("0 is not a discriminant")
    if d % 4 not in (0, 1):
        raise DomainError(f"{d} is not a discriminant (need d = 0 or 1 mod 4)")
    sign = 1 if d > 0 else -1
    f = 1
    kernel = 1
    for p, e in factorize(abs(d)):
        f *= p ** (e // 2)
        if e % 2:
            kernel *= p
    d0 = sign * kernel
    if d0 % 4 != 1:
        d0 *= 4
        if f % 2:
            raise InconsistencyError(f"square decomposition failed for {d}")
        f //= 2
    return DiscriminantDecomposition(d, d0, f)


# ---------------------------------------------------------------------------
# the congruence count A(m, n)


def _count_pp_odd(p: int, e: int, n: int) -> int:
    pe = p**e
    r = n % pe
    if r == 0:
        return p ** (e // 2)
    a = 0
    while r % p == 0:
        r //= p
        a += 1
    if a % 2:
        return 0
    if pow(r, (p - 1) // 2, p) != 1:
        return 0
    return 2 * p ** (a // 2)


def _count_pp_two(e: int, n: int) -> int:
    pe = 1 << e
    r = n % pe
    if r == 0:
        return 1 << (e // 2)
    a = 0
    while r % 2 == 0:
        r //= 2
        a += 1
    if a % 2:
        return 0
    k = e - a
    if k == 1:
        s = 1
    elif k == 2:
        s = 2 if r % 4 == 1 else 0
    else:
        s = 4 if r % 8 == 1 else 0
    return s << (a // 2)


def count_sqrt_prime_power(p: int, e: int, n: int) -> int:
    """A(p^e, n) for a single prime power (e >= 0)."""
    if e == 0:
        return 1
    if p == 2:
        return _count_pp_two(e, n)
    return _count_pp_odd(p, e, n)


def sqrt_count(m: int, n: int) -> int:
    """A(m, n) as a bare integer (hot-path form of count_sqrt_mod)."""
    m = int(m)
    if m <= 0:
        raise DomainError(f"modulus must be positive, got {m}")
    if m >= _MAX_INPUT:
        raise DomainError("inputs beyond 64 bits are rejected")
    n = int(n) % m
    out = 1
    for p, e in factorize(m):
        local = count_sqrt_prime_power(p, e, n)
        if local == 0:
            return 0
        out *= local
    return out


def count_sqrt_mod(m: int, n: int) -> CongruenceCount:
    """A(m, n) computed per prime power of m and combined by CRT."""
    return CongruenceCount(int(m), int(n), sqrt_count(m, n))


@lru_cache(maxsize=4096)
def _square_residue_table(m: int) -> np.ndarray:
    x = np.arange(m, dtype=np.int64)
    return np.bincount((x * x) % m, minlength=m)


def count_sqrt_mod_bruteforce(
    m: int, n: int, oracle_bound: int = DEFAULT_ORACLE_BOUND
) -> CongruenceCount:
    """A(m, n) by direct scan of all residues.  Refuses m above the bound."""
    m = int(m)
    if m <= 0:
        raise DomainError(f"modulus must be positive, got {m}")
    if m > oracle_bound:
        raise OracleBoundError(
            f"brute-force oracle refuses m={m} > bound {oracle_bound}"
        )
    return CongruenceCount(m, int(n), int(_square_residue_table(m)[int(n) % m]))
