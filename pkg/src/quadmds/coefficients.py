"""Arithmetic coefficients of the triple Dirichlet series.

The coefficient attached to (m, n, D) is

    c(m, n, D) = sum over d >= 1 with d | m, d | n, d^2 | |D| of
                 d * A(4m/d, D/d^2) * A(4n/d, D/d^2),

where A is the congruence count from :mod:`quadmds.arith`.  For D < 0 the
condition d^2 | |D| applies to the absolute value and D/d^2 keeps the sign.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .arith import count_sqrt_mod_bruteforce, sqrt_count
from .errors import DomainError, MemoryBudgetError

_BLOCK_D = 64  # D values per work block; fixed so output ignores worker count
_MEMORY_BUDGET_BYTES = 2 * 10**9


@dataclass(frozen=True)
class MdsCoefficient:
    m: int
    n: int
    D: int
    value: int


@dataclass(frozen=True)
class TableBounds:
    max_m: int
    max_n: int
    max_abs_d: int


@dataclass(frozen=True)
class CoefficientTable:
    """Nonzero coefficients within bounds, sorted by (|D|, m, n)."""

    bounds: TableBounds
    sign: int
    rows: tuple[MdsCoefficient, ...]


@dataclass(frozen=True)
class RegroupingReport:
    bounds: TableBounds
    sign: int
    checked: int
    passed: bool
    first_counterexample: tuple[int, int, int, int, int] | None  # (m,n,D,lhs,rhs)


def square_divisors(abs_d: int, limit: int) -> list[int]:
    """All d <= limit with d^2 | abs_d."""
    out = []
    d = 1
    while d * d <= abs_d and d <= limit:
        if abs_d % (d * d) == 0:
            out.append(d)
        d += 1
    return out


def mds_coefficient(m: int, n: int, D: int, count: Callable[[int, int], int] = sqrt_count) -> MdsCoefficient:
    """The (m, n, D) coefficient; `count` may be swapped for an oracle."""
    m, n, D = int(m), int(n), int(D)
    if m <= 0 or n <= 0:
        raise DomainError("m and n must be positive")
    if D == 0:
        raise DomainError("D must be nonzero")
    total = 0
    for d in square_divisors(abs(D), math.gcd(m, n)):
        if m % d or n % d:
            continue
        e = D // (d * d)
        a1 = count(4 * m // d, e)
        if a1 == 0:
            continue
        total += d * a1 * count(4 * n // d, e)
    return MdsCoefficient(m, n, D, total)


def _coefficient_block(
    d_values: list[int], max_m: int, max_n: int, count: Callable[[int, int], int]
) -> list[tuple[int, np.ndarray]]:
    """Dense (max_m, max_n) coefficient matrix for each D in the block."""
    out = []
    for D in d_values:
        mat = np.zeros((max_m, max_n), dtype=np.int64)
        for d in square_divisors(abs(D), min(max_m, max_n)):
            e = D // (d * d)
            am = np.array([count(4 * k, e) for k in range(1, max_m // d + 1)], dtype=np.int64)
            an = (
                am[: max_n // d]
                if max_n == max_m
                else np.array([count(4 * k, e) for k in range(1, max_n // d + 1)], dtype=np.int64)
            )
            mat[d - 1 :: d, d - 1 :: d][: len(am), : len(an)] += d * np.outer(am, an)
        out.append((D, mat))
    return out


def iter_coefficient_blocks(
    bounds: TableBounds,
    sign: int,
    count: Callable[[int, int], int] = sqrt_count,
    workers: int = 1,
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (D, dense coefficient matrix) in ascending |D| order.

    Blocks are computed in parallel but merged in ascending-block order, so
    the output stream is identical for any worker count.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    d_list = [sign * k for k in range(1, bounds.max_abs_d + 1)]
    blocks = [d_list[i : i + _BLOCK_D] for i in range(0, len(d_list), _BLOCK_D)]
    if workers <= 1:
        for block in blocks:
            yield from _coefficient_block(block, bounds.max_m, bounds.max_n, count)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_coefficient_block, block, bounds.max_m, bounds.max_n, count)
            for block in blocks
        ]
        for fut in futures:  # ascending-block merge
            yield from fut.result()


def coefficient_table(
    bounds: TableBounds,
    sign: int,
    count: Callable[[int, int], int] = sqrt_count,
    workers: int = 1,
    memory_budget: int = _MEMORY_BUDGET_BYTES,
) -> CoefficientTable:
    """All nonzero coefficients within bounds, deterministic row order."""
    for b in (bounds.max_m, bounds.max_n, bounds.max_abs_d):
        if not 1 <= b <= 10**6:
            raise DomainError("bounds must lie in 1..10^6")
    estimate = bounds.max_m * bounds.max_n * (bounds.max_abs_d * 72 // 100 + 1) // 4
    if estimate * 48 > memory_budget:
        raise MemoryBudgetError(
            f"estimated table of ~{estimate} rows exceeds the memory budget; "
            "reduce bounds or consume iter_coefficient_blocks incrementally"
        )
    rows = []
    for D, mat in iter_coefficient_blocks(bounds, sign, count, workers):
        mi, ni = np.nonzero(mat)
        for i, j in zip(mi.tolist(), ni.tolist()):
            rows.append(MdsCoefficient(i + 1, j + 1, D, int(mat[i, j])))
    return CoefficientTable(bounds, sign, tuple(rows))


def _brute_count(modulus: int, residue: int) -> int:
    return count_sqrt_mod_bruteforce(modulus, residue).count


def regrouping_identity_check(bounds: TableBounds, sign: int = 1) -> RegroupingReport:
    """Recompute every c(m, n, D) in bounds from scratch with the brute-force
    count and compare with the fast path; exact equality required."""
    checked = 0
    for k in range(1, bounds.max_abs_d + 1):
        D = sign * k
        for m in range(1, bounds.max_m + 1):
            for n in range(1, bounds.max_n + 1):
                lhs = mds_coefficient(m, n, D).value
                rhs = 0
                for d in range(1, math.gcd(m, n) + 1):
                    if m % d or n % d or k % (d * d):
                        continue
                    e = D // (d * d)
                    rhs += d * _brute_count(4 * m // d, e) * _brute_count(4 * n // d, e)
                checked += 1
                if lhs != rhs:
                    return RegroupingReport(bounds, sign, checked, False, (m, n, D, lhs, rhs))
    return RegroupingReport(bounds, sign, checked, True, None)


def tables_equal(t1: CoefficientTable, t2: CoefficientTable) -> bool:
    return t1.bounds == t2.bounds and t1.sign == t2.sign and t1.rows == t2.rows


@lru_cache(maxsize=None)
def _csv_header() -> str:
    return "m,n,D,c"


def table_to_csv(table: CoefficientTable) -> str:
    lines = [_csv_header()]
    lines.extend(f"{r.m},{r.n},{r.D},{r.value}" for r in table.rows)
    return "\n".join(lines) + "\n"


def table_to_jsonl(table: CoefficientTable) -> str:
    return "".join(
        f'{{"m": {r.m}, "n": {r.n}, "D": {r.D}, "c": {r.value}}}\n' for r in table.rows
    )
