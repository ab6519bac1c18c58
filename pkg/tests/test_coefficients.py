import numpy as np
import pytest

from quadmds.arith import count_sqrt_mod_bruteforce
from quadmds.coefficients import (
    CoefficientTable,
    TableBounds,
    coefficient_table,
    iter_coefficient_blocks,
    mds_coefficient,
    regrouping_identity_check,
    square_divisors,
    table_to_csv,
    table_to_jsonl,
    tables_equal,
)
from quadmds.errors import DomainError, MemoryBudgetError


def brute(modulus, residue):
    return count_sqrt_mod_bruteforce(modulus, residue).count


class TestMdsCoefficient:
    def test_spot_values(self):
        assert mds_coefficient(1, 1, 1).value == 4
        assert mds_coefficient(2, 2, 4).value == 12
        assert mds_coefficient(1, 1, 2).value == 0

    def test_negative_d(self):
        # d^2 | |D| with D/d^2 keeping the sign
        assert mds_coefficient(1, 1, -4).value == 4
        assert mds_coefficient(2, 2, -4).value == brute(8, -4) ** 2 + 2 * brute(4, -1) ** 2

    def test_symmetry(self):
        for D in (1, 4, 5, -4, -16, 45, -100):
            for m in range(1, 11):
                for n in range(1, 11):
                    assert mds_coefficient(m, n, D).value == mds_coefficient(n, m, D).value

    def test_vanishing_bad_discriminants(self):
        for D in (2, 3, -2, -1, 6, 7, -5, -6):
            if D % 4 in (0, 1):
                continue
            for m in range(1, 8):
                assert mds_coefficient(m, m, D).value == 0

    def test_divisor_free_case(self):
        # gcd(m, n) = 1 or |D| squarefree: single d = 1 term
        cases = [(2, 3, 12), (4, 9, 16), (5, 7, -4)]
        cases += [(6, 9, 21), (4, 6, -15), (10, 15, 5)]
        for m, n, D in cases:
            expect = brute(4 * m, D) * brute(4 * n, D)
            assert mds_coefficient(m, n, D).value == expect, (m, n, D)

    def test_domain(self):
        with pytest.raises(DomainError):
            mds_coefficient(0, 1, 1)
        with pytest.raises(DomainError):
            mds_coefficient(1, 1, 0)


class TestSquareDivisors:
    def test_basic(self):
        assert square_divisors(1, 10) == [1]
        assert square_divisors(4, 10) == [1, 2]
        assert square_divisors(36, 10) == [1, 2, 3, 6]
        assert square_divisors(36, 2) == [1, 2]


class TestTables:
    def test_minimal_table(self):
        t = coefficient_table(TableBounds(1, 1, 1), sign=1)
        assert len(t.rows) == 1
        r = t.rows[0]
        assert (r.m, r.n, r.D, r.value) == (1, 1, 1, 4)

    def test_bad_residues_absent(self):
        t = coefficient_table(TableBounds(2, 2, 3), sign=1)
        assert all(r.D % 4 in (0, 1) for r in t.rows)

    def test_negative_sign_includes_minus_four(self):
        t = coefficient_table(TableBounds(3, 3, 8), sign=-1)
        row = [r for r in t.rows if (r.m, r.n, r.D) == (1, 1, -4)]
        assert len(row) == 1 and row[0].value == 4

    def test_row_order_and_completeness(self):
        bounds = TableBounds(6, 6, 40)
        t = coefficient_table(bounds, sign=1)
        keys = [(abs(r.D), r.m, r.n) for r in t.rows]
        assert keys == sorted(keys)
        assert all(r.value > 0 for r in t.rows)
        by_key = {(r.m, r.n, r.D): r.value for r in t.rows}
        for D in range(1, 41):
            for m in range(1, 7):
                for n in range(1, 7):
                    c = mds_coefficient(m, n, D).value
                    assert by_key.get((m, n, D), 0) == c

    def test_worker_count_invariance(self):
        bounds = TableBounds(8, 8, 60)
        t1 = coefficient_table(bounds, sign=1, workers=1)
        t4 = coefficient_table(bounds, sign=1, workers=4)
        assert tables_equal(t1, t4)
        assert table_to_csv(t1) == table_to_csv(t4)

    def test_blocks_match_oracle_small(self):
        bounds = TableBounds(10, 10, 30)
        fast = list(iter_coefficient_blocks(bounds, 1))
        slow = list(iter_coefficient_blocks(bounds, 1, count=brute))
        assert len(fast) == len(slow)
        for (d1, m1), (d2, m2) in zip(fast, slow):
            assert d1 == d2
            assert np.array_equal(m1, m2)

    def test_memory_refusal(self):
        with pytest.raises(MemoryBudgetError):
            coefficient_table(TableBounds(10**4, 10**4, 10**4), sign=1)

    def test_serialization(self):
        t = coefficient_table(TableBounds(2, 2, 5), sign=1)
        csv = table_to_csv(t)
        assert csv.startswith("m,n,D,c\n")
        assert csv.count("\n") == len(t.rows) + 1
        jsonl = table_to_jsonl(t)
        assert jsonl.count("\n") == len(t.rows)
        import json

        first = json.loads(jsonl.splitlines()[0])
        assert set(first) == {"m", "n", "D", "c"}


class TestRegrouping:
    def test_single_cell(self):
        rep = regrouping_identity_check(TableBounds(1, 1, 1), sign=1)
        assert rep.passed and rep.checked == 1

    def test_small_both_signs(self):
        # the full (20, 20, 400) sweep is acceptance #3
        for sign in (1, -1):
            rep = regrouping_identity_check(TableBounds(8, 8, 60), sign=sign)
            assert rep.passed, rep.first_counterexample
            assert rep.checked == 8 * 8 * 60
