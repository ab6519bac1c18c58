"""Acceptance gate: every criterion at its pinned tolerance, one pass/fail
line printed per criterion (visible with pytest -s or in the captured log).

Budgets (wall-clock ceilings from the configuration of record):
  1: < 60 s   2: < 60 s   3: (exact)   4: < 1 s   5: < 30 s
  6: < 300 s  7: < 600 s  8: < 900 s   9: < 10 s  10: < 60 s
"""

import pytest

from quadmds import verify


def _check(result, budget=None):
    print(result.line())
    assert result.passed, result.detail
    if budget is not None:
        assert result.elapsed < budget, f"exceeded budget {budget}s: {result.elapsed:.1f}s"


def test_criterion_01_congruence_count_oracle():
    _check(verify.criterion_1(), budget=60)


def test_criterion_02_coefficient_tables():
    _check(verify.criterion_2(), budget=60)


def test_criterion_03_regrouping_identity():
    _check(verify.criterion_3())


def test_criterion_04_weyl_group():
    _check(verify.criterion_4(), budget=1)


def test_criterion_05_inner_series_continuation():
    _check(verify.criterion_5(), budget=30)


def test_criterion_06_cross_method_triple_series():
    _check(verify.criterion_6(), budget=300)


def test_criterion_07_double_series_functional_equation():
    _check(verify.criterion_7(), budget=600)


def test_criterion_08_triple_series_functional_equations():
    _check(verify.criterion_8(), budget=900)


def test_criterion_09_quadspace_identities():
    _check(verify.criterion_9(), budget=10)


def test_criterion_10_special_functions():
    _check(verify.criterion_10(), budget=60)
