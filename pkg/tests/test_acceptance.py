import pytest

from acceptance import CRITERIA, CriterionResult, run_all, run_criterion
from liealg import set_bracket_fault


def test_all_ten_criteria_are_registered():
    assert sorted(CRITERIA) == list(range(1, 11))


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6, 7, 9])
def test_quick_criteria_pass(number):
    result = run_criterion(number, 4)
    assert result.passed, result.detail
    assert result.number == number


def test_zero_weight_criterion_skips_small_n():
    result = run_criterion(2, 3)
    assert result.passed
    assert result.detail == "skipped (max_n < 4)"


def test_properties_pass_without_a_fault():
    assert run_criterion(10, 3).passed


def test_injected_fault_is_detected():
    set_bracket_fault(True)
    try:
        result = run_criterion(10, 3)
    finally:
        set_bracket_fault(False)
    assert not result.passed
    assert "bracket" in result.detail


def test_result_json_has_no_timing():
    result = CriterionResult(1, "S^2 decomposition", True, "ok", 1.5)
    assert result.to_json() == {"number": 1, "name": "S^2 decomposition", "passed": True, "detail": "ok"}


def test_run_all_keeps_criterion_order():
    results = run_all(3, threads=2, numbers=[7, 6])
    assert [r.number for r in results] == [6, 7]
    assert all(r.passed for r in results)


@pytest.mark.slow
@pytest.mark.parametrize("number", [8])
def test_heavy_criteria_pass(number):
    result = run_criterion(number, 4)
    assert result.passed, result.detail


@pytest.mark.slow
def test_full_grid():
    results = run_all(5, threads=4)
    assert [r.number for r in results] == list(range(1, 11))
    failed = [(r.number, r.detail) for r in results if not r.passed]
    assert not failed


def test_default_verify_all_criteria_pass_at_n4():
    # n=4 is the verify-all default; lambda(2,0) = lambda(3,0) and lambda(2,1) = lambda(1,1) there
    results = run_all(4, threads=2, numbers=[3, 5])
    failed = [(r.number, r.detail) for r in results if not r.passed]
    assert not failed


@pytest.mark.slow
def test_zero_weight_criterion_reaches_n7():
    result = run_criterion(2, 7)
    assert result.passed, result.detail
    assert "7" in result.detail
