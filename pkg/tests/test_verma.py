from fractions import Fraction

import pytest

from envelope import BOREL, MIRABOLIC_1, MIRABOLIC_N1, ParabolicSpec, UEElem
from liealg import Weight, involution_weight
from symdecomp import SubspaceBasis, TT, fa_space
from verma import (
    HWLabel,
    VermaState,
    act_on_hwv,
    annihilates_hwv,
    casimir_by_action,
    casimir_by_norm,
    casimir_scalar,
    check_generalized_verma,
    check_ja_annihilates,
    expected_casimir,
    finite_dimensional_condition,
    generalized_verma_report,
    is_finite_dimensional,
    ja_generators,
    labels_of,
    lambda_ia,
    solve_annihilator_weights,
)
from utils.errors import PreconditionError

F = Fraction
HALF = F(1, 2)


@pytest.mark.parametrize("i, expected", [
    (1, (-1, HALF, HALF)),
    (2, (-HALF, 0, HALF)),
    (3, (-HALF, -HALF, 1)),
])
def test_lambda_ia_n3(i, expected):
    assert lambda_ia(3, i, 0) == Weight.of(*expected)


def test_lambda_ia_collision_at_a_zero():
    lam = lambda_ia(4, 2, 0)
    assert lam == lambda_ia(4, 3, 0) == Weight.of(-HALF, -HALF, HALF, HALF)
    assert labels_of(lam, 0) == (2, 3)


def test_lambda_ia_bounds():
    with pytest.raises(PreconditionError):
        lambda_ia(3, 0, 0)
    with pytest.raises(PreconditionError):
        HWLabel(3, 4, 0)


@pytest.mark.parametrize("a", [0, 1, -2, F(5, 2), F(-7, 3)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_casimir_scalar_is_constant_on_the_family(n, a):
    for i in range(1, n + 1):
        assert casimir_scalar(lambda_ia(n, i, a)) == expected_casimir(n, a)


def test_casimir_values():
    assert expected_casimir(3, 0) == F(-3, 2)
    assert expected_casimir(2, 3) == (9 - 1) / F(2)
    lam = lambda_ia(3, 1, 0)
    assert casimir_by_norm(lam) == casimir_by_action(lam) == F(-3, 2)


def test_verma_state_only_holds_lowering_words():
    with pytest.raises(PreconditionError):
        VermaState(Weight.of(1, 0, -1), {(5,): F(1)})


def test_act_on_hwv():
    lam = Weight.of(1, 0, -1)
    state = act_on_hwv(UEElem.generator(3, "T12") * UEElem.generator(3, "T21"), lam)
    assert state.amplitude == {(): 1}
    assert state.scalar == 1
    assert act_on_hwv(UEElem.generator(3, "T23"), lam).is_zero()


@pytest.mark.parametrize("i", [1, 2, 3])
def test_ja_annihilates_the_family_n3(i):
    assert check_ja_annihilates(HWLabel(3, i, F(1, 3)))


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_ja_annihilates_the_family_n4(i):
    assert check_ja_annihilates(HWLabel(4, i, -2))


def test_fa_does_not_annihilate_other_weights():
    assert not annihilates_hwv(fa_space(3, 0), Weight.of(1, 0, -1))


def test_annihilator_needs_a_submodule():
    space = SubspaceBasis(3, (TT(1, 2, 2, 1, 3),), "single")
    with pytest.raises(PreconditionError):
        annihilates_hwv(space, Weight.of(1, 0, -1))


def test_annihilator_solution_n2_is_everything():
    solution = solve_annihilator_weights(2, 5)
    assert solution.all_weights
    assert solution.contains(Weight.of(7, -7))


@pytest.mark.parametrize("a", [0, F(1, 3), -2])
def test_annihilator_solution_n3_contains_the_family(a):
    solution = solve_annihilator_weights(3, a)
    assert not solution.all_weights
    for i in range(1, 4):
        assert solution.contains(lambda_ia(3, i, a))
    for lam in solution.extra_weights:
        assert labels_of(lam, a) == ()


@pytest.mark.slow
def test_annihilator_solution_n4_merges_collisions():
    solution = solve_annihilator_weights(4, 0)
    labels = [lw.labels for lw in solution.labeled]
    assert (2, 3) in labels
    assert solution.contains(lambda_ia(4, 1, 0))
    assert solution.contains(lambda_ia(4, 4, 0))


def test_ja_generators_count():
    assert len(ja_generators(3, 0)) == 9
    assert len(ja_generators(4, 0)) == 36


def test_finite_dimensional_labels():
    zero = HWLabel(3, 1, F(3, 2))
    assert zero.weight == Weight.zero(3)
    assert finite_dimensional_condition(zero)
    assert is_finite_dimensional(zero)
    assert is_finite_dimensional(HWLabel(3, 3, F(-5, 2)))
    assert not is_finite_dimensional(HWLabel(3, 1, 0))
    assert not is_finite_dimensional(HWLabel(3, 2, F(3, 2)))


@pytest.mark.parametrize("kind", [MIRABOLIC_1, MIRABOLIC_N1])
@pytest.mark.parametrize("n, a", [(3, 0), (3, F(5, 2)), (4, F(-7, 3))])
def test_generalized_verma_modules_are_annihilated(kind, n, a):
    report = generalized_verma_report(n, a, ParabolicSpec(kind, n))
    assert report.passed, report.reason
    assert report.casimir == expected_casimir(n, a)


def test_generalized_verma_with_a_wrong_weight():
    q = ParabolicSpec(MIRABOLIC_1, 3)
    report = generalized_verma_report(3, 0, q, Weight.of(1, 0, -1))
    assert not report.passed
    assert "not a character" in report.reason
    assert not check_generalized_verma(3, 0, q, lambda_ia(3, 1, 1))


def test_generalized_verma_rejects_the_borel():
    with pytest.raises(PreconditionError):
        check_generalized_verma(3, 0, ParabolicSpec(BOREL, 3))
    with pytest.raises(PreconditionError):
        check_generalized_verma(4, 0, ParabolicSpec(MIRABOLIC_1, 3))


def test_annihilator_rejects_a_space_that_is_not_closed():
    slice_ = SubspaceBasis(3, tuple(fa_space(3, 0).zero_weight_vectors()), "zero weight slice", submodule=True)
    assert not slice_.verify_closure()
    with pytest.raises(PreconditionError):
        annihilates_hwv(slice_, lambda_ia(3, 1, 0))
    assert isinstance(annihilates_hwv(slice_, lambda_ia(3, 1, 0), verify_closure=False), bool)


def _mirabolic_weights(n, a):
    base = lambda_ia(n, 1, a)
    shift = Weight((F(n - 1),) + (F(-1),) * (n - 1))
    return [base, base + shift, base - shift.scale(F(1, 2))]


@pytest.mark.parametrize("n, a", [(3, 0), (3, F(5, 2)), (4, 1), (4, F(-7, 3))])
def test_generalized_verma_is_symmetric_under_the_involution(n, a):
    q1, qn1 = ParabolicSpec(MIRABOLIC_1, n), ParabolicSpec(MIRABOLIC_N1, n)
    assert involution_weight(lambda_ia(n, 1, a)) == lambda_ia(n, n, -a)
    assert check_generalized_verma(n, a, q1) and check_generalized_verma(n, -a, qn1)
    for lam in _mirabolic_weights(n, a)[1:]:
        dual = involution_weight(lam)
        assert qn1.is_character(dual)
        assert casimir_scalar(dual) == casimir_scalar(lam)
        if casimir_scalar(lam) != expected_casimir(n, a):
            assert not check_generalized_verma(n, a, q1, lam)
            assert not check_generalized_verma(n, -a, qn1, dual)


def test_generalized_verma_when_family_members_coincide():
    q = ParabolicSpec(MIRABOLIC_1, 4)
    assert lambda_ia(4, 2, 1) == lambda_ia(4, 1, 1)
    assert check_generalized_verma(4, 1, q, lambda_ia(4, 2, 1))
    shifted = lambda_ia(4, 1, 1) + Weight.of(1, -1, 0, 0)
    report = generalized_verma_report(4, 1, q, shifted)
    assert not report.passed
    assert "not a character" in report.reason
    assert not check_generalized_verma(4, 0, q, lambda_ia(4, 2, 0))
