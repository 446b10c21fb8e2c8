import random
from fractions import Fraction

import pytest

from liealg import (
    TracelessMatrix,
    Weight,
    basis,
    basis_bracket,
    bracket,
    chevalley_involution,
    commutator,
    coords,
    from_coords,
    involution_weight,
    is_dominant_integral,
    reduced_basis,
    rho,
    set_bracket_fault,
    trace_form,
    weight_norm_sq,
    weight_of_basis,
    weyl_dimension,
)
from utils.errors import DimensionError, NotARootError, PreconditionError

F = Fraction


def random_matrix(rng, n):
    return from_coords(n, {b: F(rng.randint(-3, 3)) for b in reduced_basis(n)})


def test_basis_is_traceless_shifted_unit_matrix():
    t11 = basis(1, 1, 2)
    assert t11.entry(1, 1) == F(1, 2)
    assert t11.entry(2, 2) == F(-1, 2)
    assert basis(1, 2, 3).entry(1, 2) == 1
    assert basis(1, 2, 3).entry(2, 1) == 0


def test_basis_index_out_of_range():
    with pytest.raises(PreconditionError):
        basis(0, 1, 3)
    with pytest.raises(PreconditionError):
        basis(1, 4, 3)


def test_weight_entries_must_sum_to_zero():
    with pytest.raises(PreconditionError):
        Weight.of(1, 0, 0)
    assert Weight.of(F(1, 2), F(-1, 2)).component(2) == F(-1, 2)


def test_weight_size_mismatch():
    with pytest.raises(DimensionError):
        Weight.of(1, -1) + Weight.of(1, 0, -1)
    with pytest.raises(DimensionError):
        basis(1, 2, 2) + basis(1, 2, 3)


def test_bracket_of_root_vectors():
    n = 3
    assert bracket(basis(1, 2, n), basis(2, 1, n)) == basis(1, 1, n) - basis(2, 2, n)
    assert bracket(basis(1, 2, n), basis(2, 3, n)) == basis(1, 3, n)
    assert bracket(basis(1, 2, n), basis(1, 3, n)).is_zero()


def test_last_diagonal_is_eliminated_in_coordinates():
    assert (3, 3) not in reduced_basis(3)
    assert len(reduced_basis(3)) == 8
    assert coords(basis(3, 3, 3)) == {(1, 1): -1, (2, 2): -1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coordinates_round_trip(n):
    rng = random.Random(n)
    for _ in range(5):
        x = random_matrix(rng, n)
        assert from_coords(n, coords(x)) == x


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jacobi_and_invariance(n):
    rng = random.Random(10 + n)
    for _ in range(10):
        x, y, z = (random_matrix(rng, n) for _ in range(3))
        jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert jacobi.is_zero()
        assert trace_form(bracket(x, y), z) == -trace_form(y, bracket(x, z))


def test_basis_bracket_in_coordinates():
    assert basis_bracket((1, 2), (2, 1), 3) == {(1, 1): 1, (2, 2): -1}


def test_weight_of_basis():
    assert weight_of_basis(1, 3, 3) == Weight.of(1, 0, -1)
    with pytest.raises(NotARootError):
        weight_of_basis(2, 2, 3)


def test_rho_and_norm():
    assert rho(3) == Weight.of(1, 0, -1)
    assert weight_norm_sq(rho(3)) == 2
    assert rho(4) == Weight.of(F(3, 2), F(1, 2), F(-1, 2), F(-3, 2))


@pytest.mark.parametrize("weight, dim", [
    ((0, 0, 0), 1),
    ((1, 0, -1), 8),
    ((2, 0, -2), 27),
    ((2, 0, 0, -2), 84),
    ((1, 1, -1, -1), 20),
    ((1, 0, 0, -1), 15),
    ((1, -1), 3),
])
def test_weyl_dimension(weight, dim):
    assert weyl_dimension(Weight.of(*weight)) == dim


def test_weyl_dimension_rejects_non_dominant():
    lam = Weight.of(-1, 0, 1)
    assert not is_dominant_integral(lam)
    with pytest.raises(PreconditionError):
        weyl_dimension(lam)
    with pytest.raises(PreconditionError):
        weyl_dimension(Weight.of(F(1, 2), F(-1, 2), 0))


def test_chevalley_involution():
    n = 3
    assert chevalley_involution(basis(1, 2, n)) == -basis(2, 3, n)
    rng = random.Random(7)
    for _ in range(5):
        x, y = random_matrix(rng, n), random_matrix(rng, n)
        assert chevalley_involution(chevalley_involution(x)) == x
        assert chevalley_involution(bracket(x, y)) == bracket(chevalley_involution(x), chevalley_involution(y))


def test_involution_on_weights():
    assert involution_weight(Weight.of(3, -1, -2)) == Weight.of(2, 1, -3)


def test_bracket_fault_flips_one_structure_constant():
    x, y = basis(1, 2, 3), basis(2, 1, 3)
    set_bracket_fault(True)
    assert bracket(x, y) == -commutator(x, y)
    assert bracket(y, x) == commutator(y, x)
    assert basis_bracket((1, 2), (2, 1), 3) == {(1, 1): -1, (2, 2): 1}
    set_bracket_fault(False)
    assert bracket(x, y) == commutator(x, y)
    assert basis_bracket((1, 2), (2, 1), 3) == {(1, 1): 1, (2, 2): -1}


def test_traceless_matrix_rejects_trace():
    with pytest.raises((PreconditionError, DimensionError)):
        TracelessMatrix.from_rows([[1, 0], [0, 0]])
