import itertools
import random
from fractions import Fraction

import pytest
import sympy

from envelope import (
    BOREL,
    MIRABOLIC_1,
    MIRABOLIC_N1,
    ParabolicSpec,
    UEElem,
    embed,
    generators,
    iota,
    normal_order,
    reduce_mod_ideal,
    symmetrize,
    ue_from_labels,
)
from liealg import Weight, basis, commutator, coords, from_coords, reduced_basis
from symdecomp import TT, Poly2Elem, adjoint_act
from utils.errors import DimensionError, PreconditionError, ResourceLimitError
from utils.minrep_config import reset_minrep_config

F = Fraction


def g(label, n=3):
    return UEElem.generator(n, label)


def test_generator_order():
    labels = [gen.label for gen in generators(3)]
    assert labels == ["T21", "T31", "T32", "H1", "H2", "T12", "T13", "T23"]
    assert len(generators(4)) == 15


def test_unknown_generator():
    with pytest.raises(PreconditionError):
        UEElem.generator(3, "T14")


def test_normal_ordering_of_a_descent():
    u = g("T12") * g("T21")
    assert u.coefficient("T21", "T12") == 1
    assert u.coefficient("H1") == 1
    assert len(u.terms) == 2
    assert (g("T21") * g("T12")).terms == {(0, 5): 1}


def test_commutator_matches_the_bracket():
    assert g("T12").commutator(g("T23")) == g("T13")
    assert g("T12").commutator(g("T13")).is_zero()
    assert g("H1").commutator(g("T12")) == g("T12").scale(2)


def test_multiplication_is_associative():
    x = g("T23") + g("H1").scale(F(1, 2))
    y = g("T31") - g("T12")
    z = g("T21") + UEElem.scalar(3, 3)
    assert (x * y) * z == x * (y * z)


def test_scalar_multiplication():
    x = g("T12")
    assert x * 2 == x.scale(2) == 2 * x


def test_embed_uses_partial_sums_on_the_cartan():
    # T11 = (2H1 + H2)/3 in sl(3)
    u = embed(basis(1, 1, 3))
    assert u.coefficient("H1") == F(2, 3)
    assert u.coefficient("H2") == F(1, 3)
    assert embed(basis(2, 3, 3)) == g("T23")


def test_normal_order_of_matrices():
    word = [basis(1, 2, 3), basis(2, 1, 3)]
    assert normal_order(word) == g("T12") * g("T21")
    with pytest.raises(PreconditionError):
        normal_order([])
    with pytest.raises(DimensionError):
        normal_order([basis(1, 2, 3), basis(1, 2, 2)])


def test_symmetrize():
    p = TT(1, 2, 2, 1, 3) + Poly2Elem.constant(3, 5)
    u = symmetrize(p)
    # (T12 T21 + T21 T12)/2 = T21 T12 + H1/2
    assert u.coefficient("T21", "T12") == 1
    assert u.coefficient("H1") == F(1, 2)
    assert u.coefficient() == 5


def test_iota_is_an_involutive_antiautomorphism():
    x = g("T12") + g("H2")
    y = g("T31").scale(3) - g("T23")
    assert iota(g("T12")) == -g("T12")
    assert iota(x * y) == iota(y) * iota(x)
    assert iota(iota(x * y + y)) == x * y + y


def test_word_length_bound(monkeypatch):
    monkeypatch.setenv("MINREP_MAX_WORD", "2")
    reset_minrep_config()
    x = g("T12") * g("T21")
    with pytest.raises(ResourceLimitError):
        x * g("T31")


def test_ue_from_labels():
    u = ue_from_labels(3, {("T12", "T21"): 1, ("T31",): F(1, 2)})
    assert u == g("T12") * g("T21") + g("T31").scale(F(1, 2))
    with pytest.raises(PreconditionError):
        ue_from_labels(3, {("X",): 1})


def test_parabolic_spec():
    assert ParabolicSpec(BOREL, 3).block_sizes == (1, 1, 1)
    assert ParabolicSpec(MIRABOLIC_1, 4).block_sizes == (1, 3)
    assert ParabolicSpec(MIRABOLIC_N1, 4).block_sizes == (3, 1)
    with pytest.raises(PreconditionError):
        ParabolicSpec("levi", 3)
    q = ParabolicSpec(MIRABOLIC_1, 3)
    assert q.is_character(Weight.of(2, -1, -1))
    assert not q.is_character(Weight.of(1, 0, -1))


def test_reduction_modulo_borel_ideal():
    q = ParabolicSpec.borel(3)
    lam = Weight.of(1, 0, -1)
    assert reduce_mod_ideal(g("H1"), q, lam) == UEElem.scalar(3, 1)
    assert reduce_mod_ideal(g("T12"), q, lam).is_zero()
    assert reduce_mod_ideal(g("T21"), q, lam) == g("T21")
    assert reduce_mod_ideal(g("T12") * g("T21"), q, lam) == UEElem.scalar(3, 1)
    assert reduce_mod_ideal(g("T21") * g("T12"), q, lam).is_zero()
    assert reduce_mod_ideal(g("T32") * g("H2"), q, lam) == g("T32")


def test_reduction_modulo_mirabolic_ideal():
    q = ParabolicSpec(MIRABOLIC_1, 3)
    lam = Weight.of(2, -1, -1)
    assert reduce_mod_ideal(g("T32"), q, lam).is_zero()
    assert reduce_mod_ideal(g("H2"), q, lam).is_zero()
    assert reduce_mod_ideal(g("H1"), q, lam) == UEElem.scalar(3, 3)
    assert reduce_mod_ideal(g("T31"), q, lam) == g("T31")
    with pytest.raises(PreconditionError):
        reduce_mod_ideal(g("H1"), q, Weight.of(1, 0, -1))


def test_reduction_checks_sizes():
    with pytest.raises(DimensionError):
        reduce_mod_ideal(g("H1"), ParabolicSpec.borel(4), Weight.of(1, 0, -1))


def _rational(x):
    return sympy.Rational(x.numerator, x.denominator)


def natural_rep(gen, n):
    m = gen.matrix(n)
    return sympy.Matrix(n, n, lambda i, j: _rational(m.entry(i + 1, j + 1)))


def adjoint_rep(gen, n):
    rb = reduced_basis(n)
    columns = [coords(commutator(gen.matrix(n), basis(*b, n))) for b in rb]
    return sympy.Matrix(len(rb), len(rb), lambda r, c: _rational(columns[c].get(rb[r], F(0))))


def evaluate(u, rep):
    gens = generators(u.n)
    size = rep(gens[0], u.n).shape[0]
    total = sympy.zeros(size, size)
    for word, c in u.terms.items():
        m = sympy.eye(size)
        for letter in word:
            m = m * rep(gens[letter], u.n)
        total += _rational(c) * m
    return total


def word_matrix(labels, n, rep):
    index = {gen.label: gen for gen in generators(n)}
    m = sympy.eye(rep(generators(n)[0], n).shape[0])
    for label in labels:
        m = m * rep(index[label], n)
    return m


@pytest.mark.parametrize("rep", [natural_rep, adjoint_rep])
def test_normal_order_matches_the_free_product_n2(rep):
    labels = [gen.label for gen in generators(2)]
    for length in (1, 2, 3):
        for word in itertools.product(labels, repeat=length):
            u = ue_from_labels(2, {word: 1})
            assert evaluate(u, rep) == word_matrix(word, 2, rep), word


@pytest.mark.parametrize("rep", [natural_rep, adjoint_rep])
def test_normal_order_matches_the_free_product_n3(rep):
    rng = random.Random("free-product")
    labels = [gen.label for gen in generators(3)]
    for _ in range(30):
        word = tuple(rng.choice(labels) for _ in range(rng.randint(2, 4)))
        u = ue_from_labels(3, {word: 1})
        assert evaluate(u, rep) == word_matrix(word, 3, rep), word


def test_normal_order_of_matrices_matches_the_matrix_product():
    rng = random.Random("matrix-product")
    for _ in range(10):
        word = [_random_matrix(rng, 3) for _ in range(3)]
        expected = sympy.eye(3)
        for x in word:
            expected = expected * sympy.Matrix(3, 3, lambda i, j: _rational(x.entry(i + 1, j + 1)))
        assert evaluate(normal_order(word), natural_rep) == expected


def _random_matrix(rng, n):
    return from_coords(n, {b: F(rng.randint(-3, 3)) for b in reduced_basis(n)})


def _random_quadratic(rng, n):
    out = Poly2Elem.from_matrix(_random_matrix(rng, n)) + Poly2Elem.constant(n, rng.randint(-2, 2))
    for _ in range(3):
        i, j, k, l = (rng.randint(1, n) for _ in range(4))
        out = out + TT(i, j, k, l, n).scale(rng.randint(-2, 2))
    return out


@pytest.mark.parametrize("n", [3, 4])
def test_symmetrization_is_adjoint_equivariant(n):
    rng = random.Random(f"sym-equivariance:{n}")
    for _ in range(50):
        x, p = _random_matrix(rng, n), _random_quadratic(rng, n)
        ex, sp = embed(x), symmetrize(p)
        assert symmetrize(adjoint_act(x, p)) == ex * sp - sp * ex


def _random_element(rng, n):
    return (embed(_random_matrix(rng, n))
            + embed(_random_matrix(rng, n)) * embed(_random_matrix(rng, n))
            + UEElem.scalar(n, rng.randint(-2, 2)))


@pytest.mark.parametrize("kind, lam", [
    (BOREL, Weight.of(F(3, 2), F(-1, 2), -1)),
    (MIRABOLIC_1, Weight.of(2, -1, -1)),
    (MIRABOLIC_N1, Weight.of(F(1, 3), F(1, 3), F(-2, 3))),
])
def test_reduction_is_a_left_module_map(kind, lam):
    q = ParabolicSpec(kind, 3)
    rng = random.Random(f"left-module:{kind}")
    for _ in range(15):
        u, v = _random_element(rng, 3), _random_element(rng, 3)
        reduced_v = reduce_mod_ideal(v, q, lam)
        assert reduce_mod_ideal(u * v, q, lam) == reduce_mod_ideal(u * reduced_v, q, lam)
