"""
Verma Module Computations

Highest weight vector computations in M(lambda): the annihilator criterion
for sym(F^a), the lambda(i, a) family and its solver, Casimir scalars, the
generalized Verma check for the mirabolic parabolics, and the generators of
J_a.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy

from envelope import (
    MIRABOLIC_1,
    MIRABOLIC_N1,
    ParabolicSpec,
    UEElem,
    Word,
    generators,
    reduce_mod_ideal,
    symmetrize,
)
from liealg import Weight, is_dominant_integral, is_natural, rho, weight_norm_sq
from symdecomp import SubspaceBasis, casimir_element, fa_lowest_vectors, fa_space
from utils.errors import PreconditionError, VerificationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HWLabel:
    n: int
    i: int
    a: Fraction

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError("n must be at least 2")
        if not 1 <= self.i <= self.n:
            raise PreconditionError(f"label index i={self.i} out of range 1..{self.n}")
        object.__setattr__(self, "a", Fraction(self.a))

    @property
    def weight(self) -> Weight:
        return lambda_ia(self.n, self.i, self.a)

    def to_json(self):
        return {"n": self.n, "i": self.i, "a": self.a}


def lambda_ia(n: int, i: int, a) -> Weight:
    """lambda(i,a) = ((-a - n/2) 1_{i-1}, (n-1)a - n(n+1-2i)/2, (-a + n/2) 1_{n-i}) / n."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if not 1 <= i <= n:
        raise PreconditionError(f"label index i={i} out of range 1..{n}")
    a = Fraction(a)
    half_n = Fraction(n, 2)
    head = (-a - half_n) / n
    middle = ((n - 1) * a - Fraction(n * (n + 1 - 2 * i), 2)) / n
    tail = (-a + half_n) / n
    return Weight((head,) * (i - 1) + (middle,) + (tail,) * (n - i))


def labels_of(lam: Weight, a) -> Tuple[int, ...]:
    """All i with lambda(i, a) = lambda."""
    return tuple(i for i in range(1, lam.n + 1) if lambda_ia(lam.n, i, a) == lam)


# -----------------------------------------------------------------------------
# Highest weight vector
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class VermaState:
    """u m_lambda written as U(n^-) m_lambda: lowering word -> coefficient."""

    weight: Weight
    amplitude: Dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        gens = generators(self.weight.n)
        for word in self.amplitude:
            if not all(gens[g].is_lowering for g in word):
                raise PreconditionError("Verma states only carry lowering monomials")

    def is_zero(self) -> bool:
        return not self.amplitude

    @property
    def scalar(self) -> Fraction:
        """Coefficient of m_lambda itself."""
        return self.amplitude.get((), Fraction(0))

    def to_json(self):
        gens = generators(self.weight.n)
        return {
            "weight": self.weight,
            "amplitude": {"*".join(gens[g].label for g in w) or "1": c
                          for w, c in sorted(self.amplitude.items())},
        }


def act_on_hwv(u: UEElem, lam: Weight) -> VermaState:
    reduced = reduce_mod_ideal(u, ParabolicSpec.borel(u.n), lam)
    return VermaState(lam, reduced.terms)


def annihilates_hwv(space: SubspaceBasis, lam: Weight, verify_closure: bool = True) -> bool:
    """sym of the zero weight space of ``space`` kills m_lambda.

    For an adjoint-stable space this is equivalent to sym(space) annihilating
    L(lambda).
    """
    if not space.submodule:
        raise PreconditionError(f"{space.label or 'space'} is not flagged as a submodule")
    if verify_closure and not space.closed:
        raise PreconditionError(f"{space.label or 'space'} is not closed under the adjoint action")
    for v in space.zero_weight_vectors():
        if not act_on_hwv(symmetrize(v), lam).is_zero():
            return False
    return True


# -----------------------------------------------------------------------------
# Solving for the annihilated highest weights
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledWeight:
    weight: Weight
    labels: Tuple[int, ...]

    def to_json(self):
        return {"weight": self.weight, "labels": list(self.labels)}


@dataclass(frozen=True)
class AnnihilatorSolution:
    n: int
    a: Fraction
    all_weights: bool = False
    labeled: Tuple[LabeledWeight, ...] = ()
    extra_weights: Tuple[Weight, ...] = ()

    @property
    def weights(self) -> frozenset:
        return frozenset(lw.weight for lw in self.labeled)

    def contains(self, lam: Weight) -> bool:
        if self.all_weights:
            return True
        return lam in self.weights or lam in self.extra_weights

    def to_json(self):
        if self.all_weights:
            return {"n": self.n, "a": self.a, "all_weights": True}
        return {"n": self.n, "a": self.a, "all_weights": False,
                "weights": list(self.labeled), "extra_weights": list(self.extra_weights)}


def _to_fraction(value) -> Fraction:
    value = sympy.nsimplify(value)
    if not value.is_Rational:
        raise VerificationError(f"non-rational solution component {value}")
    return Fraction(int(value.p), int(value.q))


def _quadratic_conditions(lams) -> List:
    """(l_i - l_l + 1)(l_j - l_k) and (l_i - l_j)(l_k - l_l) for i<j<k<l."""
    out = []
    for i, j, k, l in itertools.combinations(range(len(lams)), 4):
        out.append(sympy.expand((lams[i] - lams[l] + 1) * (lams[j] - lams[k])))
        out.append(sympy.expand((lams[i] - lams[j]) * (lams[k] - lams[l])))
    return out


def solve_annihilator_weights(n: int, a) -> AnnihilatorSolution:
    """Enumerate the 2^(n-1) factor choices of the consecutive conditions

        (l_{i+1} - l_i)(l_{i+1} + l_i - i + n/2 - a(n-2)/n) = 0,

    solve each linear system with sum(l) = 0 and, for n >= 4, impose the
    quadratic conditions on whatever stays free.
    """
    if n < 2:
        raise PreconditionError("n must be at least 2")
    a = Fraction(a)
    if n == 2:
        return AnnihilatorSolution(n, a, all_weights=True)
    a_sym = sympy.Rational(a.numerator, a.denominator)
    lams = sympy.symbols(f"l1:{n + 1}")
    quadratic = _quadratic_conditions(lams) if n >= 4 else []
    found = set()
    for pattern in itertools.product((0, 1), repeat=n - 1):
        equations = [sum(lams)]
        for k, choice in enumerate(pattern, start=1):
            lo, hi = lams[k - 1], lams[k]
            if choice == 0:
                equations.append(hi - lo)
            else:
                equations.append(hi + lo - k + sympy.Rational(n, 2) - a_sym * (n - 2) / n)
        solutions = sympy.linsolve(equations, lams)
        for sol in solutions:
            free = set().union(*(sympy.sympify(e).free_symbols for e in sol))
            candidates = [tuple(sol)]
            if free:
                if not quadratic:
                    raise VerificationError(f"infinite solution family for n={n}, pattern {pattern}")
                subs = [sympy.expand(c.subs(dict(zip(lams, sol)))) for c in quadratic]
                subs = [c for c in subs if c != 0]
                candidates = [tuple(sympy.sympify(e).subs(point) for e in sol)
                              for point in sympy.solve(subs, sorted(free, key=str), dict=True)]
            for cand in candidates:
                if any(sympy.sympify(e).free_symbols for e in cand):
                    raise VerificationError(f"infinite solution family for n={n}, pattern {pattern}")
                point = dict(zip(lams, cand))
                if any(sympy.simplify(c.subs(point)) != 0 for c in quadratic):
                    continue
                found.add(tuple(_to_fraction(e) for e in cand))
        logger.debug("pattern %s: %d solution(s) so far", pattern, len(found))
    labeled, extra = [], []
    for entries in sorted(found):
        lam = Weight(entries)
        labels = labels_of(lam, a)
        if labels:
            labeled.append(LabeledWeight(lam, labels))
        else:
            extra.append(lam)
    labeled.sort(key=lambda lw: lw.labels)
    return AnnihilatorSolution(n, a, False, tuple(labeled), tuple(extra))


# -----------------------------------------------------------------------------
# Casimir
# -----------------------------------------------------------------------------

def expected_casimir(n: int, a) -> Fraction:
    """(n-1)(2a+n)(2a-n)/(4n), the scalar of sym(Omega) on every L(lambda(i,a))."""
    a = Fraction(a)
    return Fraction(n - 1) * (2 * a + n) * (2 * a - n) / (4 * n)


def casimir_by_norm(lam: Weight) -> Fraction:
    r = rho(lam.n)
    return weight_norm_sq(lam + r) - weight_norm_sq(r)


def casimir_by_action(lam: Weight) -> Fraction:
    state = act_on_hwv(symmetrize(casimir_element(lam.n)), lam)
    if set(state.amplitude) - {()}:
        raise VerificationError("sym(Omega) does not act on m_lambda by a scalar")
    return state.scalar


def casimir_scalar(lam: Weight) -> Fraction:
    """||lambda + rho||^2 - ||rho||^2, confirmed by acting with sym(Omega)."""
    by_norm = casimir_by_norm(lam)
    by_action = casimir_by_action(lam)
    if by_norm != by_action:
        raise VerificationError(f"Casimir mismatch at {lam}: norm {by_norm}, action {by_action}")
    return by_norm


# -----------------------------------------------------------------------------
# Generalized Verma modules for the mirabolic parabolics
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneralizedVermaCheck:
    n: int
    a: Fraction
    parabolic: ParabolicSpec
    weight: Weight
    passed: bool
    reason: str = ""
    residues: Tuple[UEElem, ...] = ()
    casimir: Optional[Fraction] = None

    def to_json(self):
        return {"n": self.n, "a": self.a, "parabolic": self.parabolic.kind, "weight": self.weight,
                "passed": self.passed, "reason": self.reason, "residues": list(self.residues),
                "casimir": self.casimir}


def generalized_verma_report(n: int, a, q: ParabolicSpec,
                             weight: Optional[Weight] = None) -> GeneralizedVermaCheck:
    a = Fraction(a)
    if q.kind not in (MIRABOLIC_1, MIRABOLIC_N1):
        raise PreconditionError(f"generalized Verma check needs a mirabolic parabolic, got {q.kind}")
    if q.n != n:
        raise PreconditionError("parabolic size does not match n")
    if weight is None:
        weight = lambda_ia(n, 1 if q.kind == MIRABOLIC_1 else n, a)
    if not q.is_character(weight):
        return GeneralizedVermaCheck(n, a, q, weight, False,
                                     f"{weight} is not a character of {q.kind}")
    residues = tuple(reduce_mod_ideal(symmetrize(v), q, weight) for v in fa_lowest_vectors(n, a))
    nonzero = tuple(r for r in residues if not r.is_zero())
    omega = reduce_mod_ideal(symmetrize(casimir_element(n)), q, weight)
    casimir = omega.terms.get((), Fraction(0)) if set(omega.terms) <= {()} else None
    if nonzero:
        return GeneralizedVermaCheck(n, a, q, weight, False,
                                     "lowest vectors of sym(F^a) survive the reduction",
                                     nonzero, casimir)
    if casimir != expected_casimir(n, a):
        return GeneralizedVermaCheck(n, a, q, weight, False,
                                     "Casimir scalar does not match", (), casimir)
    return GeneralizedVermaCheck(n, a, q, weight, True, "", (), casimir)


def check_generalized_verma(n: int, a, q: ParabolicSpec, weight: Optional[Weight] = None) -> bool:
    """J_a annihilates the generalized Verma module of q with the given weight
    (lambda(1,a) for q(1,n-1), lambda(n,a) for q(n-1,1) by default)."""
    return generalized_verma_report(n, a, q, weight).passed


# -----------------------------------------------------------------------------
# Finite dimensionality and J_a
# -----------------------------------------------------------------------------

def finite_dimensional_condition(label: HWLabel) -> bool:
    """(i = 1 and a in n/2 + N) or (i = n and a in -n/2 - N)."""
    half_n = Fraction(label.n, 2)
    if label.i == 1 and is_natural(label.a - half_n):
        return True
    return label.i == label.n and is_natural(-label.a - half_n)


def is_finite_dimensional(label: HWLabel) -> bool:
    dominant = is_dominant_integral(label.weight)
    if dominant != finite_dimensional_condition(label):
        raise VerificationError(f"dominance and the finite dimensionality condition disagree at {label}")
    return dominant


def ja_generators(n: int, a) -> List[UEElem]:
    """sym(F^a) followed by sym(Omega) - (n-1)(2a+n)(2a-n)/(4n)."""
    a = Fraction(a)
    out = [symmetrize(v) for v in fa_space(n, a).vectors]
    out.append(symmetrize(casimir_element(n)) - UEElem.scalar(n, expected_casimir(n, a)))
    return out


def check_ja_annihilates(label: HWLabel) -> bool:
    """J_a is contained in Ann L(lambda(i, a))."""
    lam = label.weight
    if not annihilates_hwv(fa_space(label.n, label.a), lam):
        return False
    shifted = symmetrize(casimir_element(label.n)) - UEElem.scalar(label.n, expected_casimir(label.n, label.a))
    return act_on_hwv(shifted, lam).is_zero()