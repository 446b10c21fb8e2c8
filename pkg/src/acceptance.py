"""
MinRep Acceptance Criteria

The ten reproducibility checks behind ``verify-all``. Every criterion is a
pure function of ``max_n`` that returns a CriterionResult; exceptions raised
inside a criterion count as a failure of that criterion only.

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

import functools
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from tqdm import tqdm

from classify import (
    GENUINE,
    PS_SGN,
    PS_TRIV,
    RealFormSpec,
    classify_slnR,
    full_z_set,
    ktypes_slnR,
    lattice_check,
    slnR_ktype_weights,
    table1_count,
    table1_expected,
)
from envelope import MIRABOLIC_1, MIRABOLIC_N1, ParabolicSpec, UEElem, embed, iota
from liealg import (
    TracelessMatrix,
    Weight,
    basis,
    bracket,
    chevalley_involution,
    commutator,
    from_coords,
    reduced_basis,
    trace_form,
)
from sl3kernel import (
    PolyT,
    admissible_m,
    hypergeometric_poly,
    invariant_kernel,
    is_m_invariant,
    kernel_dimension,
    kernel_report,
    lambda2a_coefficients,
    recurrence_solve,
    x_congruence_residue,
    x_element,
)
from symdecomp import (
    TT,
    Poly2Elem,
    adjoint_act,
    decompose_s2,
    diagonal_casimir_parts,
    fa_space,
    hermitian_product,
    zero_weight_f1111,
)
from utils.reporting import format_rational
from verma import (
    annihilates_hwv,
    casimir_scalar,
    check_generalized_verma,
    expected_casimir,
    lambda_ia,
    solve_annihilator_weights,
)

logger = logging.getLogger(__name__)

A_GRID = (Fraction(0), Fraction(1), Fraction(-2), Fraction(5, 2), Fraction(-7, 3))
TABLE1_A_GRID = (Fraction(-3), Fraction(-3, 2), Fraction(0), Fraction(1, 3), Fraction(2), Fraction(7, 2))
KERNEL_M_MAX = 41
PERTURBATIONS = 20


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self):
        return {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}


class CriterionFailure(Exception):
    """Raised inside a criterion with the first counterexample found."""


def _require(condition: bool, message: str):
    if not condition:
        raise CriterionFailure(message)


CRITERIA: Dict[int, Callable[[int], CriterionResult]] = {}


def criterion(number: int, name: str):
    def wrap(func):
        @functools.wraps(func)
        def run(max_n: int) -> CriterionResult:
            start = time.perf_counter()
            try:
                detail = func(max_n) or "ok"
                passed = True
            except CriterionFailure as e:
                detail, passed = str(e), False
            except Exception as e:
                logger.debug("criterion %d raised", number, exc_info=True)
                detail, passed = f"{type(e).__name__}: {e}", False
            elapsed = time.perf_counter() - start
            logger.debug("criterion %d (%s): %s in %.2fs", number, name, passed, elapsed)
            return CriterionResult(number, name, passed, detail, elapsed)
        CRITERIA[number] = run
        return run
    return wrap


def _ns(low: int, high: int, max_n: int) -> List[int]:
    return list(range(low, min(high, max_n) + 1))


def _random_weight(rng: random.Random, n: int) -> Weight:
    head = [Fraction(rng.randint(-4, 4), 2) for _ in range(n - 1)]
    return Weight(tuple(head) + (-sum(head),))


def _random_matrix(rng: random.Random, n: int) -> TracelessMatrix:
    return from_coords(n, {b: Fraction(rng.randint(-3, 3)) for b in reduced_basis(n)})


def _random_quadratic(rng: random.Random, n: int) -> Poly2Elem:
    out = Poly2Elem.from_matrix(_random_matrix(rng, n))
    for _ in range(4):
        i, j, k, l = (rng.randint(1, n) for _ in range(4))
        out = out + TT(i, j, k, l, n).scale(rng.randint(-2, 2))
    return out


@criterion(1, "S^2 decomposition")
def s2_decomposition(max_n: int) -> str:
    for n in _ns(2, 6, max_n):
        result = decompose_s2(n)
        expected_count = {2: 2, 3: 3}.get(n, 4)
        _require(len(result.summands) == expected_count, f"n={n}: {len(result.summands)} summands")
        _require(result.passed, f"n={n}: dims {[s.dim for s in result.summands]} "
                                f"vs Weyl {[s.weyl_dim for s in result.summands]}")
    return f"n = 2..{min(6, max_n)}"


@criterion(2, "zero weight space of F(e1+e2-e(n-1)-en)")
def zero_weight_space(max_n: int) -> str:
    ns = _ns(4, 7, max_n)
    for n in ns:
        space = zero_weight_f1111(n)
        _require(space.dim == n * (n - 3) // 2, f"n={n}: dim {space.dim}")
        for v in space.vectors:
            for d in diagonal_casimir_parts(n):
                _require(hermitian_product(v, d) == 0, f"n={n}: zero weight vector not orthogonal")
    return f"n = {ns}" if ns else "skipped (max_n < 4)"


@criterion(3, "annihilator classification")
def annihilator_classification(max_n: int) -> str:
    for n in _ns(3, 5, max_n):
        for a in A_GRID:
            solution = solve_annihilator_weights(n, a)
            expected = {lambda_ia(n, i, a) for i in range(1, n + 1)}
            _require(set(solution.weights) == expected, f"n={n}, a={a}: solved weights differ")
            space = fa_space(n, a)
            for lam in expected:
                _require(annihilates_hwv(space, lam), f"n={n}, a={a}: {lam} not annihilated")
            rng = random.Random(f"perturb:{n}:{a}")
            seeds = sorted(expected, key=lambda w: w.entries)
            tried = 0
            while tried < PERTURBATIONS:
                lam = seeds[tried % len(seeds)] + _random_weight(rng, n)
                if solution.contains(lam):
                    continue
                tried += 1
                _require(not annihilates_hwv(space, lam), f"n={n}, a={a}: perturbed {lam} annihilated")
    return "n = 3..5"


@criterion(4, "Casimir scalar")
def casimir(max_n: int) -> str:
    for a in A_GRID:
        _require(expected_casimir(2, a) == (a * a - 1) / 2, f"n=2, a={a}")
        for i in (1, 2):
            _require(casimir_scalar(lambda_ia(2, i, a)) == (a * a - 1) / 2, f"n=2, i={i}, a={a}")
    for n in _ns(3, 5, max_n):
        for a in A_GRID:
            for i in range(1, n + 1):
                value = casimir_scalar(lambda_ia(n, i, a))
                _require(value == expected_casimir(n, a), f"n={n}, i={i}, a={a}: {value}")
    return "both paths agree"


@criterion(5, "mirabolic generalized Verma modules")
def mirabolic(max_n: int) -> str:
    for n in _ns(3, 5, max_n):
        for a in A_GRID:
            for kind in (MIRABOLIC_1, MIRABOLIC_N1):
                _require(check_generalized_verma(n, a, ParabolicSpec(kind, n)), f"n={n}, a={a}, {kind}")
    if max_n >= 4:
        q = ParabolicSpec(MIRABOLIC_1, 4)
        for a in A_GRID:
            wrong = lambda_ia(4, 2, a)
            if wrong == lambda_ia(4, 1, a):
                continue
            _require(not check_generalized_verma(4, a, q, wrong), f"wrong weight lambda(2,{a}) accepted")
            shifted = lambda_ia(4, 1, a) + Weight.of(1, -1, 0, 0)
            _require(not check_generalized_verma(4, a, q, shifted), f"shifted weight {shifted} accepted")
    return "both parabolics"


@criterion(6, "isomorphism class counts")
def table1(max_n: int) -> str:
    forms = [RealFormSpec.su(p, q) for p in range(1, 5) for q in range(1, 5) if p + q >= 3]
    forms += [RealFormSpec.sl(n) for n in range(3, 7)]
    rows = 0
    for form in forms:
        for a in TABLE1_A_GRID:
            got, want = table1_count(form, a), table1_expected(form, a)
            _require(got == want, f"{form}, a={a}: {got} != {want}")
            rows += 1
        got, want = table1_count(form, 0, nonreal=True), table1_expected(form, 0, nonreal=True)
        _require(got == want, f"{form}, nonreal a: {got} != {want}")
        rows += 1
    return f"{rows} rows"


def _z_oracle(n: int, a: Fraction) -> set:
    top = abs(a) - Fraction(n, 2)
    out = set()
    k = 0
    while top - k >= 0:
        if (top - k).denominator == 1 and int(top - k) % 2 == 0:
            out.add(k)
        k += 1
    return out


@criterion(7, "K-types")
def ktypes(max_n: int) -> str:
    _require(set(full_z_set(4, 6)) == {0, 2, 4}, "Z(4,6) != {0,2,4}")
    for n in range(3, 7):
        for a in TABLE1_A_GRID + (Fraction(6), Fraction(-9, 2)):
            z = _z_oracle(n, a)
            _require(set(full_z_set(n, a)) == z, f"Z(n={n}, a={a})")
            by_family = {c.family: c for c in classify_slnR(n, a)}
            for family, parity in ((PS_TRIV, 0), (PS_SGN, 1)):
                expected = [k for k in range(parity, 80, 2) if k not in z][:12]
                _require(ktypes_slnR(by_family[family], 12) == expected, f"{family}, n={n}, a={a}")
                form = RealFormSpec.sl(n)
                _require(all(lattice_check(form, mu) for mu in slnR_ktype_weights(by_family[family], 12)),
                         f"{family} K-types off the lattice, n={n}, a={a}")
    for a in range(-2, 3):
        genuine = [c for c in classify_slnR(3, a) if c.family == GENUINE]
        _require(len(genuine) == 1, f"a={a}: no genuine certificate")
        _require(ktypes_slnR(genuine[0], 6) == [2 * abs(a) + 1 + 4 * k for k in range(6)], f"genuine a={a}")
    return "ok"


def _partner(poly: PolyT) -> PolyT:
    """t^m F(t^-2)."""
    return PolyT(poly.m, tuple(reversed(poly.coefficients)))


@criterion(8, "sl(3,R) kernel")
def sl3_kernel(max_n: int) -> str:
    for a in range(-3, 4):
        admissible = set(admissible_m(a, KERNEL_M_MAX))
        for m in range(1, KERNEL_M_MAX + 1, 2):
            pairs = invariant_kernel(m, a)
            _require(len(pairs) == (1 if m in admissible else 0), f"a={a}, m={m}: {len(pairs)} pairs")
            solutions = recurrence_solve(m, a)
            _require(len(solutions) == kernel_dimension(m, a), f"a={a}, m={m}: recurrence count")
            if m not in admissible:
                continue
            oracle = hypergeometric_poly(m, a)
            _require(oracle is not None, f"a={a}, m={m}: no 2F1 polynomial")
            candidates = (oracle, _partner(oracle))
            for sol in solutions + [pairs[0].q1, pairs[0].q2]:
                _require(any(sol.ratio_to(c) is not None for c in candidates),
                         f"a={a}, m={m}: {sol} not proportional to the 2F1 oracle")
            _require(is_m_invariant(pairs[0]), f"a={a}, m={m}: pair not M-invariant")
    for a in (Fraction(1, 2), Fraction(3, 2)):
        _require(kernel_report(a, KERNEL_M_MAX).empty, f"a={a}: kernel not empty")
    return f"a = -3..3, odd m <= {KERNEL_M_MAX}"


def _lambda_grid(a: Fraction) -> List[Weight]:
    center = lambda_ia(3, 2, -a)
    steps = [Fraction(k, 2) for k in range(-3, 4)]
    grid = [center + Weight((d1, -d1 - d3, d3)) for d1 in steps for d3 in steps]
    rng = random.Random(f"lambda2a:{a}")
    grid.extend(_random_weight(rng, 3) for _ in range(20))
    return grid


@criterion(9, "lambda(2,-a) forcing")
def lambda2a(max_n: int) -> str:
    for a in (Fraction(0), Fraction(1), Fraction(-2)):
        solution = lambda_ia(3, 2, -a)
        for lam in _lambda_grid(a):
            result = lambda2a_coefficients(a, lam)
            _require(result.holds == (lam == solution), f"a={a}, lambda={lam}")
            want12 = lam.component(1) - a / 3 + Fraction(1, 2)
            want23 = -lam.component(3) + a / 3 + Fraction(1, 2)
            _require(result.coefficient_T12 == want12 and result.coefficient_T23 == want23,
                     f"a={a}, lambda={lam}: coefficients {format_rational(result.coefficient_T12)}, "
                     f"{format_rational(result.coefficient_T23)}")
            _require(result.residue_T12 == UEElem.generator(3, "T32").scale(want12)
                     and result.residue_T23 == UEElem.generator(3, "T21").scale(want23),
                     f"a={a}, lambda={lam}: residues carry extra terms")
    return "a in {0, 1, -2}"


@criterion(10, "property suites")
def properties(max_n: int) -> str:
    for n in _ns(2, 4, max_n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        x, y = basis(i, j, n), basis(k, l, n)
                        _require(bracket(x, y) == commutator(x, y), f"bracket T{i}{j}, T{k}{l} in sl({n})")
    rng = random.Random("properties")
    for n in _ns(2, 4, max_n):
        for _ in range(10):
            x, y, z = (_random_matrix(rng, n) for _ in range(3))
            jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
            _require(jacobi.is_zero(), f"Jacobi identity in sl({n})")
            _require(trace_form(bracket(x, y), z) == -trace_form(y, bracket(x, z)), f"invariance in sl({n})")
            _require(chevalley_involution(bracket(x, y))
                     == bracket(chevalley_involution(x), chevalley_involution(y)), f"involution in sl({n})")
            v = _random_quadratic(rng, n)
            lhs = adjoint_act(bracket(x, y), v)
            rhs = adjoint_act(x, adjoint_act(y, v)) - adjoint_act(y, adjoint_act(x, v))
            _require(lhs == rhs, f"adjoint equivariance in sl({n})")
    for _ in range(10):
        x, y, z = (embed(_random_matrix(rng, 3)) + embed(_random_matrix(rng, 3)) * embed(_random_matrix(rng, 3))
                   for _ in range(3))
        _require((x * y) * z == x * (y * z), "associativity in U(sl(3))")
        _require(iota(x * y) == iota(y) * iota(x), "iota is an antiautomorphism")
    for a in (Fraction(0), Fraction(1), Fraction(-2), Fraction(5, 2)):
        _require(iota(x_element(a)) == x_element(-a), f"iota(X({a})) != X({-a})")
        _require(x_congruence_residue(a).is_zero(), f"X({a}) not congruent to the lowest vector")
    return "ok"


def run_criterion(number: int, max_n: int) -> CriterionResult:
    return CRITERIA[number](max_n)


def run_all(max_n: int, threads: int = 1, progress: bool = False,
            numbers: Optional[List[int]] = None) -> List[CriterionResult]:
    """Run the criteria on a thread pool of the given size; results in criterion order."""
    numbers = sorted(numbers or CRITERIA)
    workers = max(1, threads)
    logger.info("verify-all: %d criteria, max_n=%d, %d thread(s)", len(numbers), max_n, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {k: pool.submit(run_criterion, k, max_n) for k in numbers}
        results = []
        for k in tqdm(numbers, desc="verify-all", unit="criterion", disable=not progress):
            results.append(futures[k].result())
    return results
