"""
sl(3,R) Genuine Kernel Solver

The sl(2) action pi_m on P_m[t], the operator pi_m(4X), the coefficient
recurrence of its kernel with the truncated 2F1 solutions, M-invariant pairs
(q1, q2), the kernel report per K-type and the lambda(2,-a) forcing check.

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

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import sympy

from envelope import ParabolicSpec, UEElem, embed, iota, reduce_mod_ideal, symmetrize, ue_from_labels
from liealg import Weight, basis
from symdecomp import f1m1_embed
from utils.errors import PreconditionError
from utils.sparse_linalg import dense_nullspace, dense_rank
from verma import lambda_ia

logger = logging.getLogger(__name__)

H, E, F = "H", "E", "F"


@dataclass(frozen=True)
class PolyT:
    """a_0 + a_1 t + ... + a_m t^m in P_m[t]."""

    m: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if self.m < 0 or len(coeffs) != self.m + 1:
            raise PreconditionError(f"P_{self.m}[t] elements need {self.m + 1} coefficients")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, m: int) -> "PolyT":
        return cls(m, (Fraction(0),) * (m + 1))

    @classmethod
    def monomial(cls, m: int, j: int, c=1) -> "PolyT":
        coeffs = [Fraction(0)] * (m + 1)
        coeffs[j] = Fraction(c)
        return cls(m, tuple(coeffs))

    def coefficient(self, j: int) -> Fraction:
        return self.coefficients[j] if 0 <= j <= self.m else Fraction(0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def scale(self, c) -> "PolyT":
        return PolyT(self.m, tuple(Fraction(c) * x for x in self.coefficients))

    def __add__(self, other):
        return PolyT(self.m, tuple(x + y for x, y in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return self.scale(-1)

    def is_even(self) -> bool:
        return all(c == 0 for j, c in enumerate(self.coefficients) if j % 2)

    def is_odd(self) -> bool:
        return all(c == 0 for j, c in enumerate(self.coefficients) if j % 2 == 0)

    def reversal(self) -> "PolyT":
        """t^m p(-1/t)."""
        return PolyT(self.m, tuple((-1) ** (self.m - j) * self.coefficients[self.m - j]
                                   for j in range(self.m + 1)))

    def normalized(self) -> "PolyT":
        """Scaled so that the lowest-degree nonzero coefficient is 1."""
        for c in self.coefficients:
            if c != 0:
                return self.scale(1 / c)
        return self

    def ratio_to(self, other: "PolyT") -> Optional[Fraction]:
        """r with self = r * other, when other is nonzero and such r exists."""
        if self.m != other.m or other.is_zero():
            return None
        pivot = next(j for j, c in enumerate(other.coefficients) if c != 0)
        r = self.coefficients[pivot] / other.coefficients[pivot]
        if all(x == r * y for x, y in zip(self.coefficients, other.coefficients)):
            return r
        return None

    def apply(self, matrix: sympy.Matrix) -> "PolyT":
        vec = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in self.coefficients])
        out = matrix * vec
        return PolyT(self.m, tuple(_fraction(x) for x in out))

    def to_json(self):
        return {"m": self.m, "coefficients": list(self.coefficients)}

    def __str__(self):
        terms = [f"{c}*t^{j}" for j, c in enumerate(self.coefficients) if c != 0]
        return " + ".join(terms) or "0"


def _fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


@dataclass(frozen=True)
class MPair:
    """(q1, q2) in P_m[t] tensor sigma^0."""

    m: int
    q1: PolyT
    q2: PolyT

    def __post_init__(self):
        if self.m % 2 == 0:
            raise PreconditionError("M-invariant pairs only exist for odd m")
        if self.q1.m != self.m or self.q2.m != self.m:
            raise PreconditionError("components must lie in P_m[t]")

    def is_zero(self) -> bool:
        return self.q1.is_zero() and self.q2.is_zero()

    def ratio_to(self, other: "MPair") -> Optional[Fraction]:
        """r with self = r * other (both components at once)."""
        if other.is_zero():
            return None
        ref = other.q1 if not other.q1.is_zero() else other.q2
        mine = self.q1 if not other.q1.is_zero() else self.q2
        r = mine.ratio_to(ref)
        if r is None:
            return None
        if self.q1 == other.q1.scale(r) and self.q2 == other.q2.scale(r):
            return r
        return None

    def component_ratios(self, other: "MPair") -> Optional[Tuple[Fraction, Fraction]]:
        r1, r2 = self.q1.ratio_to(other.q1), self.q2.ratio_to(other.q2)
        if r1 is None or r2 is None:
            return None
        return (r1, r2)

    def to_json(self):
        return {"m": self.m, "q1": self.q1, "q2": self.q2}


# -----------------------------------------------------------------------------
# pi_m and the operator 4X
# -----------------------------------------------------------------------------

def pi_m(generator: str, m: int) -> sympy.ImmutableMatrix:
    """Matrix of pi_m on the basis 1, t, ..., t^m; column j is the image of t^j.

    H = m - 2t d/dt, E = -d/dt, F = -mt + t^2 d/dt.
    """
    if m < 0:
        raise PreconditionError("m must be nonnegative")
    mat = sympy.zeros(m + 1, m + 1)
    for j in range(m + 1):
        if generator == H:
            mat[j, j] = m - 2 * j
        elif generator == E:
            if j >= 1:
                mat[j - 1, j] = -j
        elif generator == F:
            if j + 1 <= m:
                mat[j + 1, j] = j - m
        else:
            raise PreconditionError(f"unknown sl(2) generator {generator!r}")
    return sympy.ImmutableMatrix(mat)


def _rational(a) -> sympy.Rational:
    a = Fraction(a)
    return sympy.Rational(a.numerator, a.denominator)


def factor_operators(m: int) -> Tuple[sympy.ImmutableMatrix, sympy.ImmutableMatrix]:
    """F' = -mt + t^2 d/dt - d/dt and G' = mt - t^2 d/dt - d/dt."""
    e, f = pi_m(E, m), pi_m(F, m)
    return sympy.ImmutableMatrix(f + e), sympy.ImmutableMatrix(e - f)


def operator_4X_factored(m: int, a) -> sympy.ImmutableMatrix:
    f_prime, g_prime = factor_operators(m)
    return sympy.ImmutableMatrix(f_prime * pi_m(H, m) + (1 + 2 * _rational(a)) * g_prime)


def operator_4X(m: int, a) -> sympy.ImmutableMatrix:
    """t^l -> (m-l)(-m+2l+1+2a) t^{l+1} - l(m-2l+1+2a) t^{l-1}."""
    if m < 0:
        raise PreconditionError("m must be nonnegative")
    a = _rational(a)
    mat = sympy.zeros(m + 1, m + 1)
    for l in range(m + 1):
        if l + 1 <= m:
            mat[l + 1, l] = (m - l) * (-m + 2 * l + 1 + 2 * a)
        if l >= 1:
            mat[l - 1, l] = -l * (m - 2 * l + 1 + 2 * a)
    return sympy.ImmutableMatrix(mat)


def apply_4X(poly: PolyT, a) -> PolyT:
    """pi_m(4X) poly in exact arithmetic, without building the matrix."""
    m, a = poly.m, Fraction(a)
    out = [Fraction(0)] * (m + 1)
    for l, c in enumerate(poly.coefficients):
        if c == 0:
            continue
        if l + 1 <= m:
            out[l + 1] += c * (m - l) * (-m + 2 * l + 1 + 2 * a)
        if l >= 1:
            out[l - 1] -= c * l * (m - 2 * l + 1 + 2 * a)
    return PolyT(m, tuple(out))


def kernel_dimension(m: int, a) -> int:
    matrix = operator_4X(m, a)
    rows = [[_fraction(x) for x in row] for row in matrix.tolist()]
    return (m + 1) - dense_rank(rows, m + 1)


# -----------------------------------------------------------------------------
# Recurrence and hypergeometric solutions
# -----------------------------------------------------------------------------

def _lower(m: int, a: Fraction, l: int) -> Fraction:
    """Coefficient of a_l in the t^{l-1} equation: l(m - 2l + 1 + 2a)."""
    return l * (m - 2 * l + 1 + 2 * a)


def _raise(m: int, a: Fraction, l: int) -> Fraction:
    """Coefficient of a_{l-2} in the same equation: (m - l + 2)(2l - 3 - m + 2a)."""
    return (m - l + 2) * (2 * l - 3 - m + 2 * a)


def _chain_solution(m: int, a: Fraction, start: int) -> Optional[PolyT]:
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[start] = Fraction(1)
    l = start + 2
    while l <= m:
        c, r = _lower(m, a, l), _raise(m, a, l) * coeffs[l - 2]
        if c == 0:
            if r != 0:
                return None
            coeffs[l] = Fraction(0)
        else:
            coeffs[l] = r / c
        l += 2
    if (m + 1 - start) % 2 == 0 and _raise(m, a, m + 1) * coeffs[m - 1] != 0:
        return None
    return PolyT(m, tuple(coeffs))


def recurrence_solve(m: int, a) -> List[PolyT]:
    """Kernel basis of operator_4X from the two-step recurrence
    l(m-2l+1+2a) a_l = (m-l+2)(2l-3-m+2a) a_{l-2}.

    A chain may start at l = 0, or at any l >= 1 where the left factor
    vanishes; every admissible start gives one basis vector.
    """
    if m % 2 == 0 or m < 0:
        raise PreconditionError("recurrence_solve needs odd m")
    a = Fraction(a)
    out = []
    for start in range(m + 1):
        if start > 0 and _lower(m, a, start) != 0:
            continue
        sol = _chain_solution(m, a, start)
        if sol is not None:
            out.append(sol)
    logger.debug("recurrence m=%d a=%s: %d solution(s)", m, a, len(out))
    return out


def pochhammer(x: Fraction, l: int) -> Fraction:
    out = Fraction(1)
    for k in range(l):
        out *= x + k
    return out


def truncated_2f1(upper1: Fraction, upper2: Fraction, lower: Fraction, terms: int) -> List[Fraction]:
    """Coefficients of t^{2l}, l < terms, of 2F1(upper1, upper2; lower; t^2)."""
    out = []
    factorial = Fraction(1)
    for l in range(terms):
        if l:
            factorial *= l
        denom = factorial * pochhammer(lower, l)
        if denom == 0:
            raise PreconditionError("2F1 lower parameter hits a nonpositive integer")
        out.append(pochhammer(upper1, l) * pochhammer(upper2, l) / denom)
    return out


def k0(m: int, a) -> Fraction:
    return Fraction(m - 1, 4) - Fraction(a) / 2


def hypergeometric_poly(m: int, a) -> Optional[PolyT]:
    """2F1(-m/2, -k0; k0 + 1 - m/2; t^2) with k0 = (m-1-2a)/4, or None when it
    is not a polynomial of degree <= m."""
    kk = k0(m, a)
    if kk.denominator != 1 or kk < 0 or 2 * kk > m:
        return None
    kk = int(kk)
    coeffs = truncated_2f1(Fraction(-m, 2), Fraction(-kk), kk + 1 - Fraction(m, 2), kk + 1)
    poly = [Fraction(0)] * (m + 1)
    for l, c in enumerate(coeffs):
        poly[2 * l] = c
    return PolyT(m, tuple(poly))


def m_of(a: int, k: int) -> int:
    """m(a, k) = 2|a| + 1 + 4k."""
    return 2 * abs(a) + 1 + 4 * k


def _require_integer(a) -> int:
    a = Fraction(a)
    if a.denominator != 1:
        raise PreconditionError(f"q(a,k) needs integer a, got {a}")
    return int(a)


def q_poly(a, k: int) -> PolyT:
    """q(a,k;t^2) = 2F1(-|a|-1/2-2k, -a/2-|a|/2-k; a/2-|a|/2+1/2-k; t^2), summed
    over l = 0 .. a/2 + |a|/2 + k, inside P_{m(a,k)}[t]."""
    a = _require_integer(a)
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    m = m_of(a, k)
    half_sum = (a + abs(a)) // 2
    coeffs = truncated_2f1(Fraction(-2 * abs(a) - 1, 2) - 2 * k,
                           Fraction(-half_sum - k),
                           Fraction(a - abs(a) + 1, 2) - k,
                           half_sum + k + 1)
    poly = [Fraction(0)] * (m + 1)
    for l, c in enumerate(coeffs):
        poly[2 * l] = c
    return PolyT(m, tuple(poly))


# -----------------------------------------------------------------------------
# M-invariance
# -----------------------------------------------------------------------------

def allowed_degrees(m: int) -> List[int]:
    """Degrees of q1: odd for m = 1 mod 4, even for m = 3 mod 4."""
    parity = 1 if m % 4 == 1 else 0
    return [j for j in range(m + 1) if j % 2 == parity]


def pair_from_q1(q1: PolyT) -> MPair:
    """q2 = -t^m q1(-1/t)."""
    return MPair(q1.m, q1, -q1.reversal())


def m_invariant_pairs(m: int) -> List[MPair]:
    """Basis of the M-invariant pairs: q1 = t^j for the allowed j."""
    if m < 0:
        raise PreconditionError("m must be nonnegative")
    if m % 2 == 0:
        return []
    return [pair_from_q1(PolyT.monomial(m, j)) for j in allowed_degrees(m)]


def is_m_invariant(pair: MPair) -> bool:
    if pair.m % 2 == 0 or pair.is_zero():
        return False
    parity_ok = pair.q1.is_odd() if pair.m % 4 == 1 else pair.q1.is_even()
    return parity_ok and pair.q2 == -pair.q1.reversal()


def invariant_kernel(m: int, a) -> List[MPair]:
    """Pairs with pi_m(4X) q1 = pi_m(4X) q2 = 0, normalized on q1."""
    pairs = m_invariant_pairs(m)
    if not pairs:
        return []
    columns = [apply_4X(p.q1, a).coefficients + apply_4X(p.q2, a).coefficients for p in pairs]
    rows = [list(r) for r in zip(*columns)]
    null = dense_nullspace(rows, len(pairs))
    out = []
    for vec in null:
        q1 = PolyT.zero(m)
        for coef, p in zip(vec, pairs):
            q1 = q1 + p.q1.scale(coef)
        out.append(pair_from_q1(q1.normalized()))
    return out


# -----------------------------------------------------------------------------
# Kernel report
# -----------------------------------------------------------------------------

DISPLAY_A = "a"
DISPLAY_MINUS_A = "-a"
DISPLAY_A_SIGNS = "a up to component signs"
DISPLAY_MINUS_A_SIGNS = "-a up to component signs"
DISPLAY_NONE = "none"


def displayed_pair(a: int, k: int) -> MPair:
    """(-t^m q(t^-2), q(t^2)) for even a, (q(t^2), -t^m q(t^-2)) for odd a."""
    q = q_poly(a, k)
    m = q.m
    flipped = PolyT(m, tuple(-c for c in reversed(q.coefficients)))
    if a % 2 == 0:
        return MPair(m, flipped, q)
    return MPair(m, q, flipped)


@dataclass(frozen=True)
class KernelEntry:
    m: int
    pair: MPair
    display: Optional[MPair] = None
    display_match: str = DISPLAY_NONE
    component_ratios: Optional[Tuple[Fraction, Fraction]] = None

    def to_json(self):
        return {"m": self.m, "pair": self.pair, "display": self.display,
                "display_match": self.display_match,
                "component_ratios": None if self.component_ratios is None else list(self.component_ratios)}


@dataclass(frozen=True)
class KernelReport:
    a: Fraction
    m_max: int
    entries: Tuple[KernelEntry, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.entries

    @property
    def m_values(self) -> List[int]:
        return [e.m for e in self.entries]

    def to_json(self):
        return {"a": self.a, "m_max": self.m_max, "empty": self.empty,
                "m_values": self.m_values, "entries": list(self.entries)}


def _compare_display(a: int, m: int, pair: MPair) -> Tuple[Optional[MPair], str, Optional[Tuple]]:
    k = (m - 2 * abs(a) - 1) // 4
    if k < 0 or m_of(a, k) != m:
        return None, DISPLAY_NONE, None
    display = displayed_pair(a, k)
    if display.ratio_to(pair) is not None:
        return display, DISPLAY_A, display.component_ratios(pair)
    ratios = display.component_ratios(pair)
    if ratios is not None:
        logger.info("displayed kernel basis at a=%s, m=%d matches only up to component signs %s",
                    a, m, ratios)
        return display, DISPLAY_A_SIGNS, ratios
    for other in invariant_kernel(m, -a):
        if display.ratio_to(other) is not None:
            return display, DISPLAY_MINUS_A, display.component_ratios(other)
        ratios = display.component_ratios(other)
        if ratios is not None:
            return display, DISPLAY_MINUS_A_SIGNS, ratios
    logger.warning("displayed kernel basis at a=%s, m=%d matches no computed pair", a, m)
    return display, DISPLAY_NONE, None


def kernel_report(a, m_max: int) -> KernelReport:
    """M-invariant kernel of pi_m(4X) for every odd m <= m_max."""
    if m_max < 1:
        raise PreconditionError("m_max must be at least 1")
    a = Fraction(a)
    entries = []
    for m in range(1, m_max + 1, 2):
        for pair in invariant_kernel(m, a):
            if a.denominator == 1:
                display, match, ratios = _compare_display(int(a), m, pair)
            else:
                display, match, ratios = None, DISPLAY_NONE, None
            entries.append(KernelEntry(m, pair, display, match, ratios))
    return KernelReport(a, m_max, tuple(entries))


def admissible_m(a, m_max: int) -> List[int]:
    """2|a| + 1 + 4N up to m_max; empty for non-integer a."""
    a = Fraction(a)
    if a.denominator != 1:
        return []
    return list(range(m_of(int(a), 0), m_max + 1, 4))


# -----------------------------------------------------------------------------
# The lambda(2,-a) forcing check and X
# -----------------------------------------------------------------------------

def _check_n3(lam: Weight):
    if lam.n != 3:
        raise PreconditionError("the lambda(2,-a) check lives in sl(3)")


def lowest_vector_iota(a) -> UEElem:
    """iota(sym(sum_k T_{3,k}T_{k,1} - (a/3) T_{3,1})), the lowest vector of iota sym(F^a)."""
    return iota(symmetrize(f1m1_embed(basis(3, 1, 3), a)))


@dataclass(frozen=True)
class Lambda2aResult:
    a: Fraction
    weight: Weight
    coefficient_T12: Fraction
    coefficient_T23: Fraction
    residue_T12: UEElem
    residue_T23: UEElem

    @property
    def holds(self) -> bool:
        return self.residue_T12.is_zero() and self.residue_T23.is_zero()

    def to_json(self):
        return {"a": self.a, "weight": self.weight, "holds": self.holds,
                "coefficient_T12": self.coefficient_T12, "coefficient_T23": self.coefficient_T23,
                "residue_T12": self.residue_T12, "residue_T23": self.residue_T23,
                "expected_T12": self.weight.component(1) - self.a / 3 + Fraction(1, 2),
                "expected_T23": -self.weight.component(3) + self.a / 3 + Fraction(1, 2)}


def lambda2a_coefficients(a, lam: Weight) -> Lambda2aResult:
    """Reduce [T12, v] and [T23, v] modulo I(b, lambda).

    The residues are multiples of T32 and T21 respectively.
    """
    _check_n3(lam)
    a = Fraction(a)
    v = lowest_vector_iota(a)
    borel = ParabolicSpec.borel(3)
    r1 = reduce_mod_ideal(embed(basis(1, 2, 3)).commutator(v), borel, lam)
    r2 = reduce_mod_ideal(embed(basis(2, 3, 3)).commutator(v), borel, lam)
    return Lambda2aResult(a, lam, r1.coefficient("T32"), r2.coefficient("T21"), r1, r2)


def lambda2a_check(a, lam: Weight) -> bool:
    """[n, iota sym(F^a)] lies in I(b, lambda); holds iff lambda = lambda(2,-a)."""
    return lambda2a_coefficients(a, lam).holds


def compact_generators() -> Tuple[UEElem, UEElem, UEElem]:
    """K1 = T21 - T12, K2 = T32 - T23, K3 = T31 - T13."""
    def k(i, j):
        return ue_from_labels(3, {(f"T{i}{j}",): 1, (f"T{j}{i}",): -1})
    return k(2, 1), k(3, 2), k(3, 1)


def x_element(a) -> UEElem:
    """X = (T21 - T12)(T32 - T23) + (a + 1/2)(T31 - T13)."""
    k1, k2, k3 = compact_generators()
    return k1 * k2 + k3.scale(Fraction(a) + Fraction(1, 2))


def x_congruence_residue(a) -> UEElem:
    """X minus the lowest vector of iota sym(F^a), reduced at lambda(2,-a)."""
    a = Fraction(a)
    lam = lambda_ia(3, 2, -a)
    return reduce_mod_ideal(x_element(a) - lowest_vector_iota(a), ParabolicSpec.borel(3), lam)
