"""
Degree <= 2 Symmetric Algebra of sl(n)

Elements of C + g + S^2(g), the adjoint action, the Casimir element, the
irreducible summands of S^2(g) built by adjoint closure of their highest
weight vectors, the family F^a and the zero weight space machinery.

Quadratic monomials are unordered pairs over the reduced basis of g (T_{n,n}
eliminated), so every element has a unique coordinate vector.

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
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from liealg import (
    BasisIndex,
    TracelessMatrix,
    Weight,
    basis,
    basis_bracket,
    basis_weight_vector,
    bracket,
    coords,
    matrix_inner,
    reduced_basis,
    structure_cache,
    weyl_dimension,
)
from utils.errors import DimensionError, PreconditionError
from utils.sparse_linalg import EchelonBasis, add_scaled, sparse_rank

logger = logging.getLogger(__name__)

QuadKey = Tuple[BasisIndex, BasisIndex]


def quad_key(b1: BasisIndex, b2: BasisIndex) -> QuadKey:
    return (b1, b2) if b1 <= b2 else (b2, b1)


@dataclass(frozen=True)
class Poly2Elem:
    """scalar + linear + quadratic, an element of C + g + S^2(g)."""

    n: int
    scalar: Fraction = Fraction(0)
    linear: Optional[TracelessMatrix] = None
    quadratic: Dict[QuadKey, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if self.linear is None:
            object.__setattr__(self, "linear", TracelessMatrix.zero(self.n))
        elif self.linear.n != self.n:
            raise DimensionError("linear part has the wrong size")
        object.__setattr__(self, "quadratic",
                           {quad_key(*k): Fraction(v) for k, v in self.quadratic.items() if v != 0})

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly2Elem":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Poly2Elem":
        return cls(n, scalar=Fraction(c))

    @classmethod
    def from_matrix(cls, x: TracelessMatrix) -> "Poly2Elem":
        return cls(x.n, linear=x)

    # -- vector space structure --------------------------------------------

    def _check(self, other):
        if other.n != self.n:
            raise DimensionError(f"sl({self.n}) and sl({other.n}) elements cannot be combined")

    def __add__(self, other):
        self._check(other)
        quad = dict(self.quadratic)
        add_scaled(quad, 1, other.quadratic)
        return Poly2Elem(self.n, self.scalar + other.scalar, self.linear + other.linear, quad)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Poly2Elem":
        c = Fraction(c)
        return Poly2Elem(self.n, c * self.scalar, self.linear.scale(c),
                         {k: c * v for k, v in self.quadratic.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return self.scalar == 0 and self.linear.is_zero() and not self.quadratic

    @property
    def degree(self) -> int:
        if self.quadratic:
            return 2
        if not self.linear.is_zero():
            return 1
        return 0

    # -- coordinates --------------------------------------------------------

    def to_vector(self) -> Dict[tuple, Fraction]:
        vec = {}
        if self.scalar:
            vec[("0",)] = self.scalar
        for b, c in coords(self.linear).items():
            vec[("1", b)] = c
        for (b1, b2), c in self.quadratic.items():
            vec[("2", b1, b2)] = c
        return vec

    @classmethod
    def from_vector(cls, n: int, vec: Dict[tuple, Fraction]) -> "Poly2Elem":
        scalar = Fraction(0)
        linear = TracelessMatrix.zero(n)
        quad = {}
        for key, c in vec.items():
            if key[0] == "0":
                scalar += c
            elif key[0] == "1":
                linear = linear + basis(*key[1], n).scale(c)
            else:
                quad[(key[1], key[2])] = c
        return cls(n, scalar, linear, quad)

    def weight_components(self) -> Dict[Tuple[int, ...], Dict[tuple, Fraction]]:
        """Split the coordinate vector by weight."""
        out: Dict[Tuple[int, ...], Dict[tuple, Fraction]] = {}
        for key, c in self.to_vector().items():
            out.setdefault(_key_weight(key, self.n), {})[key] = c
        return out

    def weight(self) -> Optional[Tuple[int, ...]]:
        """Integer weight if the element is a nonzero weight vector."""
        parts = self.weight_components()
        if len(parts) != 1:
            return None
        return next(iter(parts))

    def to_json(self):
        return {
            "scalar": self.scalar,
            "linear": {f"T{i}{j}": c for (i, j), c in sorted(coords(self.linear).items())},
            "quadratic": {f"T{a}{b}*T{c}{d}": v
                          for ((a, b), (c, d)), v in sorted(self.quadratic.items())},
        }


def _key_weight(key: tuple, n: int) -> Tuple[int, ...]:
    if key[0] == "0":
        return (0,) * n
    if key[0] == "1":
        return basis_weight_vector(key[1], n)
    w1 = basis_weight_vector(key[1], n)
    w2 = basis_weight_vector(key[2], n)
    return tuple(x + y for x, y in zip(w1, w2))


def product(x: TracelessMatrix, y: TracelessMatrix) -> Poly2Elem:
    """The symmetric product XY in S^2(g)."""
    if x.n != y.n:
        raise DimensionError(f"sl({x.n}) and sl({y.n}) elements cannot be multiplied")
    cx, cy = coords(x), coords(y)
    quad: Dict[QuadKey, Fraction] = {}
    for b1, c1 in cx.items():
        for b2, c2 in cy.items():
            key = quad_key(b1, b2)
            quad[key] = quad.get(key, 0) + c1 * c2
    return Poly2Elem(x.n, quadratic=quad)


def T(i: int, j: int, n: int) -> TracelessMatrix:
    return basis(i, j, n)


def TT(i: int, j: int, k: int, l: int, n: int) -> Poly2Elem:
    """T_{i,j} T_{k,l} as a quadratic monomial."""
    return product(basis(i, j, n), basis(k, l, n))


# -----------------------------------------------------------------------------
# Adjoint action
# -----------------------------------------------------------------------------

def adjoint_act_basis(b: BasisIndex, v: Poly2Elem) -> Poly2Elem:
    """ad(T_b) v by the Leibniz rule on quadratic monomials."""
    n = v.n
    linear = bracket(basis(*b, n), v.linear)
    quad: Dict[QuadKey, Fraction] = {}
    for (b1, b2), c in v.quadratic.items():
        for b3, d in basis_bracket(b, b1, n).items():
            key = quad_key(b3, b2)
            quad[key] = quad.get(key, 0) + c * d
        for b3, d in basis_bracket(b, b2, n).items():
            key = quad_key(b1, b3)
            quad[key] = quad.get(key, 0) + c * d
    return Poly2Elem(n, Fraction(0), linear, quad)


def adjoint_act(x: TracelessMatrix, v: Poly2Elem) -> Poly2Elem:
    if x.n != v.n:
        raise DimensionError(f"cannot act by sl({x.n}) on an sl({v.n}) element")
    out = Poly2Elem.zero(v.n)
    for b, c in coords(x).items():
        out = out + adjoint_act_basis(b, v).scale(c)
    return out


def casimir_element(n: int) -> Poly2Elem:
    """Omega = sum_{i,j} T_{i,j} T_{j,i}."""
    if n < 2:
        raise PreconditionError("casimir_element needs n >= 2")
    out = Poly2Elem.zero(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = out + TT(i, j, j, i, n)
    return out


def f1m1_embed(a_mat: TracelessMatrix, a) -> Poly2Elem:
    """sum_{i,j,k} A_{i,j} T_{i,k} T_{k,j} - a(n-2)/n A."""
    n = a_mat.n
    a = Fraction(a)
    out = Poly2Elem.zero(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            coef = a_mat.entry(i, j)
            if coef == 0:
                continue
            for k in range(1, n + 1):
                out = out + TT(i, k, k, j, n).scale(coef)
    return out - Poly2Elem.from_matrix(a_mat.scale(a * (n - 2) / n))


# -----------------------------------------------------------------------------
# Subspaces
# -----------------------------------------------------------------------------

class WeightSpaceEchelon:
    """Echelon bases kept per weight; valid for spans of weight vectors."""

    def __init__(self, n: int):
        self.n = n
        self._spaces: Dict[Tuple[int, ...], EchelonBasis] = {}

    def add(self, v: Poly2Elem) -> bool:
        w = v.weight()
        if w is None:
            raise PreconditionError("only weight vectors can be indexed by weight")
        space = self._spaces.setdefault(w, EchelonBasis())
        return space.add(v.to_vector()) is not None

    def contains(self, v: Poly2Elem) -> bool:
        for w, part in v.weight_components().items():
            space = self._spaces.get(w)
            if space is None or not space.contains(part):
                return False
        return True

    def __len__(self):
        return sum(len(s) for s in self._spaces.values())


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent Poly2Elem list, optionally flagged as a g-submodule."""

    n: int
    vectors: Tuple[Poly2Elem, ...] = ()
    label: str = ""
    submodule: bool = False

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    @cached_property
    def _weight_indexed(self) -> bool:
        return all(v.weight() is not None for v in self.vectors)

    @cached_property
    def _index(self):
        if self._weight_indexed:
            index = WeightSpaceEchelon(self.n)
            for v in self.vectors:
                index.add(v)
            return index
        return EchelonBasis(v.to_vector() for v in self.vectors)

    def contains(self, v: Poly2Elem) -> bool:
        if isinstance(self._index, WeightSpaceEchelon):
            return self._index.contains(v)
        return self._index.contains(v.to_vector())

    def rank(self) -> int:
        return sparse_rank(v.to_vector() for v in self.vectors)

    def zero_weight_vectors(self) -> List[Poly2Elem]:
        """Basis of the zero weight space, from the weight-0 components of the vectors."""
        zero = (0,) * self.n
        parts = (v.weight_components().get(zero) for v in self.vectors)
        return independent_subset(Poly2Elem.from_vector(self.n, p) for p in parts if p)

    @cached_property
    def closed(self) -> bool:
        return self.verify_closure()

    def verify_closure(self) -> bool:
        """Every ad(T_b) v stays inside the span."""
        for v in self.vectors:
            for b in reduced_basis(self.n):
                if not self.contains(adjoint_act_basis(b, v)):
                    logger.debug("closure fails for %s under T%s", self.label, b)
                    return False
        return True

    def to_json(self):
        return {"label": self.label, "dim": self.dim, "submodule": self.submodule}


def independent_subset(vectors: Iterable[Poly2Elem]) -> List[Poly2Elem]:
    echelon = EchelonBasis()
    kept = []
    for v in vectors:
        if echelon.add(v.to_vector()) is not None:
            kept.append(v)
    return kept


def span_dimension(vectors: Iterable[Poly2Elem]) -> int:
    return sparse_rank(v.to_vector() for v in vectors)


def lowering_simple(n: int) -> List[BasisIndex]:
    return [(i + 1, i) for i in range(1, n)]


def raising_basis(n: int) -> List[BasisIndex]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def lowering_basis(n: int) -> List[BasisIndex]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, i)]


def adjoint_closure(seeds: Sequence[Poly2Elem], label: str = "",
                    operators: Optional[Sequence[BasisIndex]] = None) -> SubspaceBasis:
    """Span of everything reachable from the seeds under the given ad(T_b).

    With the default operators (simple lowering root vectors) the closure of a
    highest weight vector is the irreducible submodule it generates.
    """
    if not seeds:
        raise PreconditionError("adjoint_closure needs at least one seed")
    n = seeds[0].n
    ops = list(operators) if operators is not None else lowering_simple(n)
    index = WeightSpaceEchelon(n)
    kept: List[Poly2Elem] = []
    queue = deque()
    for s in seeds:
        if s.is_zero():
            continue
        if index.add(s):
            kept.append(s)
            queue.append(s)
    while queue:
        v = queue.popleft()
        for b in ops:
            w = adjoint_act_basis(b, v)
            if w.is_zero():
                continue
            if index.add(w):
                kept.append(w)
                queue.append(w)
    logger.debug("adjoint closure %s: dim %d", label, len(kept))
    return SubspaceBasis(n, tuple(kept), label, submodule=True)


# -----------------------------------------------------------------------------
# The decomposition of S^2(g)
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class HighestWeightVector:
    label: str
    highest_weight: Weight
    vector: Poly2Elem


def _weight_from_ints(values: Sequence[int]) -> Weight:
    return Weight(tuple(Fraction(v) for v in values))


def highest_weight_vectors(n: int) -> List[HighestWeightVector]:
    """Highest weight vectors of F(2e1-2en), F(e1+e2-e_{n-1}-en), F(e1-en), F(0)."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    out = []
    hw = [0] * n
    hw[0], hw[-1] = 2, -2
    out.append(HighestWeightVector("F(2e1-2en)", _weight_from_ints(hw), TT(1, n, 1, n, n)))
    if n >= 4:
        hw = [0] * n
        hw[0] = hw[1] = 1
        hw[-1] = hw[-2] = -1
        vec = TT(1, n - 1, 2, n, n) - TT(1, n, 2, n - 1, n)
        out.append(HighestWeightVector("F(e1+e2-e(n-1)-en)", _weight_from_ints(hw), vec))
    if n >= 3:
        hw = [0] * n
        hw[0], hw[-1] = 1, -1
        vec = Poly2Elem.zero(n)
        for k in range(1, n + 1):
            vec = vec + TT(1, k, k, n, n)
        out.append(HighestWeightVector("F(e1-en)", _weight_from_ints(hw), vec))
    out.append(HighestWeightVector("F(0)", Weight.zero(n), casimir_element(n)))
    return out


@structure_cache
def summand(n: int, label: str) -> SubspaceBasis:
    for hwv in highest_weight_vectors(n):
        if hwv.label == label:
            return adjoint_closure([hwv.vector], label)
    raise PreconditionError(f"no summand {label!r} for n={n}")


@dataclass(frozen=True)
class SummandReport:
    label: str
    highest_weight: Weight
    dim: int
    weyl_dim: int

    def to_json(self):
        return {"label": self.label, "highest_weight": self.highest_weight,
                "dim": self.dim, "weyl_dim": self.weyl_dim}


@dataclass(frozen=True)
class S2Decomposition:
    n: int
    summands: Tuple[SummandReport, ...]
    total_dim: int
    sum_rank: int

    @property
    def expected_total(self) -> int:
        return (self.n ** 2 - 1) * self.n ** 2 // 2

    @property
    def passed(self) -> bool:
        dims_ok = all(s.dim == s.weyl_dim for s in self.summands)
        return dims_ok and self.total_dim == self.expected_total and self.sum_rank == self.total_dim

    def to_json(self):
        return {"n": self.n, "summands": list(self.summands), "dims": [s.dim for s in self.summands],
                "total_dim": self.total_dim, "expected_total": self.expected_total,
                "sum_rank": self.sum_rank, "passed": self.passed}


def decompose_s2(n: int) -> S2Decomposition:
    reports = []
    all_vectors: List[Poly2Elem] = []
    for hwv in highest_weight_vectors(n):
        space = summand(n, hwv.label)
        reports.append(SummandReport(hwv.label, hwv.highest_weight, space.dim,
                                     weyl_dimension(hwv.highest_weight)))
        all_vectors.extend(space.vectors)
    total = sum(r.dim for r in reports)
    return S2Decomposition(n, tuple(reports), total, span_dimension(all_vectors))


def quadratic_space_dim(n: int) -> int:
    """Number of unordered pairs over the reduced basis."""
    size = len(reduced_basis(n))
    return size * (size + 1) // 2


# -----------------------------------------------------------------------------
# F(e1+e2-e_{n-1}-en) + F(0) + F(e1-en) spanning set and zero weight space
# -----------------------------------------------------------------------------

@structure_cache
def f1111_generators(n: int) -> SubspaceBasis:
    """Basis of span{T_{i,j}T_{k,l} - T_{i,l}T_{k,j}}."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    idx = range(1, n + 1)
    gens = (TT(i, j, k, l, n) - TT(i, l, k, j, n) for i, j, k, l in itertools.product(idx, repeat=4))
    return SubspaceBasis(n, tuple(independent_subset(g for g in gens if not g.is_zero())),
                         "span{TijTkl-TilTkj}", submodule=True)


def t_map(a_mat: TracelessMatrix) -> Poly2Elem:
    """A -> sum_{i<j} A_{i,j} (T_{i,i}T_{j,j} - T_{i,j}T_{j,i}) on strictly upper A."""
    n = a_mat.n
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if a_mat.entry(i, j) != 0:
                raise PreconditionError("t_map needs a strictly upper triangular matrix")
    out = Poly2Elem.zero(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coef = a_mat.entry(i, j)
            if coef:
                out = out + (TT(i, i, j, j, n) - TT(i, j, j, i, n)).scale(coef)
    return out


def m_space(i: int, j: int, k: int, l: int, n: int) -> SubspaceBasis:
    """a1(T_ij+T_kl) + a2(T_ik+T_jl) + a3(T_il+T_jk) with a1+a2+a3 = 0."""
    if not 1 <= i < j < k < l <= n:
        raise PreconditionError(f"indices must satisfy 1 <= i<j<k<l <= n, got {(i, j, k, l)}")
    p1 = basis(i, j, n) + basis(k, l, n)
    p2 = basis(i, k, n) + basis(j, l, n)
    p3 = basis(i, l, n) + basis(j, k, n)
    vectors = (Poly2Elem.from_matrix(p1 - p2), Poly2Elem.from_matrix(p2 - p3))
    return SubspaceBasis(n, vectors, f"M({i},{j},{k},{l})")


def all_m_vectors(n: int) -> List[Poly2Elem]:
    out = []
    for quad in itertools.combinations(range(1, n + 1), 4):
        out.extend(m_space(*quad, n).vectors)
    return out


@structure_cache
def zero_weight_f1111(n: int) -> SubspaceBasis:
    if n < 4:
        raise PreconditionError("the zero weight space of F(e1+e2-e(n-1)-en) needs n >= 4")
    images = (t_map(m.linear) for m in all_m_vectors(n))
    vectors = independent_subset(v for v in images if not v.is_zero())
    return SubspaceBasis(n, tuple(vectors), "F(e1+e2-e(n-1)-en)_0")


def diagonal_casimir_parts(n: int) -> List[Poly2Elem]:
    """sum_k T_{i,k} T_{k,i} for i = 1..n."""
    out = []
    for i in range(1, n + 1):
        vec = Poly2Elem.zero(n)
        for k in range(1, n + 1):
            vec = vec + TT(i, k, k, i, n)
        out.append(vec)
    return out


def _gram(b1: BasisIndex, b2: BasisIndex, n: int) -> Fraction:
    return matrix_inner(basis(*b1, n), basis(*b2, n))


def hermitian_product(u: Poly2Elem, v: Poly2Elem) -> Fraction:
    """(X,Y) = Tr(X tY) on g, extended to S^2(g) through symmetric tensors:
    (XY, ZW) = ((X,Z)(Y,W) + (X,W)(Y,Z)) / 2.
    """
    if u.n != v.n:
        raise DimensionError("hermitian_product needs elements of the same sl(n)")
    n = u.n
    total = u.scalar * v.scalar + matrix_inner(u.linear, v.linear)
    for (b1, b2), c in u.quadratic.items():
        for (b3, b4), d in v.quadratic.items():
            total += c * d * (_gram(b1, b3, n) * _gram(b2, b4, n)
                              + _gram(b1, b4, n) * _gram(b2, b3, n)) / 2
    return total


# -----------------------------------------------------------------------------
# F^a
# -----------------------------------------------------------------------------

@structure_cache
def fa_space(n: int, a) -> SubspaceBasis:
    """F^a = F(e1+e2-e(n-1)-en) + F(e1-en)^a; empty for n = 2."""
    a = Fraction(a)
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if n == 2:
        return SubspaceBasis(n, (), f"F^{a}", submodule=True)
    vectors: List[Poly2Elem] = []
    if n >= 4:
        vectors.extend(summand(n, "F(e1+e2-e(n-1)-en)").vectors)
    vectors.extend(f1m1_embed(basis(*b, n), a) for b in reduced_basis(n))
    return SubspaceBasis(n, tuple(vectors), f"F^{a}", submodule=True)


def fa_lowest_vectors(n: int, a) -> List[Poly2Elem]:
    if n < 3:
        return []
    out = []
    if n >= 4:
        out.append(TT(n, 1, n - 1, 2, n) - TT(n, 2, n - 1, 1, n))
    out.append(f1m1_embed(basis(n, 1, n), a))
    return out
