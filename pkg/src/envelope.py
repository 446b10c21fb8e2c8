"""
Enveloping Algebra of sl(n)

PBW normal ordering by commutator rewriting, symmetrization of degree <= 2
elements, the antiautomorphism iota (X -> -X on g) and reduction modulo the
left ideals I(q, lambda) for the Borel and the two mirabolic parabolics.

Generators, in the default order: lowering T_{i,j} (i > j, lexicographic),
then H_k = T_{k,k} - T_{k+1,k+1}, then raising T_{i,j} (i < j, lexicographic).
A PBW word is a tuple of generator indices that is nondecreasing in the
active ranking.

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
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from liealg import TracelessMatrix, Weight, basis, bracket, structure_cache
from symdecomp import Poly2Elem
from utils.errors import DimensionError, PreconditionError, ResourceLimitError
from utils.minrep_config import get_minrep_config
from utils.sparse_linalg import add_scaled

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """T_{i,j} (i != j) or H_i = T_{i,i} - T_{i+1,i+1}."""

    kind: str
    i: int
    j: int

    @property
    def label(self) -> str:
        return f"H{self.i}" if self.kind == "H" else f"T{self.i}{self.j}"

    @property
    def is_lowering(self) -> bool:
        return self.kind == "T" and self.i > self.j

    @property
    def is_raising(self) -> bool:
        return self.kind == "T" and self.i < self.j

    def matrix(self, n: int) -> TracelessMatrix:
        if self.kind == "H":
            return basis(self.i, self.i, n) - basis(self.i + 1, self.i + 1, n)
        return basis(self.i, self.j, n)


@structure_cache
def generators(n: int) -> Tuple[Generator, ...]:
    if n < 2:
        raise PreconditionError("the enveloping algebra needs n >= 2")
    lowering = [Generator("T", i, j) for i in range(1, n + 1) for j in range(1, i)]
    cartan = [Generator("H", k, k + 1) for k in range(1, n)]
    raising = [Generator("T", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(lowering + cartan + raising)


@structure_cache
def generator_index(n: int) -> Dict[str, int]:
    return {g.label: k for k, g in enumerate(generators(n))}


def decompose(x: TracelessMatrix) -> Dict[int, Fraction]:
    """Coordinates of X on the generators: off-diagonal entries, and
    c_k = sum_{i <= k} X_{i,i} on H_k."""
    n = x.n
    index = generator_index(n)
    out: Dict[int, Fraction] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and x.entry(i, j) != 0:
                out[index[f"T{i}{j}"]] = x.entry(i, j)
    partial = Fraction(0)
    for k in range(1, n):
        partial += x.entry(k, k)
        if partial != 0:
            out[index[f"H{k}"]] = partial
    return out


@structure_cache
def generator_bracket(x: int, y: int, n: int) -> Tuple[Tuple[int, Fraction], ...]:
    gens = generators(n)
    return tuple(sorted(decompose(bracket(gens[x].matrix(n), gens[y].matrix(n))).items()))


class PBWAlgebra:
    """Normal ordering for one ranking of the generators.

    Rewrites the first descent xy -> yx + [x, y] until every word is
    nondecreasing; results are memoized per word.
    """

    def __init__(self, n: int, ranking: Sequence[int]):
        self.n = n
        self.ranking = tuple(ranking)
        self._memo: Dict[Word, Dict[Word, Fraction]] = {}

    def is_ordered(self, word: Word) -> bool:
        rank = self.ranking
        return all(rank[word[p]] <= rank[word[p + 1]] for p in range(len(word) - 1))

    def order(self, word: Word) -> Dict[Word, Fraction]:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        rank = self.ranking
        descent = None
        for p in range(len(word) - 1):
            if rank[word[p]] > rank[word[p + 1]]:
                descent = p
                break
        if descent is None:
            result = {word: Fraction(1)}
        else:
            p = descent
            x, y = word[p], word[p + 1]
            result = dict(self.order(word[:p] + (y, x) + word[p + 2:]))
            for g, c in generator_bracket(x, y, self.n):
                add_scaled(result, c, self.order(word[:p] + (g,) + word[p + 2:]))
        self._memo[word] = result
        return result


def default_ranking(n: int) -> Tuple[int, ...]:
    return tuple(range(len(generators(n))))


@structure_cache
def pbw_algebra(n: int, ranking: Optional[Tuple[int, ...]] = None) -> PBWAlgebra:
    return PBWAlgebra(n, ranking if ranking is not None else default_ranking(n))


def _check_length(length: int):
    bound = get_minrep_config().max_word_length
    if length > bound:
        raise ResourceLimitError(f"word of length {length} exceeds the bound {bound}")


@dataclass(frozen=True)
class UEElem:
    """Element of U(sl(n)) in PBW normal form: word -> coefficient."""

    n: int
    terms: Dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms",
                           {tuple(w): Fraction(c) for w, c in self.terms.items() if c != 0})

    @classmethod
    def zero(cls, n: int) -> "UEElem":
        return cls(n)

    @classmethod
    def scalar(cls, n: int, c) -> "UEElem":
        return cls(n, {(): Fraction(c)})

    @classmethod
    def one(cls, n: int) -> "UEElem":
        return cls.scalar(n, 1)

    @classmethod
    def generator(cls, n: int, label: str) -> "UEElem":
        try:
            return cls(n, {(generator_index(n)[label],): Fraction(1)})
        except KeyError as e:
            raise PreconditionError(f"unknown generator {label!r} for sl({n})") from e

    def _check(self, other):
        if other.n != self.n:
            raise DimensionError(f"U(sl({self.n})) and U(sl({other.n})) elements cannot be combined")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        add_scaled(terms, 1, other.terms)
        return UEElem(self.n, terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "UEElem":
        c = Fraction(c)
        return UEElem(self.n, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, UEElem):
            return self.scale(other)
        self._check(other)
        algebra = pbw_algebra(self.n)
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _check_length(len(w1) + len(w2))
                add_scaled(out, c1 * c2, algebra.order(w1 + w2))
        return UEElem(self.n, out)

    def commutator(self, other: "UEElem") -> "UEElem":
        return self * other - other * self

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coefficient(self, *labels: str) -> Fraction:
        index = generator_index(self.n)
        return self.terms.get(tuple(index[l] for l in labels), Fraction(0))

    def word_label(self, word: Word) -> str:
        gens = generators(self.n)
        return "*".join(gens[g].label for g in word) or "1"

    def to_json(self):
        return {self.word_label(w): c for w, c in sorted(self.terms.items())}

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c}){self.word_label(w)}" for w, c in sorted(self.terms.items()))


def normal_order_words(n: int, words: Dict[Word, Fraction]) -> UEElem:
    algebra = pbw_algebra(n)
    out: Dict[Word, Fraction] = {}
    for word, c in words.items():
        _check_length(len(word))
        add_scaled(out, c, algebra.order(tuple(word)))
    return UEElem(n, out)


def normal_order(word: Sequence[TracelessMatrix]) -> UEElem:
    """The product X_1 X_2 ... X_k of matrices, in PBW normal form."""
    if not word:
        raise PreconditionError("normal_order needs a nonempty word; use UEElem.one for 1")
    n = word[0].n
    if any(x.n != n for x in word):
        raise DimensionError("all letters of a word must lie in the same sl(n)")
    _check_length(len(word))
    expanded: Dict[Word, Fraction] = {(): Fraction(1)}
    for x in word:
        step: Dict[Word, Fraction] = {}
        for g, c in decompose(x).items():
            for w, d in expanded.items():
                add_scaled(step, c * d, {w + (g,): Fraction(1)})
        expanded = step
    return normal_order_words(n, expanded)


def embed(x: TracelessMatrix) -> UEElem:
    return UEElem(x.n, {(g,): c for g, c in decompose(x).items()})


def symmetrize(p: Poly2Elem) -> UEElem:
    """sym(XY) = (XY + YX)/2 on quadratic monomials, identity below degree 2."""
    n = p.n
    out = UEElem.scalar(n, p.scalar) + embed(p.linear)
    for (b1, b2), c in p.quadratic.items():
        x, y = embed(basis(*b1, n)), embed(basis(*b2, n))
        out = out + (x * y + y * x).scale(c / 2)
    return out


def iota(u: UEElem) -> UEElem:
    """Antiautomorphism with iota(X) = -X on g."""
    words = {tuple(reversed(w)): c * (-1) ** len(w) for w, c in u.terms.items()}
    return normal_order_words(u.n, words)


# -----------------------------------------------------------------------------
# Parabolics and reduction modulo I(q, lambda)
# -----------------------------------------------------------------------------

BOREL = "borel"
MIRABOLIC_1 = "q(1,n-1)"
MIRABOLIC_N1 = "q(n-1,1)"
PARABOLIC_KINDS = (BOREL, MIRABOLIC_1, MIRABOLIC_N1)


@dataclass(frozen=True)
class ParabolicSpec:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in PARABOLIC_KINDS:
            raise PreconditionError(f"unknown parabolic {self.kind!r}; expected one of {PARABOLIC_KINDS}")
        if self.n < 2:
            raise PreconditionError("parabolics need n >= 2")

    @classmethod
    def borel(cls, n: int) -> "ParabolicSpec":
        return cls(BOREL, n)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        if self.kind == BOREL:
            return (1,) * self.n
        if self.kind == MIRABOLIC_1:
            return (1, self.n - 1)
        return (self.n - 1, 1)

    def block_of(self, i: int) -> int:
        end = 0
        for b, size in enumerate(self.block_sizes):
            end += size
            if i <= end:
                return b
        raise PreconditionError(f"index {i} out of range 1..{self.n}")

    def in_opposite_nilradical(self, g: Generator) -> bool:
        return g.is_lowering and self.block_of(g.i) != self.block_of(g.j)

    def is_character(self, lam: Weight) -> bool:
        """lambda is constant on every Levi block."""
        if lam.n != self.n:
            return False
        return all(lam.component(i) == lam.component(i + 1)
                   for i in range(1, self.n) if self.block_of(i) == self.block_of(i + 1))

    def ranking(self) -> Tuple[int, ...]:
        """Opposite nilradical first, then q, each in default order."""
        gens = generators(self.n)
        first = [k for k, g in enumerate(gens) if self.in_opposite_nilradical(g)]
        rest = [k for k, g in enumerate(gens) if not self.in_opposite_nilradical(g)]
        rank = [0] * len(gens)
        for r, k in enumerate(first + rest):
            rank[k] = r
        return tuple(rank)

    def to_json(self):
        return {"kind": self.kind, "n": self.n}


def character_value(g: Generator, lam: Weight) -> Fraction:
    if g.kind == "H":
        return lam.component(g.i) - lam.component(g.i + 1)
    return Fraction(0)


def reduce_mod_ideal(u: UEElem, q: ParabolicSpec, lam: Weight) -> UEElem:
    """Representative of u modulo I(q, lambda) supported on U(opposite nilradical)."""
    if q.n != u.n or lam.n != u.n:
        raise DimensionError("element, parabolic and weight must share n")
    if not q.is_character(lam):
        raise PreconditionError(f"{lam} is not a character of {q.kind}")
    gens = generators(u.n)
    ranking = q.ranking()
    algebra = pbw_algebra(u.n, None if q.kind == BOREL else ranking)
    out: Dict[Word, Fraction] = {}
    for word, c in u.terms.items():
        for ordered, d in algebra.order(word).items():
            split = 0
            while split < len(ordered) and q.in_opposite_nilradical(gens[ordered[split]]):
                split += 1
            value = c * d
            for g in ordered[split:]:
                value *= character_value(gens[g], lam)
                if value == 0:
                    break
            if value != 0:
                add_scaled(out, value, {ordered[:split]: Fraction(1)})
    return UEElem(u.n, out)


def ue_from_labels(n: int, products: Dict[Tuple[str, ...], Fraction]) -> UEElem:
    """Normal-ordered sum of products given by generator labels."""
    index = generator_index(n)
    try:
        words = {tuple(index[l] for l in labels): Fraction(c) for labels, c in products.items()}
    except KeyError as e:
        raise PreconditionError(f"unknown generator {e.args[0]!r}") from e
    return normal_order_words(n, words)
