"""
sl(n) Structure

Exact structure of sl(n, C) in the T_{i,j} = E_{i,j} - delta_{ij} I/n basis:
brackets, the trace form, roots, weights, rho and the Weyl dimension formula.
All indices in the public API are 1-based.

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
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from utils.errors import DimensionError, NotARootError, PreconditionError

logger = logging.getLogger(__name__)

Rat = Fraction
BasisIndex = Tuple[int, int]


@dataclass(frozen=True)
class Weight:
    """A weight (lambda_1, ..., lambda_n) of sl(n); entries sum to 0."""

    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(x) for x in self.entries)
        if len(values) < 2:
            raise PreconditionError("a weight needs at least 2 entries")
        if sum(values) != 0:
            raise PreconditionError(f"weight entries must sum to 0, got {values}")
        object.__setattr__(self, "entries", values)

    @classmethod
    def of(cls, *values):
        return cls(tuple(values))

    @classmethod
    def zero(cls, n: int):
        return cls((Fraction(0),) * n)

    @property
    def n(self) -> int:
        return len(self.entries)

    def component(self, i: int) -> Fraction:
        """lambda_i, 1-based."""
        return self.entries[i - 1]

    def _check(self, other):
        if other.n != self.n:
            raise DimensionError(f"weights of sl({self.n}) and sl({other.n}) cannot be combined")

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self):
        return Weight(tuple(-x for x in self.entries))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * x for x in self.entries))

    def to_json(self):
        return list(self.entries)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class TracelessMatrix:
    """An element of sl(n) over Q, stored as the full matrix.

    The matrix is its own canonical form: A = sum A_{i,j} T_{i,j}.
    """

    n: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if self.n < 2 or len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DimensionError(f"expected a {self.n}x{self.n} matrix with n >= 2")
        if sum(rows[i][i] for i in range(self.n)) != 0:
            raise PreconditionError("matrix is not traceless")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "TracelessMatrix":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, n: int) -> "TracelessMatrix":
        return cls(n, tuple((Fraction(0),) * n for _ in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def _check(self, other):
        if other.n != self.n:
            raise DimensionError(f"sl({self.n}) and sl({other.n}) elements cannot be combined")

    def __add__(self, other):
        self._check(other)
        return TracelessMatrix(self.n, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check(other)
        return TracelessMatrix(self.n, tuple(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "TracelessMatrix":
        c = Fraction(c)
        return TracelessMatrix(self.n, tuple(tuple(c * x for x in r) for r in self.entries))

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self) -> "TracelessMatrix":
        return TracelessMatrix(self.n, tuple(zip(*self.entries)))

    def to_json(self):
        return [list(r) for r in self.entries]


def matrix_product(x: TracelessMatrix, y: TracelessMatrix) -> List[List[Fraction]]:
    """Plain matrix product XY (not traceless in general)."""
    x._check(y)
    n = x.n
    cols = list(zip(*y.entries))
    return [[sum((a * b for a, b in zip(x.entries[i], cols[j])), Fraction(0)) for j in range(n)]
            for i in range(n)]


def _check_index(i: int, n: int):
    if not 1 <= i <= n:
        raise PreconditionError(f"index {i} out of range 1..{n}")


@functools.lru_cache(maxsize=None)
def basis(i: int, j: int, n: int) -> TracelessMatrix:
    """T_{i,j} = E_{i,j} - delta_{ij} I/n."""
    _check_index(i, n)
    _check_index(j, n)
    shift = Fraction(1, n) if i == j else Fraction(0)
    rows = []
    for r in range(1, n + 1):
        rows.append(tuple(Fraction(int(r == i and c == j)) - (shift if r == c else 0)
                          for c in range(1, n + 1)))
    return TracelessMatrix(n, tuple(rows))


# -----------------------------------------------------------------------------
# Fault injection for the verify-all mutation run
# -----------------------------------------------------------------------------

_BRACKET_FAULT = False
_STRUCTURE_CACHES = []


def structure_cache(func):
    """lru_cache that is dropped whenever the bracket fault is toggled."""
    cached = functools.lru_cache(maxsize=None)(func)
    _STRUCTURE_CACHES.append(cached)
    return cached


def reset_structure_caches():
    for cached in _STRUCTURE_CACHES:
        cached.cache_clear()


def set_bracket_fault(enabled: bool):
    """Flip the sign of [T_{1,2}, T_{2,1}] (mutation testing only)."""
    global _BRACKET_FAULT
    _BRACKET_FAULT = bool(enabled)
    reset_structure_caches()
    if enabled:
        logger.warning("bracket fault injected: [T12, T21] sign flipped")


def bracket_fault_enabled() -> bool:
    return _BRACKET_FAULT


def commutator(x: TracelessMatrix, y: TracelessMatrix) -> TracelessMatrix:
    """XY - YX straight from matrix products."""
    xy = matrix_product(x, y)
    yx = matrix_product(y, x)
    return TracelessMatrix.from_rows([[a - b for a, b in zip(r, s)] for r, s in zip(xy, yx)])


def bracket(x: TracelessMatrix, y: TracelessMatrix) -> TracelessMatrix:
    result = commutator(x, y)
    if _BRACKET_FAULT and x.n >= 2 and x == basis(1, 2, x.n) and y == basis(2, 1, x.n):
        return -result
    return result


def trace_form(x: TracelessMatrix, y: TracelessMatrix) -> Fraction:
    """B(X, Y) = Tr(XY)."""
    x._check(y)
    n = x.n
    return sum((x.entries[i][k] * y.entries[k][i] for i in range(n) for k in range(n)), Fraction(0))


def matrix_inner(x: TracelessMatrix, y: TracelessMatrix) -> Fraction:
    """(X, Y) = Tr(X tY); conjugation is trivial over Q."""
    x._check(y)
    return sum((a * b for r, s in zip(x.entries, y.entries) for a, b in zip(r, s)), Fraction(0))


# -----------------------------------------------------------------------------
# Reduced basis and coordinates
# -----------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def reduced_basis(n: int) -> Tuple[BasisIndex, ...]:
    """All (i, j) except (n, n); T_{n,n} = -sum_{i<n} T_{i,i} is eliminated."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if (i, j) != (n, n))


def coords(x: TracelessMatrix) -> Dict[BasisIndex, Fraction]:
    """Coordinates of X on the reduced basis (zeros omitted)."""
    n = x.n
    out = {}
    last = x.entries[n - 1][n - 1]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i, j) == (n, n):
                continue
            value = x.entries[i - 1][j - 1] - (last if i == j else 0)
            if value != 0:
                out[(i, j)] = value
    return out


def from_coords(n: int, data: Dict[BasisIndex, Fraction]) -> TracelessMatrix:
    out = TracelessMatrix.zero(n)
    for (i, j), c in data.items():
        out = out + basis(i, j, n).scale(c)
    return out


@structure_cache
def basis_bracket(b1: BasisIndex, b2: BasisIndex, n: int) -> Dict[BasisIndex, Fraction]:
    """[T_b1, T_b2] in reduced-basis coordinates."""
    return coords(bracket(basis(*b1, n), basis(*b2, n)))


# -----------------------------------------------------------------------------
# Roots and weights
# -----------------------------------------------------------------------------

def weight_of_basis(i: int, j: int, n: int) -> Weight:
    """The root e_i - e_j of T_{i,j}."""
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise NotARootError(f"T_{{{i},{i}}} is a Cartan element, not a root vector")
    return Weight(tuple(Fraction(int(k == i) - int(k == j)) for k in range(1, n + 1)))


def basis_weight_vector(index: BasisIndex, n: int) -> Tuple[int, ...]:
    """Integer weight of a reduced basis element (0 for Cartan elements)."""
    i, j = index
    return tuple(int(k == i) - int(k == j) for k in range(1, n + 1))


def rho(n: int) -> Weight:
    if n < 2:
        raise PreconditionError("rho needs n >= 2")
    return Weight(tuple(Fraction(n + 1 - 2 * i, 2) for i in range(1, n + 1)))


def weight_pairing(lam: Weight, mu: Weight) -> Fraction:
    """Form on weights dual to the trace form (Euclidean on sum-zero tuples)."""
    lam._check(mu)
    return sum((x * y for x, y in zip(lam.entries, mu.entries)), Fraction(0))


def weight_norm_sq(lam: Weight) -> Fraction:
    return weight_pairing(lam, lam)


def is_natural(value) -> bool:
    value = Fraction(value)
    return value.denominator == 1 and value >= 0


def is_dominant_integral(lam: Weight) -> bool:
    return all(is_natural(lam.entries[k] - lam.entries[k + 1]) for k in range(lam.n - 1))


def weyl_dimension(lam: Weight) -> int:
    """dim F(lambda) = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)."""
    if not is_dominant_integral(lam):
        raise PreconditionError(f"{lam} is not dominant integral")
    n = lam.n
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam.entries[i] - lam.entries[j] + j - i, j - i)
    return int(dim)


# -----------------------------------------------------------------------------
# The involution X -> -J tX J
# -----------------------------------------------------------------------------

def chevalley_involution(x: TracelessMatrix) -> TracelessMatrix:
    """X -> -J tX J, J the anti-diagonal permutation matrix.

    Entry (i, j) of the image is -X_{n+1-j, n+1-i}.
    """
    n = x.n
    return TracelessMatrix(n, tuple(
        tuple(-x.entries[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n)))


def involution_weight(lam: Weight) -> Weight:
    """Action of the involution on weights: (lambda_i) -> (-lambda_{n+1-i})."""
    return Weight(tuple(-x for x in reversed(lam.entries)))
