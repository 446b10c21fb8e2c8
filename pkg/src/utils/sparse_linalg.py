"""
Exact Sparse Linear Algebra

Sparse vectors are plain dicts ``key -> Fraction`` that never store zeros.
``EchelonBasis`` keeps an incrementally row-reduced basis of such vectors; the
dense helpers hand small matrices to sympy's ``DomainMatrix`` over ``QQ``.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0
"""

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseVector = Dict[Hashable, Fraction]


def add_scaled(target: SparseVector, coef, other) -> SparseVector:
    """In place ``target += coef * other``; zero entries are removed."""
    if coef == 0:
        return target
    items = other.items() if isinstance(other, dict) else other
    for key, value in items:
        if value == 0:
            continue
        new = target.get(key, 0) + coef * value
        if new == 0:
            target.pop(key, None)
        else:
            target[key] = new
    return target


class EchelonBasis:
    """Row-echelon basis of sparse vectors with unit pivots.

    Rows are kept in insertion order; a new row is fully reduced against the
    existing ones before its pivot is chosen, so reducing a vector by walking
    the rows once in order clears every pivot.
    """

    def __init__(self, vectors: Iterable[SparseVector] = ()):
        self._rows: List[tuple] = []
        for vec in vectors:
            self.add(vec)

    def __len__(self):
        return len(self._rows)

    @property
    def rows(self) -> List[SparseVector]:
        return [row for _, row in self._rows]

    def reduce(self, vec: SparseVector) -> SparseVector:
        out = dict(vec)
        for pivot, row in self._rows:
            coef = out.get(pivot)
            if coef:
                add_scaled(out, -coef, row)
        return out

    def add(self, vec: SparseVector) -> Optional[SparseVector]:
        """Insert ``vec``; returns its reduced form when it was independent."""
        reduced = self.reduce(vec)
        if not reduced:
            return None
        pivot = min(reduced)
        inv = 1 / Fraction(reduced[pivot])
        row = {k: v * inv for k, v in reduced.items()}
        self._rows.append((pivot, row))
        return reduced

    def contains(self, vec: SparseVector) -> bool:
        return not self.reduce(vec)


def sparse_rank(vectors: Iterable[SparseVector]) -> int:
    return len(EchelonBasis(vectors))


def to_qq(value) -> "QQ":
    value = Fraction(value)
    return QQ(int(value.numerator), int(value.denominator))


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    data = [[to_qq(x) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def dense_rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows:
        return 0
    return to_domain_matrix(rows, ncols).rank()


def dense_nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """Basis (as rows) of ``{x : M x = 0}`` for the matrix with the given rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    null = to_domain_matrix(rows, ncols).nullspace()
    nrows, _ = null.shape
    dense = null.to_list()
    return [[from_qq(x) for x in dense[r]] for r in range(nrows)]
