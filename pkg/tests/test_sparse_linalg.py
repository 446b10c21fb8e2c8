from fractions import Fraction

from utils.sparse_linalg import (
    EchelonBasis,
    add_scaled,
    dense_nullspace,
    dense_rank,
    sparse_rank,
)

F = Fraction


def test_add_scaled_drops_zeros():
    target = {"x": F(1), "y": F(2)}
    add_scaled(target, -1, {"x": F(1), "z": F(3)})
    assert target == {"y": 2, "z": -3}
    assert add_scaled({"x": F(1)}, 0, {"x": F(5)}) == {"x": 1}


def test_echelon_basis():
    basis = EchelonBasis()
    assert basis.add({"a": F(2), "b": F(2)}) is not None
    assert basis.add({"b": F(1)}) is not None
    assert basis.add({"a": F(3), "b": F(-1)}) is None
    assert len(basis) == 2
    assert basis.contains({"a": F(1)})
    assert not basis.contains({"c": F(1)})
    assert basis.reduce({"a": F(1), "c": F(4)}) == {"c": 4}


def test_sparse_rank():
    vectors = [{1: F(1), 2: F(1)}, {2: F(1), 3: F(1)}, {1: F(1), 3: F(-1)}]
    assert sparse_rank(vectors) == 2
    assert sparse_rank([]) == 0


def test_dense_rank():
    assert dense_rank([[1, 2], [2, 4]], 2) == 1
    assert dense_rank([[1, 0], [0, F(1, 3)]], 2) == 2
    assert dense_rank([], 4) == 0


def test_dense_nullspace():
    rows = [[1, 2, 3], [2, 4, 6]]
    null = dense_nullspace(rows, 3)
    assert len(null) == 2
    for vec in null:
        assert all(isinstance(x, Fraction) for x in vec)
        for row in rows:
            assert sum(r * x for r, x in zip(row, vec)) == 0
    assert dense_nullspace([[1, 0], [0, 1]], 2) == []
    assert dense_nullspace([], 2) == [[1, 0], [0, 1]]
