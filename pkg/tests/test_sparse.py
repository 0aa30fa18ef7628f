from fractions import Fraction

import pytest

from equilayer.sparse import SparseMatrix, delinearize, linearize


def test_linearize_row_major():
    assert linearize((1, 1), 2) == 0
    assert linearize((1, 2), 2) == 1
    assert linearize((2, 1), 2) == 2
    assert linearize((), 5) == 0
    for pos in range(27):
        assert linearize(delinearize(pos, 3, 3), 3) == pos


def test_no_stored_zeros_and_bounds():
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(1, 2)})
    assert m.nnz == 1
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(TypeError):
        SparseMatrix(1, 1, {(0, 0): 0.5})


def test_arithmetic():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert a @ b == SparseMatrix.from_dense([[2, 1], [1, 0]])
    assert (a - a).nnz == 0
    assert a.scale(Fraction(1, 2))[(0, 1)] == 1
    assert a.T == SparseMatrix.from_dense([[1, 0], [2, 1]])
    assert list(a.items()) == [((0, 0), 1), ((0, 1), 2), ((1, 1), 1)]


def test_kron_first_factor_slowest():
    a = SparseMatrix.from_dense([[1, 2]])
    b = SparseMatrix.from_dense([[1], [3]])
    assert a.kron(b) == SparseMatrix.from_dense([[1, 2], [3, 6]])
    assert SparseMatrix.identity(2).kron(SparseMatrix.from_dense([[5]])) == SparseMatrix.identity(2).scale(5)
