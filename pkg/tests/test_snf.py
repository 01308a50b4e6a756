from hypothesis import given
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from edlab.snf import (
    SparseIntMatrix,
    determinant,
    elementary_divisors,
    is_smith_form,
    matmul,
    rank_of,
    smith_normal_form,
)

from strategies import int_matrices


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def test_zero_matrix():
    s = smith_normal_form([[0, 0], [0, 0]])
    assert s.S == [[0, 0], [0, 0]] and s.U == identity(2) and s.V == identity(2)
    assert s.rank == 0


def test_small_examples():
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == [2, 4]
    assert smith_normal_form(identity(4)).S == identity(4)
    assert smith_normal_form([[4, 0], [0, 6]]).diagonal == [2, 12]


def test_determinant():
    assert determinant([[2, 4], [6, 8]]) == -8
    assert determinant(identity(5)) == 1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_sparse_round_trip(tmp_path):
    m = SparseIntMatrix.from_dense([[0, 3, 0], [-2, 0, 0]])
    assert m.nnz == 2 and m.to_dense() == [[0, 3, 0], [-2, 0, 0]]
    assert SparseIntMatrix.loads(m.dumps()).to_dense() == m.to_dense()
    m.dump(tmp_path / "m.txt")
    m.add(0, 1, -3)
    assert m.nnz == 1


@given(int_matrices())
def test_snf_transform_identity(rows):
    s = smith_normal_form(rows)
    assert matmul(matmul(s.U, rows), s.V) == s.S
    assert abs(determinant(s.U)) == 1 and abs(determinant(s.V)) == 1
    assert is_smith_form(s.S)


@given(int_matrices(6, 6, 20))
def test_snf_diagonal_matches_sympy(rows):
    ours = smith_normal_form(rows).diagonal
    ref = sympy_snf(Matrix(rows), domain=ZZ)
    theirs = [abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i] != 0]
    assert ours == sorted(theirs)
    assert rank_of(rows) == Matrix(rows).rank()


@given(int_matrices(5, 5))
def test_elementary_divisors_sparse_entry(rows):
    m = SparseIntMatrix.from_dense(rows)
    assert elementary_divisors(m) == smith_normal_form(rows).diagonal


def test_is_smith_form_rejects():
    assert not is_smith_form([[2, 0], [0, 3]])
    assert not is_smith_form([[0, 0], [0, 3]])
    assert not is_smith_form([[1, 1], [0, 3]])
    assert is_smith_form([[1, 0, 0], [0, 3, 0]])
