import random

from cogwork.linalg import Echelon, rank_and_kernel, solve_in_span
from cogwork.scalars import QQ


def test_rank_and_kernel_basic():
    # {x, y, x+y} -> rank 2, kernel spanned by (1, 1, -1)
    one = QQ.one
    vecs = [{"x": one}, {"y": one}, {"x": one, "y": one}]
    rank, ker = rank_and_kernel(QQ, vecs)
    assert rank == 2
    assert len(ker) == 1
    k = ker[0]
    assert k[2] == one and k[0] == k[1] == -one


def test_single_vector_no_kernel():
    rank, ker = rank_and_kernel(QQ, [{"xy": QQ.one, "yx": -QQ.rational(2)}])
    assert rank == 1 and ker == []


def test_empty_input():
    rank, ker = rank_and_kernel(QQ, [])
    assert rank == 0 and ker == []


def _dense_rank(rows, ncols):
    # independent naive oracle over Fraction-like scalars
    mat = [list(r) for r in rows]
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][c]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = QQ.one / mat[rank][c]
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                f = mat[r][c] * inv
                for k in range(ncols):
                    mat[r][k] = mat[r][k] - f * mat[rank][k]
        rank += 1
    return rank


def test_against_dense_oracle_random():
    rng = random.Random(123)
    for _ in range(20):
        rows, cols = 5, 8
        dense = [[QQ.rational(rng.randint(-3, 3), rng.randint(1, 3))
                  for _ in range(cols)] for _ in range(rows)]
        sparse = [{j: v for j, v in enumerate(r) if v} for r in dense]
        rank, ker = rank_and_kernel(QQ, sparse)
        assert rank == _dense_rank(dense, cols)
        assert len(ker) == rows - rank
        for rel in ker:
            for j in range(cols):
                s = QQ.zero
                for i, c in rel.items():
                    s = s + c * dense[i][j]
                assert not s


def test_solve_in_span():
    one = QQ.one
    basis = [{"a": one}, {"a": one, "b": one}]
    sol = solve_in_span(QQ, basis, {"b": QQ.rational(2)})
    assert sol is not None
    assert sol.get(1) == QQ.rational(2) and sol.get(0) == -QQ.rational(2)
    assert solve_in_span(QQ, basis, {"c": one}) is None


def test_echelon_reduce_is_canonical():
    e = Echelon(QQ)
    e.insert({"b": QQ.one, "a": QQ.one})
    e.insert({"b": QQ.one, "a": -QQ.one})
    # span is <a, b>, so anything in it reduces to zero
    assert e.reduce({"a": QQ.rational(5), "b": QQ.rational(-3)}) == {}
    r = e.reduce({"c": QQ.one, "a": QQ.one})
    assert list(r) == ["c"]
