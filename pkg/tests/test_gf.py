import numpy as np

from smstilt import gf


def test_rref_rank():
    M = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert gf.rank(M, 2) == 2
    assert gf.rank(M, 3) == 3


def test_nullspace_is_kernel():
    M = np.array([[1, 1, 0], [0, 1, 1]])
    for p in (2, 3):
        N = gf.nullspace(M, p)
        assert N.shape[0] == 1
        assert not ((M @ N.T) % p).any()


def test_solve_and_reduce():
    A = np.array([[1, 0, 1], [0, 1, 1]])
    b = np.array([1, 1])
    x = gf.solve(A, b, 2)
    assert x is not None and not ((A @ x - b) % 2).any()
    assert gf.solve(np.array([[1, 1]]), np.array([1]), 2) is not None
    assert gf.solve(np.zeros((1, 2), dtype=int), np.array([1]), 2) is None


def test_intersection_dim():
    A = np.array([[1, 0, 0], [0, 1, 0]])
    B = np.array([[0, 1, 0], [0, 0, 1]])
    assert gf.intersection_dim(A, B, 2) == 1
