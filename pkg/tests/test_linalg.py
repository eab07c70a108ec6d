import random

from triality8 import linalg as la
from triality8.scalars import ONE, SQRT3, Scalar


def rand_matrix(rng, n, m):
    return [
        [Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(m)]
        for _ in range(n)
    ]


def test_rank_and_nullspace():
    rng = random.Random(1)
    for _ in range(10):
        A = rand_matrix(rng, 4, 6)
        r = la.rank(A)
        ns = la.nullspace(A)
        assert r + len(ns) == 6
        for v in ns:
            assert all(not x for x in la.mat_vec(A, list(v)))


def test_solve_consistent_and_inconsistent():
    rng = random.Random(2)
    for _ in range(10):
        A = rand_matrix(rng, 5, 3)
        x = [Scalar(rng.randint(-2, 2)) for _ in range(3)]
        b = la.mat_vec(A, x)
        y = la.solve(A, b)
        assert y is not None
        assert la.mat_vec(A, list(y)) == b
    A = [[ONE, ONE], [ONE, ONE]]
    assert la.solve(A, [ONE, ONE + ONE]) is None


def test_det_multiplicative():
    rng = random.Random(3)
    for _ in range(8):
        A = rand_matrix(rng, 3, 3)
        B = rand_matrix(rng, 3, 3)
        assert la.det(la.mat_mul(A, B)) == la.det(A) * la.det(B)


def test_span_helpers():
    b1 = [(ONE, Scalar(0)), (Scalar(0), ONE)]
    b2 = [(ONE, ONE), (ONE, -ONE)]
    assert la.same_span(b1, b2)
    assert la.in_span(b2, (SQRT3, Scalar(5)))
    assert not la.same_span(b1, [(ONE, ONE)])
    basis = la.column_space_basis([(ONE, ONE), (Scalar(2), Scalar(2)), (ONE, Scalar(0))])
    assert len(basis) == 2
