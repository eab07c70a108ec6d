import random

import pytest

from triality8 import linalg as la
from triality8.claims import _KAPPA_TABLE, _RHOMAP_TIMES_4, _scal
from triality8.clifford import (
    Octonion,
    Spinor,
    SpinorMap,
    block,
    form_to_map,
    iota,
    kappa,
    kappa_form,
    mu,
    q_adjoint_check,
)
from triality8.exterior import Multivector, blades_of_grade
from triality8.scalars import ONE, Scalar

e = Multivector.blade


def test_octonion_algebra():
    rng = random.Random(0)

    def rand_oct():
        return Octonion([Scalar(rng.randint(-3, 3)) for _ in range(8)])

    for _ in range(10):
        x, y = rand_oct(), rand_oct()
        # composition algebra: N(xy) = N(x)N(y)
        assert (x * y).norm2() == x.norm2() * y.norm2()


def test_kappa_matches_reference_tables():
    for m, entries in _KAPPA_TABLE.items():
        M = la.zeros(16, 16)
        for s, i, j in entries:
            M[i - 1][j - 1] = Scalar(-s)
            M[j - 1][i - 1] = Scalar(s)
        assert la.mat_eq(kappa(e(m)), M), f"generator {m}"


def test_clifford_relations():
    for i in range(1, 9):
        Ki = kappa(e(i))
        assert la.mat_eq(
            la.mat_mul(Ki, Ki), la.mat_scale(la.identity(16), Scalar(-1))
        )
        for j in range(i + 1, 9):
            Kj = kappa(e(j))
            assert la.is_zero_matrix(
                la.mat_add(la.mat_mul(Ki, Kj), la.mat_mul(Kj, Ki))
            )


def test_volume_form_chirality():
    vol = kappa_form(e(1, 2, 3, 4, 5, 6, 7, 8))
    Id8 = la.identity(8)
    assert la.mat_eq(block(vol, "+", "+"), Id8)
    assert la.mat_eq(block(vol, "-", "-"), la.mat_scale(Id8, Scalar(-1)))
    assert la.is_zero_matrix(block(vol, "+", "-"))
    assert la.is_zero_matrix(block(vol, "-", "+"))


def test_form_to_map_anchor(rho):
    A = form_to_map(rho)
    assert str(A.det()) == "-1"
    R = [[_scal(x) / 4 for x in row] for row in _RHOMAP_TIMES_4]
    assert la.mat_eq(A.matrix, R)
    assert A.is_isometry()


@pytest.mark.parametrize("p,sign", [(1, -1), (2, -1), (3, 1), (4, 1)])
def test_q_adjoint_sign_law(p, sign):
    rng = random.Random(p)
    mv = Multivector.zero()
    for _ in range(3):
        mv = mv + Multivector(
            {rng.choice(blades_of_grade(p)): Scalar(rng.randint(-3, 3))}
        )
    ok, s = q_adjoint_check(mv)
    assert ok and s == sign


def test_mu_iota_identity():
    for chir in ("+", "-"):
        for a in range(8):
            psi = Spinor.basis(chir, a)
            assert mu(iota(psi)) == psi


def test_mu_rank():
    cols = []
    for a in range(8):
        for c in range(8):
            M = la.zeros(8, 8)
            M[a][c] = ONE
            cols.append(list(mu(SpinorMap(M, "v", "+")).coords))
    r = la.rank(la.transpose(cols))
    assert r == 8 and 64 - r == 56
