import random

import pytest

from triality8 import linalg as la
from triality8.claims import _pythagorean_rotation, _random_unit_3form
from triality8.exterior import Multivector, apply_linear, blades_of_grade
from triality8.orbits import (
    OrbitError,
    bracket_from_form,
    form_from_bracket,
    gamma,
    is_supersymmetric,
    jac,
    lie_classify,
    orbit_classify,
)
from triality8.scalars import ONE, SQRT3, Scalar, half

e = Multivector.blade


def rand3(rng, n=4):
    out = Multivector.zero()
    for _ in range(n):
        out = out + Multivector(
            {rng.choice(blades_of_grade(3)): Scalar(rng.randint(-3, 3))}
        )
    return out


def test_jac_anchors(rho):
    assert jac(e(1, 2, 3), e(1, 2, 3)).is_zero()
    assert jac(rho, rho).is_zero()
    bad = e(1, 2, 3) + e(1, 4, 5)
    assert not jac(bad, bad).is_zero()


def test_gamma_identity_on_models(rho):
    Id8 = la.identity(8)
    for ch in "+-":
        assert la.mat_eq(gamma(rho, rho, ch).matrix, Id8)
        assert la.mat_eq(gamma(e(1, 2, 3), e(1, 2, 3), ch).matrix, Id8)


def test_gamma_transpose_law():
    rng = random.Random(2)
    for _ in range(10):
        r, t = rand3(rng), rand3(rng)
        for ch in "+-":
            assert la.mat_eq(
                la.transpose(gamma(r, t, ch).matrix), gamma(t, r, ch).matrix
            )


def test_supersymmetric_requires_unit_norm(rho):
    assert is_supersymmetric(rho)
    assert is_supersymmetric(e(1, 2, 3))
    assert not is_supersymmetric(rho * half())


def test_bracket_round_trip_and_lie_types(rho):
    b = bracket_from_form(rho)
    assert b.jacobi_holds()
    assert lie_classify(b) == (0, 8, True)
    assert lie_classify(bracket_from_form(e(1, 2, 3))) == (5, 3, True)
    assert lie_classify(bracket_from_form(e(1, 2, 3) + e(4, 5, 6))) == (2, 6, True)
    assert form_from_bracket(b) == rho


def test_orbit_classification(rho):
    oc = orbit_classify(rho)
    assert (oc.kind, oc.orientation) == ("L1_psu3", "reversing")
    oc = orbit_classify(e(1, 2, 3))
    assert (oc.kind, oc.orientation) == ("L3_sp1sp2", "preserving")
    oc = orbit_classify(e(1, 2, 3) * (SQRT3 * half()) + e(4, 5, 6) * half())
    assert oc.kind == "L2_su2su2_u1"
    assert oc.params == (Scalar(3) / 4, Scalar(1) / 4)
    assert orbit_classify(e(1, 2, 3) + e(1, 4, 5)).kind == "NotSupersymmetric"
    with pytest.raises(OrbitError):
        orbit_classify(e(1, 2))


def test_conjugation_invariance(rho):
    rng = random.Random(5)
    models = [
        rho,
        e(1, 2, 3),
        e(1, 2, 3) * (SQRT3 * half()) + e(4, 5, 6) * half(),
    ]
    refs = [orbit_classify(f) for f in models]
    for n in range(12):
        M = _pythagorean_rotation(rng)
        assert la.mat_eq(la.mat_mul(la.transpose(M), M), la.identity(8))
        f = models[n % 3]
        assert orbit_classify(apply_linear(M, f)) == refs[n % 3]


def test_susy_equivalence_on_unit_forms():
    rng = random.Random(11)
    Id8 = la.identity(8)
    seen = {True: 0, False: 0}
    for _ in range(40):
        r = _random_unit_3form(rng)
        assert r.norm2() == ONE
        j0 = jac(r, r).is_zero()
        g_id = la.mat_eq(gamma(r, r, "+").matrix, Id8) and la.mat_eq(
            gamma(r, r, "-").matrix, Id8
        )
        assert g_id == j0
        assert j0 == bracket_from_form(r).jacobi_holds()
        seen[j0] += 1
    assert seen[True] and seen[False]


def test_jac_jacobi_equivalence_sparse():
    rng = random.Random(13)
    for _ in range(30):
        r = rand3(rng)
        assert jac(r, r).is_zero() == bracket_from_form(r).jacobi_holds()
