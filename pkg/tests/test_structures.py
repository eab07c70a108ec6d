import random

from triality8 import linalg as la
from triality8.clifford import act2_svf, mu
from triality8.exterior import Multivector, parse_form, to_vector
from triality8.scalars import CScalar, I, ONE, SQRT3, Scalar
from triality8.structures import (
    L2_MASKS,
    betti,
    c_apply,
    c_operator,
    calibration,
    calibration_sample,
    kaehler_forms,
    l2_form,
    lambda4_split,
    p3,
    project2,
    roots,
    sigma_canonical,
    sp_stabilizer_residuals,
    stabilizer,
    stabilizer_cached,
    su2_triple_check,
    weight_eigen_check,
)

e = Multivector.blade


def test_canonical_forms(rho, omega):
    assert rho.norm2() == ONE
    assert omega.coeff(1, 2, 3, 4) == Scalar(-6)
    assert omega.star() == omega
    for w in kaehler_forms():
        assert w.contract(omega) == w * 5


def test_stabilizer_dimensions(rho):
    s_psu3 = stabilizer_cached("PSU3")
    s_sp = stabilizer_cached("SP1SP2")
    assert s_psu3.dim == 8
    assert s_sp.dim == 13
    assert stabilizer(Multivector.scalar(ONE)).dim == 28
    # contractions e_i -| rho span the 8-dimensional stabilizer
    vecs = [list(to_vector(e(i).contract(rho), L2_MASKS)) for i in range(1, 9)]
    assert all(s_psu3.contains(v) for v in vecs)
    assert la.rank(la.transpose(vecs)) == 8


def test_sp_stabilizer_equations():
    for v in stabilizer_cached("SP1SP2").basis:
        res = sp_stabilizer_residuals(l2_form(v))
        assert len(res) == 15 and not any(res)


def test_c_complex(rho):
    for k in range(7):
        assert la.is_zero_matrix(la.mat_mul(c_operator(k + 1), c_operator(k)))
    assert tuple(betti()) == (1, 0, 0, 1, 0, 1, 0, 0, 1)
    for m in L2_MASKS:
        alpha = Multivector({m: ONE})
        assert c_apply(alpha) == alpha.act2(rho)


def test_p3_printed_expansions():
    a = e(1, 2, 8)
    p = p3(a)
    assert p == (
        e(1, 2, 8) * 5 + e(3, 4, 5) * SQRT3 + e(3, 6, 7) * SQRT3
        - e(4, 5, 8) * 2 + e(6, 7, 8) * 2
    ) * (ONE / 8)
    assert p3(p) == (
        e(1, 2, 8) * 39 + e(3, 4, 5) * (SQRT3 * 7) + e(3, 6, 7) * (SQRT3 * 7)
        - e(4, 5, 8) * 18 + e(6, 7, 8) * 18
    ) * (ONE / 64)
    assert c_apply(p) == (
        e(1, 2, 4, 5) * (SQRT3 * 7) + e(1, 2, 6, 7) * (SQRT3 * 7)
        - e(1, 4, 6, 8) * 9 - e(1, 5, 7, 8) * 9
        + e(2, 4, 7, 8) * 9 - e(2, 5, 6, 8) * 9
    ) * (ONE / 32)


def test_lambda4_split():
    out, inn = lambda4_split()
    assert (out.dim, inn.dim) == (35, 35)


def test_projections(rho, omega):
    rng = random.Random(7)
    rho_c = rho.complexify()
    for _ in range(3):
        alpha = Multivector(
            {m: Scalar(rng.randint(-3, 3), rng.randint(-1, 1))
             for m in rng.sample(L2_MASKS, 6)}
        )
        a8 = project2(alpha, "psu3_8")
        a20 = project2(alpha, "psu3_20")
        assert a8 + a20 == alpha
        assert project2(a20, "psu3_20") == a20
        assert project2(a8, "psu3_20").is_zero()
        assert stabilizer_cached("PSU3").contains(to_vector(a8, L2_MASKS))
        s3 = project2(alpha, "sp_3")
        s10 = project2(alpha, "sp_10")
        s15 = project2(alpha, "sp_15")
        assert s3 + s10 + s15 == alpha
        assert s3.contract(omega) == s3 * 5
        assert s10.contract(omega) == s10 * (-3)
        assert s15.contract(omega) == s15 * 1
        p10p = project2(alpha, "psu3_10+")
        p10m = project2(alpha, "psu3_10-")
        assert p10p + p10m == a20.complexify()
        for beta, sgn in ((p10p, -1), (p10m, 1)):
            assert beta.act2(rho_c) == (rho_c ^ beta).star() * (I * SQRT3 * sgn)


def test_sp_stabilizer_is_3_plus_10():
    for v in stabilizer_cached("SP1SP2").basis:
        assert project2(l2_form(v), "sp_15").is_zero()


def test_sigma_maps():
    dets = {}
    for kind, chis in (("PSU3", ("+", "-")), ("SP1SP2", ("+",))):
        stab = stabilizer_cached("SP1SP2" if kind == "SP1SP2" else "PSU3")
        for chi in chis:
            s = sigma_canonical(kind, chi)
            assert s.is_isometry()
            assert mu(s).is_zero()
            assert all(act2_svf(l2_form(v), s).is_zero() for v in stab.basis)
            dets[(kind, chi)] = s.det()
    assert dets[("PSU3", "+")] == ONE
    assert dets[("PSU3", "-")] == -ONE
    assert dets[("SP1SP2", "+")] == -ONE
    # the two special-side determinants must multiply to det of the induced
    # map, which is -1; equal signs are impossible
    assert dets[("PSU3", "+")] * dets[("PSU3", "-")] == -ONE


def test_roots_and_weights():
    assert su2_triple_check()
    for lam in roots("PSU3").extras["lambda"]:
        assert lam.norm2() == Scalar(1) / 4
    for kind in ("PSU3", "SP1SP2"):
        rep = weight_eigen_check(kind)
        for name, evs in rep.items():
            assert all(v is not None for v in evs.values()), (kind, name)


def test_calibrations():
    assert calibration("PSU3", [e(1), e(2), e(3)]) == ONE
    assert calibration("SP1SP2", [e(1), e(2), e(3), -e(4)]) == ONE
    assert calibration_sample("PSU3", 2000) <= 1 + 1e-9
    assert calibration_sample("SP1SP2", 2000) <= 1 + 1e-9
