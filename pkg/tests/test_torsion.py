import pytest

from triality8 import torsion as to
from triality8.clifford import act2_svf
from triality8.exterior import Multivector, parse_form
from triality8.scalars import CScalar, I, ONE, SQRT3, Scalar
from triality8.structures import c_apply, l2_form, p3, stabilizer_cached

e = Multivector.blade


def test_dhat_anchor():
    T = to.TorsionTensor.simple("PSU3", e(1), e(1, 8))
    assert to.dhat(T) == (
        -e(1, 2, 3, 8) * (ONE / 2) - e(1, 4, 7, 8) * (ONE / 4)
        + e(1, 5, 6, 8) * (ONE / 4)
    )


def test_surjectivity_identity(rho):
    for alpha in (p3(e(1, 2, 8)), e(1, 2, 8) - rho * e(1, 2, 8).inner(rho)):
        assert c_apply(alpha) == to.dhat(to.iota_rho_perp(alpha)) * (ONE / 2)
    assert to.iota_rho_perp(rho).is_zero()


@pytest.mark.parametrize("kind", ["PSU3", "SP1SP2"])
def test_operators_vanish_on_stabilizer_slots(kind):
    gk = to.gkind(kind)
    for v in gk.stab.basis[:3]:
        Tg = to.TorsionTensor.simple(kind, e(2), l2_form(v))
        assert to.dhat(Tg).is_zero()
        assert to.dstar_hat(Tg).is_zero()
        assert all(to.Dhat(Tg, c).is_zero() for c in gk.chiralities)


def test_L_operator(omega):
    t1 = e(1).contract(omega) * 4
    assert to._l_scale() == ONE
    assert to.L_op(t1) == t1 * 2
    assert t1 * 2 == parse_form(
        "-6 e234 + 2 e256 - 2 e278 + 2 e357 + 2 e368 + 2 e458 - 2 e467"
    ) * 8
    hw = parse_form("e157 + e168 + e258 - e267") + parse_form(
        "e158 - e167 - e257 - e268"
    ) * I
    assert to.L_op(hw) == hw * 20
    v = e(1, 3, 4) * (Scalar(-1) / 3) + e(1, 7, 8)
    assert to.L_op(v) == parse_form(
        "-12 e134 - 8 e156 + 44 e178 + 4 e358 - 4 e367 - 4 e457 - 4 e468"
    ) * (ONE / 3)


def test_L_spectrum():
    assert to.l_spectrum() == {2: 8, 12: 32, 20: 16}


def test_tau_bracket_slots_and_dirac():
    tb = to.tau_bracket12()
    printed = {
        1: "-1r3 e45 - 1r3 e67", 2: "2 e38", 3: "-2 e28",
        4: "1r3 e15 + e78", 5: "-1r3 e14 - e68", 6: "1r3 e17 + e58",
        7: "-1r3 e16 - e48", 8: "2 e23 + e47 - e56",
    }
    for i, s in printed.items():
        assert tb.slots[i - 1] == parse_form(s), i
    assert not to.Dhat(tb, "+").is_zero()
    assert not to.Dhat(tb, "-").is_zero()


def test_equivariance():
    g = l2_form(stabilizer_cached("PSU3").basis[0])
    T = to.TorsionTensor.simple("PSU3", e(3), e(1, 2)) + to.TorsionTensor.simple(
        "PSU3", e(5), e(4, 8)
    )
    assert to.dhat(to.torsion_act(g, T)) == g.act2(to.dhat(T))
    assert to.dstar_hat(to.torsion_act(g, T)) == g.act2(to.dstar_hat(T))
    assert to.Dhat(to.torsion_act(g, T), "+") == act2_svf(g, to.Dhat(T, "+"))


def test_schur_constants():
    z22, z11 = to.z_constants()
    assert z22 == CScalar(ONE, SQRT3) * (ONE / 8)
    assert z11 == CScalar(ONE, -SQRT3) * (ONE / 8)


def test_kernel_analysis_sp():
    ka = to.kernel_analysis("SP1SP2")
    assert ka["domain_dim"] == 120
    assert ka["dhat_rank"] == 56
    assert ka["harmonic_dim"] == 64
    assert ka["dirac_dim"] == 64
    assert ka["kernels_equal"]


def test_kernel_analysis_psu3():
    ka = to.kernel_analysis("PSU3")
    assert ka["domain_dim"] == 160
    assert (ka["dhat_rank"], ka["dstar_rank"]) == (70, 28)
    assert ka["harmonic_dim"] == 70
    assert ka["dirac_dim"] == 70
    assert ka["kernels_equal"]
    # individual Dirac kernels are strictly larger than the joint kernel
    assert ka["dirac+_kernel_dim"] == 97
    assert ka["dirac-_kernel_dim"] == 97
