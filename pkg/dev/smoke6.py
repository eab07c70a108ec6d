import sys

sys.path.insert(0, "/root/pkg/src")

from triality8.exterior import Multivector, parse_form
from triality8.scalars import CScalar, I, ONE, SQRT3, Scalar
from triality8.structures import c_apply, canonical_omega, canonical_rho, p3, stabilizer_cached
from triality8 import torsion as to

e = Multivector.blade
Om = canonical_omega()
rho = canonical_rho()

# operator conventions
T = to.TorsionTensor.simple("PSU3", e(1), e(1, 8))
assert to.dhat(T) == -e(1, 2, 3, 8) * (ONE / 2) - e(1, 4, 7, 8) * (ONE / 4) + e(1, 5, 6, 8) * (ONE / 4)
for alpha in (p3(e(1, 2, 8)), e(1, 2, 8) - rho * e(1, 2, 8).inner(rho)):
    assert c_apply(alpha) == to.dhat(to.iota_rho_perp(alpha)) * (ONE / 2)
assert to.iota_rho_perp(rho).is_zero()
print("dhat anchor + surjd + iota(rho)=0 ok")

# operators vanish on Lambda^1 (x) g
for kind in ("PSU3", "SP1SP2"):
    gk = to.gkind(kind)
    from triality8.structures import l2_form

    for v in gk.stab.basis[:3]:
        Tg = to.TorsionTensor.simple(kind, e(2), l2_form(v))
        assert to.dhat(Tg).is_zero()
        assert to.dstar_hat(Tg).is_zero()
        assert all(to.Dhat(Tg, c).is_zero() for c in gk.chiralities)
print("vanishing on Lambda^1 (x) g ok")

# L operator
t1 = e(1).contract(Om) * 4
assert to._l_scale() == ONE
assert to.L_op(t1) == t1 * 2
assert t1 * 2 == parse_form("-6 e234 + 2 e256 - 2 e278 + 2 e357 + 2 e368 + 2 e458 - 2 e467") * 8
hw = parse_form("e157 + e168 + e258 - e267") + parse_form("e158 - e167 - e257 - e268") * I
assert to.L_op(hw) == hw * 20
v = e(1, 3, 4) * (Scalar(-1) / 3) + e(1, 7, 8)
assert to.L_op(v) == parse_form("-12 e134 - 8 e156 + 44 e178 + 4 e358 - 4 e367 - 4 e457 - 4 e468") * (ONE / 3)
assert to.l_spectrum() == {2: 8, 12: 32, 20: 16}
print("L anchors + spectrum ok")

# tau_[[1,2]] printed verbatim and Dirac non-vanishing
tb = to.tau_bracket12()
pvals = {
    1: "-1r3 e45 - 1r3 e67", 2: "2 e38", 3: "-2 e28",
    4: "1r3 e15 + e78", 5: "-1r3 e14 - e68", 6: "1r3 e17 + e58",
    7: "-1r3 e16 - e48", 8: "2 e23 + e47 - e56",
}
for i, s in pvals.items():
    assert tb.slots[i - 1] == parse_form(s), i
assert not to.Dhat(tb, "+").is_zero()
assert not to.Dhat(tb, "-").is_zero()
print("tau12 + Dirac nonvanishing ok")

# equivariance under the stabilizer (infinitesimal)
from triality8.structures import l2_form

g = l2_form(stabilizer_cached("PSU3").basis[0])
T = to.TorsionTensor.simple("PSU3", e(3), e(1, 2)) + to.TorsionTensor.simple("PSU3", e(5), e(4, 8))
assert to.dhat(to.torsion_act(g, T)) == g.act2(to.dhat(T))
assert to.dstar_hat(to.torsion_act(g, T)) == g.act2(to.dstar_hat(T))
from triality8.clifford import act2_svf

assert to.Dhat(to.torsion_act(g, T), "+") == act2_svf(g, to.Dhat(T, "+"))
print("equivariance ok")

# Schur constants
z22, z11 = to.z_constants()
assert z22 == CScalar(ONE, SQRT3) * (ONE / 8), z22
assert z11 == CScalar(ONE, -SQRT3) * (ONE / 8), z11
print("z constants ok:", z22, "|", z11)

# kernel analysis
ka = to.kernel_analysis("SP1SP2")
assert (ka["dhat_rank"], ka["harmonic_dim"], ka["dirac_dim"], ka["kernels_equal"]) == (56, 64, 64, True)
ka = to.kernel_analysis("PSU3")
assert (ka["dhat_rank"], ka["dstar_rank"]) == (70, 28)
assert (ka["harmonic_dim"], ka["dirac_dim"], ka["kernels_equal"]) == (70, 70, True)
print("kernel analysis ok; Dirac kernel dims:",
      ka["dirac+_kernel_dim"], ka["dirac-_kernel_dim"])
print("all torsion checks passed")
