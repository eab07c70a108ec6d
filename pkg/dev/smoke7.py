import sys

sys.path.insert(0, "/root/pkg/src")

from triality8 import frames as fr
from triality8 import linalg as la
from triality8 import torsion as to
from triality8.exterior import Multivector, blades_of_grade, parse_form
from triality8.orbits import orbit_classify
from triality8.scalars import ONE, SQRT3, Scalar
from triality8.structures import canonical_rho, l2_vector

e = Multivector.blade
rho = canonical_rho()

# nilmanifold
F, kind, exp = fr.catalog("psu3_nilmanifold")
assert fr.coframe_d(e(8), F) == e(4, 7) + e(5, 6)
assert fr.harmonic_check(F, "PSU3") == (True, True)
assert F.jacobi_holds()
# d^2 = 0 on all blades
for k in range(9):
    for m in blades_of_grade(k):
        assert fr.coframe_d(fr.coframe_d(Multivector({m: ONE}), F), F).is_zero()
conn = fr.levi_civita(F)
# metric compatibility + torsion freeness
for i in range(1, 9):
    for j in range(1, 9):
        for k in range(1, 9):
            assert conn.gamma(i, j, k) == -conn.gamma(i, k, j)
        w = conn.nabla_vec(i, j) - conn.nabla_vec(j, i) - F.bracket(i, j)
        assert w.is_zero()
# printed nabla table up to the global bracket sign
assert conn.nabla_vec(7, 4) == e(8) * (ONE / 2) and conn.nabla_vec(8, 4) == e(7) * (ONE / 2)
ric = fr.ricci(F)
diag = [ric[i][i] for i in range(8)]
assert diag[:7] == [Scalar(0)] * 3 + [Scalar(-1) / 2] * 4
assert diag[7] == Scalar(1)  # center direction; exact value, see ledger
assert all(not ric[i][j] for i in range(8) for j in range(8) if i != j)
# nabla rho: e4-slot contains (r3/4) e457 among others
nab = fr.nabla_form(rho, F)
assert nab[3].coeff(4, 5, 7) in (SQRT3 / 8, -(SQRT3 / 8))
assert any(a for a in nab)
T = fr.intrinsic_torsion(F, "PSU3")
assert not T.is_zero()
assert to.dhat(T) == fr.coframe_d(rho, F)
assert to.dstar_hat(T) == -fr.codifferential(rho, F)
gk = to.gkind("PSU3")
M = la.transpose([list(b) for b in gk.gperp.basis])
coords = []
for a in T.projected().slots:
    coords.extend(la.solve(M, l2_vector(a)))
assert to.kernel_analysis("PSU3")["harmonic_kernel"].contains(coords)
assert orbit_classify(rho).kind == "L1_psu3"
assert fr.ricci_constraint(ric, "PSU3", "+").is_zero()
assert fr.ricci_constraint(ric, "PSU3", "-").is_zero()
print("nilmanifold ok")

# su3 bi-invariant
F3, _, _ = fr.catalog("su3_biinvariant")
assert F3.jacobi_holds()
assert all(a.is_zero() for a in fr.nabla_form(rho, F3))
assert la.mat_eq(fr.ricci(F3), la.mat_scale(la.identity(8), Scalar(3) / 16))
assert fr.harmonic_check(F3, "PSU3") == (True, True)
assert fr.intrinsic_torsion(F3, "PSU3").is_zero()
assert fr.ricci_constraint(fr.ricci(F3), "PSU3", "+").is_zero()
print("su3 ok")

# ricci constraint is non-degenerate: rank 8 on symmetric matrices
cols = []
for i in range(1, 9):
    for j in range(i, 9):
        A = la.zeros(8, 8)
        A[i - 1][j - 1] = ONE
        A[j - 1][i - 1] = ONE
        cols.append(list(fr.ricci_constraint(A, "PSU3", "+").coords))
assert la.rank(la.transpose(cols)) == 8
print("ricci constraint rank 8 ok")

# salamon
Fs, _, _ = fr.catalog("salamon_sp1sp2")
assert fr.coframe_d(e(4), Fs) == e(1, 5) and fr.coframe_d(e(6), Fs) == e(1, 3)
conns = fr.levi_civita(Fs)
# printed table up to the global sign: nabla e1 = +1/2(e3(x)e6 + e4(x)e5 + ...)
assert conns.nabla_vec(3, 1) == e(6) * (ONE / 2)
assert conns.nabla_vec(4, 1) == e(5) * (ONE / 2)
assert conns.nabla_vec(5, 1) == e(4) * (ONE / 2)
assert conns.nabla_vec(6, 1) == e(3) * (ONE / 2)
assert conns.nabla_vec(1, 3) == e(6) * (Scalar(-1) / 2)
assert conns.nabla_vec(6, 3) == e(1) * (Scalar(-1) / 2)
assert conns.nabla_vec(1, 5) == e(4) * (Scalar(-1) / 2)
assert conns.nabla_vec(4, 5) == e(1) * (Scalar(-1) / 2)
rics = fr.ricci(Fs)
assert [rics[i][i] for i in range(8)] == [
    Scalar(-1), Scalar(0), Scalar(-1) / 2, Scalar(1) / 2,
    Scalar(-1) / 2, Scalar(1) / 2, Scalar(0), Scalar(0),
]  # exact values; printed table deviates, see ledger
print("salamon ok")

# gibbons-hawking at x = 1
Fg, _, _ = fr.catalog("gibbons_hawking", Scalar(1))
assert not Fg.constant_structure
assert fr.harmonic_check(Fg, "PSU3") == (True, True)
nabg = fr.nabla_form(rho, Fg)
w1p = e(4, 7) + e(5, 6)
w2p = e(4, 6) - e(5, 7)
want4 = (w1p ^ e(8)) * (-(SQRT3) / 4)
want5 = (w2p ^ e(8)) * (-(SQRT3) / 4)
assert nabg[3] == want4 and nabg[4] == want5
assert all(nabg[i].is_zero() for i in range(8) if i not in (3, 4))
Tg = fr.intrinsic_torsion(Fg, "PSU3")
assert to.dhat(Tg) == fr.coframe_d(rho, Fg)
assert to.dstar_hat(Tg) == -fr.codifferential(rho, Fg)
try:
    fr.ricci(Fg)
    raise AssertionError("ricci should refuse non-constant structure")
except fr.FrameError:
    pass
try:
    fr.catalog("gibbons_hawking", Scalar(2))
    raise AssertionError("sqrt(8) is not in the scalar field")
except fr.FrameError:
    pass
assert fr.catalog("gibbons_hawking", Scalar(3))  # sqrt(27) = 3 r3 works
print("gibbons-hawking ok")
print("all frame checks passed")
