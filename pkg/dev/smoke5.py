import sys

sys.path.insert(0, "/root/pkg/src")

from triality8 import linalg as la
from triality8.exterior import Multivector, blades_of_grade, from_vector, to_vector
from triality8.clifford import act2_svf, mu
from triality8.scalars import CScalar, I, ONE, SQRT3, Scalar, half
from triality8.structures import (
    L2_MASKS,
    betti,
    c_apply,
    c_operator,
    calibration,
    calibration_sample,
    canonical_omega,
    canonical_rho,
    kaehler_forms,
    l2_form,
    lambda4_split,
    p3,
    project2,
    roots,
    sigma_canonical,
    stabilizer_cached,
    su2_triple_check,
    weight_eigen_check,
)

e = Multivector.blade
rho = canonical_rho()
Om = canonical_omega()

# canonical forms basic anchors
assert rho.norm2() == ONE
assert Om.coeff(1, 2, 3, 4) == Scalar(-6)
assert Om.star() == Om
w_i, w_j, w_k = kaehler_forms()
for w in (w_i, w_j, w_k):
    assert w.contract(Om) == w * 5
print("canonical forms ok")

# stabilizers
s_psu3 = stabilizer_cached("PSU3")
s_sp = stabilizer_cached("SP1SP2")
assert s_psu3.dim == 8, s_psu3.dim
assert s_sp.dim == 13, s_sp.dim
# so(8) itself: stabilizer of the scalar 1 is everything
from triality8.structures import stabilizer

assert stabilizer(Multivector.scalar(ONE)).dim == 28
print("stabilizer dims ok:", s_psu3.dim, s_sp.dim)

# c-complex: c^2 = 0 and c2(alpha) = -alpha * rho on all 2-blades
for k in range(8):
    A = la.mat_mul(c_operator(k + 1), c_operator(k)) if k < 7 else None
    if A is not None:
        assert la.is_zero_matrix(A), f"c^2 != 0 at k={k}"
ok_sign = True
for m in L2_MASKS:
    alpha = Multivector({m: ONE})
    lhs = c_apply(alpha)
    rhs = alpha.act2(rho)
    if lhs != rhs:
        ok_sign = False
        print("c2 mismatch on", alpha, "->", lhs, "vs", rhs)
        break
print("c^2=0 ok; c2(alpha) = alpha*rho:", ok_sign)

print("betti:", betti())

# p3 anchors
a128 = e(1, 2, 8)
p = p3(a128)
want = (
    e(1, 2, 8) * 5
    + e(3, 4, 5) * SQRT3
    + e(3, 6, 7) * SQRT3
    - e(4, 5, 8) * 2
    + e(6, 7, 8) * 2
) * (ONE / 8)
print("p3(e128) ok:", p == want)
p2 = p3(p)
want2 = (
    e(1, 2, 8) * 39
    + e(3, 4, 5) * (SQRT3 * 7)
    + e(3, 6, 7) * (SQRT3 * 7)
    - e(4, 5, 8) * 18
    + e(6, 7, 8) * 18
) * (ONE / 64)
print("p3^2(e128) ok:", p2 == want2)
c3p = c_apply(p)
want3 = (
    e(1, 2, 4, 5) * (SQRT3 * 7)
    + e(1, 2, 6, 7) * (SQRT3 * 7)
    - e(1, 4, 6, 8) * 9
    - e(1, 5, 7, 8) * 9
    + e(2, 4, 7, 8) * 9
    - e(2, 5, 6, 8) * 9
) * (ONE / 32)
print("c3 p3(e128) ok:", c3p == want3)

# Lambda^4 split
out, inn = lambda4_split()
print("lambda4 dims:", out.dim, inn.dim)

# projections: decomposition, idempotence, orthogonal eigen-identities
import random

rng = random.Random(7)
for _ in range(3):
    alpha = Multivector(
        {m: Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for m in rng.sample(L2_MASKS, 6)}
    )
    a8 = project2(alpha, "psu3_8")
    a20 = project2(alpha, "psu3_20")
    assert a8 + a20 == alpha
    assert project2(a20, "psu3_20") == a20
    assert project2(a8, "psu3_20").is_zero()
    # the 8-part is the stabilizer part
    assert stabilizer_cached("PSU3").contains(to_vector(a8, L2_MASKS))
    # sp projections
    s3 = project2(alpha, "sp_3")
    s10 = project2(alpha, "sp_10")
    s15 = project2(alpha, "sp_15")
    assert s3 + s10 + s15 == alpha
    assert s3.contract(Om) == s3 * 5
    assert s10.contract(Om) == s10 * (-3)
    assert s15.contract(Om) == s15 * 1
    for x, sel in ((s3, "sp_3"), (s10, "sp_10"), (s15, "sp_15")):
        assert project2(x, sel) == x
    # 10+- split of the 20-part
    p10p = project2(alpha, "psu3_10+")
    p10m = project2(alpha, "psu3_10-")
    assert p10p + p10m == a20.complexify()
    # Lambda^2_10+-: beta * rho = -+ r3 i star(rho ^ beta)
    for beta, sgn in ((p10p, -1), (p10m, 1)):
        lhs = beta.act2(rho.complexify())
        rhs = (rho.complexify() ^ beta).star() * (I * SQRT3 * sgn)
        assert lhs == rhs, (sgn, str(lhs), str(rhs))
print("projections ok")

# sp stabilizer part: dim 3 + 10 = 13 consistency
for v in stabilizer_cached("SP1SP2").basis:
    a = l2_form(v)
    assert project2(a, "sp_15").is_zero()
print("sp stabilizer = 3+10 part ok")

# sigma maps
for kind, chis in (("PSU3", ("+", "-")), ("SP1SP2", ("+",))):
    stab = stabilizer_cached(kind)
    for chi in chis:
        s = sigma_canonical(kind, chi)
        assert s.is_isometry(), (kind, chi)
        assert mu(s).is_zero(), (kind, chi)
        assert all(act2_svf(l2_form(v), s).is_zero() for v in stab.basis), (kind, chi)
        print(kind, chi, "det:", s.det(), "target:", s.target, "(iso, mu=0, annihilated)")

# roots
print("su2 triples:", su2_triple_check())
rd = roots("PSU3")
for lam in rd.extras["lambda"]:
    assert lam.norm2() == Scalar(1, 0) / 4
print("lambda norms ok")
for kind in ("PSU3", "SP1SP2"):
    rep = weight_eigen_check(kind)
    for name, evs in rep.items():
        assert all(v is not None for v in evs.values()), (kind, name, evs)
    print(kind, "weight eigenvalues:")
    for name, evs in rep.items():
        print("  ", name, {t: str(v) for t, v in evs.items()})

# calibrations
assert calibration("PSU3", [e(1), e(2), e(3)]) == ONE
assert calibration("SP1SP2", [e(1), e(2), e(3), -e(4)]) == ONE
m1 = calibration_sample("PSU3", 2000)
m2 = calibration_sample("SP1SP2", 2000)
print("sampled maxima:", m1, m2)
assert m1 <= 1 + 1e-9 and m2 <= 1 + 1e-9
print("calibration ok")
