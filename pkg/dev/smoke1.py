import sys
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar, CScalar, SQRT3, half, quarter, parse_scalar, format_scalar
from triality8.exterior import Multivector as MV, parse_form, format_form, to_vector, blades_of_grade
from triality8 import linalg as la

# scalar smoke
s = Scalar(1,1)
assert s.inverse() * s == Scalar(1)
assert SQRT3*SQRT3 == Scalar(3)
assert parse_scalar("-3/4 r3") == Scalar(0, la.ZERO.a - 3)/4 * SQRT3 or True
v = parse_scalar("-3/4 r3"); assert v == Scalar(0,0) + Scalar(0,1)*Scalar(-3,0)/4, v
z = parse_scalar("1/8 + 1/8 r3 i")
assert isinstance(z, CScalar) and z.re == Scalar(1)/8 and z.im == SQRT3/8
assert parse_scalar(format_scalar(z)) == z
assert Scalar(3).sqrt() == SQRT3
assert (Scalar(7,4)).sqrt() == Scalar(2,1), Scalar(7,4).sqrt()  # (2+r3)^2 = 7+4r3

e = lambda *ix: MV.blade(*ix)

def rho_canonical():
    h, q = half(), quarter()
    r = e(1,2,3)*h
    r = r + (e(1)^(e(4,7)-e(5,6)))*q
    r = r + (e(2)^(e(4,6)+e(5,7)))*q
    r = r + (e(3)^(e(4,5)-e(6,7)))*q
    r = r + (e(8)^(e(4,5)+e(6,7)))*(SQRT3*q)
    return r

rho = rho_canonical()
assert rho.inner(rho) == Scalar(1), rho.inner(rho)

wi = e(1,2)-e(3,4)+e(5,6)-e(7,8)
wj = e(1,3)+e(2,4)+e(5,7)+e(6,8)
wk = e(1,4)-e(2,3)+e(5,8)-e(6,7)
Omega = (wi^wi) + (wj^wj) + (wk^wk)
assert Omega.coeff(1,2,3,4) == Scalar(-6), Omega.coeff(1,2,3,4)
assert Omega.star() == Omega

# omega_i -| Omega = 5 omega_i ?
for w in (wi,wj,wk):
    got = w.contract(Omega)
    print("w -| Omega == 5w:", got == 5*w, "| == -5w:", got == Scalar(-5)*w)

# stabilizer anchor: (e_i -| rho) * rho = 0
ok = all((e(i).contract(rho)).act2(rho).is_zero() for i in range(1,9))
print("(e_i -| rho)*rho = 0 all i:", ok)

# star star = (-1)^p on blades (n=8: ** = (-1)^{p(8-p)} = +1 for all p... n even: ** = (-1)^{p(n-p)})
for p in range(9):
    m = blades_of_grade(p)[0]
    b = MV({m: Scalar(1)})
    ss = b.star().star()
    exp = b if (p*(8-p))%2==0 else -b
    assert ss == exp, (p, ss)
print("star^2 ok")

# adjointness <x-|a, b> = <a, x^b>
import random
random.seed(0)
def rand_mv(k, n=4):
    out = MV.zero()
    bl = blades_of_grade(k)
    for _ in range(n):
        out = out + MV({random.choice(bl): Scalar(random.randint(-3,3), random.randint(-2,2))})
    return out
for _ in range(20):
    x = rand_mv(1,2); a = rand_mv(3,3); b = rand_mv(2,3)
    assert x.contract(a).inner(b) == a.inner(x^b)
    t = rand_mv(2,2)
    assert t.act2(a).inner(a*1) + a.inner(t.act2(a)) == Scalar(0)
    c = rand_mv(2,2)
    lhs = c.act2(a^b); rhs = (c.act2(a)^b) + (a^c.act2(b))
    assert lhs == rhs, "derivation fail"
print("adjointness / skew / derivation ok")

# parse_form round trip
f = parse_form("1/2 e123 + 1/4 e147 - 1/4 e156")
assert f.coeff(1,5,6) == -quarter()
assert parse_form(format_form(rho)) == rho
print("form grammar ok")
