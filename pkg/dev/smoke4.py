import sys, random
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar, SQRT3, half, quarter
from triality8.exterior import Multivector as MV, blades_of_grade, apply_linear
from triality8 import linalg as la
from triality8.orbits import (jac, gamma, is_supersymmetric, bracket_from_form,
    form_from_bracket, lie_classify, orbit_classify, BracketTable)

e = lambda *ix: MV.blade(*ix)
def rho_canonical():
    h, q = half(), quarter()
    return (e(1,2,3)*h + (e(1)^(e(4,7)-e(5,6)))*q + (e(2)^(e(4,6)+e(5,7)))*q
            + (e(3)^(e(4,5)-e(6,7)))*q + (e(8)^(e(4,5)+e(6,7)))*(SQRT3*q))
rho = rho_canonical()

assert jac(e(1,2,3), e(1,2,3)).is_zero()
assert jac(rho, rho).is_zero()
bad = e(1,2,3) + e(1,4,5)
assert not jac(bad, bad).is_zero()
print("jac anchors ok")

Id8 = la.identity(8)
for ch in '+-':
    assert la.mat_eq(gamma(rho, rho, ch).matrix, Id8)
    assert la.mat_eq(gamma(e(1,2,3), e(1,2,3), ch).matrix, Id8)
print("gamma anchors ok")

# Gamma+(rho,tau)^T = Gamma-(tau,rho)
random.seed(2)
def rand3():
    out = MV.zero()
    for _ in range(4):
        out = out + MV({random.choice(blades_of_grade(3)): Scalar(random.randint(-3,3))})
    return out
for _ in range(10):
    r, t = rand3(), rand3()
    assert la.mat_eq(la.transpose(gamma(r,t,'+').matrix), gamma(t,r,'+').matrix)
    assert la.mat_eq(la.transpose(gamma(r,t,'-').matrix), gamma(t,r,'-').matrix)
print("transpose law ok")

assert is_supersymmetric(rho) and is_supersymmetric(e(1,2,3))
assert not is_supersymmetric(rho * half())

b = bracket_from_form(rho)
assert b.jacobi_holds()
print("lie_classify su3:", lie_classify(b))
assert lie_classify(b) == (0, 8, True)
b123 = bracket_from_form(e(1,2,3))
assert lie_classify(b123) == (5, 3, True)
b2 = bracket_from_form(e(1,2,3) + e(4,5,6))
assert lie_classify(b2) == (2, 6, True)
print("lie_classify ok")

assert form_from_bracket(bracket_from_form(rho)) == rho
print("round trip ok")

oc = orbit_classify(rho)
print(oc); assert oc.kind == 'L1_psu3' and oc.orientation == 'reversing'
oc = orbit_classify(e(1,2,3))
print(oc); assert oc.kind == 'L3_sp1sp2' and oc.orientation == 'preserving'
r2 = e(1,2,3)*(SQRT3*half()) + e(4,5,6)*half()
oc = orbit_classify(r2)
print(oc); assert oc.kind == 'L2_su2su2_u1' and oc.orientation == 'preserving'
assert oc.params == (Scalar(3)/4, Scalar(1)/4), oc.params
oc = orbit_classify(bad)
assert oc.kind == 'NotSupersymmetric'
print("orbit_classify ok")

# conjugation invariance quick check: signed permutation + rational rotation
M = la.zeros(8,8)
perm = [2,0,1,3,5,4,7,6]; signs=[1,-1,1,1,-1,1,1,-1]
for i,(p,s) in enumerate(zip(perm,signs)):
    M[p][i] = Scalar(s)
# rotation block cos=3/5 sin=4/5 in coords 0,1 composed in
R = la.identity(8)
R[0][0] = Scalar(3)/5; R[0][1] = Scalar(-4)/5; R[1][0] = Scalar(4)/5; R[1][1] = Scalar(3)/5
M = la.mat_mul(M, R)
assert la.mat_eq(la.mat_mul(la.transpose(M), M), la.identity(8))
for form, kind in ((rho,'L1_psu3'), (e(1,2,3),'L3_sp1sp2'), (r2,'L2_su2su2_u1')):
    tf = apply_linear(M, form)
    oc = orbit_classify(tf)
    assert oc.kind == kind, (kind, oc)
print("conjugation invariance ok")

# equivalence property on random forms: Gamma=Id <=> jac=0 (both rarely true), weaker: jac==0 <=> jacobi
for _ in range(30):
    r = rand3()
    j0 = jac(r, r).is_zero()
    assert j0 == bracket_from_form(r).jacobi_holds()
print("jac <-> jacobi ok")
