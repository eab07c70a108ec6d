import sys
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar, SQRT3, half, quarter
from triality8.exterior import Multivector as MV
from triality8 import linalg as la
from triality8.orbits import bracket_from_form
import sympy as sp
e = lambda *ix: MV.blade(*ix)
rho = (e(1,2,3)*half() + (e(1)^(e(4,7)-e(5,6)))*quarter() + (e(2)^(e(4,6)+e(5,7)))*quarter()
        + (e(3)^(e(4,5)-e(6,7)))*quarter() + (e(8)^(e(4,5)+e(6,7)))*(SQRT3*quarter()))
b = bracket_from_form(rho)
vecs = []
for i in range(8):
    for j in range(i+1,8):
        vecs.append([b.coeff(i+1,j+1,k+1) for k in range(1,9)])
def tosym(s):
    return sp.Rational(str(s.a)) + sp.Rational(str(s.b))*sp.sqrt(3)
M = sp.Matrix([[tosym(x) for x in row] for row in vecs])
print("sympy rank:", M.rank())
# test la.rref on tiny case
A = [[Scalar(1), Scalar(0,1)],[Scalar(0,1), Scalar(3)]]
print(la.rank(A))  # rows proportional? (1, r3) and (r3, 3) = r3*(1, r3) -> rank 1
A2 = [[Scalar(1), Scalar(0,1)],[Scalar(0,1), Scalar(4)]]
print(la.rank(A2))  # rank 2
