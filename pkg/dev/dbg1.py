import sys
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar, SQRT3, half, quarter
from triality8.exterior import Multivector as MV
from triality8 import linalg as la
from triality8.orbits import bracket_from_form
e = lambda *ix: MV.blade(*ix)
rho = (e(1,2,3)*half() + (e(1)^(e(4,7)-e(5,6)))*quarter() + (e(2)^(e(4,6)+e(5,7)))*quarter()
        + (e(3)^(e(4,5)-e(6,7)))*quarter() + (e(8)^(e(4,5)+e(6,7)))*(SQRT3*quarter()))
b = bracket_from_form(rho)
vecs = []
for i in range(8):
    for j in range(i+1,8):
        col = [b.coeff(i+1,j+1,k+1) for k in range(1,9)]
        vecs.append(col)
A = la.transpose(vecs)
print("rank of bracket images:", la.rank(A))
# which coordinate is missing? check row space
R,p = la.rref(vecs)
print("pivots (coordinates hit):", p)
# print a few brackets
for (i,j) in [(4,5),(6,7),(1,2)]:
    print(f"[e{i},e{j}] =", [str(x) for x in b.coeff.__self__.coeff and [b.coeff(i,j,k) for k in range(1,9)]])
