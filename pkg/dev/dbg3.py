import sys
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar, SQRT3, half, quarter
from triality8.exterior import Multivector as MV
from triality8.orbits import bracket_from_form
e = lambda *ix: MV.blade(*ix)
rho = (e(1,2,3)*half() + (e(1)^(e(4,7)-e(5,6)))*quarter() + (e(2)^(e(4,6)+e(5,7)))*quarter()
        + (e(3)^(e(4,5)-e(6,7)))*quarter() + (e(8)^(e(4,5)+e(6,7)))*(SQRT3*quarter()))
print(rho)
b = bracket_from_form(rho)
for i in range(1,9):
    for j in range(i+1,9):
        v = [b.coeff(i,j,k) for k in range(1,9)]
        if any(v):
            print(f"[e{i},e{j}] =", " ".join(f"{k}:{x}" for k,x in enumerate(v,1) if x))
