import sys
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar, SQRT3, half, quarter
from triality8.exterior import Multivector as MV
e = lambda *ix: MV.blade(*ix)
wi = e(1,2)-e(3,4)+e(5,6)-e(7,8)
wj = e(1,3)+e(2,4)+e(5,7)+e(6,8)
wk = e(1,4)-e(2,3)+e(5,8)-e(6,7)
Omega = (wi^wi) + (wj^wj) + (wk^wk)
print("Omega =", Omega)
print("wi -| Omega =", wi.contract(Omega))
print("5 wi =", 5*wi)
