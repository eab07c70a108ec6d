import sys

sys.path.insert(0, "/root/pkg/src")

from triality8 import linalg as la
from triality8.clifford import SpinorMap, mu, form_to_map
from triality8.exterior import Multivector
from triality8.scalars import CScalar, I, SQRT3, Scalar
from triality8.structures import canonical_rho, project2
from triality8 import torsion as to

e = Multivector.blade
want = CScalar(Scalar(2), -SQRT3 * 2)

R = la.mat_scale(form_to_map(canonical_rho()).matrix, Scalar(4))
Rt = la.transpose(R)

for sel in ("psu3_10+", "psu3_10-"):
    slots = [Multivector.zero() for _ in range(8)]
    slots[0] = project2(e(1, 8), sel) * (SQRT3 * 2 * I)
    T = to.TorsionTensor("PSU3", slots)
    mDm = mu(to.Dhat(T, "-"))  # chirality "+"
    mDp = mu(to.Dhat(T, "+"))  # chirality "-"
    for Mname, M in (("R", R), ("Rt", Rt)):
        # map applied to the "-" spinor (mDp), compare with mDm
        try:
            z = to._entry_ratio(list(zip(mDm.coords, la.mat_vec(M, list(mDp.coords)))))
            print(sel, Mname, "ratio(mDm, M mDp) =", z, "match" if z == want else "")
        except Exception as ex:
            print(sel, Mname, "a:", ex)
        # map applied to the "+" spinor (mDm), compare with mDp
        try:
            z = to._entry_ratio(list(zip(mDp.coords, la.mat_vec(M, list(mDm.coords)))))
            print(sel, Mname, "ratio(mDp, M mDm) =", z, "match" if z == want else "")
        except Exception as ex:
            print(sel, Mname, "b:", ex)
