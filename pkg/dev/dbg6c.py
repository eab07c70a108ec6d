import sys

sys.path.insert(0, "/root/pkg/src")

from triality8 import linalg as la
from triality8.clifford import SpinorMap, mu, form_to_map
from triality8.exterior import Multivector
from triality8.scalars import CScalar, I, SQRT3, Scalar
from triality8.structures import project2
from triality8.torsion import Dhat, TorsionTensor, _entry_ratio, canonical_rho

e = Multivector.blade
want = CScalar(Scalar(2), -SQRT3 * 2)
wantc = want.conj()

A = form_to_map(canonical_rho()).matrix  # "-" -> "+"
variants = {
    "R": la.mat_scale(A, Scalar(4)),
    "Rt": la.transpose(la.mat_scale(A, Scalar(4))),
    "A": A,
    "At": la.transpose(A),
}

for sel in ("psu3_10+", "psu3_10-"):
    slots = [Multivector.zero() for _ in range(8)]
    slots[0] = project2(e(1, 8), sel) * (SQRT3 * 2 * I)
    T = TorsionTensor("PSU3", slots)
    Dm = Dhat(T, "-")  # v -> "-"
    Dp = Dhat(T, "+")  # v -> "+"
    for name, M in variants.items():
        # apply rho-map to the svf BEFORE mu, both orientations
        for lab, X, Y, mx in (
            ("mu(M Dp) vs mu(Dm)... ", Dp, Dm, True),
            ("mu(M Dm) vs mu(Dp)... ", Dm, Dp, True),
        ):
            mapped = SpinorMap(la.mat_mul(M, X.matrix), "v",
                               "-" if X.target == "+" else "+")
            try:
                z = _entry_ratio(list(zip(mu(Y).coords, mu(mapped).coords)))
                tag = " MATCH" if z == want else (" CONJ" if z == wantc else "")
                print(sel, name, lab, z, tag)
            except Exception as ex:
                print(sel, name, lab, "fail:", ex)
