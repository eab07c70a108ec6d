import sys

sys.path.insert(0, "/root/pkg/src")

from triality8 import linalg as la
from triality8.exterior import Multivector, blades_of_grade, from_vector, to_vector
from triality8.scalars import CScalar, I, ONE, SQRT3, Scalar
from triality8.structures import (
    L2_MASKS,
    c_apply,
    canonical_rho,
    p3,
    project2,
    stabilizer_cached,
)

e = Multivector.blade
rho = canonical_rho()

# --- c3 p3 anchor ratio ---
p = p3(e(1, 2, 8))
c3p = c_apply(p)
want3 = (
    e(1, 2, 4, 5) * (SQRT3 * 7)
    + e(1, 2, 6, 7) * (SQRT3 * 7)
    - e(1, 4, 6, 8) * 9
    - e(1, 5, 7, 8) * 9
    + e(2, 4, 7, 8) * 9
    - e(2, 5, 6, 8) * 9
) * (ONE / 32)
print("c3p3:", c3p)
print("want:", want3)
print("neg equal:", c3p == -want3)
print("2x:", c3p * 2 == want3, "  -2x:", c3p * (-2) == want3)

# --- the two maps U, V: Lambda^2 -> Lambda^3 (complexified) ---
L3 = blades_of_grade(3)


def U(b):
    return (rho.complexify() ^ b).star()


def V(b):
    return b.act2(rho.complexify())


# restrict to the 20-part basis
basis20 = []
for m in L2_MASKS:
    a = project2(Multivector({m: ONE}), "psu3_20")
    if a:
        basis20.append(a.complexify())
b20 = la.column_space_basis([ [CScalar(x) if not isinstance(x, CScalar) else x for x in to_vector(a, L2_MASKS)] for a in basis20 ])
print("dim 20-part:", len(b20))

for coefname, coef in (("i r3", I * SQRT3), ("i/ r3", I * (ONE / SQRT3)), ("i r3/3", I * (SQRT3 / 3)), ("2 i r3", I * SQRT3 * 2), ("i r3 /2", I * SQRT3 * (ONE/2))):
    for sgn in (1, -1):
        # kernel of U - sgn*coef*V on the 20-part
        cols = []
        for v in b20:
            a = from_vector(v, L2_MASKS)
            w = U(a) - V(a) * (coef * sgn)
            cols.append(to_vector(w, L3))
        M = la.transpose([[CScalar(x) if not isinstance(x, CScalar) else x for x in c] for c in cols])
        ns = la.nullspace(M)
        if ns:
            print(coefname, sgn, "kernel dim:", len(ns))
