import sys, random
sys.path.insert(0, '/root/pkg/src')
from triality8.scalars import Scalar
from triality8.exterior import Multivector as MV, blades_of_grade
from triality8 import linalg as la
from triality8.orbits import gamma
random.seed(2)
def rand3():
    out = MV.zero()
    for _ in range(4):
        out = out + MV({random.choice(blades_of_grade(3)): Scalar(random.randint(-3,3))})
    return out
r, t = rand3(), rand3()
T = la.transpose(gamma(r,t,'+').matrix)
print("== Gamma+(t,r):", la.mat_eq(T, gamma(t,r,'+').matrix))
print("== Gamma-(t,r):", la.mat_eq(T, gamma(t,r,'-').matrix))
print("== Gamma-(r,t):", la.mat_eq(T, gamma(r,t,'-').matrix))
