"""Exact-arithmetic tools for the special geometries of an oriented inner
product space of dimension eight: the field tower Q(r3)[i], exterior
algebra, octonionic Clifford model, 3-form orbit classification, the
canonical invariant structures with their projections and elliptic
complex, torsion operators on spinor-valued forms, orthonormal-frame
differential geometry, characteristic-class predicates, and a claim-based
verification CLI.
"""

from .scalars import CScalar, I, ONE, SQRT3, Scalar
from .exterior import Multivector, parse_form
from .orbits import OrbitClass, orbit_classify
from .structures import canonical_omega, canonical_rho, sigma_canonical
from .obstructions import CharData

__all__ = [
    "CScalar",
    "CharData",
    "I",
    "Multivector",
    "ONE",
    "OrbitClass",
    "SQRT3",
    "Scalar",
    "canonical_omega",
    "canonical_rho",
    "orbit_classify",
    "parse_form",
    "sigma_canonical",
]

__version__ = "0.1.0"
