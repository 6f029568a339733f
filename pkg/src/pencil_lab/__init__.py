"""Exact linear algebra of pencils of skew-symmetric forms and their bi-Lagrangian subspaces."""

from .errors import *  # noqa: F401,F403
from .exact import GF, QQ, Mat, Subspace, to_rat, unit
from .pencil import (
    Eigenvalue, JKInvariants, JordanContext, Pencil, core_mantle, jk_invariants, make_pencil,
    scramble, standard_basis, synthesize,
)
from .subspace import (
    classify_subspace, complementary, extend_to_bilagrangian, is_bilagrangian, pull_subspace, push_subspace,
    random_bilagrangian, reduce,
)
from .aut import aut_algebra, orbit_tangent_dim
from .orbits import (
    OrbitDescriptor, SemisimpleType, canonical_representative, classify, classify_by_eigenvalue,
    enumerate_two_block_descriptors, formulas, is_generic, same_orbit, semisimple_type,
    vector_orbit_representative,
)
from .census import ff_enumerate_bilagrangians, ff_orbit_histogram, invariant_bilagrangian, invariant_subspaces

__version__ = "0.1.0"
