"""Composition-algebra arithmetic, 3-D/7-D cross products, Hurwitz matrices
and transformations, and closed-form rotations."""

from .algebra import (
    BasisProduct,
    BasisTable,
    Hypercomplex,
    LevelError,
    basis_table,
    cd_multiply,
    conjugate,
    norm_sq,
    table_multiply,
)
from .cross import (
    DimensionError,
    admissible_dimensions,
    cross_from_algebra,
    cross_matrix,
    inertia_tensor,
    kinetic_energy,
)
from .hurwitz import (
    TransformResult,
    bordered_from_cross,
    hurwitz_matrix,
    hurwitz_r8_to_r5,
    hurwitz_recursive,
    hurwitz_system,
    ks_transform,
    levi_civita,
    obstruction_search,
)
from .rotation import rotate, rotation_matrix
from .spinor import dirac_form, pauli_form, spinor_from_real
from .verify import VerifyReport, run_suites

__version__ = "0.1.0"
