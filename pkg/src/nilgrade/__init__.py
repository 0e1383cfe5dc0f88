"""Exact-arithmetic criteria for gradings, expanding maps and self-covers
of rational nilpotent Lie algebras."""

from .grading import (
    Grading,
    classify,
    find_nonneg_nontrivial_weights,
    find_positive_weights,
    grading_from_weights,
    phi_p,
    preserved_by,
    verify_grading,
    weight_solution_space,
)
from .holonomy import (
    HolonomyGroup,
    check_covinfra,
    check_expinfra,
    close_group,
    commutes_with_all,
    equivariant_weight_search,
    preserves_grading_all,
)
from .latpow import (
    LatticePowerCertificate,
    ObstructionPrime,
    denominator_primes,
    obstruction_primes_pair,
    orbit_escapes_lattice,
    power_into_lattice,
)
from .liealg import (
    LieAlgebra,
    abelianization,
    bracket,
    derivations,
    induced_map,
    is_automorphism,
    is_characteristically_nilpotent,
    lower_central_series,
    nilpotency_class,
    validate,
)
from .matrices import IntegerLattice, charpoly, hnf, hnf_membership, minpoly, order_mod, rmat, rvec
from .polynomials import Polynomial, factor_over_q, squarefree_part
from .matrices import primary_decomposition
from .specmaps import (
    NormProfile,
    commuting_preservation_check,
    expanding_to_positive_grading,
    is_expanding,
    is_integer_like,
    is_z_charpoly,
    norm_profile,
    selfcover_to_nonneg_grading,
    semisimple_part,
)
from .verdict import Verdict

__version__ = "0.1.0"
