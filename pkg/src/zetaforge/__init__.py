"""Exact local factors W(X, Y) of pro-isomorphic zeta functions of nilpotent
Lie lattices under number-field base extension: construction, functional
equations, Dirichlet expansion, and brute-force verification."""

from .laurent import (
    DegenerateSpecializationError,
    EulerForm,
    LaurentPoly,
    ResourceGuardError,
    TruncatedSeries,
)
from .signed_perms import (
    enumerate_B,
    enumerate_S,
    eta,
    perm_stats,
    satisfies_property_p,
    signed_permutation,
    stats,
    verify_bm_identity,
    verify_sublemma,
)
from .families import (
    Family,
    UnsupportedFamilyError,
    abelian,
    abscissa,
    bk,
    bruhat_gsp_sum,
    f4,
    free,
    free_alpha_beta,
    heisenberg,
    heisenberg_from_bruhat,
    lmn,
    make_W,
    maxclass,
    parse_family,
    q5,
    weight,
    witt_rank,
)
from .symmetry import (
    SymmetryFactor,
    check_weight_conjecture,
    extract_functional_equation,
    predicted_symmetry,
    reduced_leading_ratio,
    verify_functional_equation,
)
from .numberfield import (
    NumberField,
    UnsupportedRamifiedPrimeError,
    decomposition_type,
    dedekind_zeta_local,
    discriminant,
    factor_mod_p,
    rationals,
)
from .dirichlet import (
    DegreeMismatchError,
    GlobalExpansionError,
    LocalFactor,
    ShapeAbscissa,
    abscissa_from_shape,
    global_coefficients,
    local_factor,
    type_specialized_W,
)
from .oracle import (
    LieLattice,
    abelian_lattice,
    count_proisomorphic,
    enumerate_sublattices,
    heisenberg_lattice,
    is_proisomorphic,
    is_subring,
    lattice_from_dict,
    lattice_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateSpecializationError",
    "DegreeMismatchError",
    "EulerForm",
    "Family",
    "GlobalExpansionError",
    "LaurentPoly",
    "LieLattice",
    "LocalFactor",
    "NumberField",
    "ResourceGuardError",
    "ShapeAbscissa",
    "SymmetryFactor",
    "TruncatedSeries",
    "UnsupportedFamilyError",
    "UnsupportedRamifiedPrimeError",
    "abelian",
    "abelian_lattice",
    "abscissa",
    "abscissa_from_shape",
    "bk",
    "bruhat_gsp_sum",
    "check_weight_conjecture",
    "count_proisomorphic",
    "decomposition_type",
    "dedekind_zeta_local",
    "discriminant",
    "enumerate_B",
    "enumerate_S",
    "enumerate_sublattices",
    "eta",
    "extract_functional_equation",
    "f4",
    "factor_mod_p",
    "free",
    "free_alpha_beta",
    "global_coefficients",
    "heisenberg",
    "heisenberg_from_bruhat",
    "heisenberg_lattice",
    "is_proisomorphic",
    "is_subring",
    "lattice_from_dict",
    "lattice_from_json",
    "lmn",
    "local_factor",
    "make_W",
    "maxclass",
    "parse_family",
    "perm_stats",
    "predicted_symmetry",
    "q5",
    "rationals",
    "reduced_leading_ratio",
    "satisfies_property_p",
    "signed_permutation",
    "stats",
    "type_specialized_W",
    "verify_bm_identity",
    "verify_functional_equation",
    "verify_sublemma",
    "weight",
    "witt_rank",
]
