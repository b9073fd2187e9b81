"""Exact classification atlas for compact Riemann surfaces of genus g with
an analytic automorphism of prime order p > g.

The two nontrivial families are the genus (p-1)/2 surfaces whose order-p
automorphism fixes three points and the genus p-1 surfaces where it fixes
four; this package computes their isomorphism-class invariants,
automorphism groups, affine models, parameterization-space components and
the induced counts of singular-locus components of the moduli space, and
checks every closed-form count against independent brute-force censuses.
"""

from .modular import (
    AtlasError,
    ModularUnit,
    OutOfRange,
    PrimeModulus,
    UnsupportedPrime,
    canonical_in_range,
    inverse,
    is_prime,
)
from .lefschetz import (
    CardinalityCase,
    OmegaClass,
    cardinality_case,
    lefschetz_count,
    lefschetz_special_domains,
    omega_set,
    partition_omega,
)
from .gimel import (
    DomainAssignment,
    GluingPair,
    KappaCase,
    LambdaClass,
    NotInSigma,
    SubindexedPair,
    TilingFlavor,
    TilingShape,
    domain_assignment,
    enumerate_classes,
    kappa_case,
    lambda_class,
    sigma_contains,
)
from .automorphisms import (
    AutGroupDescriptor,
    FlavorMismatch,
    coincidence_profile,
    exceptional_surfaces,
    gimel_aut_prime,
    gimel_full_aut,
    is_hyperelliptic,
    lefschetz_aut,
)
from .equations import (
    InvalidExponents,
    SuperellipticEquation,
    ZeroParameter,
    equilateral_equation,
    genus_of,
    hyperelliptic_equation,
    lefschetz_equation,
    rotation_multiplicity_check,
    square_equation,
)
from .parameter_space import (
    Component,
    ComponentGraph,
    DegeneratePoints,
    TilingParameter,
    component_counts,
    component_graph,
    component_of,
    four_point_parameter,
)
from .moduli import (
    ModuliSubscheme,
    NegativeDimension,
    VerificationFailure,
    cross_check,
    dim_one_components,
    genus_from_branch_data,
    isolated_singularities,
    singular_locus_report,
    subscheme_dimension,
)
from .oracle import (
    BoundExceeded,
    TupleSymmetry,
    kappa_fixture_check,
    lambda_orbit_census,
    tuple_orbit_census,
)

__version__ = "0.1.0"

__all__ = [
    "AtlasError",
    "AutGroupDescriptor",
    "BoundExceeded",
    "CardinalityCase",
    "Component",
    "ComponentGraph",
    "DegeneratePoints",
    "DomainAssignment",
    "FlavorMismatch",
    "GluingPair",
    "InvalidExponents",
    "KappaCase",
    "LambdaClass",
    "ModularUnit",
    "ModuliSubscheme",
    "NegativeDimension",
    "NotInSigma",
    "OmegaClass",
    "OutOfRange",
    "PrimeModulus",
    "SubindexedPair",
    "SuperellipticEquation",
    "TilingFlavor",
    "TilingParameter",
    "TilingShape",
    "TupleSymmetry",
    "UnsupportedPrime",
    "VerificationFailure",
    "ZeroParameter",
    "canonical_in_range",
    "cardinality_case",
    "coincidence_profile",
    "component_counts",
    "component_graph",
    "component_of",
    "cross_check",
    "dim_one_components",
    "domain_assignment",
    "enumerate_classes",
    "equilateral_equation",
    "exceptional_surfaces",
    "four_point_parameter",
    "genus_from_branch_data",
    "genus_of",
    "gimel_aut_prime",
    "gimel_full_aut",
    "hyperelliptic_equation",
    "inverse",
    "is_hyperelliptic",
    "is_prime",
    "isolated_singularities",
    "kappa_case",
    "kappa_fixture_check",
    "lambda_class",
    "lambda_orbit_census",
    "lefschetz_aut",
    "lefschetz_count",
    "lefschetz_equation",
    "lefschetz_special_domains",
    "omega_set",
    "partition_omega",
    "rotation_multiplicity_check",
    "sigma_contains",
    "singular_locus_report",
    "square_equation",
    "subscheme_dimension",
    "tuple_orbit_census",
]
