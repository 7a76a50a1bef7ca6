"""Overrings of Dedekind domains from ideal-class data.

Decides whether the overring kept by a set of prime classes is a
localization, well-centered or almost well-centered, with replayable
certificates, on top of exact abelian-group arithmetic and a Hilbert-basis
solver for linear Diophantine systems.
"""
from .abelian import (
    INFINITE,
    FgAbelianGroup,
    GroupElement,
    add,
    element_order,
    group_from_relations,
    is_torsion_group,
    make_group,
    neg,
    normalize,
    scalar_mul,
    smith_normal_form,
    zero,
)
from .dedekind import (
    AnalysisReport,
    OverringConfig,
    Verdict,
    classify,
    divisor_class,
    is_almost_well_centered,
    is_extension_of_principal,
    is_localization,
    is_principal_in_overring,
    is_well_centered,
    overring_class_group,
    prime_class_is_radical_of_principal,
    validate,
)
from .diophantine import (
    HilbertBasis,
    LinearSystem,
    exists_positive_multiple_in_monoid,
    hilbert_basis,
    intersection_generators,
    monoid_membership,
    solve_nonneg,
    subgroup_membership,
)
from .errors import (
    ConfigError,
    InvalidDivisor,
    InvalidModulus,
    NotRealizable,
    OverringError,
    PreconditionError,
    ReproductionFailure,
    ResourceExceeded,
    ShapeError,
)

__version__ = "0.1.0"
