"""Validated algebra over graded-membership set families.

Component triplets and pairs, family validity predicates from plain fuzzy
sets up to hyperspherical neutrosophic sets, operator suites, whole-set
transforms, split-component refinements, literal-indeterminacy arithmetic,
and decision partitioning, with a batch CLI (``neutroset``).
"""

from neutroset.core import (
    ABS_TOL,
    PRINTED_TOL,
    ComponentRangeError,
    ConstraintError,
    DegenerateInputError,
    IntervalValue,
    NeutrosetError,
    Pair,
    Triplet,
    UndefinedOperationError,
    UnitValue,
    UsageError,
    dependence_sum_bound,
    make_unit,
)
from neutroset.families import (
    CubeRegion,
    FamilyKind,
    FamilySpec,
    InclusionClaim,
    ValidationReport,
    analytic_family_volume,
    classify_cube_region,
    embed_into_ns,
    estimate_family_volume,
    find_counterexample,
    hesitancy,
    refusal,
    validate,
)
from neutroset.operators import (
    NormPair,
    Op,
    OperatorSystem,
    OverflowRule,
    SystemKind,
    TConorm,
    TNorm,
    conjunct,
    disjunct,
    implicate,
    negate,
    setwise,
)
from neutroset.transforms import (
    DivergenceReport,
    LabeledSet,
    ParadoxReport,
    SupTransformResult,
    divergence_report,
    normalize_elementwise,
    paradox_check,
    sup_transform,
)

__version__ = "0.1.0"

__all__ = [
    "ABS_TOL",
    "PRINTED_TOL",
    "ComponentRangeError",
    "ConstraintError",
    "CubeRegion",
    "DegenerateInputError",
    "DivergenceReport",
    "FamilyKind",
    "FamilySpec",
    "InclusionClaim",
    "IntervalValue",
    "LabeledSet",
    "NeutrosetError",
    "NormPair",
    "Op",
    "OperatorSystem",
    "OverflowRule",
    "Pair",
    "ParadoxReport",
    "SupTransformResult",
    "SystemKind",
    "TConorm",
    "TNorm",
    "Triplet",
    "UndefinedOperationError",
    "UnitValue",
    "UsageError",
    "ValidationReport",
    "analytic_family_volume",
    "classify_cube_region",
    "conjunct",
    "dependence_sum_bound",
    "disjunct",
    "divergence_report",
    "embed_into_ns",
    "estimate_family_volume",
    "find_counterexample",
    "hesitancy",
    "implicate",
    "make_unit",
    "negate",
    "normalize_elementwise",
    "paradox_check",
    "refusal",
    "setwise",
    "sup_transform",
    "validate",
]
