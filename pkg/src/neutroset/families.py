"""Set families as named validity predicates over components.

Each family couples an arity (pair or triplet), an exponent, a bound on the
powered component sum, and a cap on individual components. Derived degrees
(hesitancy, refusal), embeddings into the neutrosophic triplet space,
canonical strict-inclusion witnesses, unit-cube geometry, and Monte-Carlo
volume estimation all live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from numbers import Real

import numpy as np

from neutroset import _kernels
from neutroset.core import (
    ABS_TOL,
    ComponentRangeError,
    ConstraintError,
    IntervalValue,
    Pair,
    Triplet,
    UnitValue,
    UsageError,
    as_component,
    sup_of,
)


class FamilyKind(Enum):
    """The supported set families, from plain fuzzy up to hyperspherical neutrosophic."""

    FS = "FS"
    IFS = "IFS"
    IIFS = "IIFS"
    NS = "NS"
    PYFS = "PyFS"
    QROFS = "QROFS"
    SFS = "SFS"
    NHSFS = "NHSFS"
    SNS = "SNS"
    NHSNS = "NHSNS"


#: Families whose elements carry (T, F) pairs rather than (T, I, F) triplets.
PAIR_FAMILIES = frozenset({FamilyKind.FS, FamilyKind.IFS, FamilyKind.PYFS, FamilyKind.QROFS})

#: Families that require an explicit exponent parameter.
EXPONENT_FAMILIES = frozenset({FamilyKind.QROFS, FamilyKind.NHSFS, FamilyKind.NHSNS})


@dataclass(frozen=True)
class FamilySpec:
    """A family identifier plus its exponent parameter, defining a validity predicate."""

    kind: FamilyKind
    exponent: Real | None = None

    def __post_init__(self):
        if self.kind in EXPONENT_FAMILIES:
            if self.exponent is None:
                raise UsageError(f"{self.kind.value} requires an exponent >= 1")
            if not self.exponent >= 1:
                raise UsageError(f"{self.kind.value} exponent must be >= 1, got {self.exponent!r}")
        elif self.exponent is not None:
            raise UsageError(f"{self.kind.value} takes no exponent parameter")

    @property
    def arity(self) -> int:
        return 2 if self.kind in PAIR_FAMILIES else 3

    @property
    def effective_exponent(self) -> Real:
        if self.kind in EXPONENT_FAMILIES:
            return self.exponent
        if self.kind in (FamilyKind.PYFS, FamilyKind.SFS, FamilyKind.SNS):
            return 2
        return 1

    @property
    def bound(self) -> Real:
        if self.kind in (FamilyKind.NS, FamilyKind.SNS, FamilyKind.NHSNS):
            return 3
        return 1

    @property
    def component_cap(self) -> float:
        """Upper bound on each individual component."""
        if self.kind is FamilyKind.SNS:
            return math.sqrt(3.0)
        if self.kind is FamilyKind.NHSNS:
            return 3.0 ** (1.0 / float(self.exponent))
        return 1.0

    def describe(self) -> str:
        if self.kind in EXPONENT_FAMILIES:
            return f"{self.kind.value}(exponent={self.exponent})"
        return self.kind.value


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking components against a family constraint."""

    valid: bool
    constraint_value: Real
    bound: Real
    diagnostics: str = ""


class CubeRegion(Enum):
    """Disjoint regions of the unit component cube split by the plane t + i + f = 1."""

    INCOMPLETE = "incomplete"
    COMPLETE = "complete"
    PARACONSISTENT = "paraconsistent"


class InclusionClaim(Enum):
    """Strict-inclusion claims: triplet spaces the neutrosophic family covers but the target does not."""

    NS_NOT_SFS = "NS_not_SFS"
    NS_NOT_QROFS = "NS_not_QROFS"
    NS_NOT_NHSFS = "NS_not_NHSFS"
    NS_NOT_IIFS = "NS_not_IIFS"


def _coerce_components(components, family: FamilySpec) -> tuple:
    """Normalize caller input to a tuple of raw numbers/intervals of the family's arity."""
    if isinstance(components, Triplet):
        parts = components.components()
    elif isinstance(components, Pair):
        parts = components.components()
    elif isinstance(components, (tuple, list)):
        parts = tuple(components)
    else:
        raise UsageError(f"cannot read components from {type(components).__name__}")
    if len(parts) != family.arity:
        raise UsageError(
            f"{family.describe()} takes {family.arity} components, got {len(parts)}"
        )
    cap = family.component_cap
    out = []
    for p in parts:
        if cap == 1.0:
            out.append(as_component(p))
        else:
            # extended-range families carry raw numbers or intervals up to the cap
            if isinstance(p, (UnitValue, IntervalValue)):
                out.append(p.v if isinstance(p, UnitValue) else p)
            elif isinstance(p, Real) and not isinstance(p, bool):
                if not 0 <= p <= cap + ABS_TOL:
                    raise ComponentRangeError(p, f"component {p!r} outside [0, {cap:.6g}]")
                out.append(p)
            else:
                raise UsageError(f"expected a real number, got {type(p).__name__}")
    return tuple(out)


def _powered_sum(values, exponent: Real) -> Real:
    acc = 0
    for v in values:
        if exponent == 1:
            acc = acc + v
        elif exponent == 2:
            acc = acc + v * v
        else:
            acc = acc + math.pow(v, exponent)
    return acc


def validate(components, family: FamilySpec, tol: float = ABS_TOL) -> ValidationReport:
    """Check components against the family's constraint.

    Interval components are judged by their suprema. Returns a report with
    the evaluated constraint value; range violations raise instead.
    """
    parts = _coerce_components(components, family)
    sups = [sup_of(p) for p in parts]
    if family.kind is FamilyKind.FS:
        # only the membership slot is constrained
        constrained = sups[:1]
    else:
        constrained = sups
    value = _powered_sum(constrained, family.effective_exponent)
    ok = value <= family.bound + tol
    detail = f"{family.describe()}: constraint value {float(value):.6g} vs bound {family.bound}"
    return ValidationReport(valid=bool(ok), constraint_value=value, bound=family.bound, diagnostics=detail)


def _require_valid(components, family: FamilySpec, tol: float = ABS_TOL) -> tuple:
    parts = _coerce_components(components, family)
    report = validate(parts, family, tol)
    if not report.valid:
        raise ConstraintError(report.diagnostics)
    return parts


def _residual_root(deficit: Real, exponent: Real) -> float:
    """The exponent-th root of a residual, clamped against rounding dust."""
    d = float(deficit)
    if d < 0:
        d = 0.0
    if exponent == 1:
        return d
    if exponent == 2:
        return math.sqrt(d)
    return math.pow(d, 1.0 / float(exponent))


def hesitancy(pair: Pair, family: FamilySpec) -> UnitValue:
    """Derived indeterminacy of a valid (T, F) pair: what the constraint leaves over.

    Plain intuitionistic pairs leave ``1 - T - F``; the squared and q-rung
    variants leave the matching root of ``1 - T^e - F^e``.
    """
    if family.kind not in (FamilyKind.IFS, FamilyKind.PYFS, FamilyKind.QROFS):
        raise UsageError(f"hesitancy is defined for IFS/PyFS/QROFS, not {family.describe()}")
    parts = _require_valid(pair, family)
    e = family.effective_exponent
    deficit = 1 - _powered_sum([sup_of(p) for p in parts], e)
    if e == 1:
        return UnitValue(deficit if deficit > 0 else 0 * deficit)
    return UnitValue(_residual_root(deficit, e))


def refusal(triplet: Triplet, family: FamilySpec) -> UnitValue:
    """Residual degree of a valid (T, I, F) triplet under IIFS/SFS/NHSFS.

    The powered families take the exponent-th root of the residual so the
    result lives on the same scale as the components (for the squared case
    this is the usual square root).
    """
    if family.kind not in (FamilyKind.IIFS, FamilyKind.SFS, FamilyKind.NHSFS):
        raise UsageError(f"refusal is defined for IIFS/SFS/NHSFS, not {family.describe()}")
    parts = _require_valid(triplet, family)
    e = family.effective_exponent
    deficit = 1 - _powered_sum([sup_of(p) for p in parts], e)
    if e == 1:
        return UnitValue(deficit if deficit > 0 else 0 * deficit)
    return UnitValue(_residual_root(deficit, e))


def embed_into_ns(components, from_family: FamilySpec) -> Triplet:
    """Map valid components of ``from_family`` to a neutrosophic-valid triplet.

    Pair families fill the middle slot with what their constraint leaves
    over; powered families raise each component to the family exponent.
    Triplet families already inside the neutrosophic cube pass through.
    """
    kind = from_family.kind
    parts = _require_valid(components, from_family)
    e = from_family.effective_exponent
    if kind in (FamilyKind.IIFS, FamilyKind.NS):
        t, i, f = parts
        return Triplet(t, i, f)
    if kind in (FamilyKind.IFS, FamilyKind.PYFS, FamilyKind.QROFS):
        t, f = (sup_of(p) for p in parts)
        tp = t if e == 1 else _powered_sum([t], e)
        fp = f if e == 1 else _powered_sum([f], e)
        leftover = 1 - tp - fp
        if leftover < 0:
            leftover = 0.0
        return Triplet(tp, leftover, fp)
    if kind in (FamilyKind.SFS, FamilyKind.NHSFS):
        t, i, f = (sup_of(p) for p in parts)
        return Triplet(_powered_sum([t], e), _powered_sum([i], e), _powered_sum([f], e))
    raise UsageError(f"no embedding into NS is defined for {from_family.describe()}")


#: Canonical witnesses: valid neutrosophic triplets rejected by the target family.
_WITNESSES = {
    InclusionClaim.NS_NOT_SFS: Triplet(0.9, 0.4, 0.5),
    InclusionClaim.NS_NOT_QROFS: Triplet(1.0, 0.5, 0.5),
    InclusionClaim.NS_NOT_NHSFS: Triplet(1.0, 0.5, 0.5),
    InclusionClaim.NS_NOT_IIFS: Triplet(1.0, 1.0, 1.0),
}


def find_counterexample(claim: InclusionClaim, exponent: Real | None = None) -> Triplet:
    """A fixed triplet that is neutrosophic-valid but invalid for the claimed target family.

    Witnesses are constants so downstream golden tests stay stable. For the
    exponent families the returned triplet has a full membership slot plus a
    positive second component, which overflows the bound for every
    exponent >= 1.
    """
    witness = _WITNESSES[claim]
    ns_ok = validate(witness, FamilySpec(FamilyKind.NS)).valid
    target = _claim_target(claim, exponent)
    target_components = witness if target.arity == 3 else Pair(witness.t, witness.f)
    target_ok = validate(target_components, target).valid
    if not ns_ok or target_ok:
        raise AssertionError(f"canonical witness for {claim.value} failed its defining check")
    return witness


def _claim_target(claim: InclusionClaim, exponent: Real | None) -> FamilySpec:
    if claim is InclusionClaim.NS_NOT_SFS:
        return FamilySpec(FamilyKind.SFS)
    if claim is InclusionClaim.NS_NOT_QROFS:
        return FamilySpec(FamilyKind.QROFS, exponent if exponent is not None else 2)
    if claim is InclusionClaim.NS_NOT_NHSFS:
        return FamilySpec(FamilyKind.NHSFS, exponent if exponent is not None else 2)
    return FamilySpec(FamilyKind.IIFS)


def classify_cube_region(triplet: Triplet, tol: float = ABS_TOL) -> CubeRegion:
    """Locate a triplet relative to the sum-1 plane of the unit component cube."""
    s = sum(sup_of(c) for c in triplet.components())
    if s < 1 - tol:
        return CubeRegion.INCOMPLETE
    if s > 1 + tol:
        return CubeRegion.PARACONSISTENT
    return CubeRegion.COMPLETE


@dataclass(frozen=True)
class VolumeEstimate:
    """Monte-Carlo estimate of the unit-hypercube fraction a family constraint admits."""

    estimate: float
    std_error: float
    samples: int
    seed: int
    backend: str = field(default_factory=_kernels.backend_name)


#: Samples generated per block; fixed so the stream consumption is reproducible.
_SAMPLE_BLOCK = 1 << 16


def estimate_family_volume(family: FamilySpec, samples: int, seed: int) -> VolumeEstimate:
    """Estimate the fraction of the unit hypercube satisfying the family constraint.

    Uses a counter-based generator so the estimate is a pure function of
    (seed, samples), independent of block partitioning and of which
    counting backend is active.
    """
    if samples < 1:
        raise UsageError(f"samples must be >= 1, got {samples}")
    arity = family.arity
    exponent = float(family.effective_exponent)
    bound = float(family.bound)
    ncols = 1 if family.kind is FamilyKind.FS else arity
    gen = np.random.Generator(np.random.Philox(seed))
    remaining = samples
    hits = 0
    while remaining > 0:
        m = min(_SAMPLE_BLOCK, remaining)
        block = gen.random((m, arity))
        hits += _kernels.count_satisfying(block, exponent, bound, ABS_TOL, ncols)
        remaining -= m
    p = hits / samples
    se = math.sqrt(p * (1.0 - p) / samples)
    return VolumeEstimate(estimate=p, std_error=se, samples=samples, seed=seed)


def analytic_family_volume(family: FamilySpec) -> float:
    """Closed-form counterpart of :func:`estimate_family_volume`.

    The admissible region {x in [0,1]^k : sum x_j^n <= 1} has volume
    Gamma(1 + 1/n)^k / Gamma(1 + k/n); families bounded by 3 admit the
    whole cube.
    """
    if family.bound == 3 or family.kind is FamilyKind.FS:
        return 1.0
    n = float(family.effective_exponent)
    k = family.arity
    return math.gamma(1 + 1 / n) ** k / math.gamma(1 + k / n)
