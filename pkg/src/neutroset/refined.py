"""Split-component families: each of T, I, F refined into sub-degrees.

A refined instance carries tuples of sub-truths, sub-indeterminacies, and
sub-falsehoods. Family constraints bound the (powered) sum of all
subcomponents, with the bound growing to the total arity for the
neutrosophic-style refinements. Degenerate arities (one subcomponent per
slot) are accepted and reduce to the unrefined families.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Real
from typing import Sequence

import neutroset.families as families
from neutroset.core import (
    ABS_TOL,
    ComponentRangeError,
    ConstraintError,
    IntervalValue,
    Triplet,
    UnitValue,
    UsageError,
    inf_of,
    sup_of,
)
from neutroset.families import ValidationReport


class RefinedKind(Enum):
    RFS = "RFS"
    RIFS = "RIFS"
    RIIFS = "RIIFS"
    RNS = "RNS"
    RPYFS = "RPyFS"
    RSFS = "RSFS"
    RQROFS = "RQROFS"
    RNHSNS = "RNHSNS"


#: Refined families whose middle slot must stay empty.
_NO_I = frozenset({RefinedKind.RFS, RefinedKind.RIFS, RefinedKind.RPYFS, RefinedKind.RQROFS})

#: Refined families that require an exponent parameter.
_EXPONENTED = frozenset({RefinedKind.RQROFS, RefinedKind.RNHSNS})


@dataclass(frozen=True)
class RefinedFamilySpec:
    """A refined family identifier plus its exponent parameter where applicable."""

    kind: RefinedKind
    exponent: Real | None = None

    def __post_init__(self):
        if self.kind in _EXPONENTED:
            if self.exponent is None:
                raise UsageError(f"{self.kind.value} requires an exponent >= 1")
            if not self.exponent >= 1:
                raise UsageError(f"{self.kind.value} exponent must be >= 1, got {self.exponent!r}")
        elif self.exponent is not None:
            raise UsageError(f"{self.kind.value} takes no exponent parameter")

    @property
    def effective_exponent(self) -> Real:
        if self.kind in _EXPONENTED:
            return self.exponent
        if self.kind in (RefinedKind.RPYFS, RefinedKind.RSFS):
            return 2
        return 1

    def bound(self, arities: tuple[int, int, int]) -> Real:
        if self.kind in (RefinedKind.RNS, RefinedKind.RNHSNS):
            return sum(arities)
        return 1

    def component_cap(self, arities: tuple[int, int, int]) -> float:
        if self.kind is RefinedKind.RNHSNS:
            return sum(arities) ** (1.0 / float(self.exponent))
        return 1.0

    def describe(self) -> str:
        if self.kind in _EXPONENTED:
            return f"{self.kind.value}(exponent={self.exponent})"
        return self.kind.value


def _coerce_part(x, cap: float):
    if isinstance(x, UnitValue):
        return x.v
    if isinstance(x, IntervalValue):
        return x
    if isinstance(x, bool) or not isinstance(x, Real):
        raise UsageError(f"expected a real subcomponent, got {type(x).__name__}")
    if not 0 <= x <= cap + ABS_TOL:
        raise ComponentRangeError(x, f"subcomponent {x!r} outside [0, {cap:.6g}]")
    return x


@dataclass(frozen=True)
class RefinedComponents:
    """Sub-degree tuples (T_1..T_p; I_1..I_r; F_1..F_s)."""

    t: tuple
    i: tuple = ()
    f: tuple = ()

    def __post_init__(self):
        # individual values are range-checked against the loosest cap here;
        # family-specific caps are enforced by validate_refined
        object.__setattr__(self, "t", tuple(self.t))
        object.__setattr__(self, "i", tuple(self.i))
        object.__setattr__(self, "f", tuple(self.f))
        for group in (self.t, self.i, self.f):
            for v in group:
                if not isinstance(v, (UnitValue, IntervalValue)):
                    if isinstance(v, bool) or not isinstance(v, Real):
                        raise UsageError(f"expected a real subcomponent, got {type(v).__name__}")
                    if v < 0:
                        raise ComponentRangeError(v, f"subcomponent {v!r} is negative")
        if not self.t:
            raise UsageError("at least one sub-truth component is required")

    @property
    def arities(self) -> tuple[int, int, int]:
        return (len(self.t), len(self.i), len(self.f))

    def all_parts(self) -> tuple:
        return self.t + self.i + self.f


def _check_arities(c: RefinedComponents, fam: RefinedFamilySpec) -> None:
    p, r, s = c.arities
    kind = fam.kind
    if kind is RefinedKind.RFS:
        if p < 2 or r != 0 or s != 0:
            raise UsageError(f"{kind.value} needs p >= 2 sub-truths and nothing else, got (p={p}, r={r}, s={s})")
        return
    if kind in _NO_I:
        if r != 0:
            raise UsageError(f"{kind.value} carries no sub-indeterminacies, got r={r}")
        if s < 1:
            raise UsageError(f"{kind.value} needs at least one sub-falsehood")
        return
    if r < 1 or s < 1:
        raise UsageError(f"{kind.value} needs at least one subcomponent per slot, got (p={p}, r={r}, s={s})")


def validate_refined(c: RefinedComponents, fam: RefinedFamilySpec, tol: float = ABS_TOL) -> ValidationReport:
    """Check a refined instance: powered subcomponent sum against the family bound.

    Interval subcomponents are judged by their suprema. The bound is 1 for
    the fuzzy-side refinements and the total arity for the
    neutrosophic-style ones.
    """
    _check_arities(c, fam)
    cap = fam.component_cap(c.arities)
    parts = [_coerce_part(v, cap) for v in c.all_parts()]
    e = fam.effective_exponent
    value = families._powered_sum([sup_of(p) for p in parts], e)
    bound = fam.bound(c.arities)
    ok = value <= bound + tol
    detail = f"{fam.describe()} {c.arities}: constraint value {float(value):.6g} vs bound {bound}"
    return ValidationReport(valid=bool(ok), constraint_value=value, bound=bound, diagnostics=detail)


def _require_valid(c: RefinedComponents, fam: RefinedFamilySpec) -> ValidationReport:
    report = validate_refined(c, fam)
    if not report.valid:
        raise ConstraintError(report.diagnostics)
    return report


def refined_hesitancy(c: RefinedComponents, fam: RefinedFamilySpec) -> UnitValue:
    """Leftover indeterminacy of a valid RPyFS or RQROFS instance.

    The matching root of ``1 - sum T_j^e - sum F_l^e``; with one sub-truth
    and one sub-falsehood this is exactly the unrefined hesitancy.
    """
    if fam.kind not in (RefinedKind.RPYFS, RefinedKind.RQROFS):
        raise UsageError(f"refined hesitancy is defined for RPyFS/RQROFS, not {fam.describe()}")
    report = _require_valid(c, fam)
    e = fam.effective_exponent
    deficit = 1 - report.constraint_value
    if e == 1:
        return UnitValue(deficit if deficit > 0 else 0 * deficit)
    return UnitValue(families._residual_root(deficit, e))


def refined_refusal(c: RefinedComponents, fam: RefinedFamilySpec) -> UnitValue | IntervalValue:
    """Residual degree of a valid RIIFS or RSFS instance.

    RSFS takes the square root of the squared-sum residual. RIIFS subtracts
    the plain sums from 1; with interval subcomponents the result is itself
    an interval, degenerating to a scalar for scalar inputs.
    """
    if fam.kind not in (RefinedKind.RIIFS, RefinedKind.RSFS):
        raise UsageError(f"refined refusal is defined for RIIFS/RSFS, not {fam.describe()}")
    report = _require_valid(c, fam)
    if fam.kind is RefinedKind.RSFS:
        return UnitValue(families._residual_root(1 - report.constraint_value, 2))
    parts = [_coerce_part(v, 1.0) for v in c.all_parts()]
    has_interval = any(isinstance(p, IntervalValue) for p in parts)
    hi = 1 - sum(inf_of(p) for p in parts)
    lo = 1 - sum(sup_of(p) for p in parts)
    lo = lo if lo > 0 else 0 * lo
    if has_interval:
        return IntervalValue(lo, hi)
    return UnitValue(lo)


def refine(
    t: Triplet,
    arities: tuple[int, int, int],
    weights: tuple[Sequence[Real], Sequence[Real], Sequence[Real]] | None = None,
) -> RefinedComponents:
    """Split each component of ``t`` across subcomponents by the given weights.

    Each slot's weights must be nonnegative and sum to 1 (equal split by
    default). Splitting is done in exact rational arithmetic so
    :func:`coarsen` recovers the original triplet bit-for-bit.
    """
    p, r, s = arities
    if p < 1 or r < 0 or s < 0:
        raise UsageError(f"arities must be (p >= 1, r >= 0, s >= 0), got {arities}")
    scalars = t.scalars()
    if weights is None:
        weights = tuple(tuple(Fraction(1, n) for _ in range(n)) if n else () for n in arities)
    groups = []
    for n, value, ws in zip(arities, scalars, weights):
        ws = tuple(Fraction(w) for w in ws)
        if len(ws) != n:
            raise UsageError(f"expected {n} weights, got {len(ws)}")
        if any(w < 0 for w in ws):
            raise UsageError("weights must be nonnegative")
        if n == 0:
            if value != 0:
                raise UsageError(f"cannot drop nonzero component {value!r} into an empty slot")
            groups.append(())
            continue
        if sum(ws) != 1:
            raise UsageError(f"weights must sum to 1 exactly, got {float(sum(ws))}")
        exact = Fraction(value)
        groups.append(tuple(w * exact for w in ws))
    return RefinedComponents(t=groups[0], i=groups[1], f=groups[2])


def coarsen(c: RefinedComponents) -> Triplet:
    """Collapse a refined instance by summing each slot's subcomponents."""

    def total(group) -> Real:
        acc = Fraction(0)
        for v in group:
            x = v.v if isinstance(v, UnitValue) else v
            if isinstance(x, IntervalValue):
                raise UsageError("cannot coarsen interval subcomponents to a scalar triplet")
            acc += Fraction(x)
        if acc > 1:
            raise ComponentRangeError(float(acc), f"slot sum {float(acc)} exceeds 1; not collapsible to a unit triplet")
        return acc

    sums = (total(c.t), total(c.i), total(c.f))
    # hand back plain floats whenever they represent the exact sum
    return Triplet(*(float(v) if float(v) == v else v for v in sums))
