"""Periodic-point combinatorics and topology of a dynamical system.

Everything indexed by "all integers k" is reduced to a finite index set:
on backends where every point is periodic, the fixed-point set of the
k-th power depends only on gcd(k, L) with L the least common multiple of
the realized periods; on the integer-shift backend the fixed-point sets
for k != 0 all coincide, so the single index 1 suffices.  Density is
always decided exactly via closure = whole space, never sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .errors import ForeignPoint
from .space import (
    ATail,
    BTail,
    FiniteSpace,
    IntShiftSpace,
    PairSwapTailsSpace,
    Point,
    SetRep,
    Space,
)


@dataclass(frozen=True)
class DynSys:
    """A space together with the derived period structure.

    ``lcm_period`` is the least common multiple of all realized periods,
    or None when aperiodic points exist (integer-shift backend).
    """

    space: Space
    lcm_period: Optional[int]


def make_dynsys(space: Space) -> DynSys:
    if isinstance(space, FiniteSpace):
        lcm = 1
        for orbit in space.orbits():
            lcm = math.lcm(lcm, len(orbit))
        return DynSys(space, lcm)
    if isinstance(space, PairSwapTailsSpace):
        return DynSys(space, 2)
    if isinstance(space, IntShiftSpace):
        return DynSys(space, None)
    raise TypeError(f"unsupported space {space!r}")


def divisors(n: int) -> tuple:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def reduced_indices(sys: DynSys) -> tuple:
    """Nonzero indices k for which distinct fixed-point sets can occur."""
    if sys.lcm_period is None:
        return (1,)
    return divisors(sys.lcm_period)


def period_of(sys: DynSys, x: Point) -> Optional[int]:
    """Exact period of a point, or None for an aperiodic point."""
    sp = sys.space
    if not sp.contains(x):
        raise ForeignPoint(f"{x} not in this space")
    if isinstance(sp, FiniteSpace):
        p = 1
        y = sp.sigma_apply(x)
        while y != x:
            y = sp.sigma_apply(y)
            p += 1
        return p
    if isinstance(sp, IntShiftSpace):
        return 1 if sp.limit_name_of(x) is not None else None
    if isinstance(x, BTail):
        return 2
    return 1  # Origin and the fixed ray


@lru_cache(maxsize=None)
def fix_set(sys: DynSys, k: int) -> SetRep:
    """The set of points fixed by the k-th power of the homeomorphism."""
    sp = sys.space
    if k == 0:
        return sp.full_set()
    k = abs(k)
    if sys.lcm_period is not None:
        k = math.gcd(k, sys.lcm_period)
    if isinstance(sp, FiniteSpace):
        pts = [p for p in sp.window_points
               if period_of(sys, p) is not None and k % period_of(sys, p) == 0]
        return sp.set_of(pts)
    if isinstance(sp, IntShiftSpace):
        # the shift moves every integer; only the limit point is fixed
        return sp.set_of([], [], ["inf"])
    if k % 2 == 0:
        return sp.full_set()
    pts = [p for p in sp.window_points if isinstance(p, ATail)]
    return sp.set_of(pts, ["a"], ["origin"])


@lru_cache(maxsize=None)
def per_set(sys: DynSys, p: int) -> SetRep:
    """Points of exact period p."""
    if p < 1:
        raise ValueError("period must be >= 1")
    out = fix_set(sys, p)
    for d in range(1, p):
        if p % d == 0:
            out = out.difference(fix_set(sys, d))
    return out


def aperiodic_set(sys: DynSys) -> SetRep:
    union = sys.space.empty_set()
    for k in reduced_indices(sys):
        union = union.union(fix_set(sys, k))
    return union.complement()


@lru_cache(maxsize=None)
def fix_interior(sys: DynSys, k: int) -> SetRep:
    return sys.space.interior(fix_set(sys, k))


def minimal_interior_order(sys: DynSys, x: Point) -> Optional[int]:
    """Least n >= 1 with x in the interior of the n-th fixed-point set,
    or None when no such n exists.  The search over all n reduces to the
    backend's finite index set."""
    if not sys.space.contains(x):
        raise ForeignPoint(f"{x} not in this space")
    for n in reduced_indices(sys):
        if fix_interior(sys, n).contains(x):
            return n
    return None


def projection_witness(sys: DynSys) -> Optional[tuple]:
    """None when every fixed-point-set interior is closed; otherwise the
    smallest offending index k together with a boundary point."""
    for k in (0,) + reduced_indices(sys):
        inner = fix_interior(sys, k)
        boundary = sys.space.closure(inner).difference(inner)
        if not boundary.is_empty():
            return k, boundary.sample_point()
    return None


def projection_condition(sys: DynSys) -> bool:
    return projection_witness(sys) is None


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------


@dataclass
class RelationCheck:
    name: str
    holds: bool
    witness: Optional[Point] = None


@dataclass
class InteriorClosureReport:
    """Relations between interiors and closures of unions of fixed-point
    and exact-period sets over a divisor-closed index family."""

    seeds: tuple
    divisor_closure: tuple
    inclusions: list = field(default_factory=list)
    closure_equalities: list = field(default_factory=list)

    def all_hold(self) -> bool:
        return all(c.holds for c in self.inclusions + self.closure_equalities)


def _subset_check(name: str, a: SetRep, b: SetRep) -> RelationCheck:
    if a.is_subset(b):
        return RelationCheck(name, True)
    return RelationCheck(name, False, a.difference(b).sample_point())


def _equal_check(name: str, a: SetRep, b: SetRep) -> RelationCheck:
    if a == b:
        return RelationCheck(name, True)
    diff = a.difference(b).union(b.difference(a))
    return RelationCheck(name, False, diff.sample_point())


def interior_closure_report(sys: DynSys, seeds) -> InteriorClosureReport:
    """Check, for the set S of seed indices and its divisor closure P, the
    inclusion chain and four-way closure equality between the unions of
    interior-of-Per_p (p in P), interior-of-Fix_s (s in S), and the
    interiors of the corresponding unions."""
    seeds = tuple(sorted(set(int(s) for s in seeds)))
    if not seeds or seeds[0] < 1:
        raise ValueError("seed set must be non-empty positive integers")
    p_family = tuple(sorted({p for s in seeds for p in divisors(s)}))
    sp = sys.space

    per_int_union = sp.empty_set()
    per_union = sp.empty_set()
    for p in p_family:
        per_int_union = per_int_union.union(sp.interior(per_set(sys, p)))
        per_union = per_union.union(per_set(sys, p))
    fix_int_union = sp.empty_set()
    fix_union = sp.empty_set()
    for s in seeds:
        fix_int_union = fix_int_union.union(fix_interior(sys, s))
        fix_union = fix_union.union(fix_set(sys, s))
    fix_union_int = sp.interior(fix_union)
    per_union_int = sp.interior(per_union)
    cl = sp.closure(per_int_union)

    report = InteriorClosureReport(seeds, p_family)
    report.inclusions = [
        _subset_check("per-interiors inside fix-interiors", per_int_union, fix_int_union),
        _subset_check("fix-interiors inside interior of fix-union", fix_int_union, fix_union_int),
        _subset_check("interior of fix-union inside closure of per-interiors",
                      fix_union_int, cl),
        _subset_check("per-interiors inside interior of per-union",
                      per_int_union, per_union_int),
        _subset_check("interior of per-union inside interior of fix-union",
                      per_union_int, fix_union_int),
    ]
    report.closure_equalities = [
        _equal_check("closure(interior of per-union) = closure(per-interiors)",
                     sp.closure(per_union_int), cl),
        _equal_check("closure(fix-interiors) = closure(per-interiors)",
                     sp.closure(fix_int_union), cl),
        _equal_check("closure(interior of fix-union) = closure(per-interiors)",
                     sp.closure(fix_union_int), cl),
    ]
    return report


@dataclass(frozen=True)
class FreenessReport:
    """The five equivalent characterizations of topological freeness and
    the four density statements for the union of the aperiodic part with
    interiors of periodic structure."""

    aperiodic_dense: bool
    fix_interiors_empty: bool
    fix_union_interior_empty: bool
    per_interiors_empty: bool
    per_union_interior_empty: bool
    dense_aper_fix_interiors: bool
    dense_aper_fix_union_interior: bool
    dense_aper_per_interiors: bool
    dense_aper_per_union_interior: bool

    def freeness_flags(self) -> tuple:
        return (self.aperiodic_dense, self.fix_interiors_empty,
                self.fix_union_interior_empty, self.per_interiors_empty,
                self.per_union_interior_empty)

    def density_flags(self) -> tuple:
        return (self.dense_aper_fix_interiors, self.dense_aper_fix_union_interior,
                self.dense_aper_per_interiors, self.dense_aper_per_union_interior)

    def topologically_free(self) -> bool:
        return self.aperiodic_dense


def freeness_report(sys: DynSys) -> FreenessReport:
    sp = sys.space
    idx = reduced_indices(sys)
    aper = aperiodic_set(sys)

    def dense(s: SetRep) -> bool:
        return sp.closure(s) == sp.full_set()

    fix_int_union = sp.empty_set()
    fix_union = sp.empty_set()
    per_int_union = sp.empty_set()
    per_union = sp.empty_set()
    for k in idx:
        fix_int_union = fix_int_union.union(fix_interior(sys, k))
        fix_union = fix_union.union(fix_set(sys, k))
        per_int_union = per_int_union.union(sp.interior(per_set(sys, k)))
        per_union = per_union.union(per_set(sys, k))

    return FreenessReport(
        aperiodic_dense=dense(aper),
        fix_interiors_empty=all(fix_interior(sys, k).is_empty() for k in idx),
        fix_union_interior_empty=sp.interior(fix_union).is_empty(),
        per_interiors_empty=all(sp.interior(per_set(sys, k)).is_empty() for k in idx),
        per_union_interior_empty=sp.interior(per_union).is_empty(),
        dense_aper_fix_interiors=dense(aper.union(fix_int_union)),
        dense_aper_fix_union_interior=dense(aper.union(sp.interior(fix_union))),
        dense_aper_per_interiors=dense(aper.union(per_int_union)),
        dense_aper_per_union_interior=dense(aper.union(sp.interior(per_union))),
    )
