"""The commutant of the function algebra inside the crossed product.

An element sum_k f_k d^k commutes with every continuous function exactly
when each coefficient f_k is supported inside the fixed-point set of the
k-th power of the homeomorphism.  This module provides that membership
test, an independent brute-force oracle via explicit commutators, the
family of indicator functions of fixed-point-set interiors, and the
induced norm-one projection onto the commutant together with a spanning
family of commutant elements.

The projection exists precisely when every fixed-point-set interior is
closed; otherwise :func:`indicator_family` raises
:class:`~dyncross.errors.ProjectionUnavailable` carrying the witness.

The support condition always implies commutation.  The converse needs
enough continuous functions to separate a point from its displaced image,
which Urysohn's lemma guarantees on Hausdorff spaces; the tail backends
are Hausdorff, and a finite space is Hausdorff exactly when it is
discrete.  On a coarser preorder topology :func:`is_in_commutant` is a
strictly stronger condition than commuting, and the two tests are only
required to agree one way.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from typing import List, Optional

from .algebra import EPS_SUPP, Element, embed
from .dynamics import (
    DynSys,
    fix_interior,
    fix_set,
    projection_witness,
    reduced_indices,
)
from .errors import ProjectionUnavailable
from .sampling import random_ctsfun, random_value
from .space import ATail, CtsFun, FiniteSpace, IntShiftSpace


def is_in_commutant(sys: DynSys, x: Element, eps: float = EPS_SUPP) -> bool:
    """Exact membership: every coefficient's numerical support (threshold
    eps, then topological closure) lies inside the matching fixed-point
    set."""
    for k, f in x.coeffs.items():
        if not f.support(eps).is_subset(fix_set(sys, k)):
            return False
    return True


def _oracle_functions(sys: DynSys, degree: int, trials: int,
                      rng: random.Random) -> List[CtsFun]:
    """A separating family of continuous functions for the commutator
    test.  On a finite space the constancy-class indicators span the whole
    function algebra; on the tail backends, single-point bumps (kept far
    enough inside the window for the commutators to be representable) plus
    the constant separate all window-realized coefficient data."""
    space = sys.space
    out = [CtsFun.constant(space, 1.0)]
    if isinstance(space, FiniteSpace):
        for cls in space.constancy_classes():
            out.append(CtsFun.indicator(space, space.set_of(
                space.window_points[i] for i in cls)))
    elif isinstance(space, IntShiftSpace):
        reach = space.window - degree
        for p in space.window_points:
            if abs(p.value) <= reach:
                out.append(CtsFun.bump(space, p))
    else:
        out.extend(CtsFun.bump(space, p) for p in space.window_points)
    radius = None
    if isinstance(space, IntShiftSpace):
        radius = max(0, space.window - degree)
    for _ in range(trials):
        out.append(random_ctsfun(space, rng, radius=radius))
    return out


def commutes_oracle(sys: DynSys, x: Element, trials: int = 4,
                    seed: int = 20210, tol: float = 1e-9) -> bool:
    """Brute-force commutant membership: the commutator with every family
    function must vanish in the series norm."""
    rng = random.Random(seed)
    for g in _oracle_functions(sys, x.degree, trials, rng):
        ge = embed(g)
        if (ge * x - x * ge).ell1_norm() > tol:
            return False
    return True


class IndicatorFamily:
    """Indicators of the fixed-point-set interiors, one per reduced index.

    Available only when each of those interiors is clopen; lookups for
    arbitrary k resolve through gcd reduction.
    """

    def __init__(self, sys: DynSys, table):
        self.sys = sys
        self._table = table  # index -> CtsFun, index 0 included
        self._one = CtsFun.constant(sys.space, 1.0)
        self._zero = CtsFun.zero(sys.space)

    def get(self, k: int) -> CtsFun:
        if k == 0:
            return self._one
        if self.sys.lcm_period is None:
            return self._table[1]
        return self._table[math.gcd(abs(k), self.sys.lcm_period)]


@lru_cache(maxsize=None)
def indicator_family(sys: DynSys) -> IndicatorFamily:
    witness = projection_witness(sys)
    if witness is not None:
        raise ProjectionUnavailable(*witness)
    table = {}
    for k in reduced_indices(sys):
        table[k] = CtsFun.indicator(sys.space, fix_interior(sys, k))
    return IndicatorFamily(sys, table)


def project_to_commutant(sys: DynSys, x: Element) -> Element:
    """The norm-one projection: multiply each coefficient by the indicator
    of the matching fixed-point-set interior."""
    fam = indicator_family(sys)
    return Element(sys.space, {k: f.mul(fam.get(k)) for k, f in x.coeffs.items()})


def commutant_basis(sys: DynSys, degree_bound: int,
                    data_radius: Optional[int] = None) -> List[Element]:
    """A spanning family g d^k with supp(g) inside the k-th fixed-point
    set, |k| <= degree_bound, over a backend-specific function basis."""
    space = sys.space
    out: List[Element] = []
    for k in range(-degree_bound, degree_bound + 1):
        for g in _functions_supported_in(sys, k, data_radius):
            out.append(embed(g, k))
    return out


def _functions_supported_in(sys: DynSys, k: int,
                            data_radius: Optional[int]) -> List[CtsFun]:
    space = sys.space
    target = fix_set(sys, k)
    if isinstance(space, FiniteSpace):
        out = []
        for cls in space.constancy_classes():
            pts = [space.window_points[i] for i in cls]
            if all(target.contains(p) for p in pts):
                out.append(CtsFun.indicator(space, space.set_of(pts)))
        return out
    if isinstance(space, IntShiftSpace):
        if k != 0:
            # a continuous function supported in the single limit point
            # must vanish everywhere
            return []
        r = space.window if data_radius is None else min(data_radius, space.window)
        out = [CtsFun.constant(space, 1.0)]
        out.extend(CtsFun.bump(space, p) for p in space.window_points
                   if abs(p.value) <= r)
        return out
    if target == space.full_set():
        out = [CtsFun.constant(space, 1.0)]
        out.extend(CtsFun.bump(space, p) for p in space.window_points)
        return out
    # odd powers fix only the boundary point and the first ray; continuity
    # forces the boundary value to zero, leaving the ray bumps
    return [CtsFun.bump(space, p) for p in space.window_points
            if isinstance(p, ATail)]


def random_commutant_element(sys: DynSys, rng: random.Random,
                             degree_bound: int,
                             data_radius: Optional[int] = None) -> Element:
    """Random linear combination of spanning commutant elements.

    On the integer-shift backend the default data radius leaves room for
    two subsequent products with elements of the same degree bound.
    """
    if data_radius is None and isinstance(sys.space, IntShiftSpace):
        data_radius = max(0, sys.space.window - 2 * degree_bound)
    basis = commutant_basis(sys, degree_bound, data_radius)
    out = Element(sys.space, {})
    count = rng.randint(1, min(6, len(basis)))
    for b in rng.sample(basis, count):
        out = out + b.scale(random_value(rng))
    return out
