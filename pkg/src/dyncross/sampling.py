"""Seeded random data for tests and verification sweeps.

Values are drawn with real and imaginary parts of magnitude in
[0.5, 1.5], keeping everything far from the support and pruning
thresholds, so that membership predicates never sit on a knife edge.

On the integer-shift backend, generated functions keep their exceptional
data inside a reduced radius so that later products (which translate data
by the partner's degree) stay inside the window.
"""

from __future__ import annotations

import random
from typing import Optional

from .algebra import Element
from .space import CtsFun, FiniteSpace, IntShiftSpace, IntPoint, Space


def random_value(rng: random.Random) -> complex:
    re = rng.choice((-1, 1)) * rng.uniform(0.5, 1.5)
    im = rng.choice((-1, 1)) * rng.uniform(0.5, 1.5)
    return complex(re, im)


def random_ctsfun(space: Space, rng: random.Random, *,
                  radius: Optional[int] = None, sparse: bool = False) -> CtsFun:
    """A random continuous function.

    Dense mode fills every eligible window point and the limit value;
    sparse mode sets the limit to zero and populates a few points.  On a
    finite space the function is random per constancy class.
    """
    if isinstance(space, FiniteSpace):
        values = {}
        for cls in space.constancy_classes():
            v = random_value(rng)
            for i in cls:
                values[space.window_points[i]] = v
        return CtsFun(space, values)

    if isinstance(space, IntShiftSpace):
        r = space.window if radius is None else min(radius, space.window)
        eligible = [IntPoint(v) for v in range(-r, r + 1)]
    else:
        eligible = list(space.window_points)

    limit_name = space.limit_names[0]
    if sparse:
        count = rng.randint(1, max(1, len(eligible) // 3))
        points = rng.sample(eligible, count)
        values = {p: random_value(rng) for p in points}
        return CtsFun(space, values, {limit_name: 0.0})
    values = {p: random_value(rng) for p in eligible}
    return CtsFun(space, values, {limit_name: random_value(rng)})


def random_element(space: Space, rng: random.Random, degree_bound: int, *,
                   multiply_slack: int = 0, sparse_prob: float = 0.3,
                   radius: Optional[int] = None) -> Element:
    """A random element of degree at most ``degree_bound``.

    ``multiply_slack`` reserves room for that many subsequent products
    with elements of the same degree bound (integer-shift backend only).
    """
    if radius is None and isinstance(space, IntShiftSpace):
        radius = max(0, space.window - multiply_slack * degree_bound)
    ks = list(range(-degree_bound, degree_bound + 1))
    chosen = [k for k in ks if rng.random() < 0.6]
    if not chosen:
        chosen = [rng.choice(ks)]
    coeffs = {}
    for k in chosen:
        sparse = rng.random() < sparse_prob
        coeffs[k] = random_ctsfun(space, rng, radius=radius, sparse=sparse)
    return Element(space, coeffs)
