"""The five bundled systems; every verification suite runs on at least
one of them.

* ``one_point`` -- a single fixed point; the crossed product is the
  classical summable-series algebra over the integers.
* ``swap2`` -- two discrete points exchanged by the map.
* ``cycle3`` -- a discrete three-cycle.
* ``int_shift8`` -- the integer shift on its one-point compactification,
  window radius 8 (the only fixture with aperiodic points).
* ``tails8`` -- the pair-swap-tails space, window radius 8 (the fixture
  where no projection onto the commutant exists).
"""

from __future__ import annotations

from .dynamics import DynSys, make_dynsys
from .space import IntShiftSpace, PairSwapTailsSpace, finite_space


def one_point() -> DynSys:
    return make_dynsys(finite_space(["pt"], {"pt": ["pt"]}, {"pt": "pt"}))


def swap2() -> DynSys:
    return make_dynsys(finite_space(
        ["a", "b"], {"a": ["a"], "b": ["b"]}, {"a": "b", "b": "a"}))


def cycle3() -> DynSys:
    return make_dynsys(finite_space(
        ["x0", "x1", "x2"],
        {"x0": ["x0"], "x1": ["x1"], "x2": ["x2"]},
        {"x0": "x1", "x1": "x2", "x2": "x0"}))


def int_shift8() -> DynSys:
    return make_dynsys(IntShiftSpace(8))


def tails8() -> DynSys:
    return make_dynsys(PairSwapTailsSpace(8))


FIXTURES = {
    "one_point": one_point,
    "swap2": swap2,
    "cycle3": cycle3,
    "int_shift8": int_shift8,
    "tails8": tails8,
}


def fixture(name: str) -> DynSys:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")


def all_fixtures():
    return [(name, ctor()) for name, ctor in FIXTURES.items()]
