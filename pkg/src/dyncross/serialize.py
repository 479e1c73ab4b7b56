"""JSON encodings of spaces, points, sets, and elements.

Space description::

    {"kind": "finite", "points": ["a", "b"],
     "min_open_nbhd": {"a": ["a"], "b": ["b"]},
     "sigma": {"a": "b", "b": "a"}}
    {"kind": "int_shift", "window": 8}
    {"kind": "pair_swap_tails", "window": 8}

Element description (complex numbers as [re, im] pairs)::

    {"terms": [{"k": 2, "values": {"a": [4, 0], "b": [6, 0]}},
               {"k": 0, "values": {"a": [1, 0], "b": [1, 0]}}]}

Point keys are labels on a finite space; decimal strings ("-3") plus
"inf" on the integer-shift backend; "a1".."aW", "b1".."bW" and "origin"
on the pair-swap backend.  Limit values may be given inside "values" or
in a separate "limits" object; they default to zero.
"""

from __future__ import annotations

import json
from typing import Mapping

from .algebra import Element
from .errors import ParseError
from .space import (
    ATail,
    BTail,
    CtsFun,
    FiniteSpace,
    IntPoint,
    IntShiftSpace,
    Point,
    Space,
    build_space,
    point_key,
)


def space_to_spec(space: Space) -> dict:
    if isinstance(space, FiniteSpace):
        return {
            "kind": "finite",
            "points": list(space.labels),
            "min_open_nbhd": {
                space.labels[i]: sorted(space.labels[j] for j in space.nbhd[i])
                for i in range(len(space.labels))
            },
            "sigma": {space.labels[i]: space.labels[space.perm[i]]
                      for i in range(len(space.labels))},
        }
    return {"kind": space.kind, "window": space.window}


def space_from_spec(spec: Mapping) -> Space:
    try:
        return build_space(spec)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed space description: {exc}") from exc


def point_to_str(space: Space, p: Point) -> str:
    if isinstance(space, FiniteSpace):
        return space.label(p)
    if isinstance(p, IntPoint):
        return str(p.value)
    if isinstance(p, ATail):
        return f"a{p.n}"
    if isinstance(p, BTail):
        return f"b{p.n}"
    if space.limit_name_of(p) is not None:
        return space.limit_name_of(p)
    raise ParseError(f"cannot encode point {p!r}")


def point_from_str(space: Space, s: str) -> Point:
    try:
        if isinstance(space, FiniteSpace):
            return space.point(s)
        if isinstance(space, IntShiftSpace):
            if s == "inf":
                return space.limit_point("inf")
            return IntPoint(int(s))
        if s == "origin":
            return space.limit_point("origin")
        if s and s[0] == "a":
            return ATail(int(s[1:]))
        if s and s[0] == "b":
            return BTail(int(s[1:]))
    except (ValueError, KeyError) as exc:
        raise ParseError(f"bad point name {s!r}: {exc}") from exc
    raise ParseError(f"bad point name {s!r}")


def _decode_complex(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if (isinstance(v, (list, tuple)) and len(v) == 2
            and all(isinstance(t, (int, float)) for t in v)):
        return complex(v[0], v[1])
    raise ParseError(f"bad complex value {v!r}; use [re, im]")


def _encode_complex(z: complex):
    return [z.real, z.imag]


def element_to_json(x: Element) -> dict:
    space = x.space
    terms = []
    for k in x.support():
        f = x.coeffs[k]
        term = {"k": k,
                "values": {point_to_str(space, p): _encode_complex(v)
                           for p, v in sorted(f.values.items(),
                                              key=lambda kv: point_key(kv[0]))}}
        if f.limits:
            term["limits"] = {name: _encode_complex(v)
                              for name, v in sorted(f.limits.items())}
        terms.append(term)
    return {"terms": terms}


def element_from_json(space: Space, doc: Mapping) -> Element:
    if not isinstance(doc, Mapping) or "terms" not in doc:
        raise ParseError('element description must be {"terms": [...]}')
    coeffs = {}
    for term in doc["terms"]:
        try:
            k = int(term["k"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad term index: {exc}") from exc
        values = {}
        limits = {name: 0.0 for name in space.limit_names}
        for key, raw in term.get("values", {}).items():
            z = _decode_complex(raw)
            if key in space.limit_names:
                limits[key] = z
                continue
            values[point_from_str(space, key)] = z
        for key, raw in term.get("limits", {}).items():
            if key not in space.limit_names:
                raise ParseError(f"unknown limit name {key!r}")
            limits[key] = _decode_complex(raw)
        if isinstance(space, FiniteSpace):
            full = {p: values.get(p, 0.0) for p in space.window_points}
            coeffs[k] = CtsFun(space, full)
        else:
            coeffs[k] = CtsFun(space, values, limits)
    return Element(space, coeffs)


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
