"""Matrix models of the cyclic representations and the C*-norm.

For a periodic point x of exact period p and unimodular lam, the
representation acts on a p-dimensional space: the canonical unitary is
the cyclic shift with lam in the wrap-around corner, and a function acts
diagonally through its values along the orbit.  The basis vector e_0
reproduces the pure state extending evaluation at x.

For an aperiodic point the representation is the two-sided shift with
diagonal function action; the artifact compresses it to the window
[-M, M], which is exact for states and matrix products away from the
edges and yields certified lower bounds for norms.

The C*-norm of an element is the sup of the representation norms over
orbit representatives and the torus parameter; the torus sweep carries
the same certified grid bound as the character module, and everything is
dominated by the series norm.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from .algebra import Element
from .characters import (
    Character,
    CircleGrid,
    PointCharacter,
    TorusCharacter,
    eval_character,
    gelfand_norm,
)
from .commutant import is_in_commutant, project_to_commutant
from .dynamics import DynSys, minimal_interior_order, period_of
from .errors import (
    ForeignPoint,
    NoConvergence,
    NotInCommutant,
    TruncationTooSmall,
)
from .numerics import NormEstimate, golden_max, grid_excess
from .space import ATail, BTail, IntPoint, IntShiftSpace, FiniteSpace, Point

UNIT_MODULUS_TOL = 1e-12


@dataclass(frozen=True)
class PeriodicRep:
    """Cyclic matrix model at a periodic point; ``lam`` is the unimodular
    wrap-around parameter and ``period`` must be the exact period."""

    x: Point
    period: int
    lam: complex


@dataclass(frozen=True)
class TruncatedRep:
    """Central compression of the shift model at an aperiodic point."""

    x: Point
    radius: int


RepDescriptor = Union[PeriodicRep, TruncatedRep]


@dataclass(frozen=True, eq=False)
class RepMatrix:
    """Dense matrix together with the row/column index of e_0."""

    matrix: np.ndarray
    center: int


def rep_matrix(sys: DynSys, rep: RepDescriptor, x_elem: Element) -> RepMatrix:
    """Matrix of an element in the chosen representation."""
    sp = sys.space
    if x_elem.space != sp:
        raise ForeignPoint("element and system live over different spaces")
    if isinstance(rep, PeriodicRep):
        p = rep.period
        actual = period_of(sys, rep.x)
        if actual != p:
            raise ForeignPoint(
                f"{rep.x} has exact period {actual}, not {p}")
        if abs(abs(rep.lam) - 1.0) > UNIT_MODULUS_TOL:
            raise ValueError("wrap-around parameter must be unimodular")
        orbit_vals = {}
        mat = np.zeros((p, p), dtype=complex)
        for k, f in x_elem.coeffs.items():
            for n in range(p):
                row = (n + k) % p
                wrap = (n + k - row) // p
                if row not in orbit_vals:
                    orbit_vals[row] = sp.sigma_apply(rep.x, row)
                mat[row, n] += f(orbit_vals[row]) * rep.lam ** wrap
        return RepMatrix(mat, 0)
    m = rep.radius
    if m < 1 or m < x_elem.degree:
        raise TruncationTooSmall(
            f"radius {m} < element degree {x_elem.degree}")
    if period_of(sys, rep.x) is not None:
        raise ForeignPoint(f"{rep.x} is periodic; use the cyclic model")
    dim = 2 * m + 1
    mat = np.zeros((dim, dim), dtype=complex)
    for k, f in x_elem.coeffs.items():
        for n in range(-m, m + 1):
            t = n + k
            if -m <= t <= m:
                mat[t + m, n + m] += f(sp.sigma_apply(rep.x, t))
    return RepMatrix(mat, m)


def state_eval(sys: DynSys, rep: RepDescriptor, x_elem: Element) -> complex:
    """The (e_0, e_0) matrix entry: the pure state attached to the
    representation.  Exact for the truncated model once the radius reaches
    the element degree."""
    rm = rep_matrix(sys, rep, x_elem)
    return complex(rm.matrix[rm.center, rm.center])


# ---------------------------------------------------------------------------
# Spectral norm by power iteration
# ---------------------------------------------------------------------------


def _start_vector(n: int) -> np.ndarray:
    idx = np.arange(1, n + 1, dtype=float)
    v = 1.0 / idx + 1j / (idx + 1.0)
    return v / np.linalg.norm(v)


def operator_norm(mat, tol: float = 1e-12, max_iter: int = 20000) -> float:
    """Largest singular value via power iteration on the Gram matrix with
    a deterministic start and a Rayleigh-quotient convergence test."""
    if isinstance(mat, RepMatrix):
        mat = mat.matrix
    a = np.asarray(mat, dtype=complex)
    if a.size == 0:
        return 0.0
    gram = a.conj().T @ a
    v = _start_vector(gram.shape[0])
    lam_old = None
    for _ in range(max_iter):
        w = gram @ v
        norm_w = float(np.linalg.norm(w))
        if norm_w < 1e-300:
            return 0.0
        v = w / norm_w
        lam = float(np.real(np.vdot(v, gram @ v)))
        if lam_old is not None and abs(lam - lam_old) <= tol * max(abs(lam), 1e-300):
            return math.sqrt(max(lam, 0.0))
        lam_old = lam
    raise NoConvergence("power iteration hit its iteration cap")


def _batched_norms(mats: np.ndarray) -> np.ndarray:
    """Largest singular values of a stack of matrices.

    Backed by LAPACK through numpy (a closed 2x2 formula loses half the
    mantissa to cancellation near degenerate singular values, which is
    exactly the common case for the cyclic models).  The single-matrix
    :func:`operator_norm` stays on power iteration and the two routes are
    cross-checked in the tests.
    """
    n = mats.shape[-1]
    if n == 1:
        return np.abs(mats[:, 0, 0])
    return np.linalg.svd(mats, compute_uv=False)[..., 0]


# ---------------------------------------------------------------------------
# Orbit representatives
# ---------------------------------------------------------------------------


def periodic_orbit_reps(sys: DynSys) -> List[tuple]:
    """One (point, period) pair per periodic orbit with distinct function
    data; the tail backends add one beyond-window representative whose
    orbit realizes the limit values."""
    sp = sys.space
    if isinstance(sp, FiniteSpace):
        return [(sp.window_points[orbit[0]], len(orbit)) for orbit in sp.orbits()]
    if isinstance(sp, IntShiftSpace):
        return [(sp.limit_point("inf"), 1)]
    w = sp.window
    reps = [(sp.limit_point("origin"), 1)]
    reps.extend((ATail(n), 1) for n in range(1, w + 2))
    reps.extend((BTail(n), 2) for n in range(1, w, 2))
    reps.append((BTail(w + 1), 2))
    return reps


def aperiodic_reps(sys: DynSys) -> List[Point]:
    if isinstance(sys.space, IntShiftSpace):
        return [IntPoint(0)]
    return []


def default_truncation(sys: DynSys, x_elem: Element) -> int:
    if isinstance(sys.space, IntShiftSpace):
        return sys.space.window + x_elem.degree + 1
    return max(1, x_elem.degree)


# ---------------------------------------------------------------------------
# C*-norm
# ---------------------------------------------------------------------------


def cstar_norm(sys: DynSys, x_elem: Element, grid: CircleGrid,
               radius: Optional[int] = None,
               power_tol: float = 1e-13, refine: bool = True) -> NormEstimate:
    """Sup of representation norms over orbit representatives and the
    torus parameter.

    On all-periodic backends the estimate is two-sided (grid bound plus
    golden-section refinement; ``refine=False`` skips the polish and keeps
    the plain grid sup).  Where aperiodic orbits exist and the element has
    positive degree, the truncated norms are certified lower bounds only,
    and the series norm caps the excess.
    """
    if not x_elem.coeffs:
        return NormEstimate(0.0, 0.0)
    h = grid.half_spacing
    lam_grid = np.array(grid.samples, dtype=complex)
    value = 0.0
    upper = 0.0
    best = None  # (grid max, point, period, best angle)
    by_period = {}
    for x, p in periodic_orbit_reps(sys):
        by_period.setdefault(p, []).append(x)
    for p, points in by_period.items():
        g = grid.resolution
        pows = {}
        mats = np.zeros((len(points), g, p, p), dtype=complex)
        for i, x in enumerate(points):
            for row, col, val, w in _rep_entry_plan(sys, x, p, x_elem):
                if w not in pows:
                    pows[w] = lam_grid ** w
                mats[i, :, row, col] += val * pows[w]
        norms = _batched_norms(mats.reshape(-1, p, p)).reshape(len(points), g)
        grid_max = float(np.max(norms))
        lip = sum(math.ceil(abs(k) / p) * f.sup_norm()
                  for k, f in x_elem.coeffs.items())
        curv = sum(math.ceil(abs(k) / p) ** 2 * f.sup_norm()
                   for k, f in x_elem.coeffs.items())
        upper = max(upper, grid_max + grid_excess(lip, curv, h))
        value = max(value, grid_max)
        if best is None or grid_max > best[0]:
            i, best_j = np.unravel_index(int(np.argmax(norms)), norms.shape)
            best = (grid_max, points[i], p, 2 * math.pi * best_j / g)
    if best is not None and refine:
        _, x, p, angle = best

        def fn(t: float) -> float:
            return operator_norm(
                rep_matrix(sys, PeriodicRep(x, p, cmath.exp(1j * t)), x_elem),
                tol=power_tol)

        value = max(value, golden_max(fn, angle - 2 * h, angle + 2 * h,
                                      iters=40))
    loose = False
    for x in aperiodic_reps(sys):
        m = radius if radius is not None else default_truncation(sys, x_elem)
        norm = operator_norm(rep_matrix(sys, TruncatedRep(x, m), x_elem),
                             tol=power_tol)
        value = max(value, norm)
        if x_elem.degree > 0:
            loose = True
        else:
            upper = max(upper, norm)
    if loose:
        upper = max(upper, x_elem.ell1_norm())
    # headroom for the iterative norm evaluations themselves
    slop = 1e-10 * (1.0 + value)
    return NormEstimate(value, max(0.0, upper - value) + slop)


def _rep_entry_plan(sys: DynSys, x: Point, p: int, x_elem: Element) -> List[tuple]:
    """(row, col, value, wrap-power) quadruples of the cyclic model,
    independent of the torus parameter."""
    sp = sys.space
    orbit = [sp.sigma_apply(x, r) for r in range(p)]
    out = []
    for k, f in x_elem.coeffs.items():
        for n in range(p):
            row = (n + k) % p
            wrap = (n + k - row) // p
            out.append((row, n, f(orbit[row]), wrap))
    return out


# ---------------------------------------------------------------------------
# Restriction of pure states down to the commutant
# ---------------------------------------------------------------------------


@dataclass
class RestrictionReport:
    """How the pure state extensions of evaluation at a point restrict to
    the commutant: against which character, and with what deviation."""

    x: Point
    case: str
    period: Optional[int]
    interior_order: Optional[int]
    max_deviation: float

    @property
    def ok(self) -> bool:
        return self.max_deviation <= 1e-9


def restriction_report(sys: DynSys, x: Point, lams: Sequence[complex],
                       elems: Sequence[Element]) -> RestrictionReport:
    """Compare the vector states of the matrix models with the predicted
    characters on commutant elements.

    * aperiodic point: the unique state restricts to the point character;
    * periodic point inside a fixed-point-set interior of minimal order n
      and period p: the lam-state restricts to the torus character with
      parameter lam ** (n // p);
    * periodic point outside every such interior: every lam-state
      restricts to the point character.
    """
    p = period_of(sys, x)
    n = minimal_interior_order(sys, x)
    dev = 0.0
    if p is None:
        case = "aperiodic"
        for e in elems:
            got = state_eval(sys, TruncatedRep(x, max(1, e.degree)), e)
            want = eval_character(sys, PointCharacter(x), e)
            dev = max(dev, abs(got - want))
    elif n is not None:
        case = "periodic-interior"
        ratio = n // p
        for lam in lams:
            for e in elems:
                got = state_eval(sys, PeriodicRep(x, p, lam), e)
                want = eval_character(sys, TorusCharacter(x, n, lam ** ratio), e)
                dev = max(dev, abs(got - want))
    else:
        case = "periodic-boundary"
        for lam in lams:
            for e in elems:
                got = state_eval(sys, PeriodicRep(x, p, lam), e)
                want = eval_character(sys, PointCharacter(x), e)
                dev = max(dev, abs(got - want))
    return RestrictionReport(x, case, p, n, dev)


# ---------------------------------------------------------------------------
# Unique state extensions and the envelope identity
# ---------------------------------------------------------------------------


def extension_state(sys: DynSys, ch: Character,
                    degree: int) -> Optional[RepDescriptor]:
    """The unique state of the full algebra extending a character, when
    uniqueness holds: point characters at aperiodic points extend to the
    shift-model state, and torus characters whose order equals the exact
    period extend to the cyclic-model state with the same parameter."""
    if isinstance(ch, PointCharacter):
        if period_of(sys, ch.x) is None:
            return TruncatedRep(ch.x, max(1, degree))
        return None
    p = period_of(sys, ch.x)
    if p == ch.order:
        return PeriodicRep(ch.x, p, ch.c)
    return None


def unique_extension_gap(sys: DynSys, chars: Sequence[Character],
                         elems: Sequence[Element]) -> float:
    """Largest deviation between character-after-projection and the unique
    extension state, over full-algebra samples; both must agree wherever
    the extension is unique."""
    gap = 0.0
    for e in elems:
        projected = project_to_commutant(sys, e)
        for ch in chars:
            rep = extension_state(sys, ch, e.degree)
            if rep is None:
                continue
            got = eval_character(sys, ch, projected)
            want = state_eval(sys, rep, e)
            gap = max(gap, abs(got - want))
    return gap


@dataclass
class EnvelopeReport:
    """Agreement of the Gelfand sup with the representation sup, with the
    certified error budget."""

    gelfand: NormEstimate
    cstar: NormEstimate
    extension_gap: Optional[float]

    @property
    def gap(self) -> float:
        return abs(self.gelfand.value - self.cstar.value)

    @property
    def budget(self) -> float:
        return self.gelfand.error_bound + self.cstar.error_bound

    @property
    def ok(self) -> bool:
        return self.gap <= self.budget + 1e-12


def envelope_report(sys: DynSys, x_elem: Element, grid: CircleGrid,
                    radius: Optional[int] = None,
                    chars: Sequence[Character] = (),
                    full_samples: Sequence[Element] = ()) -> EnvelopeReport:
    """Check that the commutant's Gelfand sup equals the C*-norm within
    the certified budget; optionally also check the unique-extension
    agreement on full-algebra samples."""
    if not is_in_commutant(sys, x_elem):
        raise NotInCommutant("the envelope identity concerns commutant elements")
    g = gelfand_norm(sys, x_elem, grid)
    c = cstar_norm(sys, x_elem, grid, radius)
    ext = None
    if chars and full_samples:
        ext = unique_extension_gap(sys, chars, full_samples)
    return EnvelopeReport(g, c, ext)
