"""Orbit computation, step analysis, Denjoy-Wolff estimation, classification."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import geometry, maps
from .errors import (
    DomainError,
    EstimationError,
    EvaluationError,
    PreconditionError,
)
from .geometry import BoundaryPoint

__all__ = [
    "Budgets",
    "StoppingPolicy",
    "Orbit",
    "StepSeries",
    "ClassificationReport",
    "iterate",
    "step_series",
    "estimate_denjoy_wolff",
    "estimate_multiplier",
    "classify",
    "default_starts",
]


@dataclass(frozen=True)
class Budgets:
    n_max: int = 100_000
    tail_fraction: float = 0.1
    tol_c: float = 1e-3
    # starts with different w-components approach a common Siegel limit only
    # like 1/n, so the agreement tolerance cannot be much below 1e-4 at n ~ 1e4
    tol_dw: float = 1e-4
    tol_step: float = 1e-3


@dataclass(frozen=True)
class StoppingPolicy:
    # beyond this Siegel/half-plane magnitude, doubles lose the digits we need
    max_magnitude: float = 1e12
    # disk/ball orbits stop this close to the boundary
    boundary_gap: float = 1e-12
    fixed_point_tol: float = 1e-14


@dataclass(frozen=True)
class Orbit:
    spec: object
    model: str
    start: object
    points: np.ndarray  # (n,) complex for planar models, (n, N) for ball/siegel
    stop_reason: str  # max_iter | boundary_proximity | interior_fixed_point | numeric_failure

    @property
    def length(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class StepSeries:
    s: np.ndarray
    d_inf_estimate: float
    verdict: str  # zero_step | nonzero_step | inconclusive
    evidence: dict


@dataclass(frozen=True)
class ClassificationReport:
    dw_point: object  # interior point (complex / ndarray) or BoundaryPoint
    dw_location: str  # interior | boundary
    multiplier_c: float
    type: str  # elliptic | hyperbolic | parabolic | inconclusive
    notes: tuple = ()


def default_starts(model: str):
    if model == "disk":
        return [0.0 + 0.0j, 0.3 + 0.2j, -0.4 + 0.1j]
    if model == "halfplane":
        return [1.0 + 0.0j, 2.0 + 1.0j, 0.5 - 0.5j]
    if model == "ball":
        return [
            np.array([0.0, 0.0], np.complex128),
            np.array([0.2 + 0.1j, 0.3], np.complex128),
            np.array([-0.3, 0.1 - 0.2j], np.complex128),
        ]
    if model == "siegel":
        # small w-components: translation orbits shed their w only like 1/n,
        # so widely split starts would stall the Denjoy-Wolff agreement check
        return [
            np.array([1.0, 0.0], np.complex128),
            np.array([2.0 + 1.0j, 0.1], np.complex128),
            np.array([1.5 - 0.5j, -0.1j], np.complex128),
        ]
    raise DomainError(f"unknown model {model!r}")


# ---------------------------------------------------------------------------
# iteration


def iterate(spec, start, n_max: int, policy: StoppingPolicy | None = None) -> Orbit:
    """Forward orbit z_0, f(z_0), f_2(z_0), ... with at most n_max steps."""
    policy = policy or StoppingPolicy()
    model = spec.model
    planar = model in maps.PLANAR
    if planar:
        cur = complex(start)
        buf = np.empty(n_max + 1, np.complex128)
    else:
        cur = np.array(start, np.complex128).reshape(-1)
        buf = np.empty((n_max + 1, cur.size), np.complex128)
    if maps.domain_margin(model, cur) <= 0.0:
        raise DomainError(f"start lies outside the {model} domain")
    buf[0] = cur
    stop = "max_iter"
    count = 1
    bounded = model in ("disk", "ball")
    # the fixed-point test is only a stopping shortcut; checking ball/Siegel
    # orbits every 16 steps keeps the hot loop free of extra array work
    fp_stride = 1 if planar else 16
    for k in range(n_max):
        nxt = spec(cur)
        if planar:
            if model == "disk":
                margin = 1.0 - (nxt.real * nxt.real + nxt.imag * nxt.imag)
            else:
                margin = nxt.real
        elif model == "siegel":
            w = nxt[1:]
            margin = nxt[0].real - float(np.vdot(w, w).real)
        else:  # ball
            margin = 1.0 - float(np.vdot(nxt, nxt).real)
        if not margin > 0.0:
            if margin != margin:  # NaN
                stop = "numeric_failure"
                break
            raise EvaluationError(
                f"orbit left the {model} domain at step {k + 1}",
                index=k + 1,
                margin=float(margin),
            )
        buf[count] = nxt
        count += 1
        if bounded:
            if margin < policy.boundary_gap:  # margin is 1 - ||.||^2 here
                cur = nxt
                stop = "boundary_proximity"
                break
        else:
            mag = abs(nxt if planar else nxt[0])
            if mag > policy.max_magnitude:
                cur = nxt
                stop = "boundary_proximity"
                break
        if k % fp_stride == 0:
            disp = abs(nxt - cur) if planar else float(np.abs(nxt - cur).max())
            if disp < policy.fixed_point_tol:
                cur = nxt
                stop = "interior_fixed_point"
                break
        cur = nxt
    return Orbit(spec, model, start, buf[:count].copy(), stop)


_STEP_FN = {
    "disk": geometry.step_series_disk,
    "halfplane": geometry.step_series_halfplane,
    "ball": geometry.step_series_ball,
    "siegel": geometry.step_series_siegel,
}

_GAP_FN = {
    "disk": geometry.boundary_gap_series_disk,
    "halfplane": geometry.boundary_gap_series_halfplane,
    "ball": geometry.boundary_gap_series_ball,
    "siegel": geometry.boundary_gap_series_siegel,
}


def step_series(orbit: Orbit, tail_fraction: float = 0.1, tol_step: float = 1e-3) -> StepSeries:
    """s_n = d(z_n, z_{n+1}) with a finite-sample zero-step verdict.

    zero_step:    tail mean < tol_step and the series lost at least half its
                  mean between the first and second halves;
    nonzero_step: tail mean > 10 tol_step and the two halves agree to 1%.
    Anything else is inconclusive.
    """
    if orbit.length < 2:
        raise PreconditionError("orbit too short for a step series")
    s = _STEP_FN[orbit.model](orbit.points)
    n = s.size
    tail = s[-max(1, int(round(n * tail_fraction))):]
    d_inf = float(tail.mean())
    half1 = float(s[: n // 2].mean()) if n >= 2 else float(s.mean())
    half2 = float(s[n // 2 :].mean())
    decrease = 1.0 - half2 / half1 if half1 > 0.0 else 1.0
    if d_inf < tol_step and (half1 == 0.0 or half2 <= 0.5 * half1):
        verdict = "zero_step"
    elif d_inf > 10.0 * tol_step and half1 > 0.0 and abs(half2 - half1) <= 1e-2 * half1:
        verdict = "nonzero_step"
    else:
        verdict = "inconclusive"
    evidence = {"tail_window": int(tail.size), "decrease_rate": float(decrease)}
    return StepSeries(s, d_inf, verdict, evidence)


# ---------------------------------------------------------------------------
# Denjoy-Wolff point and multiplier


def _closure_coords(model: str, pt):
    """Represent a point (or its limit) in disk/ball closure coordinates."""
    if model == "disk":
        return np.array([complex(pt)])
    if model == "halfplane":
        z = complex(pt)
        return np.array([(z - 1.0) / (z + 1.0)])
    arr = np.asarray(pt, np.complex128).reshape(-1)
    if model == "ball":
        return arr
    denom = arr[0] + 1.0
    return np.concatenate(([(arr[0] - 1.0) / denom], 2.0 * arr[1:] / denom))


def estimate_denjoy_wolff(spec, starts, n_max: int = 100_000, tol_dw: float = 1e-6):
    """Common orbit limit across starts, as (point, 'interior'|'boundary').

    The point is returned in disk/ball closure coordinates (length-N complex
    array).  Raises EstimationError when the starts disagree.
    """
    if len(starts) < 2:
        raise PreconditionError("need at least 2 distinct starts")
    finals = []
    interior_hits = 0
    for s in starts:
        orb = iterate(spec, s, n_max)
        finals.append(_closure_coords(spec.model, orb.points[-1]))
        if orb.stop_reason == "interior_fixed_point":
            interior_hits += 1
    finals = np.array(finals)
    spread = max(
        float(np.linalg.norm(finals[i] - finals[j]))
        for i in range(len(finals))
        for j in range(i + 1, len(finals))
    )
    if spread > tol_dw:
        raise EstimationError(
            f"orbit limits disagree by {spread:.3g} (> tol_dw); "
            "elliptic-automorphism-like map or n_max too small"
        )
    p = finals.mean(axis=0)
    nrm = float(np.linalg.norm(p))
    if interior_hits == len(starts) and nrm < 1.0 - tol_dw:
        return p, "interior"
    return p, "boundary"


@dataclass(frozen=True)
class MultiplierEstimate:
    value: float
    raw: float
    clipped: bool


def estimate_multiplier(spec, orbit: Orbit, tail_fraction: float = 0.1) -> MultiplierEstimate:
    """liminf of (1 - ||f(Z_n)||)/(1 - ||Z_n||) via a running tail minimum."""
    if orbit.stop_reason == "interior_fixed_point":
        raise PreconditionError("multiplier is defined for boundary Denjoy-Wolff points")
    gaps = _GAP_FN[orbit.model](orbit.points)
    good = gaps > 0.0
    if not np.all(good):
        last = int(np.argmin(good))
        gaps = gaps[:last]
    if gaps.size < 3:
        raise PreconditionError("orbit too short for a multiplier estimate")
    ratios = gaps[1:] / gaps[:-1]
    tail = ratios[-max(1, int(round(ratios.size * tail_fraction))):]
    raw = float(tail.min())
    return MultiplierEstimate(min(raw, 1.0), raw, raw > 1.0)


def _midpoint_fixed_point(spec, start, n_max: int = 20_000, tol: float = 1e-13):
    """Damped iteration p <- midpoint(p, f(p)); attracts elliptic fixed points."""
    planar = spec.model in maps.PLANAR
    cur = complex(start) if planar else np.array(start, np.complex128).reshape(-1)
    for _ in range(n_max):
        try:
            nxt = spec(cur)
        except (ZeroDivisionError, FloatingPointError):
            return None
        mid = (cur + nxt) / 2.0
        disp = abs(mid - cur) if planar else float(np.linalg.norm(mid - cur))
        cur = mid
        if disp < tol:
            if maps.domain_margin(spec.model, cur) > 0.0:
                return cur
            return None
    return None


def _contraction_probe(spec, p, delta: float = 1e-5) -> float:
    """Local pseudo-hyperbolic contraction factor at an interior fixed point."""
    planar = spec.model in maps.PLANAR
    if spec.model == "disk":
        dist = geometry.pdist_disk
    elif spec.model == "halfplane":
        dist = geometry.pdist_halfplane
    elif spec.model == "ball":
        dist = geometry.pdist_ball
    else:
        dist = geometry.pdist_siegel
    worst = 0.0
    for k in range(4):
        if planar:
            q = p + delta * np.exp(1j * np.pi * k / 2.0)
        else:
            q = np.array(p, np.complex128)
            q[k % q.size] += delta * (1.0 if k < 2 else 1j)
        if maps.domain_margin(spec.model, q) <= 0.0:
            continue
        d0 = dist(p, q)
        if d0 == 0.0:
            continue
        worst = max(worst, dist(spec(p), spec(q)) / d0)
    return worst if worst > 0.0 else 1.0


def _native_boundary_point(model: str, p: np.ndarray):
    """Express a disk/ball closure limit as the model's boundary object."""
    if model in ("halfplane", "siegel"):
        # all built-in half-plane/Siegel families are normalized to infinity
        if abs(p[0] - 1.0) < 1e-3:
            return BoundaryPoint.infinity()
    nrm = float(np.linalg.norm(p))
    if nrm == 0.0:
        return BoundaryPoint.e1(p.size)
    return BoundaryPoint(p / nrm)


def classify(spec, starts=None, budgets: Budgets | None = None) -> ClassificationReport:
    """Elliptic / hyperbolic / parabolic verdict from orbit behavior."""
    budgets = budgets or Budgets()
    starts = list(starts) if starts is not None else default_starts(spec.model)
    if len(starts) < 2:
        planar = spec.model in maps.PLANAR
        for extra in default_starts(spec.model):
            if all(
                (abs(extra - s) > 0.0 if planar else np.any(extra != np.asarray(s)))
                for s in starts
            ):
                starts.append(extra)
    notes = []
    try:
        p, location = estimate_denjoy_wolff(spec, starts, budgets.n_max, budgets.tol_dw)
    except EstimationError as exc:
        notes.append(str(exc))
        fp = _midpoint_fixed_point(spec, starts[0])
        if fp is None:
            return ClassificationReport(None, "boundary", float("nan"), "inconclusive", tuple(notes))
        c = _contraction_probe(spec, fp)
        notes.append("fixed point located by damped (midpoint) iteration")
        return ClassificationReport(fp, "interior", min(c, 1.0), "elliptic", tuple(notes))

    if location == "interior":
        native = p[0] if spec.model == "disk" else p
        if spec.model == "halfplane":
            native = (1.0 + p[0]) / (1.0 - p[0])
        elif spec.model == "siegel":
            denom = 1.0 - p[0]
            native = np.concatenate(([(1.0 + p[0]) / denom], p[1:] / denom))
        c = _contraction_probe(spec, native)
        return ClassificationReport(native, "interior", min(c, 1.0), "elliptic", tuple(notes))

    values = []
    for s in starts:
        orb = iterate(spec, s, budgets.n_max)
        est = estimate_multiplier(spec, orb, budgets.tail_fraction)
        if est.clipped:
            notes.append(f"multiplier estimate {est.raw:.6g} clipped to 1")
        values.append(est.value)
    c = float(np.mean(values))
    if c < 1.0 - budgets.tol_c:
        kind = "hyperbolic"
    elif abs(c - 1.0) <= budgets.tol_c:
        kind = "parabolic"
    else:
        kind = "inconclusive"
        notes.append(f"multiplier {c!r} outside both verdict bands")
    return ClassificationReport(
        _native_boundary_point(spec.model, p), "boundary", c, kind, tuple(notes)
    )
