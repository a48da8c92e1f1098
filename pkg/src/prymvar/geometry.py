"""Planar geometry helpers: distances, segment crossings, obstacle routing.

Points are complex numbers.  Everything here is exact-enough float geometry;
callers decide tolerances.
"""
from __future__ import annotations

import numpy as np

from .errors import PathConstructionError, TangentialCrossing

__all__ = [
    "seg_point_dist", "seg_seg_dist", "seg_seg_cross", "polyline_length",
    "route_path", "dist_to_polyline",
]


def seg_point_dist(a: complex, b: complex, p) -> float:
    """Distance from point(s) ``p`` to the closed segment [a, b]."""
    p = np.asarray(p, dtype=complex)
    d = b - a
    L2 = abs(d) ** 2
    if L2 == 0:
        return np.abs(p - a)
    t = np.clip(((p - a) * np.conj(d)).real / L2, 0.0, 1.0)
    return np.abs(p - (a + t * d))


def seg_seg_cross(a1: complex, a2: complex, b1: complex, b2: complex,
                  tol: float = 1e-12):
    """Transversal interior crossing of two segments.

    Returns ``(t, u, sign)`` with crossing at ``a1 + t (a2-a1)``, or ``None``
    when the segments do not cross in their interiors.  ``sign`` is the sign
    of ``cross(a2-a1, b2-b1)``.  Near-parallel overlapping configurations
    raise :class:`TangentialCrossing`.
    """
    d1 = a2 - a1
    d2 = b2 - b1
    denom = (d1.real * d2.imag - d1.imag * d2.real)
    scale = max(abs(d1) * abs(d2), 1e-300)
    rhs = b1 - a1
    if abs(denom) < 1e-9 * scale:
        # parallel; check for genuine overlap which we refuse to sign
        h = abs(rhs.real * d1.imag - rhs.imag * d1.real) / max(abs(d1), 1e-300)
        if h < tol * max(1.0, abs(d1)):
            s0 = (rhs * np.conj(d1)).real / abs(d1) ** 2
            s1 = ((b2 - a1) * np.conj(d1)).real / abs(d1) ** 2
            if min(s0, s1) < 1 and max(s0, s1) > 0:
                raise TangentialCrossing("parallel overlapping segments")
        return None
    t = (rhs.real * d2.imag - rhs.imag * d2.real) / denom
    u = (rhs.real * d1.imag - rhs.imag * d1.real) / denom
    eps = 1e-10
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return t, u, (1 if denom > 0 else -1)
    if -eps <= t <= 1 + eps and -eps <= u <= 1 + eps:
        if (abs(t) < eps or abs(t - 1) < eps or abs(u) < eps or abs(u - 1) < eps):
            # touching at an endpoint is treated as no crossing; the caller
            # constructs paths so that genuine crossings are interior
            return None
    return None


def seg_seg_dist(a1, a2, b1, b2) -> float:
    try:
        if seg_seg_cross(a1, a2, b1, b2) is not None:
            return 0.0
    except TangentialCrossing:
        return 0.0
    return min(
        float(seg_point_dist(a1, a2, b1)), float(seg_point_dist(a1, a2, b2)),
        float(seg_point_dist(b1, b2, a1)), float(seg_point_dist(b1, b2, a2)),
    )


def polyline_length(pts) -> float:
    pts = np.asarray(pts, dtype=complex)
    return float(np.sum(np.abs(np.diff(pts))))


def dist_to_polyline(pts, p) -> float:
    pts = list(pts)
    return min(float(np.min(seg_point_dist(pts[i], pts[i + 1], p)))
               for i in range(len(pts) - 1))


def _segment_clear(a, b, obstacles, clearance, skip_near_endpoints):
    for ob in obstacles:
        if isinstance(ob, tuple):
            d = seg_seg_dist(a, b, ob[0], ob[1])
        else:
            d = float(seg_point_dist(a, b, ob))
            if skip_near_endpoints and (abs(ob - a) < 1e-12 or abs(ob - b) < 1e-12):
                continue
        if d < clearance:
            return False
    return True


def route_path(z0: complex, z1: complex, obstacles, clearance: float,
               depth: int = 12) -> list:
    """Polyline from ``z0`` to ``z1`` clearing point and segment obstacles.

    Obstacles are complex points or ``(p, q)`` segment tuples.  Obstacles
    coinciding with an endpoint are ignored for the edges touching that
    endpoint.  Midpoint-offset recursion; deterministic.
    """
    def recurse(a, b, d):
        if _segment_clear(a, b, obstacles, clearance, True):
            return [a, b]
        if d <= 0:
            raise PathConstructionError(
                f"cannot route {a:.3g} -> {b:.3g} at clearance {clearance:.3g}")
        mid = 0.5 * (a + b)
        direction = (b - a) / max(abs(b - a), 1e-300)
        normal = 1j * direction
        step = max(abs(b - a) * 0.5, 2.0 * clearance)
        for k in (1, -1, 2, -2, 3, -3):
            cand = mid + normal * (k * step)
            # candidate waypoint itself must be clear
            ok = all(
                (seg_point_dist(ob[0], ob[1], cand) if isinstance(ob, tuple)
                 else abs(cand - ob)) > clearance for ob in obstacles)
            if not ok:
                continue
            try:
                left = recurse(a, cand, d - 1)
                right = recurse(cand, b, d - 1)
                return left[:-1] + right
            except PathConstructionError:
                continue
        raise PathConstructionError(
            f"routing {a:.3g} -> {b:.3g} exhausted detour candidates")

    return recurse(z0, z1, depth)
