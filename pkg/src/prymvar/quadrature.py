"""Numerical integration: path integrals, Cauchy coefficients, branch residues.

Paths are integrated edge by edge with nested Gauss-Legendre rules and
adaptive bisection.  Circle extractions use uniform sampling (trapezoid =
exponentially convergent on analytic integrands) with node doubling.  Branch
residues are means over local-frame samples.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import (ClearanceViolation, ContourCollision, DivergentEndpoint,
                     NoConvergence)
from .paths import CyclePath, PathLeg

__all__ = [
    "integrate_path", "integrate_form", "circle_coefficients", "residue_at",
    "branch_residue", "abelian_primitive", "kappa_integral", "richardson",
]

REL_TOL = 1e-12
ABS_TOL = 1e-14
_MAX_DEPTH = 28


@lru_cache(maxsize=None)
def _gl01(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _interval(g, a: float, b: float, n: int) -> complex:
    x, w = _gl01(n)
    t = a + (b - a) * x
    return (b - a) * np.sum(w * g(t))


def _adaptive01(g, tol: float):
    """Integral of vectorized ``g`` over [0,1] with error estimate."""
    total = 0.0 + 0.0j
    err = 0.0
    stack = [(0.0, 1.0, 0)]
    while stack:
        a, b, depth = stack.pop()
        coarse = _interval(g, a, b, 16)
        fine = _interval(g, a, b, 32)
        disc = abs(fine - coarse)
        if disc <= tol * (b - a) or depth >= _MAX_DEPTH:
            total += fine
            err += disc
            if depth >= _MAX_DEPTH and disc > 64 * tol * (b - a):
                raise NoConvergence(
                    f"edge refinement stalled, local error {disc:.2e}",
                    achieved=err)
        else:
            m = 0.5 * (a + b)
            stack.append((a, m, depth + 1))
            stack.append((m, b, depth + 1))
    return total, err


def _leg_integrand(f, leg: PathLeg):
    """Per-edge [0,1] integrands for one leg; yields vectorized callables."""
    pts = leg.points
    n_edge = len(pts) - 1
    for i in range(n_edge):
        a, b = pts[i], pts[i + 1]
        d = b - a
        sqrt_start = leg.sqrt_end == "start" and i == 0
        sqrt_end = leg.sqrt_end == "end" and i == n_edge - 1

        if leg.chart == "sigma":
            def g(t, a=a, d=d):
                sig = a + d * t
                xi = 1.0 / sig
                return f(xi, leg.sheet) * (-1.0 / sig ** 2) * d
        elif sqrt_start:
            def g(t, a=a, d=d):
                z = a + d * t * t
                return f(z, leg.sheet) * 2.0 * t * d
        elif sqrt_end:
            def g(t, a=a, b=b, d=d):
                u = 1.0 - t
                z = b - d * u * u
                return f(z, leg.sheet) * 2.0 * u * d
        else:
            def g(t, a=a, d=d):
                return f(a + d * t, leg.sheet) * d
        yield g


def integrate_path(f, path: CyclePath, rel_tol: float = REL_TOL,
                   abs_tol: float = ABS_TOL):
    """Integrate ``f(xi, sheet) -> form/dxi`` along a weighted path.

    Returns ``(value, error_estimate)``, both including the path weight.
    """
    edge_fns = [g for leg in path.legs for g in _leg_integrand(f, leg)]
    if not edge_fns:
        return 0.0 + 0.0j, 0.0
    rough = sum(_interval(g, 0.0, 1.0, 16) for g in edge_fns)
    scale = max(abs(rough), abs_tol)
    tol = max(abs_tol, rel_tol * scale) / len(edge_fns)
    total = 0.0 + 0.0j
    err = 0.0
    for g in edge_fns:
        v, e = _adaptive01(g, tol)
        total += v
        err += e
    wval = path.weight.value
    return wval * total, abs(wval) * err


def integrate_form(cover, form, path: CyclePath, rel_tol: float = REL_TOL,
                   abs_tol: float = ABS_TOL, clearance: float | None = None):
    """Integral of an :class:`OddForm` along a path, with clearance check."""
    if clearance is not None:
        _check_clearance(cover, form, path, clearance)
    return integrate_path(form.evaluator(cover), path, rel_tol, abs_tol)


def _check_clearance(cover, form, path, clearance):
    from .geometry import seg_point_dist
    singular = list(cover.branch_points) + [
        p.center for p in cover.poles if p.center is not None]
    for a, b, _ in path.xi_edges():
        for s in singular:
            if abs(s - a) < 1e-12 or abs(s - b) < 1e-12:
                continue
            if float(seg_point_dist(a, b, s)) < clearance:
                raise ClearanceViolation(
                    f"edge {a:.3g}->{b:.3g} within {clearance:.2g} of {s:.3g}")


def circle_coefficients(g, center: complex, radius: float, orders,
                        rel_tol: float = 1e-13, n0: int = 64,
                        n_max: int = 16384):
    """Laurent coefficients ``c_n`` of ``g`` on ``|z - center| = radius``.

    ``g`` is vectorized over complex points.  Returns ``{n: c_n}``.
    """
    orders = list(orders)
    prev = None
    n = n0
    while n <= n_max:
        k = np.arange(n)
        z = center + radius * np.exp(2j * np.pi * k / n)
        vals = g(z)
        fhat = np.fft.fft(vals) / n
        cur = {m: fhat[m % n] / radius ** m for m in orders}
        if prev is not None:
            scale = max(max(abs(v) for v in cur.values()),
                        1e-3 * float(np.mean(np.abs(vals))), 1e-300)
            if all(abs(cur[m] - prev[m]) <= rel_tol * scale for m in orders):
                return cur
        prev = cur
        n *= 2
    raise NoConvergence("circle coefficient extraction did not stabilize")


def residue_at(cover, form, center, radius: float | None = None):
    """Residue of a form at an isolated singularity on a given sheet.

    ``center`` is a ``(position, sheet_sign)`` pair; position ``None`` means
    the point above infinity, where the residue is extracted on the big
    circle (with the orientation of the chart at infinity).
    """
    pos, sheet = center
    if pos is None:
        R = cover.r_infinity
        def g(z):
            return form.ratio(cover, z, sheet)
        c = circle_coefficients(g, 0.0, R, [-1])
        return -c[-1]
    if radius is None:
        radius = 0.5 * cover.isolation_distance(pos)
    if radius <= 0:
        raise ContourCollision(f"no room for a contour around {pos:.3g}")
    def g(z):
        return form.ratio(cover, z, sheet)
    return circle_coefficients(g, pos, radius, [-1])[-1]


def branch_residue(frame, factor_ratios):
    """Residue at a branch point of ``prod(factors) / (dxi d(v/dxi))``.

    ``factor_ratios`` is a list of arrays: each factor's value divided by
    ``dxihat`` at the frame samples.  Mean over the frame circle; the error
    estimate compares against the half-rate subsample.
    """
    prod = np.ones_like(frame.xihat)
    for arr in factor_ratios:
        prod = prod * arr
    integrand = prod / (2.0 * frame.dy_dxihat)
    full = np.mean(integrand)
    half = np.mean(integrand[::2])
    return full, abs(full - half)


def abelian_primitive(cover, form, base, end_point, end_sheet,
                      rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL):
    """Path integral of a form from ``base`` to a cover point.

    ``base`` may be a branch-point index (integrable double zero of v) or a
    plain complex base coordinate.  The route stays on the end sheet and is
    constructed clear of cuts and singularities.
    """
    if isinstance(base, (int, np.integer)):
        z0 = cover.branch_points[int(base)]
        sqrt_start = True
    else:
        z0 = complex(base)
        sqrt_start = False
    pts = cover.route(z0, complex(end_point))
    leg = PathLeg(tuple(pts), end_sheet, "xi",
                  "start" if sqrt_start else None)
    path = CyclePath((leg,), closed=False, label="primitive")
    val, err = integrate_path(form.evaluator(cover), path, rel_tol, abs_tol)
    return val, err


def kappa_integral(cover, form, carrier, mode: str = "regular",
                   rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL,
                   series_orders: int = 24):
    """Integral of a form along a pole-to-pole carrier path.

    The carrier runs from the second pole preimage to the first through a
    branch point.  ``mode="regular"`` integrates through the branch point
    with the square-root substitution (form regular there after division by
    dxihat); ``mode="laurent"`` crosses the branch disk with the local
    Laurent primitive, which also handles integrands with a pole (even
    Laurent part, no residue) at the branch point.
    """
    _guard_endpoint(cover, form, carrier)
    f = form.evaluator(cover)
    if mode == "regular":
        val, err = integrate_path(f, carrier.full_cycle(), rel_tol, abs_tol)
        return val, err
    if mode != "laurent":
        raise ValueError(f"unknown mode {mode!r}")
    outer = carrier.outer_cycle()
    val, err = integrate_path(f, outer, rel_tol, abs_tol)
    frame = carrier.frame
    g = frame.odd_ratio_hat(form)
    coef = frame.laurent(g, low=-6, high=series_orders)
    res = coef.get(-1, 0.0)
    if abs(res) > 1e-8 * max(max(abs(v) for v in coef.values()), 1e-30):
        raise NoConvergence(
            f"nonzero residue {abs(res):.2e} at branch waypoint")
    xin = carrier.xihat_entry
    jump = 0.0 + 0.0j
    for n, c in coef.items():
        if n == -1:
            continue
        # primitive term c xihat^(n+1)/(n+1), evaluated at -xin minus at xin
        p = n + 1
        jump += c * ((-xin) ** p - xin ** p) / p
    return val + jump, err + abs(res)


def _guard_endpoint(cover, form, carrier):
    """Reject carrier integrals whose endpoints carry a nonzero residue."""
    pole = carrier.pole
    if pole.center is None:
        # endpoint above infinity: probe decay in the sigma chart
        R = cover.r_infinity
        v1 = form.ratio(cover, 4.0 * R, 1) * (4.0 * R) ** 2
        v2 = form.ratio(cover, 64.0 * R, 1) * (64.0 * R) ** 2
        if abs(v2) > 1e4 and abs(v2) > 8.0 * abs(v1):
            raise DivergentEndpoint("form singular at the infinite endpoint")
        return
    z = pole.center
    d = cover.isolation_distance(z)
    probe_dir = carrier.departure_direction()
    f1 = form.ratio(cover, z + probe_dir * 1e-3 * d, 1)
    f2 = form.ratio(cover, z + probe_dir * 1e-5 * d, 1)
    if abs(f2) > 30.0 * max(abs(f1), 1e-12) and abs(f2) * 1e-5 * d > 1e-7 * max(abs(f1) * 1e-3 * d, 1e-30):
        raise DivergentEndpoint(f"form has a non-integrable endpoint at {z:.4g}")


def richardson(d_h, d_h2, order: int = 2):
    """Eliminate the leading O(h^order) error from two estimates."""
    fac = 2.0 ** order
    return (fac * d_h2 - d_h) / (fac - 1.0)
