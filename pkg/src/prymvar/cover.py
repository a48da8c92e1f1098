"""Spectral double covers of the rational line.

The cover is ``v**2 = Q`` with ``Q = N(xi)/S(xi)**2 (dxi)**2``, where ``N``
is the numerator polynomial (its simple roots are the branch points) and
``S = prod (xi - z_j)**k_j`` collects the declared finite poles.  The smooth
model is the hyperelliptic curve ``w**2 = N(xi)``; sheet 1 is the graph of a
cut-plane branch ``w1`` whose cuts are straight segments pairing the branch
points, with the overall sign pinned at a reference base point.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Poly, RationalC, roots
from .errors import (BasisJump, CutCrossing, DegenerateCover,
                     EvaluationAtSingularity, FrameRadiusTooSmall,
                     NonGenericDivisor, OddPoleOrder,
                     PathTooCloseToBranchPoint)
from .forms import OddForm
from .geometry import route_path, seg_point_dist, seg_seg_dist

__all__ = [
    "MobiusChart", "CoverPoint", "QuadraticDifferentialSpec", "SpectralCover",
    "BranchLocalFrame", "build_cover", "pair_cuts_by_sweep",
    "mobius_transform_spec", "involution", "evaluate_v", "continue_sheet",
    "singular_part", "branch_frame", "chart_coefficients",
]

_COLLISION_TOL = 1e-8


@dataclass(frozen=True)
class MobiusChart:
    """Local coordinate ``chi(xi) = (a xi + b) / (c xi + d)``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __call__(self, xi):
        xi = np.asarray(xi, dtype=complex)
        return (self.a * xi + self.b) / (self.c * xi + self.d)

    def deriv(self, xi):
        xi = np.asarray(xi, dtype=complex)
        e = self.a * self.d - self.b * self.c
        return e / (self.c * xi + self.d) ** 2

    def compose(self, other: "MobiusChart") -> "MobiusChart":
        """Chart ``self(other(.))``."""
        return MobiusChart(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @staticmethod
    def translation(z: complex) -> "MobiusChart":
        return MobiusChart(1.0, -z, 0.0, 1.0)

    @staticmethod
    def inversion() -> "MobiusChart":
        return MobiusChart(0.0, 1.0, 1.0, 0.0)


@dataclass(frozen=True)
class CoverPoint:
    """Base coordinate plus sheet tag; ``base=None`` marks infinity."""

    base: complex | None
    sheet: int = 1

    def __post_init__(self):
        if self.sheet not in (1, 2):
            raise ValueError("sheet must be 1 or 2")
        if self.base is not None:
            object.__setattr__(self, "base", complex(self.base))

    @property
    def sign(self) -> int:
        return 1 if self.sheet == 1 else -1


@dataclass(frozen=True)
class Pole:
    """One pole of Q: half-order ``k`` (order of v at each preimage)."""

    center: complex | None      # None = the point at infinity
    k: int
    chart: MobiusChart
    index: int

    @property
    def is_double(self) -> bool:
        return self.k == 1


@dataclass(frozen=True)
class QuadraticDifferentialSpec:
    """Declared data of Q: numerator, poles with charts, sheet reference."""

    numerator: Poly
    finite_poles: tuple = ()          # (position, even order, chart or None)
    infinity_pole_order: int = 0      # includes the intrinsic (dxi)^2 order 4
    infinity_chart: MobiusChart | None = None
    reference_point: complex | None = None

    def pole_list(self):
        out = []
        idx = 0
        for (pos, order, chart) in self.finite_poles:
            if order % 2 or order < 2:
                raise OddPoleOrder(f"finite pole order {order} at {pos}")
            ch = chart or MobiusChart.translation(pos)
            out.append(Pole(complex(pos), order // 2, ch, idx))
            idx += 1
        if self.infinity_pole_order:
            if self.infinity_pole_order % 2 or self.infinity_pole_order < 2:
                raise OddPoleOrder(
                    f"infinity pole order {self.infinity_pole_order}")
            ch = self.infinity_chart or MobiusChart.inversion()
            out.append(Pole(None, self.infinity_pole_order // 2, ch, idx))
        return tuple(out)


def pair_cuts_by_sweep(points) -> tuple:
    """Pair branch points into non-crossing cuts by an angular sweep."""
    pts = np.asarray(points, dtype=complex)
    n = pts.size
    if n % 2:
        raise CutCrossing("odd number of branch points")
    centroid = pts.mean()
    ang = np.angle(pts - centroid)
    rad = np.abs(pts - centroid)
    order = np.lexsort((rad, ang))
    scale = max(np.max(np.abs(pts - centroid)), 1e-30)

    def try_pairing(idx):
        pairs = [(int(idx[2 * i]), int(idx[2 * i + 1])) for i in range(n // 2)]
        for a in range(len(pairs)):
            for b in range(a + 1, len(pairs)):
                i1, j1 = pairs[a]
                i2, j2 = pairs[b]
                if seg_seg_dist(pts[i1], pts[j1], pts[i2], pts[j2]) < 1e-9 * scale:
                    return None
        return tuple(pairs)

    got = try_pairing(order)
    if got is None:
        got = try_pairing(np.roll(order, -1))
    if got is None:
        raise CutCrossing("angular sweep produced crossing cuts")
    return got


class SpectralCover:
    """Immutable two-sheeted cover; all evaluators are pure and vectorized."""

    def __init__(self, spec, branch_points, cut_pairs, sign=None):
        self.spec = spec
        self.numerator = spec.numerator
        self.poles = spec.pole_list()
        self.branch_points = np.asarray(branch_points, dtype=complex)
        self.cut_pairs = tuple(cut_pairs)
        k_total = sum(p.k for p in self.poles)
        self.genus = k_total - 3
        self.n_branch = self.branch_points.size

        # S = prod (xi - z_j)^{k_j}
        s = Poly((1.0,))
        for p in self.poles:
            if p.center is None:
                continue
            for _ in range(p.k):
                s = s * Poly((-p.center, 1.0))
        self.S = s

        sing = list(self.branch_points) + [
            p.center for p in self.poles if p.center is not None]
        self._singular = np.asarray(sing, dtype=complex)
        d = np.abs(self._singular[:, None] - self._singular[None, :])
        np.fill_diagonal(d, np.inf)
        self.delta = float(d.min()) / 4.0
        self.r_infinity = 2.0 * max(1.0, float(np.max(np.abs(self._singular)))) \
            + 6.0 * self.delta

        self._wlead = np.sqrt(complex(self.numerator.lead))
        self.reference_point = self._pick_reference(spec.reference_point)
        if sign is None:
            y_plus = self._w_raw(self.reference_point) / self.S(self.reference_point)
            target = np.exp(0.5 * np.log(complex(
                self.q(self.reference_point))))
            sign = 1.0 if abs(y_plus - target) <= abs(y_plus + target) else -1.0
        self.sign = sign
        self._frames = {}

    # -- construction helpers ------------------------------------------------

    @property
    def cut_segments(self):
        return [(self.branch_points[i], self.branch_points[j])
                for (i, j) in self.cut_pairs]

    def _pick_reference(self, given):
        if given is not None:
            return complex(given)
        base = self._singular.mean()
        spread = max(float(np.max(np.abs(self._singular - base))), 1.0)
        for mult in (2.7, 3.3, 4.1):
            for ang in (0.37, 1.11, 2.03, 2.9, 4.0, 5.2):
                cand = base + mult * spread * np.exp(1j * ang)
                if self._clear_of_everything(cand):
                    return complex(cand)
        raise NonGenericDivisor("could not pick a reference base point")

    def _clear_of_everything(self, z, margin=None):
        margin = margin or self.delta
        if np.min(np.abs(self._singular - z)) < margin:
            return False
        return all(float(seg_point_dist(p, q, z)) >= margin
                   for (p, q) in self.cut_segments)

    # -- evaluators ----------------------------------------------------------

    def _w_raw(self, xi):
        z = np.asarray(xi, dtype=complex)
        out = np.full(z.shape, self._wlead, dtype=complex)
        for (p, q) in self.cut_segments:
            m = 0.5 * (p + q)
            h = 0.5 * (q - p)
            t = (z - m) / h
            small = np.abs(t) < 0.5
            ts = np.where(small, 2.0, t)
            main = h * ts * np.sqrt(1.0 - 1.0 / (ts * ts))
            sgn = np.where(t.imag > 0, 1.0, -1.0)
            patch = 1j * h * sgn * np.sqrt(1.0 - t * t)
            out = out * np.where(small, patch, main)
        return out

    def w(self, xi, sheet_sign=1):
        """Sheet function of the smooth model ``w**2 = N`` on a sheet."""
        return self.sign * sheet_sign * self._w_raw(xi)

    def y(self, xi, sheet_sign=1):
        """Value of ``v/dxi``."""
        xi = np.asarray(xi, dtype=complex)
        return self.w(xi, sheet_sign) / self.S(xi)

    def q(self, xi):
        """Value of ``Q/(dxi)**2``."""
        xi = np.asarray(xi, dtype=complex)
        return self.numerator(xi) / self.S(xi) ** 2

    @property
    def v_form(self) -> OddForm:
        return OddForm(RationalC(self.numerator, self.S), "v")

    # -- geometry ------------------------------------------------------------

    def isolation_distance(self, z: complex) -> float:
        d = np.abs(self._singular - z)
        d = d[d > 1e-12 * max(1.0, abs(z))]
        return float(d.min())

    def pole_contour_radius(self, j: int) -> float:
        p = self.poles[j]
        if p.center is None:
            return self.r_infinity
        d = self.isolation_distance(p.center)
        dcut = min(float(seg_point_dist(a, b, p.center))
                   for (a, b) in self.cut_segments)
        return 0.5 * min(d, dcut)

    def obstacles(self, skip_points=(), skip_cut_indices=()):
        obs = []
        for s in self._singular:
            if any(abs(s - sp) < 1e-12 for sp in skip_points):
                continue
            obs.append(complex(s))
        for idx, seg in enumerate(self.cut_segments):
            if idx in skip_cut_indices:
                continue
            obs.append((complex(seg[0]), complex(seg[1])))
        return obs

    def route(self, z0: complex, z1: complex, clearance=None,
              skip_cut_indices=()):
        clearance = clearance if clearance is not None else 0.6 * self.delta
        obs = self.obstacles(skip_points=(z0, z1),
                             skip_cut_indices=skip_cut_indices)
        return route_path(z0, z1, obs, clearance)

    def cut_index_of_branch(self, i: int) -> int:
        for idx, (a, b) in enumerate(self.cut_pairs):
            if i in (a, b):
                return idx
        raise ValueError(f"branch index {i} not in any cut")

    def away_direction(self, i: int) -> complex:
        """Unit direction from branch point ``i`` pointing off its cut."""
        idx = self.cut_index_of_branch(i)
        a, b = self.cut_pairs[idx]
        other = self.branch_points[b if a == i else a]
        d = self.branch_points[i] - other
        return d / abs(d)

    # -- deformation transport -----------------------------------------------

    def transported(self, new_numerator: Poly) -> "SpectralCover":
        """Same cover combinatorics over a slightly moved numerator."""
        from scipy.optimize import linear_sum_assignment
        new_roots = np.asarray([r for r, m in roots(new_numerator)
                                for _ in range(m)], dtype=complex)
        if new_roots.size != self.n_branch:
            raise BasisJump("branch point count changed")
        cost = np.abs(self.branch_points[:, None] - new_roots[None, :])
        rows, cols = linear_sum_assignment(cost)
        matched = np.empty_like(new_roots)
        matched[rows] = new_roots[cols]
        move = float(np.max(np.abs(matched - self.branch_points)))
        if move > 0.5 * self.delta:
            raise BasisJump(f"branch point moved {move:.3g} > delta/2")
        spec = QuadraticDifferentialSpec(
            new_numerator, self.spec.finite_poles,
            self.spec.infinity_pole_order, self.spec.infinity_chart,
            self.reference_point)
        _validate_generic(spec, matched)
        return SpectralCover(spec, matched, self.cut_pairs, sign=self.sign)

    # -- local frames ----------------------------------------------------------

    def frame(self, i: int, n_samples: int = 256) -> "BranchLocalFrame":
        key = (i, n_samples)
        if key not in self._frames:
            self._frames[key] = BranchLocalFrame(self, i, n_samples)
        return self._frames[key]


class BranchLocalFrame:
    """Double-cover local frame ``xi = xi_i + xihat**2`` at a branch point.

    Holds samples of the continued sheet function on the circle
    ``|xihat| = rho`` plus the Taylor data of ``v/dxihat``; all local
    extractions (Taylor/Laurent coefficients, branch residues) run off these
    samples by FFT.
    """

    def __init__(self, cover: SpectralCover, index: int, n_samples: int = 256):
        self.cover = cover
        self.index = int(index)
        self.center = complex(cover.branch_points[self.index])
        iso = cover.isolation_distance(self.center)
        rho2 = 0.45 * iso
        if rho2 <= 0:
            raise FrameRadiusTooSmall(f"branch point {index} is not isolated")
        self.rho = float(np.sqrt(rho2))
        k = np.arange(n_samples)
        self.xihat = self.rho * np.exp(2j * np.pi * k / n_samples)
        self.xi = self.center + self.xihat ** 2
        self.n = n_samples

        w_plus = cover.w(self.xi, 1)
        vals = np.empty(n_samples, dtype=complex)
        signs = np.empty(n_samples, dtype=int)
        vals[0] = w_plus[0]
        signs[0] = 1
        for j in range(1, n_samples):
            if abs(w_plus[j] - vals[j - 1]) <= abs(-w_plus[j] - vals[j - 1]):
                vals[j], signs[j] = w_plus[j], 1
            else:
                vals[j], signs[j] = -w_plus[j], -1
        # the continuation must close up (xi winds twice; monodromy is +1)
        if abs(vals[0] - vals[-1]) > abs(w_plus[0]):
            raise FrameRadiusTooSmall(
                f"sheet continuation around branch {index} did not close")
        self.w_samples = vals
        self.sheet_signs = signs

        np_ = cover.numerator.deriv()
        sp = cover.S.deriv()
        num = (np_(self.xi) * cover.S(self.xi)
               - 2.0 * cover.numerator(self.xi) * sp(self.xi))
        self.dy_dxihat = self.xihat * num / (self.w_samples * cover.S(self.xi) ** 2)
        self.v_hat = 2.0 * self.xihat * self.w_samples / cover.S(self.xi)

        coef = self.laurent_values(self.v_hat, low=0, high=8)
        for bad in (0, 1, 3):
            if abs(coef[bad]) > 1e-9 * max(abs(coef[2]), 1e-30):
                raise FrameRadiusTooSmall(
                    f"v/dxihat coefficient {bad} fails to vanish at branch {index}")
        self.v0 = coef[2]
        self.v2 = coef[4]

    # -- coefficient machinery ------------------------------------------------

    def laurent_values(self, values, low: int, high: int) -> dict:
        fhat = np.fft.fft(values) / self.n
        out = {}
        for m in range(low, high + 1):
            out[m] = fhat[m % self.n] / self.rho ** m
        return out

    def laurent(self, values, low: int, high: int) -> dict:
        return self.laurent_values(np.asarray(values, dtype=complex), low, high)

    def odd_ratio_hat(self, form) -> np.ndarray:
        """Samples of form/dxihat on the frame circle (sheet-consistent)."""
        return form.h(self.xi) * 2.0 * self.xihat / self.w_samples

    def even_ratio_hat(self, rational) -> np.ndarray:
        """Samples of (quadratic differential)/(dxihat)^2 for an even object."""
        return rational(self.xi) * (2.0 * self.xihat) ** 2

    def odd_coeffs(self, form, n_high: int = 4) -> dict:
        return self.laurent(self.odd_ratio_hat(form), low=-4, high=n_high)

    def leading(self, form) -> complex:
        """u0: value of form/dxihat at the branch point (odd regular forms)."""
        return self.odd_coeffs(form, 2)[0]

    def xihat_for(self, z: complex, sheet_sign: int) -> complex:
        """Frame coordinate of a cover point on the frame circle."""
        cand = np.sqrt(z - self.center)
        for x in (cand, -cand):
            kk = int(round((np.angle(x) % (2 * np.pi)) /
                           (2 * np.pi) * self.n)) % self.n
            if self.sheet_signs[kk] == sheet_sign:
                return complex(x)
        raise PathTooCloseToBranchPoint(
            f"cannot resolve frame coordinate at {z:.4g}")


# -- module-level operations --------------------------------------------------

def _validate_generic(spec: QuadraticDifferentialSpec, branch_points):
    pts = np.asarray(branch_points, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(pts))) if pts.size else 1.0)
    if pts.size > 1:
        d = np.abs(pts[:, None] - pts[None, :])
        np.fill_diagonal(d, np.inf)
        if d.min() < _COLLISION_TOL * scale:
            raise NonGenericDivisor(
                f"branch points closer than {_COLLISION_TOL:g}")
    for (pos, order, chart) in spec.finite_poles:
        if np.min(np.abs(pts - pos)) < _COLLISION_TOL * scale:
            raise NonGenericDivisor(f"zero of Q collides with pole at {pos}")


def build_cover(spec: QuadraticDifferentialSpec) -> SpectralCover:
    """Validate a quadratic-differential spec and assemble the cover."""
    poles = spec.pole_list()
    k_total = sum(p.k for p in poles)
    r = -4 + 2 * k_total
    if r <= 0:
        raise DegenerateCover(f"zero count r = {r}")
    n = spec.numerator
    if n.is_zero:
        raise NonGenericDivisor("zero numerator")
    k_fin = sum(p.k for p in poles if p.center is not None)
    declared_inf = spec.infinity_pole_order
    implied_inf = 4 + n.degree - 2 * k_fin
    if implied_inf != declared_inf:
        raise NonGenericDivisor(
            f"numerator degree {n.degree} implies infinity order "
            f"{implied_inf}, declared {declared_inf}")
    root_list = roots(n, tol=_COLLISION_TOL)
    if any(m > 1 for _, m in root_list):
        raise NonGenericDivisor("Q has a multiple zero")
    pts = np.asarray([z for z, _ in root_list], dtype=complex)
    _validate_generic(spec, pts)
    order = np.lexsort((pts.imag, pts.real))
    pts = pts[order]
    cuts = pair_cuts_by_sweep(pts)
    return SpectralCover(spec, pts, cuts)


def involution(cover: SpectralCover, p: CoverPoint) -> CoverPoint:
    return CoverPoint(p.base, 3 - p.sheet)


def evaluate_v(cover: SpectralCover, p: CoverPoint) -> complex:
    """Value of ``v/dxi`` at a cover point off the singular set."""
    if p.base is None:
        raise EvaluationAtSingularity("use the chart at infinity")
    scale = max(1.0, abs(p.base))
    if np.min(np.abs(cover._singular - p.base)) < 1e-9 * scale:
        raise EvaluationAtSingularity(f"{p.base:.6g} is singular")
    return complex(cover.y(p.base, p.sign))


def continue_sheet(cover: SpectralCover, plane_path, start_sheet: int,
                   clearance: float | None = None):
    """Sheet tags along a sampled base path, by value continuation.

    ``plane_path`` is a sequence of base points.  Returns the integer sheet
    tag at every input point.
    """
    pts = np.asarray(plane_path, dtype=complex)
    clearance = clearance if clearance is not None else 0.25 * cover.delta
    for i in range(len(pts) - 1):
        d = seg_point_dist(pts[i], pts[i + 1], cover.branch_points)
        if float(np.min(d)) < clearance:
            raise PathTooCloseToBranchPoint(
                f"edge {i} is within {clearance:.3g} of a branch point")

    def step(z0, val0, z1, depth=0):
        w1 = complex(cover.w(z1, 1))
        best = w1 if abs(w1 - val0) <= abs(-w1 - val0) else -w1
        if abs(best - val0) < 0.7 * abs(w1) or abs(w1) == 0:
            return best
        if depth > 40:
            raise PathTooCloseToBranchPoint(
                f"continuation cannot resolve sheets near {z1:.4g}")
        mid = step(z0, val0, 0.5 * (z0 + z1), depth + 1)
        return step(0.5 * (z0 + z1), mid, z1, depth + 1)

    sign0 = 1 if start_sheet == 1 else -1
    val = complex(cover.w(pts[0], sign0))
    tags = [start_sheet]
    for i in range(1, len(pts)):
        val = step(pts[i - 1], val, pts[i])
        plus = complex(cover.w(pts[i], 1))
        tags.append(1 if abs(val - plus) <= abs(val + plus) else 2)
    return tags


def _contour_mean(g, center: complex, radius: float, rel_tol=1e-13,
                  n0=64, n_max=16384):
    """(1/2 pi i) oint g(z) dz over the positively oriented circle."""
    prev = None
    n = n0
    while n <= n_max:
        z = center + radius * np.exp(2j * np.pi * np.arange(n) / n)
        vals = g(z) * (z - center)
        val = np.mean(vals)
        # floor the scale with the sample magnitude so exact zeros converge
        scale = max(abs(val), 1e-3 * float(np.mean(np.abs(vals))), 1e-300)
        if prev is not None and abs(val - prev) <= rel_tol * scale:
            return val
        prev = val
        n *= 2
    from .errors import NoConvergence
    raise NoConvergence("contour mean did not stabilize")


def chart_coefficients(cover: SpectralCover, form, j: int, orders):
    """Coefficients of form/dchi in the declared chart at ``z_j^(1)``.

    Returns ``{n: t_n}`` where form = (sum t_n chi^n) dchi near the first
    preimage.  Negative ``n`` are principal-part coefficients.
    """
    pole = cover.poles[j]
    chart = pole.chart
    f = form.evaluator(cover)
    if pole.center is None:
        R = cover.r_infinity
        out = {}
        for n in orders:
            out[n] = -_contour_mean(
                lambda z: f(z, 1) * chart(z) ** (-n - 1), 0.0, R)
        return out
    rad = cover.pole_contour_radius(j)
    out = {}
    for n in orders:
        out[n] = _contour_mean(
            lambda z: f(z, 1) * chart(z) ** (-n - 1), pole.center, rad)
    return out


def singular_part(cover: SpectralCover, j: int):
    """Coefficients ``(C^{k_j}, ..., C^1)`` of v at ``z_j^(1)``."""
    k = cover.poles[j].k
    t = chart_coefficients(cover, cover.v_form, j, range(-k, 0))
    return tuple(t[-l] for l in range(k, 0, -1))


def branch_frame(cover: SpectralCover, i: int, order: int = 8,
                 n_samples: int = 256) -> BranchLocalFrame:
    return cover.frame(i, n_samples)


def mobius_transform_spec(spec: QuadraticDifferentialSpec, m):
    """Push the whole spec through ``xi_old = (a xi + b)/(c xi + d)``.

    Returns ``(new_spec, phi, phi_inv)`` with ``phi`` the old-from-new map.
    The map must keep every zero and pole of Q finite: ``a/c`` may not be a
    special point, and ``c`` must be nonzero whenever Q has a pole at
    infinity.
    """
    a, b, c, d = [complex(x) for x in m]
    e = a * d - b * c
    if abs(e) < 1e-14:
        raise ValueError("degenerate Mobius matrix")
    phi = MobiusChart(a, b, c, d)
    phi_inv = MobiusChart(d, -b, -c, a)

    n = spec.numerator
    deg = n.degree
    num_p = Poly((b, a))
    den_p = Poly((d, c))
    n_tilde = Poly((0.0,))
    for i, ci in enumerate(n.coef):
        n_tilde = n_tilde + ci * (num_p ** i if i else Poly((1.0,))) * (
            den_p ** (deg - i) if deg - i else Poly((1.0,)))

    scale = e ** 2
    new_finite = []
    for (pos, order, chart) in spec.finite_poles:
        k = order // 2
        denom_fac = (a - c * pos)
        if abs(denom_fac) < 1e-12:
            raise ValueError("a pole is sent to infinity")
        new_pos = (d * pos - b) / denom_fac
        scale = scale / denom_fac ** (2 * k)
        old_chart = chart or MobiusChart.translation(pos)
        new_finite.append((new_pos, order, old_chart.compose(phi)))
    if spec.infinity_pole_order:
        if abs(c) < 1e-12:
            raise ValueError("transform must move the infinity pole")
        k = spec.infinity_pole_order // 2
        new_pos = -d / c
        scale = scale / c ** (2 * k)
        old_chart = spec.infinity_chart or MobiusChart.inversion()
        new_finite.append((new_pos, spec.infinity_pole_order,
                           old_chart.compose(phi)))

    new_num = n_tilde * scale
    new_ref = None
    if spec.reference_point is not None:
        new_ref = complex(phi_inv(spec.reference_point))
    new_spec = QuadraticDifferentialSpec(
        numerator=new_num,
        finite_poles=tuple(new_finite),
        infinity_pole_order=0,
        infinity_chart=None,
        reference_point=new_ref)
    return new_spec, phi, phi_inv
