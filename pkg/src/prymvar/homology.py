"""Odd homology basis as concrete weighted paths with sheet traces.

Cycles are polylines in the base plane tagged with sheet signs.  The basis:

* ``a[l]``: loop around cut ``l`` on sheet 1, weight 1/sqrt(2);
* ``b[l]``: loop through cut ``l`` and the last cut, weight 1/sqrt(2);
* ``t[j]``: half-difference of the small loops around the two pole
  preimages (realized as circle + reversed circle, weight 1/2);
* ``kappa[j]``: pole-to-pole carrier through a branch point of the last
  cut, weight 1/2.

Orientations are normalized at build time so that the intersection Gram
matrix is exactly canonical; the build asserts it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import PathConstructionError, TangentialCrossing
from .geometry import seg_seg_cross, seg_point_dist
from .paths import HALF, INV_SQRT2, ONE, CyclePath, PathLeg, Weight

__all__ = ["CutSystem", "KappaCarrier", "HomologyBasis", "build_cut_system",
           "build_basis", "intersection", "dual_cycle"]


@dataclass(frozen=True)
class CutSystem:
    pairs: tuple          # index pairs into cover.branch_points
    segments: tuple       # endpoint pairs


def build_cut_system(cover) -> CutSystem:
    return CutSystem(cover.cut_pairs, tuple(cover.cut_segments))


def _polyline_circle(center: complex, radius: float, n: int = 48,
                     clockwise: bool = False, phase: float = 0.13):
    th = phase + 2 * np.pi * np.arange(n + 1) / n
    if clockwise:
        th = th[::-1]
    pts = center + radius * np.exp(1j * th)
    pts[-1] = pts[0]
    return tuple(pts)


def _polyline_ellipse(p: complex, q: complex, pad: float, n: int = 48):
    m = 0.5 * (p + q)
    h = 0.5 * (q - p)
    L = abs(h)
    e = h / L
    th = 0.11 + 2 * np.pi * np.arange(n + 1) / n
    pts = m + e * ((L + pad) * np.cos(th)) + 1j * e * (pad * np.sin(th))
    pts[-1] = pts[0]
    return tuple(pts)


def intersection(c1: CyclePath, c2: CyclePath) -> Fraction:
    """Signed crossing count on the cover times both weights (exact).

    Edges that coincide exactly (a cycle against itself or against its own
    reversal) contribute zero by antisymmetry.
    """
    total = 0
    for (a1, a2, s1) in c1.xi_edges():
        for (b1, b2, s2) in c2.xi_edges():
            if s1 != s2:
                continue
            same = (abs(a1 - b1) < 1e-14 and abs(a2 - b2) < 1e-14)
            flipped = (abs(a1 - b2) < 1e-14 and abs(a2 - b1) < 1e-14)
            if same or flipped:
                continue
            got = seg_seg_cross(a1, a2, b1, b2)
            if got is not None:
                total += got[2]
    w = c1.weight * c2.weight
    return w.as_fraction() * total


@dataclass(frozen=True)
class KappaCarrier:
    """Carrier path from ``z_j^(2)`` to ``z_j^(1)`` through a branch point."""

    pole_index: int
    pole: object
    frame: object                # BranchLocalFrame at the waypoint
    legs_in: tuple               # sheet -1 legs, pole -> entry point E
    xihat_entry: complex

    def outer_cycle(self, weight: Weight = ONE) -> CyclePath:
        legs_out = tuple(
            PathLeg(tuple(reversed(l.points)), -l.sheet, l.chart, None)
            for l in reversed(self.legs_in))
        return CyclePath(self.legs_in + legs_out, weight, closed=False,
                         label=f"kappa[{self.pole_index}]-outer")

    def full_cycle(self, weight: Weight = ONE) -> CyclePath:
        E = self.legs_in[-1].points[-1]
        xc = complex(self.frame.center)
        inner_in = PathLeg((E, xc), -1, "xi", "end")
        inner_out = PathLeg((xc, E), 1, "xi", "start")
        legs_out = tuple(
            PathLeg(tuple(reversed(l.points)), -l.sheet, l.chart, None)
            for l in reversed(self.legs_in))
        return CyclePath(self.legs_in + (inner_in, inner_out) + legs_out,
                         weight, closed=False,
                         label=f"kappa[{self.pole_index}]")

    def departure_direction(self) -> complex:
        pts = self.legs_in[0].points
        if self.legs_in[0].chart == "sigma":
            # first xi-chart vertex determines the outward ray
            for leg in self.legs_in:
                if leg.chart == "xi":
                    d = leg.points[0]
                    return d / abs(d)
            raise PathConstructionError("carrier has no xi leg")
        d = pts[1] - pts[0]
        return d / abs(d)


class HomologyBasis:
    """The odd basis plus carriers and the dual-cycle map."""

    def __init__(self, cover, a_minus, b_minus, t_minus, carriers,
                 t_dual_orient):
        self.cover = cover
        self.a_minus = tuple(a_minus)
        self.b_minus = tuple(b_minus)
        self.t_minus = tuple(t_minus)
        self.carriers = tuple(carriers)
        self.kappa_minus = tuple(c.full_cycle(HALF) for c in carriers)
        self._t_dual_orient = tuple(t_dual_orient)
        self.genus = len(self.a_minus)
        self.n_poles = len(self.t_minus)

    def basis_list(self):
        """The ordered coordinate basis (a..., b..., t...)."""
        return list(self.a_minus) + list(self.b_minus) + list(self.t_minus)

    def labels(self):
        g, m = self.genus, self.n_poles
        return ([f"a[{k}]" for k in range(g)] + [f"b[{k}]" for k in range(g)]
                + [f"t[{j}]" for j in range(m)])

    def dual(self, idx: int) -> CyclePath:
        """Dual cycle of basis element ``idx`` (intersection-normalized)."""
        g, m = self.genus, self.n_poles
        if idx < g:
            return self.b_minus[idx].reversed().scaled(2)
        if idx < 2 * g:
            return self.a_minus[idx - g].scaled(2)
        j = idx - 2 * g
        cyc = self.carriers[j].full_cycle(ONE)
        return cyc if self._t_dual_orient[j] > 0 else cyc.reversed()

    def dual_carrier_sign(self, j: int) -> int:
        """Orientation of the dual of t[j] relative to the stored carrier."""
        return self._t_dual_orient[j]

    def gram(self):
        basis = self.basis_list()
        n = len(basis)
        out = [[intersection(basis[i], basis[j]) for j in range(n)]
               for i in range(n)]
        return out

    def dual_gram(self):
        basis = self.basis_list()
        n = len(basis)
        return [[intersection(self.dual(i), basis[j]) for j in range(n)]
                for i in range(n)]

    def serialize(self):
        return {
            "a_minus": [c.serialize() for c in self.a_minus],
            "b_minus": [c.serialize() for c in self.b_minus],
            "t_minus": [c.serialize() for c in self.t_minus],
            "kappa_minus": [c.serialize() for c in self.kappa_minus],
            "t_dual_orientation": list(self._t_dual_orient),
        }


def _edges_of(cycles):
    out = []
    for c in cycles:
        for (a, b, _s) in c.xi_edges():
            out.append((a, b))
    return out


def _build_t_cycle(cover, j):
    pole = cover.poles[j]
    if pole.center is None:
        r = cover.r_infinity
        c1 = PathLeg(_polyline_circle(0.0, r, 96, clockwise=True), 1)
        c2 = PathLeg(_polyline_circle(0.0, r, 96, clockwise=False), -1)
    else:
        r = 0.6 * cover.pole_contour_radius(j)
        c1 = PathLeg(_polyline_circle(pole.center, r, 32), 1)
        c2 = PathLeg(_polyline_circle(pole.center, r, 32, clockwise=True), -1)
    return CyclePath((c1, c2), HALF, closed=True, label=f"t[{j}]")


def _build_kappa(cover, j, avoid_edges):
    pole = cover.poles[j]
    last = cover.cut_pairs[-1]
    # waypoint: endpoint of the last cut nearest the pole (lex tie-break)
    cands = sorted(last, key=lambda i: (cover.branch_points[i].real,
                                        cover.branch_points[i].imag))
    if pole.center is not None:
        cands = sorted(cands, key=lambda i: abs(cover.branch_points[i]
                                                - pole.center))
    ic = cands[0]
    xc = complex(cover.branch_points[ic])
    frame = cover.frame(ic)
    E = xc + cover.away_direction(ic) * frame.rho ** 2

    clearance = min(0.4 * cover.delta, 0.3 * cover.isolation_distance(xc))
    own_cut = cover.cut_index_of_branch(ic)
    obstacles = cover.obstacles(skip_points=(xc,),
                                skip_cut_indices=(own_cut,))
    obstacles += list(avoid_edges)

    from .geometry import route_path
    if pole.center is None:
        u = E / abs(E)
        p_far = 3.0 * cover.r_infinity * u
        sigma_leg = PathLeg((0.0, 1.0 / p_far), -1, "sigma")
        pts = route_path(p_far, E, obstacles, clearance)
        legs_in = (sigma_leg, PathLeg(tuple(pts), -1))
    else:
        pts = route_path(complex(pole.center), E, obstacles, clearance)
        legs_in = (PathLeg(tuple(pts), -1),)
    xihat = frame.xihat_for(E, -1)
    return KappaCarrier(j, pole, frame, legs_in, xihat)


def build_basis(cover, cuts: CutSystem | None = None) -> HomologyBasis:
    """Construct the odd basis; normalizes orientations and checks the Gram."""
    cuts = cuts or build_cut_system(cover)
    g = cover.genus
    m = len(cover.poles)
    segs = cuts.segments
    n_cuts = len(segs)
    if n_cuts != g + 1:
        raise PathConstructionError(
            f"{n_cuts} cuts for genus {g}; expected {g + 1}")
    pad = 0.45 * cover.delta

    a_minus = [CyclePath((PathLeg(_polyline_ellipse(*segs[l], pad), 1),),
                         INV_SQRT2, True, f"a[{l}]") for l in range(g)]

    # b-cycles: through cut l and the last cut, staggered crossing points
    b_minus = []
    p_last, q_last = segs[-1]
    d_last = (q_last - p_last) / abs(q_last - p_last)
    n_last = 1j * d_last
    off = 0.45 * cover.delta
    built_edges = []
    from .geometry import route_path
    for l in range(g):
        p, q = segs[l]
        x_l = p + 0.5 * (q - p)
        n_l = 1j * (q - p) / abs(q - p)
        f = (l + 1) / (g + 1)
        x_last = p_last + f * (q_last - p_last)
        w_l_plus = x_l + off * n_l
        w_l_minus = x_l - off * n_l
        w_last_plus = x_last + off * n_last
        w_last_minus = x_last - off * n_last
        obstacles = [o for o in cover.obstacles()] + built_edges
        mid1 = route_path(w_l_plus, w_last_plus, obstacles, 0.4 * cover.delta)
        mid2 = route_path(w_last_minus, w_l_minus, obstacles, 0.4 * cover.delta)
        leg1 = PathLeg((x_l,) + tuple(mid1) + (x_last,), 1)
        leg2 = PathLeg((x_last,) + tuple(mid2) + (x_l,), -1)
        cyc = CyclePath((leg1, leg2), INV_SQRT2, True, f"b[{l}]")
        b_minus.append(cyc)
        built_edges.extend((a, b) for (a, b, _s) in cyc.xi_edges())

    # orientation normalization: a[l] o b[l] = +1/2
    for l in range(g):
        val = intersection(a_minus[l], b_minus[l])
        if val == Fraction(-1, 2):
            b_minus[l] = b_minus[l].reversed()
        elif val != Fraction(1, 2):
            raise PathConstructionError(
                f"a[{l}] o b[{l}] = {val}, cannot normalize")

    t_minus = [_build_t_cycle(cover, j) for j in range(m)]

    carriers = []
    t_orient = []
    for j in range(m):
        # avoid every built cycle except pole j's own circles (kappa must
        # cross those) and the big circle at infinity
        avoid = built_edges + _edges_of(a_minus)
        for jj in range(m):
            if jj == j or cover.poles[jj].center is None:
                continue
            avoid += [(p1, p2) for (p1, p2, _s) in t_minus[jj].xi_edges()]
        car = _build_kappa(cover, j, avoid)
        carriers.append(car)
        val = intersection(car.full_cycle(ONE), t_minus[j])
        if val == 1:
            t_orient.append(1)
        elif val == -1:
            t_orient.append(-1)
        else:
            raise PathConstructionError(
                f"kappa[{j}] o t[{j}] = {val}, cannot normalize")

    basis = HomologyBasis(cover, a_minus, b_minus, t_minus, carriers, t_orient)
    _assert_canonical(basis)
    return basis


def _assert_canonical(basis: HomologyBasis):
    g, m = basis.genus, basis.n_poles
    gram = basis.gram()
    n = 2 * g + m
    for i in range(n):
        for j in range(n):
            want = Fraction(0)
            if i < g and j - g == i and j < 2 * g:
                want = Fraction(1, 2)
            if j < g and i - g == j and i < 2 * g:
                want = Fraction(-1, 2)
            if gram[i][j] != want:
                raise PathConstructionError(
                    f"intersection Gram mismatch at ({i},{j}): "
                    f"{gram[i][j]} != {want}")
    dual = basis.dual_gram()
    for i in range(n):
        for j in range(n):
            want = Fraction(1 if i == j else 0)
            if dual[i][j] != want:
                raise PathConstructionError(
                    f"dual Gram mismatch at ({i},{j}): {dual[i][j]} != {want}")


def dual_cycle(basis: HomologyBasis, idx: int) -> CyclePath:
    return basis.dual(idx)
