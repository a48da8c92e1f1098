"""Weighted piecewise paths with sheet traces.

A :class:`CyclePath` is the concrete carrier of a homology class: a list of
polyline legs, each tagged with the sheet it runs on and the chart its
vertices live in, plus an exact scalar weight multiplying every integral.
Weights of the form ``p/q * sqrt(2)**e`` are kept exact so intersection
numbers come out as rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

__all__ = ["Weight", "PathLeg", "CyclePath", "reverse_leg"]


@dataclass(frozen=True)
class Weight:
    """Exact scalar ``frac * sqrt(2)**sqrt2_exp``."""

    frac: Fraction = Fraction(1)
    sqrt2_exp: int = 0

    @property
    def value(self) -> float:
        return float(self.frac) * 2.0 ** (self.sqrt2_exp / 2.0)

    def __mul__(self, other: "Weight") -> "Weight":
        return Weight(self.frac * other.frac, self.sqrt2_exp + other.sqrt2_exp)

    def times_int(self, n: int) -> "Weight":
        return Weight(self.frac * n, self.sqrt2_exp)

    def as_fraction(self) -> Fraction:
        """Exact value when the sqrt(2) power is even."""
        if self.sqrt2_exp % 2:
            raise ValueError("weight is irrational")
        return self.frac * Fraction(2) ** (self.sqrt2_exp // 2)


HALF = Weight(Fraction(1, 2))
ONE = Weight(Fraction(1))
INV_SQRT2 = Weight(Fraction(1), -1)


@dataclass(frozen=True)
class PathLeg:
    """Polyline with a constant sheet sign.

    ``sheet`` is the sign multiplying the reference branch (+1 = sheet 1).
    ``chart`` is ``"xi"`` for the affine chart or ``"sigma"`` for the chart
    at infinity (vertices are sigma values, integration transforms back).
    ``sqrt_end`` marks an endpoint sitting exactly at a branch point, where
    integration substitutes the square-root local parameter.
    """

    points: tuple
    sheet: int = 1
    chart: str = "xi"
    sqrt_end: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "points",
                           tuple(complex(p) for p in self.points))

    @property
    def start(self) -> complex:
        return self.points[0]

    @property
    def end(self) -> complex:
        return self.points[-1]


def reverse_leg(leg: PathLeg) -> PathLeg:
    flip = {None: None, "start": "end", "end": "start"}[leg.sqrt_end]
    return PathLeg(tuple(reversed(leg.points)), leg.sheet, leg.chart, flip)


@dataclass(frozen=True)
class CyclePath:
    """Weighted chain of legs; closed for cycle classes, open for carriers."""

    legs: tuple
    weight: Weight = ONE
    closed: bool = True
    label: str = ""

    def with_weight(self, w: Weight) -> "CyclePath":
        return CyclePath(self.legs, w, self.closed, self.label)

    def scaled(self, n: int) -> "CyclePath":
        return CyclePath(self.legs, self.weight.times_int(n), self.closed,
                         self.label)

    def reversed(self) -> "CyclePath":
        return CyclePath(tuple(reverse_leg(l) for l in reversed(self.legs)),
                         self.weight, self.closed, self.label + "~rev")

    def xi_edges(self):
        """All (a, b, sheet) straight edges in the xi chart (for crossings)."""
        out = []
        for leg in self.legs:
            if leg.chart != "xi":
                continue
            pts = leg.points
            for i in range(len(pts) - 1):
                out.append((pts[i], pts[i + 1], leg.sheet))
        return out

    def serialize(self):
        return {
            "weight": {"num": self.weight.frac.numerator,
                       "den": self.weight.frac.denominator,
                       "sqrt2_exp": self.weight.sqrt2_exp},
            "closed": self.closed,
            "label": self.label,
            "legs": [
                {"chart": leg.chart, "sheet": leg.sheet,
                 "sqrt_end": leg.sqrt_end,
                 "points": [[p.real, p.imag] for p in leg.points]}
                for leg in self.legs
            ],
        }
