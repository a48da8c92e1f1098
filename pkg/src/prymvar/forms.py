"""Representations of differentials on the double cover.

Every differential odd under the sheet involution is ``h(xi) dxi / w`` with
``h`` rational and ``w`` the sheet function (``w**2 = N``).  Even objects,
like regularized kernel diagonals, are plain rational functions of the base
coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Poly, RationalC

__all__ = ["OddForm", "odd_monomial"]


@dataclass(frozen=True)
class OddForm:
    """Meromorphic differential ``h(xi) dxi / w``, odd under the involution."""

    h: RationalC
    label: str = ""

    def ratio(self, cover, xi, sheet_sign):
        """Value of form/dxi at base points ``xi`` on the given sheet."""
        return self.h(xi) / cover.w(xi, sheet_sign)

    def evaluator(self, cover):
        """Vectorized ``f(xi, sheet_sign) -> form/dxi`` closure."""
        h = self.h
        def f(xi, s):
            return h(xi) / cover.w(xi, s)
        return f

    def finite_pole_positions(self, tol: float = 1e-9):
        from .algebra import roots
        if self.h.den.degree == 0:
            return []
        return [r for r, _ in roots(self.h.den, tol)]

    def __add__(self, other: "OddForm") -> "OddForm":
        return OddForm(self.h + other.h, f"({self.label}+{other.label})")

    def __sub__(self, other: "OddForm") -> "OddForm":
        return OddForm(self.h - other.h, f"({self.label}-{other.label})")

    def __mul__(self, scalar) -> "OddForm":
        return OddForm(self.h * scalar, self.label)

    __rmul__ = __mul__


def odd_monomial(s: int, label: str = "") -> OddForm:
    """The form ``xi**s dxi / w``."""
    return OddForm(RationalC(Poly((0.0,) * s + (1.0,)), Poly((1.0,))),
                   label or f"xi^{s} dxi/w")
