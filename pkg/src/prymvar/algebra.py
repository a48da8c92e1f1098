"""Complex polynomial and rational-function arithmetic, roots, linear solves.

Coefficients are stored in ascending degree order everywhere.  Root finding
uses Aberth-Ehrlich simultaneous iteration with Newton polishing, which is
robust for the modest degrees (<= 20) that arise from desk-scale covers.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import NonConvergence, SingularSystem

__all__ = ["Poly", "RationalC", "roots", "solve_linear", "poly_from_roots"]


@dataclass(frozen=True)
class Poly:
    """Dense complex polynomial, coefficients ascending, leading coeff nonzero."""

    coef: tuple

    def __post_init__(self):
        c = np.asarray(self.coef, dtype=complex).ravel()
        k = c.size
        while k > 1 and c[k - 1] == 0:
            k -= 1
        object.__setattr__(self, "coef", tuple(c[:k]))

    @property
    def degree(self) -> int:
        return len(self.coef) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coef) == 1 and self.coef[0] == 0

    def __call__(self, z):
        return npoly.polyval(np.asarray(z, dtype=complex), np.asarray(self.coef))

    def deriv(self, m: int = 1) -> "Poly":
        return Poly(npoly.polyder(np.asarray(self.coef), m))

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly((other,))
        return Poly(npoly.polyadd(np.asarray(self.coef), np.asarray(other.coef)))

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly((other,))
        return Poly(npoly.polysub(np.asarray(self.coef), np.asarray(other.coef)))

    def __rsub__(self, other):
        return Poly((other,)) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly(npoly.polymul(np.asarray(self.coef), np.asarray(other.coef)))
        return Poly(np.asarray(self.coef) * other)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly((1.0,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift_pow(self, n: int) -> "Poly":
        """Multiply by ``xi**n``."""
        return Poly((0.0,) * n + self.coef)

    def compose(self, inner: "Poly") -> "Poly":
        out = Poly((self.coef[-1],))
        for c in reversed(self.coef[:-1]):
            out = out * inner + c
        return out

    @property
    def lead(self) -> complex:
        return self.coef[-1]


def poly_from_roots(rts, lead=1.0) -> Poly:
    c = np.asarray([lead], dtype=complex)
    for r in rts:
        c = npoly.polymul(c, np.asarray([-r, 1.0], dtype=complex))
    return Poly(c)


@dataclass(frozen=True)
class RationalC:
    """Quotient of two polynomials; denominator nonzero, no shared roots."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def deriv(self) -> "RationalC":
        n, d = self.num, self.den
        return RationalC(n.deriv() * d - n * d.deriv(), d * d)

    def __mul__(self, other):
        if isinstance(other, RationalC):
            return RationalC(self.num * other.num, self.den * other.den)
        return RationalC(self.num * other, self.den)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, RationalC):
            other = RationalC(Poly((other,)), Poly((1.0,)))
        return RationalC(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    def __sub__(self, other):
        return self + (other * (-1.0))

    def shares_root(self, tol: float = 1e-8) -> bool:
        if self.num.is_zero or self.num.degree == 0 or self.den.degree == 0:
            return False
        rn = [r for r, _ in roots(self.num)]
        rd = [r for r, _ in roots(self.den)]
        return any(abs(a - b) < tol for a in rn for b in rd)


def _aberth(c: np.ndarray, maxit: int = 200) -> np.ndarray:
    """All roots of the polynomial with ascending coefficients ``c``."""
    n = c.size - 1
    p = npoly.Polynomial(c)
    dp = p.deriv()
    # initial guesses: perturbed circle at the Cauchy-bound radius
    radius = 1.0 + max(abs(c[:-1] / c[-1])) if n > 0 else 1.0
    k = np.arange(n)
    z = radius * np.exp(2j * np.pi * (k + 0.25) / n) * (1 + 0.05 * np.cos(3.0 * k))
    scale = max(radius, 1.0)
    for _ in range(maxit):
        pz = p(z)
        dpz = dp(z)
        ratio = np.where(dpz != 0, pz / np.where(dpz == 0, 1, dpz), 0.1)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - ratio * s
        step = ratio / np.where(denom == 0, 1e-30, denom)
        z = z - step
        if np.max(np.abs(step)) < 1e-15 * scale:
            break
    else:
        raise NonConvergence("Aberth iteration did not settle")
    # Newton polish
    for _ in range(3):
        dpz = dp(z)
        good = np.abs(dpz) > 1e-300
        z = np.where(good, z - p(z) / np.where(good, dpz, 1.0), z)
    return z


def roots(p: Poly, tol: float = 1e-8) -> list:
    """Roots of ``p`` with multiplicities, as ``[(root, mult), ...]``.

    Multiplicities are recovered by clustering within ``tol``; the cluster
    centroid is returned.  Raises :class:`NonConvergence` when the iteration
    fails or the reconstructed polynomial mismatches badly.
    """
    if p.is_zero:
        raise ValueError("roots of the zero polynomial are undefined")
    if p.degree == 0:
        return []
    z = _aberth(np.asarray(p.coef))
    order = np.lexsort((z.imag, z.real))
    z = z[order]
    clusters = []
    for r in z:
        if clusters and abs(r - clusters[-1][0] / clusters[-1][1]) < tol:
            s, m = clusters[-1]
            clusters[-1] = (s + r, m + 1)
        else:
            clusters.append((r, 1))
    out = [(s / m, m) for s, m in clusters]
    # verify reconstruction
    recon = poly_from_roots([r for r, m in out for _ in range(m)], p.lead)
    scale = max(abs(np.asarray(p.coef)))
    err = max(abs(np.asarray(recon.coef) - np.asarray(p.coef, dtype=complex)))
    if err > 1e-6 * scale:
        raise NonConvergence(f"root reconstruction residual {err:.2e}")
    return out


def solve_linear(a, b):
    """Solve ``a x = b`` for complex square ``a`` with a residual guarantee."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    try:
        x = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc
    if not np.all(np.isfinite(x)):
        raise SingularSystem("solution has non-finite entries")
    resid = np.linalg.norm(a @ x - b)
    if resid > 1e-12 * max(np.linalg.norm(b), 1e-300) + 1e-13 * np.linalg.norm(x):
        # one step of iterative refinement before giving up
        x = x + np.linalg.solve(a, b - a @ x)
        resid = np.linalg.norm(a @ x - b)
        if resid > 1e-10 * max(np.linalg.norm(b), np.linalg.norm(a @ x)):
            raise SingularSystem(f"residual {resid:.2e} too large")
    return x
