"""Gaussian-weighted phase-space functions and star-genvalue checks.

A GaussPoly is P(q, p; hbar) * exp(-alpha (q^2 + p^2) / hbar) with a
PhasePoly prefactor and rational alpha >= 0 (alpha = 0 embeds plain
polynomials).  The class is closed under differentiation: each derivative
pulls down -2*alpha*q/hbar or -2*alpha*p/hbar, which is why the scalar ring
allows negative hbar powers.

Star products with a polynomial on one side reduce to a finite double sum
of derivatives, so oscillator eigenfunction checks H * W_n = E_n W_n are
exact identities here, not numerics.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .phasepoly import P, PhasePoly, Q, moyal_star, _deriv_table
from .scalars import GaussianRational, HbarScalar, as_fraction


class GaussPoly:
    """Exact element P(q, p; hbar) * exp(-alpha (q^2 + p^2) / hbar)."""

    __slots__ = ("prefactor", "alpha")

    def __init__(self, prefactor: PhasePoly, alpha=0):
        prefactor = PhasePoly.constant(prefactor)
        alpha = as_fraction(alpha)
        if alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if prefactor.is_zero():
            alpha = Fraction(0)  # canonical zero
        object.__setattr__(self, "prefactor", prefactor)
        object.__setattr__(self, "alpha", alpha)

    def __setattr__(self, name, value):
        raise AttributeError("GaussPoly is immutable")

    @classmethod
    def from_poly(cls, poly: PhasePoly) -> "GaussPoly":
        return cls(poly, 0)

    def is_zero(self) -> bool:
        return self.prefactor.is_zero()

    def _check_alpha(self, other: "GaussPoly"):
        if self.is_zero() or other.is_zero():
            return
        if self.alpha != other.alpha:
            raise ValueError("Gaussian widths differ; sum leaves the class")

    def __add__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        self._check_alpha(other)
        alpha = other.alpha if self.is_zero() else self.alpha
        return GaussPoly(self.prefactor + other.prefactor, alpha)

    def __neg__(self):
        return GaussPoly(-self.prefactor, self.alpha)

    def __sub__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "GaussPoly":
        """Multiply the prefactor by a polynomial or scalar."""
        poly = factor if isinstance(factor, PhasePoly) else PhasePoly.constant(factor)
        return GaussPoly(self.prefactor * poly, self.alpha)

    def __mul__(self, other):
        if isinstance(other, (PhasePoly, HbarScalar, GaussianRational, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def diff(self, var: str, order: int = 1) -> "GaussPoly":
        """Exact partial derivative; stays in the class."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        result = self
        pull = Q if var == "q" else P
        # d/dv [P e^(-alpha(q^2+p^2)/hbar)] = (dP/dv - 2 alpha v / hbar P) e^(...)
        for _ in range(order):
            pulled = result.prefactor * pull * HbarScalar.of(-2 * result.alpha, -1)
            result = GaussPoly(result.prefactor.diff(var) + pulled, result.alpha)
        return result

    def substitute_hbar(self, value) -> PhasePoly:
        """Evaluate the prefactor at a rational hbar (alpha must be 0)."""
        if self.alpha:
            raise ValueError("cannot evaluate the exponential factor exactly")
        return self.prefactor.substitute_hbar(value)

    def __eq__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        return self.prefactor == other.prefactor and self.alpha == other.alpha

    def __hash__(self):
        return hash((self.prefactor, self.alpha))

    def render(self) -> str:
        if not self.alpha:
            return self.prefactor.render()
        return f"({self.prefactor.render()}) * exp(-({self.alpha})*(q^2+p^2)/hbar)"

    def __repr__(self):
        return self.render()


def gauss_diff(g: GaussPoly, var: str, order: int = 1) -> GaussPoly:
    return g.diff(var, order)


def bopp_star_left(f: PhasePoly, g: GaussPoly) -> GaussPoly:
    """Star product f * g with polynomial f acting from the left.

    Same double sum as the polynomial Moyal product; only the f-side
    derivative orders are bounded, so the sum stays finite:

        sum_{a,b} (i*hbar/2)^a (-i*hbar/2)^b / (a! b!)
                  (d_q^a d_p^b f) (d_p^a d_q^b g)

    For alpha = 0 this coincides with moyal_star on polynomials.
    """
    if f.is_zero() or g.is_zero():
        return GaussPoly(PhasePoly.zero(), 0)
    a_max = max(f.degree("q"), 0)
    b_max = max(f.degree("p"), 0)
    f_table = _deriv_table(f, a_max, b_max)
    result = GaussPoly(PhasePoly.zero(), 0)
    g_q = g
    for b in range(b_max + 1):
        g_qp = g_q
        for a in range(a_max + 1):
            left = f_table[(a, b)]
            if not left.is_zero():
                gauss = GaussianRational(0, 1) ** a * GaussianRational(0, -1) ** b
                weight = HbarScalar.of(
                    gauss * Fraction(1, 2 ** (a + b) * factorial(a) * factorial(b)),
                    a + b,
                )
                result = result + g_qp.scale(left * weight)
            g_qp = g_qp.diff("p")
        g_q = g_q.diff("q")
    return result


def bopp_star_right(g: GaussPoly, f: PhasePoly) -> GaussPoly:
    """Star product g * f with polynomial f acting from the right."""
    if f.is_zero() or g.is_zero():
        return GaussPoly(PhasePoly.zero(), 0)
    a_max = max(f.degree("p"), 0)
    b_max = max(f.degree("q"), 0)
    f_table = _deriv_table(f, b_max, a_max)
    result = GaussPoly(PhasePoly.zero(), 0)
    g_p = g
    for b in range(b_max + 1):
        g_pq = g_p
        for a in range(a_max + 1):
            right = f_table[(b, a)]
            if not right.is_zero():
                gauss = GaussianRational(0, 1) ** a * GaussianRational(0, -1) ** b
                weight = HbarScalar.of(
                    gauss * Fraction(1, 2 ** (a + b) * factorial(a) * factorial(b)),
                    a + b,
                )
                result = result + g_pq.scale(right * weight)
            g_pq = g_pq.diff("q")
        g_p = g_p.diff("p")
    return result


def laguerre(n: int, x: PhasePoly) -> PhasePoly:
    """Laguerre polynomial L_n composed with a PhasePoly argument, exactly."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    prev = PhasePoly.constant(1)
    if n == 0:
        return prev
    current = PhasePoly.constant(1) - x
    for k in range(1, n):
        nxt = ((2 * k + 1 - x) * current - k * prev) / (k + 1)
        prev, current = current, nxt
    return current


def oscillator_hamiltonian() -> PhasePoly:
    """(q^2 + p^2)/2, the harmonic oscillator."""
    return (Q * Q + P * P) / 2


def oscillator_wigner(n: int) -> GaussPoly:
    """n-th oscillator Wigner function in the convention

        W_n = 2 (-1)^n exp(-(q^2+p^2)/hbar) L_n(2 (q^2+p^2)/hbar).

    Satisfies the star-genvalue equation H0 * W_n = hbar (2n+1)/2 W_n, which
    is the normalization-independent content.
    """
    if n < 0:
        raise ValueError("level must be nonnegative")
    argument = (Q * Q + P * P) * HbarScalar.of(2, -1)
    prefactor = 2 * laguerre(n, argument)
    if n % 2:
        prefactor = -prefactor
    return GaussPoly(prefactor, 1)


def check_stargenvalue(h: PhasePoly, wigner: GaussPoly, energy: HbarScalar) -> bool:
    """True iff h * wigner = energy * wigner holds as exact data equality."""
    if not isinstance(energy, HbarScalar):
        energy = HbarScalar.of(energy)
    return (bopp_star_left(h, wigner) - wigner.scale(energy)).is_zero()
