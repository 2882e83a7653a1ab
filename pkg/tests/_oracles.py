"""Independent oracles used to validate the star product engines.

These deliberately avoid the library's evaluation strategy:

* moyal_series_oracle expands the exponential kernel order by order with
  binomial coefficients (the textbook form of the series).
* Operator quantization: phase-space monomials map to symmetrically ordered
  operators on polynomials in one variable (x multiplication and -i*hbar
  d/dx); the star product must match operator composition.
* to_matrix sends the four blades of the 2D euclidean algebra to exact
  2x2 matrices (the tuple representation by Pauli matrices): products of
  multivectors must match matrix products.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from phasestar import (
    GaussianRational,
    HbarScalar,
    Metric,
    Multivector,
    PhasePoly,
    moyal_star,
)

# -- direct series expansion of the Moyal kernel -------------------------------


def moyal_series_oracle(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """sum_k (i hbar/2)^k / k! sum_m C(k,m) (-1)^(k-m)
    (d_q^m d_p^(k-m) f)(d_p^m d_q^(k-m) g)."""
    if f.is_zero() or g.is_zero():
        return PhasePoly.zero()
    k_max = min(f.total_degree(), g.total_degree())
    total = PhasePoly.zero()
    for k in range(k_max + 1):
        inner = PhasePoly.zero()
        for m in range(k + 1):
            left = f.diff("q", m).diff("p", k - m)
            right = g.diff("p", m).diff("q", k - m)
            sign = -1 if (k - m) % 2 else 1
            inner = inner + left * right * (comb(k, m) * sign)
        prefactor = HbarScalar.of(
            GaussianRational(0, 1) ** k * Fraction(1, 2**k * factorial(k)), k
        )
        total = total + inner * prefactor
    return total


# -- operator quantization oracle ----------------------------------------------
#
# A univariate polynomial in x is a dict {exponent: HbarScalar}.  Operators:
# X multiplies by x, MOMENTUM applies -i*hbar d/dx, so [X, MOMENTUM] acts as
# multiplication by i*hbar, matching the star commutator of q and p.

XPoly = dict[int, HbarScalar]


def xp_basis(j: int) -> XPoly:
    return {j: HbarScalar.one()}


def xp_add(a: XPoly, b: XPoly) -> XPoly:
    out = dict(a)
    for j, c in b.items():
        total = out.get(j, HbarScalar.zero()) + c
        if total:
            out[j] = total
        else:
            out.pop(j, None)
    return out


def xp_scale(a: XPoly, scalar) -> XPoly:
    scalar = scalar if isinstance(scalar, HbarScalar) else HbarScalar.of(scalar)
    out = {}
    for j, c in a.items():
        total = c * scalar
        if total:
            out[j] = total
    return out


def op_x(a: XPoly) -> XPoly:
    return {j + 1: c for j, c in a.items()}


def op_momentum(a: XPoly) -> XPoly:
    """-i*hbar d/dx."""
    out = {}
    for j, c in a.items():
        if j:
            total = c * HbarScalar.of(GaussianRational(0, -j), 1)
            if total:
                out[j - 1] = total
    return out


def weyl_apply(f: PhasePoly, target: XPoly) -> XPoly:
    """Apply the symmetrically ordered operator of f to a univariate polynomial.

    Monomial rule: q^m p^n maps to 2^(-m) sum_r C(m,r) X^r MOMENTUM^n X^(m-r).
    """
    result: XPoly = {}
    for (m, n), coeff in f.items():
        acc: XPoly = {}
        for r in range(m + 1):
            value = dict(target)
            for _ in range(m - r):
                value = op_x(value)
            for _ in range(n):
                value = op_momentum(value)
            for _ in range(r):
                value = op_x(value)
            acc = xp_add(acc, xp_scale(value, Fraction(comb(m, r), 2**m)))
        result = xp_add(result, xp_scale(acc, coeff))
    return result


def weyl_star_matches(f: PhasePoly, g: PhasePoly, max_basis: int = 4) -> bool:
    """Does the operator of f*g equal operator(f) after operator(g)?"""
    star = moyal_star(f, g)
    for j in range(max_basis + 1):
        basis = xp_basis(j)
        composed = weyl_apply(f, weyl_apply(g, basis))
        direct = weyl_apply(star, basis)
        if composed != direct:
            return False
    return True


# -- 2x2 matrix representation of the 2D euclidean algebra ---------------------

Mat2 = list  # 2x2 nested list of PhasePoly


def to_matrix(mv: Multivector) -> Mat2:
    """Tuple representation: 1, e1, e2, e1e2 -> identity, sigma1, sigma2,
    i*sigma3 with exact Gaussian-rational entries."""
    if mv.metric != Metric.euclidean(2):
        raise ValueError("matrix oracle needs the 2D euclidean metric")
    a = mv.coefficient(0b00)
    b = mv.coefficient(0b01)
    c = mv.coefficient(0b10)
    d = mv.coefficient(0b11)
    i = PhasePoly.i()
    return [
        [a + i * d, b - i * c],
        [b + i * c, a - i * d],
    ]


def from_matrix(mat: Mat2, metric: Metric) -> Multivector:
    """Inverse of to_matrix; shows the tuple representation is a bijection."""
    i = PhasePoly.i()
    a = (mat[0][0] + mat[1][1]) / 2
    d = (mat[0][0] - mat[1][1]) / 2 * (-1 * i)
    b = (mat[0][1] + mat[1][0]) / 2
    c = (mat[1][0] - mat[0][1]) / 2 * (-1 * i)
    return Multivector(metric, {0b00: a, 0b01: b, 0b10: c, 0b11: d})


def mat_mul(lhs: Mat2, rhs: Mat2, coeff_mul) -> Mat2:
    out = [[PhasePoly.zero(), PhasePoly.zero()], [PhasePoly.zero(), PhasePoly.zero()]]
    for r in range(2):
        for s in range(2):
            total = PhasePoly.zero()
            for t in range(2):
                total = total + coeff_mul(lhs[r][t], rhs[t][s])
            out[r][s] = total
    return out


def mat_eq(lhs: Mat2, rhs: Mat2) -> bool:
    return all(lhs[r][s] == rhs[r][s] for r in range(2) for s in range(2))
