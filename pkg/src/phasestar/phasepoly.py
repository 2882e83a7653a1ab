"""Sparse polynomials in the phase-space variables q, p and the Moyal product.

A PhasePoly maps monomials (q-exponent, p-exponent) to HbarScalar
coefficients, so a single value can mix powers of hbar with powers of q, p.
The Moyal star product is evaluated as a terminating double sum over
derivative orders; for polynomial operands the series is finite and the
result is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .scalars import (
    GR_ONE,
    GaussianRational,
    HbarScalar,
    RationalLike,
    _coerce_gauss,
)

Monomial = tuple[int, int]  # (q exponent, p exponent)

_VAR_INDEX = {"q": 0, "p": 1}


class PhasePoly:
    """Exact sparse polynomial in q and p over the hbar-Laurent scalar ring."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, HbarScalar] | None = None):
        canonical: dict[Monomial, HbarScalar] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    canonical[mono] = coeff
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("PhasePoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "PhasePoly":
        return cls()

    @classmethod
    def monomial(cls, q_exp: int, p_exp: int, coeff=1) -> "PhasePoly":
        if q_exp < 0 or p_exp < 0:
            raise ValueError("monomial exponents must be nonnegative")
        if isinstance(coeff, HbarScalar):
            scalar = coeff
        else:
            scalar = HbarScalar.of(coeff)
        return cls({(q_exp, p_exp): scalar})

    @classmethod
    def constant(cls, value) -> "PhasePoly":
        if isinstance(value, PhasePoly):
            return value
        if isinstance(value, HbarScalar):
            return cls({(0, 0): value})
        return cls({(0, 0): HbarScalar.of(value)})

    @classmethod
    def var_q(cls) -> "PhasePoly":
        return cls.monomial(1, 0)

    @classmethod
    def var_p(cls) -> "PhasePoly":
        return cls.monomial(0, 1)

    @classmethod
    def hbar(cls, power: int = 1) -> "PhasePoly":
        return cls({(0, 0): HbarScalar.hbar(power)})

    @classmethod
    def i(cls) -> "PhasePoly":
        return cls({(0, 0): HbarScalar.i()})

    # -- inspection ----------------------------------------------------------

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, q_exp: int, p_exp: int) -> HbarScalar:
        return self._terms.get((q_exp, p_exp), HbarScalar.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self, var: str) -> int:
        """Largest exponent of the given variable; -1 for the zero polynomial."""
        idx = _VAR_INDEX[var]
        if not self._terms:
            return -1
        return max(mono[idx] for mono in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(m + n for m, n in self._terms)

    def depends_on(self, var: str) -> bool:
        idx = _VAR_INDEX[var]
        return any(mono[idx] for mono in self._terms)

    def is_hbar_free(self) -> bool:
        return all(c.is_hbar_free() for c in self._terms.values())

    def hbar_part(self, power: int) -> "PhasePoly":
        """Polynomial multiplying hbar^power, with the hbar factor stripped."""
        terms = {}
        for mono, coeff in self._terms.items():
            c = coeff.coefficient(power)
            if c:
                terms[mono] = HbarScalar.of(c)
        return PhasePoly(terms)

    def min_hbar_power(self) -> int | None:
        powers = [c.min_power() for c in self._terms.values()]
        return min(powers) if powers else None

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "PhasePoly | None":
        if isinstance(other, PhasePoly):
            return other
        if isinstance(other, (HbarScalar, GaussianRational, int, Fraction)):
            return PhasePoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = terms.get(mono, HbarScalar.zero()) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return PhasePoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return PhasePoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, HbarScalar] = {}
        for (m1, n1), c1 in self._terms.items():
            for (m2, n2), c2 in other._terms.items():
                mono = (m1 + m2, n1 + n2)
                total = terms.get(mono, HbarScalar.zero()) + c1 * c2
                if total:
                    terms[mono] = total
                else:
                    terms.pop(mono, None)
        return PhasePoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        gauss = _coerce_gauss(other)
        if gauss is None:
            return NotImplemented
        if gauss.is_zero():
            raise ZeroDivisionError("division by zero")
        inv = GR_ONE / gauss
        return PhasePoly({m: c * inv for m, c in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PhasePoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- calculus ------------------------------------------------------------

    def diff(self, var: str, order: int = 1) -> "PhasePoly":
        """Exact partial derivative d^order/d(var)^order."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        idx = _VAR_INDEX[var]
        result = self
        for _ in range(order):
            terms: dict[Monomial, HbarScalar] = {}
            for mono, coeff in result._terms.items():
                exp = mono[idx]
                if exp == 0:
                    continue
                new_mono = (mono[0] - 1, mono[1]) if idx == 0 else (mono[0], mono[1] - 1)
                scaled = coeff * exp
                total = terms.get(new_mono, HbarScalar.zero()) + scaled
                if total:
                    terms[new_mono] = total
                else:
                    terms.pop(new_mono, None)
            result = PhasePoly(terms)
        return result

    def conjugate(self) -> "PhasePoly":
        return PhasePoly({m: c.conjugate() for m, c in self._terms.items()})

    def substitute_hbar(self, value) -> "PhasePoly":
        """Exact evaluation hbar -> value (rational or Gaussian rational)."""
        terms: dict[Monomial, HbarScalar] = {}
        for mono, coeff in self._terms.items():
            c = coeff.substitute(value)
            if c:
                terms[mono] = HbarScalar.of(c)
        return PhasePoly(terms)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self._terms.items()))

    # -- rendering -----------------------------------------------------------

    def _atoms(self):
        """Flattened (q_exp, p_exp, hbar_power, gauss) list in canonical order.

        Graded order: total q,p degree descending, then q-heavy terms first,
        then hbar power ascending.  This makes rendering deterministic.
        """
        atoms = []
        for (m, n), coeff in self._terms.items():
            for power, gauss in coeff.items():
                atoms.append((m, n, power, gauss))
        atoms.sort(key=lambda a: (-(a[0] + a[1]), -a[0], a[2]))
        return atoms

    def render(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for m, n, power, gauss in self._atoms():
            pieces = gauss.factor_strings()
            pieces += HbarScalar._hbar_factor(power)
            if m:
                pieces.append("q" if m == 1 else f"q^{m}")
            if n:
                pieces.append("p" if n == 1 else f"p^{n}")
            rendered.append("*".join(pieces) if pieces else "1")
        return " + ".join(rendered)

    def __repr__(self):
        return self.render()


# Canonical generators, shared by the whole package.
Q = PhasePoly.var_q()
P = PhasePoly.var_p()
HBAR = PhasePoly.hbar()
I = PhasePoly.i()
ONE = PhasePoly.constant(1)
ZERO = PhasePoly.zero()


def poly_mul(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """Plain commutative product (the hbar^0 limit of the star product)."""
    return f * g


def diff(f: PhasePoly, var: str, order: int = 1) -> PhasePoly:
    return f.diff(var, order)


def _deriv_table(f: PhasePoly, max_q: int, max_p: int) -> dict[Monomial, PhasePoly]:
    """Memoized table of repeated partials d_q^a d_p^b f for a<=max_q, b<=max_p."""
    table: dict[Monomial, PhasePoly] = {(0, 0): f}
    for a in range(max_q + 1):
        if a:
            table[(a, 0)] = table[(a - 1, 0)].diff("q")
        for b in range(1, max_p + 1):
            table[(a, b)] = table[(a, b - 1)].diff("p")
    return table


def moyal_star(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """Moyal star product f * g, exact for polynomial operands.

    Expansion over derivative orders (a, b):

        sum_{a,b} (i*hbar/2)^a (-i*hbar/2)^b / (a! b!)
                  (d_q^a d_p^b f) (d_p^a d_q^b g)

    The series terminates because each term needs a <= deg_q f, b <= deg_p f,
    a <= deg_p g, b <= deg_q g.  The (a, b) = (0, 0) term is the commutative
    product, so the hbar -> 0 limit is automatic.
    """
    if f.is_zero() or g.is_zero():
        return PhasePoly.zero()
    a_max = min(f.degree("q"), g.degree("p"))
    b_max = min(f.degree("p"), g.degree("q"))
    f_table = _deriv_table(f, max(a_max, 0), max(b_max, 0))
    g_table = _deriv_table(g, max(b_max, 0), max(a_max, 0))
    result = PhasePoly.zero()
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            left = f_table[(a, b)]
            if left.is_zero():
                continue
            right = g_table[(b, a)]
            if right.is_zero():
                continue
            gauss = GaussianRational(0, 1) ** a * GaussianRational(0, -1) ** b
            weight = HbarScalar.of(
                gauss * Fraction(1, 2 ** (a + b) * factorial(a) * factorial(b)),
                a + b,
            )
            result = result + left * right * weight
    return result


def moyal_commutator(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """Star commutator f * g - g * f under the Moyal product."""
    return moyal_star(f, g) - moyal_star(g, f)


def poisson_bracket(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """Canonical Poisson bracket, sign fixed by {q, p} = +1."""
    return f.diff("q") * g.diff("p") - f.diff("p") * g.diff("q")
