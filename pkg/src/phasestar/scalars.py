"""Exact scalars: Gaussian rationals and finite Laurent series in a formal hbar.

Everything in this package reduces to arithmetic in the ring of finite
Laurent series in hbar whose coefficients are Gaussian rationals a + b*i
(a, b exact rationals).  No operation here ever rounds, so algebraic
identities built on top of these scalars can be checked by plain equality.
"""

from __future__ import annotations

from fractions import Fraction

RationalLike = int | Fraction


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def rational_factor(value: Fraction) -> str:
    """Render a rational as a product factor.

    Nonnegative integers stay bare ('2'); everything else is parenthesized
    ('(-2)', '(1/2)') so the result can be re-parsed inside a term without
    precedence surprises.
    """
    if value.denominator == 1 and value >= 0:
        return str(value)
    return f"({value})"


class GaussianRational:
    """Exact complex number re + im*i with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

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
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- rendering ----------------------------------------------------------

    def factor_strings(self) -> list[str]:
        """Pieces to '*'-join when this scalar multiplies other factors.

        An empty list means the factor is 1 and can be omitted.
        """
        if self.is_zero():
            return ["0"]
        if self.is_real():
            return [] if self.re == 1 else [rational_factor(self.re)]
        if not self.re:
            pieces = [] if self.im == 1 else [rational_factor(self.im)]
            return pieces + ["i"]
        im_part = "i" if self.im == 1 else f"{rational_factor(self.im)}*i"
        return [f"({self.re} + {im_part})"]

    def render(self) -> str:
        pieces = self.factor_strings()
        return "*".join(pieces) if pieces else "1"

    def __repr__(self):
        return self.render()


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def _coerce_gauss(value) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


class HbarScalar:
    """Finite Laurent series sum_k c_k * hbar^k with GaussianRational c_k.

    Canonical form never stores a zero coefficient; equality is plain data
    equality.  Negative powers of hbar are allowed (Gaussian phase-space
    functions need them under differentiation).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, GaussianRational] | None = None):
        canonical: dict[int, GaussianRational] = {}
        if terms:
            for power, coeff in terms.items():
                if coeff:
                    canonical[power] = coeff
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("HbarScalar is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "HbarScalar":
        return cls()

    @classmethod
    def one(cls) -> "HbarScalar":
        return cls({0: GR_ONE})

    @classmethod
    def of(cls, coeff, power: int = 0) -> "HbarScalar":
        gauss = _coerce_gauss(coeff)
        if gauss is None:
            raise TypeError(f"cannot build HbarScalar from {type(coeff).__name__}")
        return cls({power: gauss})

    @classmethod
    def i(cls) -> "HbarScalar":
        return cls({0: GR_I})

    @classmethod
    def hbar(cls, power: int = 1) -> "HbarScalar":
        return cls({power: GR_ONE})

    # -- inspection ----------------------------------------------------------

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, power: int) -> GaussianRational:
        return self._terms.get(power, GR_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get(0, GR_ZERO).is_one()

    def is_hbar_free(self) -> bool:
        return all(power == 0 for power in self._terms)

    def min_power(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_power(self) -> int | None:
        return max(self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "HbarScalar | None":
        if isinstance(other, HbarScalar):
            return other
        gauss = _coerce_gauss(other)
        if gauss is not None:
            return HbarScalar({0: gauss})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for power, coeff in other._terms.items():
            total = terms.get(power, GR_ZERO) + coeff
            if total:
                terms[power] = total
            else:
                terms.pop(power, None)
        return HbarScalar(terms)

    __radd__ = __add__

    def __neg__(self):
        return HbarScalar({p: -c for p, c in self._terms.items()})

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
        terms: dict[int, GaussianRational] = {}
        for p1, c1 in self._terms.items():
            for p2, c2 in other._terms.items():
                power = p1 + p2
                total = terms.get(power, GR_ZERO) + c1 * c2
                if total:
                    terms[power] = total
                else:
                    terms.pop(power, None)
        return HbarScalar(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        gauss = _coerce_gauss(other)
        if gauss is None:
            return NotImplemented
        if gauss.is_zero():
            raise ZeroDivisionError("division by zero")
        inv = GR_ONE / gauss
        return HbarScalar({p: c * inv for p, c in self._terms.items()})

    def conjugate(self) -> "HbarScalar":
        """Complex conjugation: i -> -i, hbar kept real."""
        return HbarScalar({p: c.conjugate() for p, c in self._terms.items()})

    def substitute(self, value) -> GaussianRational:
        """Evaluate at hbar = value (exact rational or Gaussian rational)."""
        gauss = _coerce_gauss(value)
        if gauss is None:
            raise TypeError("hbar value must be rational or GaussianRational")
        total = GR_ZERO
        for power, coeff in self._terms.items():
            if power >= 0:
                total = total + coeff * gauss**power
            else:
                if gauss.is_zero():
                    raise ZeroDivisionError(
                        "cannot substitute hbar = 0 into a negative power"
                    )
                total = total + coeff / gauss ** (-power)
        return total

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- rendering -----------------------------------------------------------

    @staticmethod
    def _hbar_factor(power: int) -> list[str]:
        if power == 0:
            return []
        if power == 1:
            return ["hbar"]
        return [f"hbar^{power}"]

    def render(self) -> str:
        if not self._terms:
            return "0"
        atoms = []
        for power, coeff in self.items():
            pieces = coeff.factor_strings() + self._hbar_factor(power)
            atoms.append("*".join(pieces) if pieces else "1")
        return " + ".join(atoms)

    def __repr__(self):
        return self.render()


HS_ZERO = HbarScalar.zero()
HS_ONE = HbarScalar.one()
HS_I = HbarScalar.i()
HS_HBAR = HbarScalar.hbar()
