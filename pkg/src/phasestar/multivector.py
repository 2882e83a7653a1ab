"""Grassmann multivectors over n generators and their Clifford star product.

Basis blades are bitmasks over generator indices; a multivector maps blades
to PhasePoly coefficients and carries the symmetric metric that defines its
Clifford product.  The product of two blades is expanded combinatorially:
the k-fold contraction term pairs a k-subset of the left blade with a
k-subset of the right blade through a determinant of metric entries, with
signs determined by Grassmann derivative bookkeeping.  The expansion
terminates after min(grade, grade) contractions, so everything is exact.

Blade sign convention: generators are kept in increasing index order and
reordering costs the parity of the permutation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .phasepoly import PhasePoly, moyal_star
from .scalars import GaussianRational, HbarScalar, as_fraction


class Metric:
    """Symmetric n x n rational metric for the Clifford contraction."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        frozen = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(frozen)
        if any(len(row) != n for row in frozen):
            raise ValueError("metric must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if frozen[i][j] != frozen[j][i]:
                    raise ValueError("metric must be symmetric")
        object.__setattr__(self, "_rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("Metric is immutable")

    @classmethod
    def euclidean(cls, n: int = 2) -> "Metric":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Metric":
        return cls([[0] * n for _ in range(n)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    def entry(self, i: int, j: int) -> Fraction:
        """Metric entry for generators i, j (0-based)."""
        return self._rows[i][j]

    def rows(self):
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, Metric):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Metric({[list(map(str, row)) for row in self._rows]})"


# -- blade helpers (masks use bit i for generator index i, 0-based) ----------


def blade_mask(indices) -> int:
    """Mask for a blade given 0-based generator indices (must be distinct)."""
    mask = 0
    for i in indices:
        bit = 1 << i
        if mask & bit:
            raise ValueError("repeated generator in blade")
        mask |= bit
    return mask


def blade_bits(mask: int) -> tuple[int, ...]:
    """Ascending 0-based generator indices of a blade mask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_name(mask: int) -> str:
    """Render a blade as concatenated 1-based generator names, e.g. 'e1e2'."""
    return "".join(f"e{i + 1}" for i in blade_bits(mask))


def _wedge_masks(left: int, right: int) -> tuple[int, int]:
    """Sign and mask of the wedge of two blades; sign 0 when they overlap."""
    if left & right:
        return 0, 0
    sign = 1
    for j in blade_bits(right):
        # generators of `left` above j must hop over j
        above = blade_grade(left >> (j + 1))
        if above % 2:
            sign = -sign
    return sign, left | right


def _remove_from_right(bits: tuple[int, ...], removals) -> tuple[int, "tuple[int, ...]"]:
    """Apply Grassmann derivatives from the right, ascending removal order.

    Each removal moves the generator past everything to its right, so it
    contributes (-1)^(count to the right at removal time).
    """
    current = list(bits)
    sign = 1
    for r in removals:
        pos = current.index(r)
        if (len(current) - pos - 1) % 2:
            sign = -sign
        current.pop(pos)
    return sign, tuple(current)


def _remove_from_left(bits: tuple[int, ...], removals) -> tuple[int, "tuple[int, ...]"]:
    """Apply Grassmann derivatives from the left, descending removal order.

    Each removal moves the generator past everything to its left, so it
    contributes (-1)^(count to the left at removal time).
    """
    current = list(bits)
    sign = 1
    for r in reversed(removals):
        pos = current.index(r)
        if pos % 2:
            sign = -sign
        current.pop(pos)
    return sign, tuple(current)


def _contraction_det(metric: Metric, rows, cols) -> Fraction:
    """Determinant of the metric submatrix metric[rows, cols] (k <= dim, small)."""
    k = len(rows)
    total = Fraction(0)
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        prod = Fraction(1)
        for a in range(k):
            prod *= metric.entry(rows[a], cols[perm[a]])
            if not prod:
                break
        total += sign * prod
    return total


@lru_cache(maxsize=None)
def _blade_star_table(metric: Metric, left: int, right: int) -> tuple[tuple[int, Fraction], ...]:
    """Clifford star product of two basis blades as ((mask, coeff), ...).

    k-fold contraction: pick k generators from each blade, pair them through
    det(metric[S, T]), remove them by right derivatives on the left blade and
    left derivatives on the right blade, and wedge what is left.  The
    operator-reordering parity (-1)^(k(k-1)/2) multiplies each order.
    """
    left_bits = blade_bits(left)
    right_bits = blade_bits(right)
    out: dict[int, Fraction] = {}
    for k in range(min(len(left_bits), len(right_bits)) + 1):
        order_sign = -1 if (k * (k - 1) // 2) % 2 else 1
        for sub_l in combinations(left_bits, k):
            lsign, lrest = _remove_from_right(left_bits, sub_l)
            for sub_r in combinations(right_bits, k):
                det = _contraction_det(metric, sub_l, sub_r)
                if not det:
                    continue
                rsign, rrest = _remove_from_left(right_bits, sub_r)
                wsign, wedge_mask = _wedge_masks(blade_mask(lrest), blade_mask(rrest))
                if not wsign:
                    continue
                coeff = order_sign * lsign * rsign * wsign * det
                total = out.get(wedge_mask, Fraction(0)) + coeff
                if total:
                    out[wedge_mask] = total
                else:
                    out.pop(wedge_mask, None)
    return tuple(sorted(out.items()))


class Multivector:
    """Blade-indexed map to PhasePoly coefficients, tied to a metric."""

    __slots__ = ("metric", "_terms")

    def __init__(self, metric: Metric, terms: dict[int, PhasePoly] | None = None):
        canonical: dict[int, PhasePoly] = {}
        limit = 1 << metric.dim
        if terms:
            for mask, coeff in terms.items():
                if mask < 0 or mask >= limit:
                    raise ValueError("blade outside the generator range")
                if coeff:
                    canonical[mask] = coeff
        object.__setattr__(self, "metric", metric)
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, metric: Metric) -> "Multivector":
        return cls(metric)

    @classmethod
    def scalar(cls, metric: Metric, value) -> "Multivector":
        return cls(metric, {0: PhasePoly.constant(value)})

    @classmethod
    def generator(cls, metric: Metric, index: int) -> "Multivector":
        """Basis vector e_index (1-based, matching the e1, e2, ... names)."""
        if not 1 <= index <= metric.dim:
            raise ValueError(f"generator index {index} outside 1..{metric.dim}")
        return cls(metric, {1 << (index - 1): PhasePoly.constant(1)})

    @classmethod
    def from_vector(cls, metric: Metric, components) -> "Multivector":
        """Grade-1 multivector with the given PhasePoly components."""
        comps = list(components)
        if len(comps) != metric.dim:
            raise ValueError("component count must match the generator count")
        terms = {}
        for i, c in enumerate(comps):
            poly = PhasePoly.constant(c)
            if poly:
                terms[1 << i] = poly
        return cls(metric, terms)

    # -- inspection ----------------------------------------------------------

    def items(self):
        return sorted(self._terms.items(), key=lambda t: (blade_grade(t[0]), t[0]))

    def coefficient(self, mask: int) -> PhasePoly:
        return self._terms.get(mask, PhasePoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def grades(self) -> set[int]:
        return {blade_grade(mask) for mask in self._terms}

    def grade_project(self, k: int) -> "Multivector":
        return Multivector(
            self.metric,
            {m: c for m, c in self._terms.items() if blade_grade(m) == k},
        )

    def scalar_part(self) -> PhasePoly:
        return self.coefficient(0)

    def is_vector(self) -> bool:
        return self.grades() <= {1}

    def vector_components(self) -> list[PhasePoly]:
        """Components on the generators; raises unless the value is grade 1."""
        if not self.is_vector():
            raise ValueError("not a pure grade-1 multivector")
        return [self.coefficient(1 << i) for i in range(self.metric.dim)]

    # -- linear structure ----------------------------------------------------

    def _check_metric(self, other: "Multivector"):
        if self.metric != other.metric:
            raise ValueError("operands carry different metrics")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_metric(other)
        terms = dict(self._terms)
        for mask, coeff in other._terms.items():
            total = terms.get(mask, PhasePoly.zero()) + coeff
            if total:
                terms[mask] = total
            else:
                terms.pop(mask, None)
        return Multivector(self.metric, terms)

    def __neg__(self):
        return Multivector(self.metric, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_metric(other)
        return self + (-other)

    def scale(self, factor) -> "Multivector":
        poly = PhasePoly.constant(factor) if not isinstance(factor, PhasePoly) else factor
        return Multivector(self.metric, {m: c * poly for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.clifford_star(other)
        if isinstance(other, (PhasePoly, HbarScalar, GaussianRational, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (PhasePoly, HbarScalar, GaussianRational, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            return Multivector(self.metric, {m: c / other for m, c in self._terms.items()})
        return NotImplemented

    # -- products ------------------------------------------------------------

    def _bilinear(self, other: "Multivector", coeff_mul, blade_table) -> "Multivector":
        terms: dict[int, PhasePoly] = {}
        for lmask, lcoeff in self._terms.items():
            for rmask, rcoeff in other._terms.items():
                product = coeff_mul(lcoeff, rcoeff)
                if product.is_zero():
                    continue
                for mask, weight in blade_table(lmask, rmask):
                    total = terms.get(mask, PhasePoly.zero()) + product * weight
                    if total:
                        terms[mask] = total
                    else:
                        terms.pop(mask, None)
        return Multivector(self.metric, terms)

    def wedge(self, other: "Multivector") -> "Multivector":
        """Antisymmetric Grassmann product; metric plays no role."""
        if self.metric.dim != other.metric.dim:
            raise ValueError("operands have different generator counts")

        def table(lmask, rmask):
            sign, mask = _wedge_masks(lmask, rmask)
            return ((mask, Fraction(sign)),) if sign else ()

        return self._bilinear(other, lambda a, b: a * b, table)

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return self.wedge(other)
        return NotImplemented

    def clifford_star(self, other: "Multivector") -> "Multivector":
        """Clifford star product: metric contractions on blades, commutative
        multiplication on coefficients."""
        self._check_metric(other)
        metric = self.metric
        return self._bilinear(
            other, lambda a, b: a * b, lambda l, r: _blade_star_table(metric, l, r)
        )

    def moyal_clifford_star(self, other: "Multivector") -> "Multivector":
        """Combined product: Moyal on coefficients, Clifford on blades."""
        self._check_metric(other)
        metric = self.metric
        return self._bilinear(
            other, moyal_star, lambda l, r: _blade_star_table(metric, l, r)
        )

    # -- misc ----------------------------------------------------------------

    def conjugate(self) -> "Multivector":
        return Multivector(self.metric, {m: c.conjugate() for m, c in self._terms.items()})

    def substitute_hbar(self, value) -> "Multivector":
        return Multivector(
            self.metric, {m: c.substitute_hbar(value) for m, c in self._terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.metric == other.metric and self._terms == other._terms

    def __hash__(self):
        return hash((self.metric, frozenset(self._terms.items())))

    def render(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for mask, coeff in self.items():
            if mask == 0:
                rendered.append(coeff.render())
                continue
            name = blade_name(mask)
            if coeff == PhasePoly.constant(1):
                rendered.append(name)
                continue
            text = coeff.render()
            if len(coeff._atoms()) > 1:
                text = f"({text})"
            rendered.append(f"{text}*{name}")
        return " + ".join(rendered)

    def __repr__(self):
        return self.render()


# -- spec-level operation surface ---------------------------------------------


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return a.wedge(b)


def clifford_star(a: Multivector, b: Multivector) -> Multivector:
    return a.clifford_star(b)


def moyal_clifford_star(a: Multivector, b: Multivector) -> Multivector:
    return a.moyal_clifford_star(b)


def grade_project(a: Multivector, k: int) -> Multivector:
    return a.grade_project(k)


def star_commutator(a: Multivector, b: Multivector) -> Multivector:
    """Clifford star commutator [a, b] = a*b - b*a."""
    return a.clifford_star(b) - b.clifford_star(a)


def star_anticommutator(a: Multivector, b: Multivector) -> Multivector:
    """Clifford star anticommutator {a, b} = a*b + b*a."""
    return a.clifford_star(b) + b.clifford_star(a)


def moyal_clifford_commutator(a: Multivector, b: Multivector) -> Multivector:
    return a.moyal_clifford_star(b) - b.moyal_clifford_star(a)


def moyal_clifford_anticommutator(a: Multivector, b: Multivector) -> Multivector:
    return a.moyal_clifford_star(b) + b.moyal_clifford_star(a)
