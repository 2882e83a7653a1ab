"""Symplectic structure on flat phase space.

Holds the closed two-form, its inverse bivector, the musical maps between
vectors and one-forms, the symplectic scalar product, the nabla operator,
Hamiltonian vector fields and the geometric form of the Poisson bracket.
Matrix machinery works for any even dimension; the calculus operators
(nabla and friends) live on the two-dimensional q, p phase space.
"""

from __future__ import annotations

from fractions import Fraction

from .multivector import Metric, Multivector
from .phasepoly import PhasePoly


def _mat_det(rows: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(rows)
    work = [list(row) for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            factor = work[r][col] * inv
            if factor:
                for c in range(col, n):
                    work[r][c] -= factor * work[col][c]
    return det


def _mat_inverse(rows: tuple[tuple[Fraction, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(rows)
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def _frozen(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


class SymplecticForm:
    """Antisymmetric nondegenerate rational matrix; the closed two-form."""

    __slots__ = ("omega",)

    def __init__(self, rows):
        omega = _frozen(rows)
        n = len(omega)
        if n % 2:
            raise ValueError("phase space dimension must be even")
        if any(len(row) != n for row in omega):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if omega[i][j] != -omega[j][i]:
                    raise ValueError("two-form must be antisymmetric")
        if not _mat_det(omega):
            raise ValueError("two-form must be nondegenerate")
        object.__setattr__(self, "omega", omega)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticForm is immutable")

    @classmethod
    def canonical(cls, n: int = 2) -> "SymplecticForm":
        """Block form with Omega_{2k,2k+1} = +1 (so Omega_12 = 1 in 2D)."""
        rows = [[0] * n for _ in range(n)]
        for k in range(0, n, 2):
            rows[k][k + 1] = 1
            rows[k + 1][k] = -1
        return cls(rows)

    @property
    def dim(self) -> int:
        return len(self.omega)

    def as_bivector(self, metric: Metric | None = None) -> Multivector:
        """(1/2) Omega_ij zeta^i zeta^j as a grade-2 multivector."""
        metric = metric or Metric.euclidean(self.dim)
        if metric.dim != self.dim:
            raise ValueError("metric dimension mismatch")
        terms = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.omega[i][j]:
                    terms[(1 << i) | (1 << j)] = PhasePoly.constant(
                        Fraction(self.omega[i][j])
                    )
        return Multivector(metric, terms)

    def __eq__(self, other):
        if not isinstance(other, SymplecticForm):
            return NotImplemented
        return self.omega == other.omega

    def __repr__(self):
        return f"SymplecticForm({[list(map(str, row)) for row in self.omega]})"


class PoissonBivector:
    """Inverse structure J = (Omega^-1)^T mapping one-forms back to vectors."""

    __slots__ = ("j",)

    def __init__(self, rows):
        object.__setattr__(self, "j", _frozen(rows))

    def __setattr__(self, name, value):
        raise AttributeError("PoissonBivector is immutable")

    @classmethod
    def from_symplectic(cls, form: SymplecticForm) -> "PoissonBivector":
        inverse = _mat_inverse(form.omega)
        n = len(inverse)
        transposed = tuple(tuple(inverse[j][i] for j in range(n)) for i in range(n))
        return cls(transposed)

    @property
    def dim(self) -> int:
        return len(self.j)

    def as_bivector(self, metric: Metric | None = None) -> Multivector:
        metric = metric or Metric.euclidean(self.dim)
        if metric.dim != self.dim:
            raise ValueError("metric dimension mismatch")
        terms = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.j[i][j]:
                    terms[(1 << i) | (1 << j)] = PhasePoly.constant(Fraction(self.j[i][j]))
        return Multivector(metric, terms)

    def __eq__(self, other):
        if not isinstance(other, PoissonBivector):
            return NotImplemented
        return self.j == other.j

    def __repr__(self):
        return f"PoissonBivector({[list(map(str, row)) for row in self.j]})"


def flat(vector: Multivector, form: SymplecticForm) -> Multivector:
    """Lower a vector to a one-form: (a_flat)_j = a^i Omega_ij."""
    components = vector.vector_components()
    if len(components) != form.dim:
        raise ValueError("dimension mismatch")
    lowered = []
    for j in range(form.dim):
        total = PhasePoly.zero()
        for i in range(form.dim):
            if form.omega[i][j]:
                total = total + components[i] * Fraction(form.omega[i][j])
        lowered.append(total)
    return Multivector.from_vector(vector.metric, lowered)


def natural(one_form: Multivector, bivector: PoissonBivector) -> Multivector:
    """Raise a one-form to a vector: (w_nat)^i = J^{ij} w_j; inverse of flat."""
    components = one_form.vector_components()
    if len(components) != bivector.dim:
        raise ValueError("dimension mismatch")
    raised = []
    for i in range(bivector.dim):
        total = PhasePoly.zero()
        for j in range(bivector.dim):
            if bivector.j[i][j]:
                total = total + components[j] * Fraction(bivector.j[i][j])
        raised.append(total)
    return Multivector.from_vector(one_form.metric, raised)


def symplectic_dot(a: Multivector, b: Multivector, form: SymplecticForm) -> PhasePoly:
    """Symplectic scalar product a^i Omega_ij b^j (antisymmetric)."""
    ac = a.vector_components()
    bc = b.vector_components()
    if len(ac) != form.dim or len(bc) != form.dim:
        raise ValueError("dimension mismatch")
    total = PhasePoly.zero()
    for i in range(form.dim):
        for j in range(form.dim):
            if form.omega[i][j]:
                total = total + ac[i] * bc[j] * Fraction(form.omega[i][j])
    return total


def nabla(f: PhasePoly, metric: Metric | None = None) -> Multivector:
    """Phase-space gradient vector (df/dq) e1 + (df/dp) e2."""
    metric = metric or Metric.euclidean(2)
    if metric.dim != 2:
        raise ValueError("nabla is defined on the two-dimensional q, p phase space")
    return Multivector.from_vector(metric, [f.diff("q"), f.diff("p")])


def hamiltonian_vector_field(
    h: PhasePoly, form: SymplecticForm | None = None, metric: Metric | None = None
) -> Multivector:
    """Vector field of Hamilton's equations: raise the gradient with J.

    Components are (qdot, pdot); for h = (p^2 + q^2)/2 this gives p e1 - q e2.
    """
    form = form or SymplecticForm.canonical(2)
    return natural(nabla(h, metric), PoissonBivector.from_symplectic(form))


def poisson_bracket_geometric(
    f: PhasePoly, g: PhasePoly, form: SymplecticForm | None = None
) -> PhasePoly:
    """Poisson bracket through the J contraction of the two gradients.

    Agrees exactly with phasepoly.poisson_bracket for the canonical form.
    """
    form = form or SymplecticForm.canonical(2)
    if form.dim != 2:
        raise ValueError("bracket calculus is defined on the q, p phase space")
    bivector = PoissonBivector.from_symplectic(form)
    partials_f = [f.diff("q"), f.diff("p")]
    partials_g = [g.diff("q"), g.diff("p")]
    total = PhasePoly.zero()
    for a in range(2):
        for b in range(2):
            if bivector.j[a][b]:
                total = total + partials_f[a] * partials_g[b] * Fraction(bivector.j[a][b])
    return total
