"""Supersymmetric factorization of phase-space Hamiltonians.

Given a polynomial superpotential W(q), the vector w = W e1 + p e2 squares
classically to the Hamiltonian (p^2 + W^2)/2.  Replacing the coefficient
product with the Moyal product turns the square into a multivector with a
bivector part:

    H_S = (1/2) w *MC w
        = (1/2)(p^2 + W^2) + (i*hbar/2) W'(q) e1e2
        = H1 pi+ + H2 pi-,   H1/H2 = (p^2 + W^2 -/+ hbar W')/2,

where pi+- = (1 -/+ i e1e2)/2 project onto the two partner sectors.  The
supercharges Q+- assemble from the holomorphic combinations of (W, p) and
(e1, e2); their star squares and commutators generate the whole algebra.

Scalar coefficients live in the Gaussian-rational hbar ring, which has no
sqrt(2).  The holomorphic frame therefore stores sqrt(2)-scaled vectors;
every identity of interest is quadratic in them, so only the exact factor
1/2 ever appears in results.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .multivector import (
    Metric,
    Multivector,
    moyal_clifford_anticommutator,
    moyal_clifford_commutator,
    star_anticommutator,
    star_commutator,
)
from .phasepoly import HBAR, I, P, PhasePoly
from .report import Report


class SusyVerificationError(ValueError):
    """Raised when a constructed system fails its own identity suite."""


class Superpotential:
    """Polynomial in q alone, with hbar-free coefficients."""

    __slots__ = ("poly",)

    def __init__(self, poly: PhasePoly):
        poly = PhasePoly.constant(poly)
        if poly.depends_on("p"):
            raise ValueError("superpotential must depend on q only")
        if not poly.is_hbar_free():
            raise ValueError("superpotential coefficients must be hbar-free")
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("Superpotential is immutable")

    def derivative(self) -> PhasePoly:
        return self.poly.diff("q")

    def __eq__(self, other):
        if not isinstance(other, Superpotential):
            return NotImplemented
        return self.poly == other.poly

    def __repr__(self):
        return self.poly.render()


def _plane() -> Metric:
    return Metric.euclidean(2)


def projectors(metric: Metric | None = None) -> tuple[Multivector, Multivector]:
    """Projectors pi+- = (1 -/+ i e1e2)/2 onto the partner sectors.

    They are the eigen-multivectors of -i e1e2: (-i e1e2) * pi+- = +-pi+-.
    """
    metric = metric or _plane()
    half = PhasePoly.constant(1) / 2
    half_i = I / 2
    e12 = 0b11
    pi_plus = Multivector(metric, {0: half, e12: -half_i})
    pi_minus = Multivector(metric, {0: half, e12: half_i})
    return pi_plus, pi_minus


def build_w(w: Superpotential, metric: Metric | None = None) -> Multivector:
    """Grade-1 vector W(q) e1 + p e2."""
    metric = metric or _plane()
    return Multivector.from_vector(metric, [w.poly, P])


def classical_hamiltonian(w: Superpotential) -> PhasePoly:
    """Commutative square of the vector: (p^2 + W^2)/2."""
    return (P * P + w.poly * w.poly) / 2


def susy_hamiltonian(w: Superpotential, metric: Metric | None = None) -> Multivector:
    """(1/2) w *MC w, evaluated by the combined star product engine."""
    vec = build_w(w, metric)
    return vec.moyal_clifford_star(vec) / 2


def susy_hamiltonian_closed_form(
    w: Superpotential, metric: Metric | None = None
) -> Multivector:
    """Scalar part (p^2 + W^2)/2 plus the bivector term (i*hbar/2) W' e1e2."""
    metric = metric or _plane()
    scalar = classical_hamiltonian(w)
    bivector = I * HBAR * w.derivative() / 2
    terms = {}
    if scalar:
        terms[0] = scalar
    if bivector:
        terms[0b11] = bivector
    return Multivector(metric, terms)


def partner_hamiltonians(w: Superpotential) -> tuple[PhasePoly, PhasePoly]:
    """Partner pair H1/H2 = (p^2 + W^2 -/+ hbar W')/2."""
    base = P * P + w.poly * w.poly
    shift = HBAR * w.derivative()
    return (base - shift) / 2, (base + shift) / 2


@dataclass(frozen=True)
class HolomorphicFrame:
    """sqrt(2)-scaled holomorphic data for one superpotential.

    f_sqrt2 = e1 + i e2 and b_sqrt2 = W + i p are sqrt(2) times the
    normalized holomorphic vector and coefficient; quadratic combinations
    carry an exact factor 1/2 instead of irrational normalizations.
    """

    superpotential: Superpotential
    metric: Metric
    f_sqrt2: Multivector
    f_bar_sqrt2: Multivector
    b_sqrt2: PhasePoly
    b_bar_sqrt2: PhasePoly

    @classmethod
    def build(cls, w: Superpotential, metric: Metric | None = None) -> "HolomorphicFrame":
        metric = metric or _plane()
        e1 = Multivector.generator(metric, 1)
        e2 = Multivector.generator(metric, 2)
        return cls(
            superpotential=w,
            metric=metric,
            f_sqrt2=e1 + e2.scale(I),
            f_bar_sqrt2=e1 - e2.scale(I),
            b_sqrt2=w.poly + I * P,
            b_bar_sqrt2=w.poly - I * P,
        )

    def verify(self) -> Report:
        """Nilpotency, pairing and factorization checks of the frame."""
        report = Report(title="holomorphic frame")
        zero = Multivector.zero(self.metric)
        two = Multivector.scalar(self.metric, 2)
        report.add("f * f = 0", self.f_sqrt2.clifford_star(self.f_sqrt2) / 2, zero)
        report.add("fbar * fbar = 0", self.f_bar_sqrt2.clifford_star(self.f_bar_sqrt2) / 2, zero)
        report.add(
            "{f, fbar} = 2",
            star_anticommutator(self.f_sqrt2, self.f_bar_sqrt2) / 2,
            two,
        )
        report.add(
            "B * Bbar = (p^2 + W^2)/2",
            self.b_sqrt2 * self.b_bar_sqrt2 / 2,
            classical_hamiltonian(self.superpotential),
        )
        return report


def ladder_check(frame: HolomorphicFrame) -> Report:
    """Raising/lowering action of the holomorphic vectors on the projectors.

    fbar * pi+ * f = 2 pi- and f * pi- * fbar = 2 pi+; the six remaining
    sandwich combinations vanish.
    """
    metric = frame.metric
    pi_plus, pi_minus = projectors(metric)
    zero = Multivector.zero(metric)

    def sandwich(left: Multivector, middle: Multivector, right: Multivector) -> Multivector:
        # the two 1/sqrt(2) normalizations combine into one exact 1/2
        return left.clifford_star(middle).clifford_star(right) / 2

    f = frame.f_sqrt2
    fbar = frame.f_bar_sqrt2
    report = Report(title="ladder relations")
    report.add("fbar * pi+ * f = 2*pi-", sandwich(fbar, pi_plus, f), pi_minus.scale(2))
    report.add("f * pi- * fbar = 2*pi+", sandwich(f, pi_minus, fbar), pi_plus.scale(2))
    report.add("f * pi+ * fbar = 0", sandwich(f, pi_plus, fbar), zero)
    report.add("fbar * pi- * f = 0", sandwich(fbar, pi_minus, f), zero)
    report.add("f * pi+ * f = 0", sandwich(f, pi_plus, f), zero)
    report.add("f * pi- * f = 0", sandwich(f, pi_minus, f), zero)
    report.add("fbar * pi+ * fbar = 0", sandwich(fbar, pi_plus, fbar), zero)
    report.add("fbar * pi- * fbar = 0", sandwich(fbar, pi_minus, fbar), zero)
    return report


def supercharges(
    w: Superpotential, metric: Metric | None = None
) -> tuple[Multivector, Multivector, Multivector, Multivector]:
    """(Q+, Q-, Q1, Q2) with Q+ = B fbar, Q- = Bbar f, Q1 = Q+ + Q-,
    Q2 = -i (Q+ - Q-).  All are grade-1 with rational-in-(i, hbar)
    coefficients: the two sqrt(2) normalizations cancel into 1/2."""
    frame = HolomorphicFrame.build(w, metric)
    q_plus = frame.f_bar_sqrt2.scale(frame.b_sqrt2) / 2
    q_minus = frame.f_sqrt2.scale(frame.b_bar_sqrt2) / 2
    q1 = q_plus + q_minus
    q2 = (q_plus - q_minus).scale(-1 * I)
    return q_plus, q_minus, q1, q2


@dataclass(frozen=True)
class SusySystem:
    """Complete factorized system for one superpotential.

    Built through :meth:`build`, which verifies the whole identity suite and
    refuses to return a system that fails any of it.
    """

    superpotential: Superpotential
    metric: Metric
    w: Multivector
    h_s: Multivector
    h1: PhasePoly
    h2: PhasePoly
    q_plus: Multivector
    q_minus: Multivector
    q1: Multivector
    q2: Multivector
    pi_plus: Multivector
    pi_minus: Multivector

    @classmethod
    def assemble(cls, w, metric: Metric | None = None) -> "SusySystem":
        """Construct all fields without running the identity suite."""
        if not isinstance(w, Superpotential):
            w = Superpotential(w)
        metric = metric or _plane()
        h1, h2 = partner_hamiltonians(w)
        pi_plus, pi_minus = projectors(metric)
        q_plus, q_minus, q1, q2 = supercharges(w, metric)
        return cls(
            superpotential=w,
            metric=metric,
            w=build_w(w, metric),
            h_s=susy_hamiltonian(w, metric),
            h1=h1,
            h2=h2,
            q_plus=q_plus,
            q_minus=q_minus,
            q1=q1,
            q2=q2,
            pi_plus=pi_plus,
            pi_minus=pi_minus,
        )

    @classmethod
    def build(cls, w, metric: Metric | None = None) -> "SusySystem":
        system = cls.assemble(w, metric)
        verification = verify_susy_algebra(system)
        if not verification.all_passed:
            failure = verification.first_failure
            raise SusyVerificationError(
                f"identity '{failure.name}' failed: lhs={failure.lhs} rhs={failure.rhs}"
            )
        return system

    def with_replacements(self, **changes) -> "SusySystem":
        """Unverified copy with selected fields swapped (for fault injection)."""
        return replace(self, **changes)


def verify_susy_algebra(system: SusySystem) -> Report:
    """Exact verification of the factorization and supercharge algebra.

    Star products below are Moyal on coefficients, Clifford on blades.
    Note the exact normalization: with w = Q+ + Q- the mixed products give
    Q- * Q+ = 2 H1 pi+ and Q+ * Q- = 2 H2 pi-, which is what makes
    H_S = (1/2){Q+, Q-} = H1 pi+ + H2 pi- and H_S = (1/2) Q1 * Q1 hold
    simultaneously.
    """
    metric = system.metric
    zero = Multivector.zero(metric)
    mc = lambda a, b: a.moyal_clifford_star(b)

    report = Report(
        title=f"susy algebra for W = {system.superpotential!r}",
        summary={
            "W": repr(system.superpotential),
            "w": repr(system.w),
            "H_S": repr(system.h_s),
            "H1": system.h1.render(),
            "H2": system.h2.render(),
            "Q+": repr(system.q_plus),
            "Q-": repr(system.q_minus),
        },
    )

    report.add(
        "H_S = (1/2)*w*w closed form",
        system.h_s,
        susy_hamiltonian_closed_form(system.superpotential, metric),
    )
    report.add(
        "H_S = H1*pi+ + H2*pi-",
        system.h_s,
        system.pi_plus.scale(system.h1) + system.pi_minus.scale(system.h2),
    )
    report.add("Q+ * Q+ = 0", mc(system.q_plus, system.q_plus), zero)
    report.add("Q- * Q- = 0", mc(system.q_minus, system.q_minus), zero)
    report.add(
        "Q- * Q+ = 2*H1*pi+",
        mc(system.q_minus, system.q_plus),
        system.pi_plus.scale(system.h1 * 2),
    )
    report.add(
        "Q+ * Q- = 2*H2*pi-",
        mc(system.q_plus, system.q_minus),
        system.pi_minus.scale(system.h2 * 2),
    )
    report.add(
        "H_S = (1/2)*{Q+, Q-}",
        moyal_clifford_anticommutator(system.q_plus, system.q_minus) / 2,
        system.h_s,
    )
    report.add(
        "[Q+, H_S] = 0", moyal_clifford_commutator(system.q_plus, system.h_s), zero
    )
    report.add(
        "[Q-, H_S] = 0", moyal_clifford_commutator(system.q_minus, system.h_s), zero
    )
    report.add("H_S = (1/2)*Q1*Q1", mc(system.q1, system.q1) / 2, system.h_s)
    report.add("H_S = (1/2)*Q2*Q2", mc(system.q2, system.q2) / 2, system.h_s)
    report.add(
        "{Q1, Q2} = 0", moyal_clifford_anticommutator(system.q1, system.q2), zero
    )
    report.add("Q1 = w", system.q1, system.w)
    return report


def projector_check(metric: Metric | None = None) -> Report:
    """Idempotency, orthogonality, eigen-relations and completeness of pi+-."""
    metric = metric or _plane()
    pi_plus, pi_minus = projectors(metric)
    zero = Multivector.zero(metric)
    one = Multivector.scalar(metric, 1)
    spin = Multivector(metric, {0b11: -I})  # -i e1e2

    report = Report(title="projector relations")
    report.add("pi+ * pi+ = pi+", pi_plus.clifford_star(pi_plus), pi_plus)
    report.add("pi- * pi- = pi-", pi_minus.clifford_star(pi_minus), pi_minus)
    report.add("pi+ * pi- = 0", pi_plus.clifford_star(pi_minus), zero)
    report.add("pi- * pi+ = 0", pi_minus.clifford_star(pi_plus), zero)
    report.add("(-i*e1e2) * pi+ = pi+", spin.clifford_star(pi_plus), pi_plus)
    report.add("(-i*e1e2) * pi- = -pi-", spin.clifford_star(pi_minus), -pi_minus)
    report.add("pi+ + pi- = 1", pi_plus + pi_minus, one)
    report.add(
        "<pi+>_0 = 1/2", pi_plus.grade_project(0), Multivector.scalar(metric, 1) / 2
    )
    report.add(
        "<pi->_0 = 1/2", pi_minus.grade_project(0), Multivector.scalar(metric, 1) / 2
    )
    return report


def verify_pauli_algebra(metric: Metric | None = None) -> Report:
    """Commutator/anticommutator table of e1, e2, -i e1e2 under the Clifford
    star product: the three elements realize the Pauli algebra.

    Nine nontrivial relations plus nine vanishing ones are checked.
    """
    metric = metric or _plane()
    if metric != Metric.euclidean(2):
        raise ValueError("the Pauli table needs the 2D euclidean metric")
    e1 = Multivector.generator(metric, 1)
    e2 = Multivector.generator(metric, 2)
    spin = Multivector(metric, {0b11: -I})  # -i e1e2
    e1e2 = e1.wedge(e2)
    zero = Multivector.zero(metric)
    two = Multivector.scalar(metric, 2)

    report = Report(title="Pauli algebra")
    # nontrivial commutators
    report.add("[e1, e2] = 2*e1e2", star_commutator(e1, e2), e1e2.scale(2))
    report.add("[e2, e1] = -2*e1e2", star_commutator(e2, e1), e1e2.scale(-2))
    report.add("[e1, -i*e1e2] = -2i*e2", star_commutator(e1, spin), e2.scale(-2 * I))
    report.add("[-i*e1e2, e1] = 2i*e2", star_commutator(spin, e1), e2.scale(2 * I))
    report.add("[e2, -i*e1e2] = 2i*e1", star_commutator(e2, spin), e1.scale(2 * I))
    report.add("[-i*e1e2, e2] = -2i*e1", star_commutator(spin, e2), e1.scale(-2 * I))
    # nontrivial anticommutators
    report.add("{e1, e1} = 2", star_anticommutator(e1, e1), two)
    report.add("{e2, e2} = 2", star_anticommutator(e2, e2), two)
    report.add("{-i*e1e2, -i*e1e2} = 2", star_anticommutator(spin, spin), two)
    # everything else vanishes
    report.add("[e1, e1] = 0", star_commutator(e1, e1), zero)
    report.add("[e2, e2] = 0", star_commutator(e2, e2), zero)
    report.add("[-i*e1e2, -i*e1e2] = 0", star_commutator(spin, spin), zero)
    report.add("{e1, e2} = 0", star_anticommutator(e1, e2), zero)
    report.add("{e2, e1} = 0", star_anticommutator(e2, e1), zero)
    report.add("{e1, -i*e1e2} = 0", star_anticommutator(e1, spin), zero)
    report.add("{-i*e1e2, e1} = 0", star_anticommutator(spin, e1), zero)
    report.add("{e2, -i*e1e2} = 0", star_anticommutator(e2, spin), zero)
    report.add("{-i*e1e2, e2} = 0", star_anticommutator(spin, e2), zero)
    return report
