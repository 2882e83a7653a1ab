import random
from fractions import Fraction

import pytest

from phasestar import (
    GaussPoly,
    HbarScalar,
    P,
    PhasePoly,
    Q,
    Superpotential,
    bopp_star_left,
    bopp_star_right,
    check_stargenvalue,
    gauss_diff,
    laguerre,
    moyal_star,
    oscillator_hamiltonian,
    oscillator_wigner,
    partner_hamiltonians,
)

from _support import rand_poly

GROUND = GaussPoly(PhasePoly.constant(1), 1)  # exp(-(q^2+p^2)/hbar)
INV_HBAR = HbarScalar.hbar(-1)


def test_gauss_diff_examples():
    assert gauss_diff(GROUND, "q") == GROUND.scale(-2 * Q * INV_HBAR)
    shifted = GROUND.scale(Q)
    assert gauss_diff(shifted, "p") == GROUND.scale(-2 * Q * P * INV_HBAR)
    assert gauss_diff(shifted, "q", 0) == shifted


def test_gauss_diff_matches_polynomial_diff_at_alpha_zero():
    rng = random.Random(61)
    for _ in range(15):
        f = rand_poly(rng, max_degree=4, hbar_free=False)
        embedded = GaussPoly.from_poly(f)
        assert gauss_diff(embedded, "q").prefactor == f.diff("q")
        assert gauss_diff(embedded, "p", 2).prefactor == f.diff("p", 2)


def test_gauss_class_closed_under_diff():
    g = GROUND.scale(Q**2 + P)
    for var in ("q", "p"):
        out = gauss_diff(g, var, 3)
        assert out.alpha == g.alpha


def test_mixed_partials_commute():
    g = GROUND.scale(Q * P + 2)
    assert gauss_diff(gauss_diff(g, "q"), "p") == gauss_diff(gauss_diff(g, "p"), "q")


def test_bopp_unit_and_embedding():
    g = GROUND.scale(Q + 3)
    assert bopp_star_left(PhasePoly.constant(1), g) == g
    rng = random.Random(62)
    for _ in range(20):
        f = rand_poly(rng, max_degree=3, hbar_free=False)
        h = rand_poly(rng, max_degree=3, hbar_free=False)
        embedded = GaussPoly.from_poly(h)
        assert bopp_star_left(f, embedded).prefactor == moyal_star(f, h)
        assert bopp_star_right(embedded, f).prefactor == moyal_star(h, f)


def test_oscillator_ground_state_genvalue():
    h0 = oscillator_hamiltonian()
    result = bopp_star_left(h0, GROUND)
    assert result == GROUND.scale(HbarScalar.of(Fraction(1, 2), 1))


def test_oscillator_wigner_low_levels():
    w0 = oscillator_wigner(0)
    assert w0 == GaussPoly(PhasePoly.constant(2), 1)
    w1 = oscillator_wigner(1)
    expected_prefactor = -2 * (1 - 2 * (Q**2 + P**2) * INV_HBAR)
    assert w1 == GaussPoly(expected_prefactor, 1)


def test_laguerre_values():
    x = Q  # compose with a plain variable to freeze the coefficients
    assert laguerre(0, x) == PhasePoly.constant(1)
    assert laguerre(1, x) == 1 - Q
    assert laguerre(2, x) == 1 - 2 * Q + Q**2 / 2
    assert laguerre(3, x) == 1 - 3 * Q + 3 * Q**2 / 2 - Q**3 / 6


def test_oscillator_genvalue_ladder():
    h0 = oscillator_hamiltonian()
    for n in range(4):
        wn = oscillator_wigner(n)
        energy = HbarScalar.of(Fraction(2 * n + 1, 2), 1)
        assert check_stargenvalue(h0, wn, energy)


def test_partner_spectra_degeneracy():
    h1, h2 = partner_hamiltonians(Superpotential(Q))
    for n in range(4):
        wn = oscillator_wigner(n)
        assert check_stargenvalue(h1, wn, HbarScalar.of(n, 1))
        assert check_stargenvalue(h2, wn, HbarScalar.of(n + 1, 1))


def test_wrong_eigenvalue_is_rejected():
    h1, _ = partner_hamiltonians(Superpotential(Q))
    assert not check_stargenvalue(h1, oscillator_wigner(0), HbarScalar.one())


def test_right_star_gives_same_eigenvalue():
    # real Hamiltonian, real Wigner function: acting from the right agrees
    h1, h2 = partner_hamiltonians(Superpotential(Q))
    for n in range(3):
        wn = oscillator_wigner(n)
        left = bopp_star_left(h1, wn)
        right = bopp_star_right(wn, h1)
        assert left == right
        assert bopp_star_right(wn, h2) == wn.scale(HbarScalar.of(n + 1, 1))


def test_gausspoly_validation():
    with pytest.raises(ValueError):
        GaussPoly(PhasePoly.constant(1), Fraction(-1, 2))
    one_alpha = GaussPoly(PhasePoly.constant(1), 1)
    two_alpha = GaussPoly(PhasePoly.constant(1), 2)
    with pytest.raises(ValueError):
        one_alpha + two_alpha
    # adding zero is fine regardless of widths
    zero = GaussPoly(PhasePoly.zero(), 0)
    assert zero + one_alpha == one_alpha
    with pytest.raises(ValueError):
        one_alpha.substitute_hbar(1)


def test_gausspoly_rendering():
    assert GROUND.scale(2).render() == "(2) * exp(-(1)*(q^2+p^2)/hbar)"
    assert GaussPoly.from_poly(Q + P).render() == "q + p"
