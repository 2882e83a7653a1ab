import random
from fractions import Fraction

import pytest

from phasestar import (
    HBAR,
    HbarScalar,
    I,
    P,
    PhasePoly,
    Q,
    diff,
    moyal_commutator,
    moyal_star,
    poisson_bracket,
    poly_mul,
)

from _oracles import moyal_series_oracle, weyl_star_matches
from _support import rand_poly


def test_poly_mul_basics():
    assert poly_mul(Q, P) == PhasePoly.monomial(1, 1)
    assert poly_mul(Q + P, Q - P) == Q**2 - P**2
    assert poly_mul(PhasePoly.zero(), Q**3 + P) == PhasePoly.zero()


def test_diff_basics():
    assert diff(Q**2, "q") == 2 * Q
    assert diff(Q * P, "p") == Q
    assert diff(Q, "p") == PhasePoly.zero()
    assert diff(Q**4, "q", 2) == 12 * Q**2
    assert diff(Q**2 * P, "q", 0) == Q**2 * P


def test_degree_bookkeeping():
    assert (Q**2 * P).degree("q") == 2
    assert (Q**2 * P).degree("p") == 1
    assert PhasePoly.zero().degree("q") == -1
    assert (Q**2 * P).total_degree() == 3
    assert (Q + HBAR).is_hbar_free() is False
    assert (Q + P).is_hbar_free() is True


# -- Moyal product: frozen examples were computed with the independent series
#    oracle below, which expands the exponential kernel order by order.


def test_moyal_star_canonical_pairs():
    expected_qp = Q * P + I * HBAR / 2
    assert moyal_series_oracle(Q, P) == expected_qp
    assert moyal_star(Q, P) == expected_qp

    expected_pq = Q * P - I * HBAR / 2
    assert moyal_series_oracle(P, Q) == expected_pq
    assert moyal_star(P, Q) == expected_pq

    assert moyal_star(Q, Q) == Q**2


def test_moyal_commutators():
    assert moyal_commutator(Q, P) == I * HBAR
    f = rand_poly(random.Random(3), max_degree=4)
    assert moyal_commutator(f, f) == PhasePoly.zero()
    assert moyal_commutator(Q**2, P) == 2 * I * HBAR * Q


def test_poisson_bracket_examples():
    assert poisson_bracket(Q, P) == PhasePoly.constant(1)
    assert poisson_bracket(Q**2, P) == 2 * Q
    f = rand_poly(random.Random(4), max_degree=4)
    assert poisson_bracket(f, f) == PhasePoly.zero()


def test_moyal_agrees_with_series_oracle():
    rng = random.Random(11)
    for _ in range(40):
        f = rand_poly(rng, max_degree=4, hbar_free=False)
        g = rand_poly(rng, max_degree=4, hbar_free=False)
        assert moyal_star(f, g) == moyal_series_oracle(f, g)


def test_moyal_agrees_with_operator_quantization():
    rng = random.Random(12)
    for _ in range(15):
        f = rand_poly(rng, max_degree=3, max_terms=2)
        g = rand_poly(rng, max_degree=3, max_terms=2)
        assert weyl_star_matches(f, g)


def test_moyal_associativity_random():
    rng = random.Random(13)
    for _ in range(60):
        f = rand_poly(rng, max_degree=4, hbar_free=False)
        g = rand_poly(rng, max_degree=4, hbar_free=False)
        h = rand_poly(rng, max_degree=4, hbar_free=False)
        assert moyal_star(moyal_star(f, g), h) == moyal_star(f, moyal_star(g, h))


def test_correspondence_limits():
    # hbar-free inputs so fixed hbar orders isolate the classical content
    rng = random.Random(14)
    for _ in range(50):
        f = rand_poly(rng, max_degree=4)
        g = rand_poly(rng, max_degree=4)
        star = moyal_star(f, g)
        assert star.hbar_part(0) == f * g
        bracket = moyal_commutator(f, g)
        assert bracket.hbar_part(1) == I.hbar_part(0) * poisson_bracket(f, g)


def test_conjugation_antiinvolution():
    rng = random.Random(15)
    for _ in range(30):
        f = rand_poly(rng, max_degree=3, hbar_free=False)
        g = rand_poly(rng, max_degree=3, hbar_free=False)
        assert moyal_star(f, g).conjugate() == moyal_star(g.conjugate(), f.conjugate())


def test_poisson_jacobi_identity():
    rng = random.Random(16)
    for _ in range(30):
        f = rand_poly(rng, max_degree=3)
        g = rand_poly(rng, max_degree=3)
        h = rand_poly(rng, max_degree=3)
        cyclic = (
            poisson_bracket(f, poisson_bracket(g, h))
            + poisson_bracket(g, poisson_bracket(h, f))
            + poisson_bracket(h, poisson_bracket(f, g))
        )
        assert cyclic == PhasePoly.zero()


def test_ring_axioms_random():
    rng = random.Random(17)
    for _ in range(40):
        f = rand_poly(rng, hbar_free=False)
        g = rand_poly(rng, hbar_free=False)
        h = rand_poly(rng, hbar_free=False)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f


def test_substitute_hbar():
    poly = Q * HBAR + P * HBAR**2
    at_half = poly.substitute_hbar(Fraction(1, 2))
    assert at_half == Q / 2 + P / 4
    assert poly.substitute_hbar(0) == PhasePoly.zero()
    with pytest.raises(ZeroDivisionError):
        (Q * PhasePoly.hbar(-1)).substitute_hbar(0)


def test_render_goldens():
    assert (Q * P + I * HBAR / 2).render() == "q*p + (1/2)*i*hbar"
    assert (Q**2 - P**2).render() == "q^2 + (-1)*p^2"
    assert ((Q + P) ** 2).render() == "q^2 + 2*q*p + p^2"
    assert PhasePoly.zero().render() == "0"
    assert PhasePoly.constant(1).render() == "1"
    assert (HBAR + PhasePoly.constant(1)).render() == "1 + hbar"
    coeff = HbarScalar.of(Fraction(1, 2))
    assert PhasePoly.monomial(0, 2, coeff).render() == "(1/2)*p^2"


def test_monomial_rejects_negative_exponents():
    with pytest.raises(ValueError):
        PhasePoly.monomial(-1, 0)
    with pytest.raises(ValueError):
        Q ** (-1)
