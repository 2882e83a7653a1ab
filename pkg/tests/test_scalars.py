import random
from fractions import Fraction

import pytest

from phasestar import GaussianRational, HbarScalar

from _support import rand_gauss, rand_hbar_scalar


def test_gaussian_arithmetic_is_exact():
    third = GaussianRational(Fraction(1, 3))
    assert third + third + third == 1
    assert GaussianRational(1, 2) * GaussianRational(3, -1) == GaussianRational(5, 5)
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert i**4 == 1


def test_gaussian_division_and_conjugate():
    z = GaussianRational(1, 2)
    assert z / z == 1
    assert (GaussianRational(5) / GaussianRational(1, 2)) * GaussianRational(1, 2) == 5
    assert z.conjugate() == GaussianRational(1, -2)
    assert (z * z.conjugate()).is_real()
    with pytest.raises(ZeroDivisionError):
        z / GaussianRational(0)


def test_gaussian_render():
    assert GaussianRational(2).render() == "2"
    assert GaussianRational(Fraction(1, 2)).render() == "(1/2)"
    assert GaussianRational(-2).render() == "(-2)"
    assert GaussianRational(0, 1).render() == "i"
    assert GaussianRational(0, Fraction(-1, 2)).render() == "(-1/2)*i"
    assert GaussianRational(1, 2).render() == "(1 + 2*i)"
    assert GaussianRational(Fraction(1, 2), 1).render() == "(1/2 + i)"


def test_hbar_scalar_canonical_form():
    value = HbarScalar({0: GaussianRational(1), 2: GaussianRational(0)})
    assert value.items() == [(0, GaussianRational(1))]
    assert (value - value).is_zero()
    assert not (HbarScalar.hbar() - HbarScalar.hbar())


def test_hbar_scalar_laurent_multiplication():
    inv = HbarScalar.hbar(-1)
    assert inv * HbarScalar.hbar() == HbarScalar.one()
    sq = HbarScalar.hbar(2)
    assert HbarScalar.hbar() * HbarScalar.hbar() == sq
    assert (inv * inv).min_power() == -2


def test_hbar_scalar_substitute():
    value = HbarScalar.of(3, 2) + HbarScalar.of(Fraction(1, 2), 0)
    assert value.substitute(Fraction(1, 3)) == GaussianRational(Fraction(1, 3) + Fraction(1, 2))
    laurent = HbarScalar.of(1, -1)
    assert laurent.substitute(Fraction(1, 4)) == GaussianRational(4)
    with pytest.raises(ZeroDivisionError):
        laurent.substitute(0)


def test_hbar_scalar_conjugate_fixes_hbar():
    value = HbarScalar.of(GaussianRational(1, 1), 1)
    assert value.conjugate() == HbarScalar.of(GaussianRational(1, -1), 1)
    assert value.conjugate().conjugate() == value


def test_hbar_scalar_render():
    assert HbarScalar.zero().render() == "0"
    assert HbarScalar.one().render() == "1"
    assert HbarScalar.of(2, 1).render() == "2*hbar"
    assert HbarScalar.of(GaussianRational(0, Fraction(1, 2)), 1).render() == "(1/2)*i*hbar"
    assert HbarScalar.of(1, -1).render() == "hbar^-1"
    assert (HbarScalar.one() + HbarScalar.of(1, 1)).render() == "1 + hbar"


def test_ring_axioms_random():
    rng = random.Random(101)
    for _ in range(60):
        a = rand_hbar_scalar(rng, min_power=-2, max_power=3)
        b = rand_hbar_scalar(rng, min_power=-2, max_power=3)
        c = rand_hbar_scalar(rng, min_power=-2, max_power=3)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_gaussian_random_field_axioms():
    rng = random.Random(102)
    for _ in range(60):
        a = rand_gauss(rng)
        b = rand_gauss(rng, allow_zero=False)
        assert (a / b) * b == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
