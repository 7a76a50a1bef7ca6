from fractions import Fraction

import pytest

from overrings import witnesses as w
from overrings.witnesses import ONE, X, Y, Z, MultiPoly, QuadraticNumber


def test_small_powers():
    p2, p3 = w.power_one_plus_sqrt2(2), w.power_one_plus_sqrt2(3)
    assert (p2.a, p2.b) == (3, 2)
    assert (p3.a, p3.b) == (7, 5)


def test_norm_is_multiplicative():
    for n in range(1, 12):
        assert w.power_one_plus_sqrt2(n).norm() == (-1) ** n


def test_inverse_and_negative_powers():
    u = QuadraticNumber(1, 1)
    assert u * u.inverse() == QuadraticNumber(1)
    assert u ** -2 == QuadraticNumber(3, -2)
    with pytest.raises(ZeroDivisionError):
        QuadraticNumber(0).inverse()
    with pytest.raises(ValueError):
        w.power_one_plus_sqrt2(0)


def test_no_rational_power():
    assert w.no_rational_power(50)
    assert QuadraticNumber(Fraction(1, 2), 0).is_rational()


def test_poly_arithmetic():
    assert (X + Y) * (X - Y) == X * X - Y * Y
    assert (X - X).is_zero()
    with pytest.raises(ValueError):
        MultiPoly({(-1, 0, 0): 1})
    assert repr(ONE) == "1"


def test_substitution():
    assert (X * Z).substitute_laurent(w.SUBSTITUTION) == {}
    assert (Y * Z).substitute_laurent(w.SUBSTITUTION) == {0: 1}
    assert w.generator_image(("inv", X + Y * Z)) == {0: 1}
    with pytest.raises(ZeroDivisionError):
        w.generator_image(("inv", Y + ONE))


def test_flatness_and_control():
    assert w.verify_exsimple_flatness().verified
    assert not w.verify_exsimple_flatness(X + MultiPoly.constant(2) * Y * Z).verified


def test_separation_and_control():
    assert w.verify_exsimple_Z_not_in_A().verified
    extended = dict(w.A_GENERATORS, Z=Z)
    result = w.verify_exsimple_Z_not_in_A(extended)
    assert not result.verified and "Z" in result.detail


def test_table():
    assert [v.verified for v in w.verification_table()] == [True, True, True]
