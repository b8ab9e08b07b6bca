import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from tesstopo.scalar import Scalar, as_scalar, PI2, ZERO, ONE


coeff_lists = st.lists(st.integers(-6, 6), min_size=1, max_size=3)
nonzero_lists = coeff_lists.filter(lambda c: any(c))
scalars = st.builds(Scalar, coeff_lists, nonzero_lists)
nonzero_scalars = st.builds(Scalar, nonzero_lists, nonzero_lists)


def test_canonical_reduction():
    assert Scalar((2, 4), (6,)) == Scalar((1, 2), (3,))
    # common polynomial factor pi^2 cancels
    assert Scalar((0, 2), (0, 4)) == Scalar(1, 2)
    # sign lives in the numerator
    s = Scalar((1,), (-2,))
    assert s.num_coeffs == (-1,) and s.den_coeffs == (2,)
    assert Scalar((0, 3), (0, 0, 3)) == 1 / PI2


def test_common_linear_factor_cancels():
    # (1+x)(2+x) / (1+x)(5) reduces to (2+x)/5
    num = Scalar._raw((2, 3, 1), (5, 5))
    assert num.num_coeffs == (2, 1)
    assert num.den_coeffs == (5,)


def test_rational_fast_paths():
    s = Scalar(Fraction(36, 7))
    assert s.is_rational
    assert s.as_fraction() == Fraction(36, 7)
    assert s.sign() == 1
    assert (-s).sign() == -1
    assert ZERO.sign() == 0
    with pytest.raises(ValueError):
        PI2.as_fraction()


def test_pi2_brackets():
    assert Scalar(9) < PI2 < Scalar(10)
    assert PI2 > Fraction(986, 100)
    assert PI2 < Fraction(987, 100)


def test_voronoi_plate_profile_value():
    # 144*pi^2/(35+24*pi^2) is a touch above 5.22
    v = Scalar((0, 144), (35, 24))
    assert Scalar(5) < v < Scalar(6)
    assert v > Fraction(522, 100)
    assert v < Fraction(523, 100)


@given(scalars, scalars)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(scalars, scalars, scalars)
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(scalars, scalars)
def test_sub_inverts_add(a, b):
    assert (a + b) - b == a


@given(scalars, nonzero_scalars)
def test_div_inverts_mul(a, b):
    assert (a / b) * b == a


@given(scalars)
def test_neg_and_abs(a):
    assert a + (-a) == ZERO
    assert abs(a).sign() in (0, 1)
    assert abs(a) == (a if a.sign() >= 0 else -a)


@given(scalars, scalars)
def test_order_consistent_with_difference(a, b):
    d = (a - b).sign()
    assert (a < b) == (d < 0)
    assert (a == b) == (d == 0)
    assert (a > b) == (d > 0)


@given(scalars)
def test_render_parse_round_trip(a):
    assert Scalar.parse(a.render()) == a


@given(scalars)
def test_json_round_trip(a):
    assert Scalar.from_json(a.to_json()) == a


def test_parse_forms():
    assert Scalar.parse("36/7") == Scalar(Fraction(36, 7))
    assert Scalar.parse("-5") == Scalar(-5)
    assert Scalar.parse("3.25") == Scalar(Fraction(13, 4))
    assert Scalar.parse("1.5e-3") == Scalar(Fraction(3, 2000))
    assert Scalar.parse("(70+48*pi^2)/35") == Scalar((70, 48), (35,))
    assert Scalar.parse("144*pi^2/(35+24*pi^2)") == Scalar((0, 144), (35, 24))
    assert Scalar.parse("pi^2") == PI2
    assert Scalar.parse("pi^2/6") == PI2 / 6
    assert Scalar.parse("(2+pi^4)/(1+pi^2)") == Scalar((2, 0, 1), (1, 1))
    assert Scalar.parse(" 1 + 2*pi^2 ") == Scalar((1, 2))


def test_parse_rejects_garbage():
    for bad in ["", "1//2", "(1", "1)", "pi^3", "2*", "x+1", "--3"]:
        with pytest.raises(ValueError):
            Scalar.parse(bad)


def test_float_rejection():
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        Scalar([1, 0.5])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        Scalar((1,), (0,))


def test_pow():
    assert PI2**2 == Scalar((0, 0, 1))
    assert PI2**0 == ONE
    assert (Scalar(2) ** -2) == Scalar(Fraction(1, 4))


def test_json_shapes():
    assert Scalar(Fraction(3, 4)).to_json() == {"num": 3, "den": 4}
    assert Scalar((35, 24), (7,)).to_json() == {"a": 35, "b": 24, "c": 7, "d": 0}
    quad = Scalar((1, 0, 1), (3,))
    assert quad.to_json() == {"num": [1, 0, 1], "den": [3]}
    assert Scalar.from_json({"a": 0, "b": 144, "c": 35, "d": 24}) == Scalar((0, 144), (35, 24))


def test_render_shapes():
    assert Scalar(Fraction(36, 7)).render() == "36/7"
    assert Scalar((70, 48), (35,)).render() == "(70+48*pi^2)/35"
    assert Scalar((0, 144), (35, 24)).render() == "144*pi^2/(35+24*pi^2)"
    assert PI2.render() == "pi^2"
    assert (-PI2).render() == "-pi^2"
    assert (PI2 * PI2).render() == "pi^4"
    assert ZERO.render() == "0"


def test_evaluate_matches_mpmath():
    v = Scalar((0, 144), (35, 24))
    got = v.evaluate(30)
    with mpmath.workdps(50):
        ref = 144 * mpmath.pi**2 / (35 + 24 * mpmath.pi**2)
        assert abs(mpmath.mpf(got) - ref) < mpmath.mpf(10) ** -28


def test_evaluate_refines_consistently():
    v = Scalar((70, 48), (35,))
    a20 = float(mpmath.mpf(v.evaluate(20)))
    a40 = float(mpmath.mpf(v.evaluate(40)))
    assert math.isclose(a20, a40, rel_tol=1e-15)


def test_hash_matches_equality():
    assert hash(Scalar(3)) == hash(3)
    assert hash(Scalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    d = {Scalar((0, 144), (35, 24)): "v"}
    assert d[Scalar((0, 288), (70, 48))] == "v"


def test_mixed_operand_arithmetic():
    assert 1 + PI2 == Scalar((1, 1))
    assert 2 * PI2 - PI2 == PI2
    assert Fraction(1, 2) * Scalar(4) == 2
    assert 1 / Scalar(2) == Scalar(Fraction(1, 2))
    assert (6 - Scalar(2)) == 4


def test_sum_builtin():
    vals = [Scalar(1), PI2, Scalar(Fraction(1, 2))]
    assert sum(vals) == Scalar((3, 2), (2,))
