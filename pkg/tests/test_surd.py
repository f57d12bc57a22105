import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f4cantor.surd import (DEFAULT_DISC, DivByZero, FieldMismatch, QuadSurd,
                           cross_field_cmp, parse_surd, qs_div, qs_mul,
                           qs_sign, qs_to_decimal)

ROOT_LO = QuadSurd(783, 1, 222)
ROOT_HI = QuadSurd(5501, -1, 1238)


def test_identity_multiplication():
    one = QuadSurd(1, 0, 1)
    x = QuadSurd(7, -3, 5)
    assert qs_mul(one, x) == x


def test_square_of_left_endpoint_is_product_interval_lo():
    sq = qs_mul(ROOT_LO, ROOT_LO)
    assert sq == QuadSurd(106609, 261, 8214)


def test_conjugate_product_is_rational():
    x = QuadSurd(7, 3, 4)
    prod = x * x.conjugate()
    assert prod.is_rational
    assert prod.as_fraction() == Fraction(49 - 9 * DEFAULT_DISC, 16)


def test_sign_zero():
    assert qs_sign(QuadSurd(0, 0, 1)) == 0


def test_sign_of_root_interval_length():
    assert qs_sign(ROOT_HI - ROOT_LO) == 1


def test_sign_of_tau_numerator():
    # 83497*sqrt(26565) - 228339 over 13158329 exceeds 1
    tau = QuadSurd(-228339, 83497, 13158329)
    assert qs_sign(tau - 1) == 1


def test_decimal_golden_ratio():
    assert qs_to_decimal(QuadSurd(1, 1, 2, 5), 5) == "1.61803"


def test_decimal_lambda_and_gamma():
    lam = QuadSurd(228339, 83497, 14071116)
    assert qs_to_decimal(lam, 4) == "0.9834"
    gamma = QuadSurd(188261210808537, -1136812239479, 173141622072241)
    assert qs_to_decimal(gamma, 3) == "0.017"


def test_decimal_rational_half_even():
    assert QuadSurd.from_rational(Fraction(25, 1000)).to_decimal(2) == "0.02"
    assert QuadSurd.from_rational(Fraction(35, 1000)).to_decimal(2) == "0.04"
    assert QuadSurd.from_rational(Fraction(-5, 4)).to_decimal(1) == "-1.2"


def test_parse_roundtrip():
    for x in (ROOT_LO, ROOT_HI, QuadSurd(0, 0, 1), QuadSurd(-7, 22, 13)):
        assert parse_surd(x.canonical_text()) == x
    assert parse_surd("18.4811") == QuadSurd.from_rational(Fraction("18.4811"))
    assert parse_surd("3/7") == QuadSurd.from_rational(Fraction(3, 7))


def test_field_mismatch_rejected():
    with pytest.raises(FieldMismatch):
        QuadSurd(1, 1, 1, 5) + QuadSurd(1, 1, 1, 2)


def test_rational_embeds_across_fields():
    r = QuadSurd.from_rational(3, disc=5)
    s = QuadSurd(0, 1, 1, 2)
    assert (r + s).disc == 2


def test_division_by_zero():
    with pytest.raises(DivByZero):
        qs_div(QuadSurd(1, 1, 1), QuadSurd(0, 0, 1))


def test_cross_field_comparison():
    mu = QuadSurd(19425, 111, 2030)
    cap = QuadSurd(10, 6, 1, 2)
    assert cross_field_cmp(mu, cap) == -1
    assert cross_field_cmp(cap, mu) == 1
    assert cross_field_cmp(mu, mu) == 0
    # golden ratio vs sqrt(2)+0.2 style mixes
    assert cross_field_cmp(QuadSurd(1, 1, 2, 5), QuadSurd(0, 1, 1, 2)) == 1


surds = st.builds(
    QuadSurd,
    st.integers(-40, 40), st.integers(-40, 40), st.integers(1, 40),
    st.just(DEFAULT_DISC),
)


@given(surds, surds, surds)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == QuadSurd(0, 0, 1)
    if a:
        assert a * a.inverse() == QuadSurd(1, 0, 1)


@given(surds)
@settings(max_examples=200)
def test_sign_agrees_with_high_precision_decimal(x):
    dec = x.to_decimal(100)
    numeric = Fraction(dec)
    if numeric == 0:
        # rounded to zero at 100 digits: only the exact zero survives here
        assert x.sign() == 0 or abs(float(x)) < 1e-99
    else:
        assert x.sign() == (1 if numeric > 0 else -1)


@given(surds, surds)
def test_canonical_form_idempotent(a, b):
    x = a * b + a
    again = parse_surd(x.canonical_text())
    assert (again.p, again.q, again.r) == (x.p, x.q, x.r)
    assert math.gcd(x.p, x.q, x.r) == 1
    assert x.r > 0


@given(surds, surds)
def test_order_antisymmetry(a, b):
    assert (a < b) == (b > a)
    assert (a == b) == ((a - b).sign() == 0)
