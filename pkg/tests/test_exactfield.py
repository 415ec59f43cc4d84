import random

import pytest

from leonardz.errors import (
    ContextMismatch,
    DivisionByZero,
    ParseError,
    ReducibleModulus,
    ZeroDenominator,
)
from leonardz.exactfield import (
    ExtensionField,
    PrimeField,
    Rationals,
    field_arith,
    format_element,
    parse_element,
    parse_field,
    sample_element,
)

QQ = Rationals()
GF7 = PrimeField(7)
GF4 = ExtensionField(2, 2)


def test_rational_addition_exact():
    assert QQ("1/3") + QQ("1/6") == QQ("1/2")


def test_prime_field_inverse_identity():
    x = GF7(3)
    assert (GF7(1) / x) * x == GF7(1)


def test_gf4_generator_product():
    # t * (t + 1) reduces to 1 modulo t^2 + t + 1
    t = GF4.generator
    assert t * (t + 1) == GF4(1)


def test_field_arith_dispatch():
    assert field_arith(QQ(2), QQ(3), "add") == QQ(5)
    assert field_arith(QQ(2), QQ(3), "sub") == QQ(-1)
    assert field_arith(QQ(2), QQ(3), "mul") == QQ(6)
    assert field_arith(QQ(2), QQ(3), "div") == QQ("2/3")


def test_field_arith_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(QQ(1), QQ(0), "div")
    with pytest.raises(DivisionByZero):
        field_arith(GF7(1), GF7(0), "div")
    with pytest.raises(DivisionByZero):
        field_arith(GF4(1), GF4(0), "div")


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        field_arith(GF7(1), PrimeField(5)(1), "add")
    with pytest.raises(ContextMismatch):
        GF4(1) + ExtensionField(2, 3)(1)


def test_parse_rational_literals():
    assert parse_element("-52/81", QQ) == QQ(-52) / QQ(81)
    assert parse_element("7", QQ) == QQ(7)
    with pytest.raises(ZeroDenominator):
        parse_element("1/0", QQ)
    with pytest.raises(ParseError):
        parse_element("3.5", QQ)


def test_parse_prime_field_reduces():
    gf3 = PrimeField(3)
    assert parse_element("5", gf3) == gf3(2)
    assert format_element(parse_element("5", gf3), gf3) == "2"


def test_parse_extension_field_polynomials():
    t = GF4.generator
    assert parse_element("t+1", GF4) == t + 1
    assert parse_element("t", GF4) == t
    gf8 = ExtensionField(2, 3)
    x = parse_element("t^2+t+1", gf8)
    assert x == gf8.generator ** 2 + gf8.generator + 1
    with pytest.raises(ParseError):
        parse_element("t^5", GF4)


@pytest.mark.parametrize("text", ["-52/81", "0", "7", "1/2"])
def test_rational_roundtrip(text):
    assert format_element(parse_element(text, QQ), QQ) == text


def test_extension_field_format_roundtrip():
    gf9 = ExtensionField(3, 2)
    for coeffs in [(0, 0), (1, 0), (2, 1), (0, 2), (1, 1)]:
        x = gf9(coeffs)
        assert parse_element(format_element(x, gf9), gf9) == x


def test_sample_height_one_support():
    rng = random.Random(1)
    support = {QQ(-1), QQ(0), QQ(1)}
    for _ in range(200):
        assert sample_element(QQ, rng, 1) in support


def test_sample_seed_sensitivity():
    a = [sample_element(QQ, random.Random(42), 12) for _ in range(2)]
    b = [sample_element(QQ, random.Random(43), 12) for _ in range(2)]
    assert a != b


def test_sample_seed_determinism():
    draws = lambda seed: [str(sample_element(QQ, random.Random(seed), 12))
                          for _ in range(20)]
    assert draws(7) == draws(7)


def test_sample_gf101_coverage():
    # coupon-collector sanity bound: 10^4 uniform draws from 101 residues
    gf = PrimeField(101)
    rng = random.Random(0)
    seen = {sample_element(gf, rng, 1).value for _ in range(10 ** 4)}
    assert len(seen) >= 95


def test_extension_reduction_degree():
    gf8 = ExtensionField(2, 3)
    rng = random.Random(5)
    for _ in range(200):
        x = sample_element(gf8, rng, 1)
        y = sample_element(gf8, rng, 1)
        assert len((x * y).coeffs) <= 3


def test_reducible_modulus_rejected():
    # t^2 + 1 = (t+1)^2 over GF(2)
    with pytest.raises(ReducibleModulus):
        ExtensionField(2, 2, (1, 0, 1))


def test_default_moduli_exist_up_to_degree_eight():
    for k in range(2, 9):
        ctx = ExtensionField(2, k)
        assert ctx.characteristic == 2
        t = ctx.generator
        assert t ** (2 ** k - 1) == ctx.one
    assert ExtensionField(3, 2).characteristic == 3


def test_characteristics():
    assert QQ.characteristic == 0
    assert GF7.characteristic == 7
    assert GF4.characteristic == 2


def test_parse_field_labels():
    assert parse_field("Q") == QQ
    assert parse_field("GF(7)") == GF7
    assert parse_field("GF(2^2)") == GF4
    with pytest.raises(ParseError):
        parse_field("R")


def test_nonprime_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        ExtensionField(4, 2)


def test_prime_field_fraction_parse():
    gf7 = PrimeField(7)
    assert parse_element("1/3", gf7) == gf7(5)
    with pytest.raises(ZeroDenominator):
        parse_element("1/7", gf7)
