import random

import pytest
from hypothesis import given, strategies as st

from conftest import QQ, make_krawtchouk
from leonardz.errors import (
    DegenerateArray,
    InvalidSpec,
    UnsupportedCharacteristic,
    ZeroScale,
)
from leonardz.exactfield import ExtensionField, PrimeField
from leonardz.parray import (
    ALL_TYPES,
    LeonardType,
    ParameterArray,
    TypeSpec,
    affine_transform,
    build_parameter_array,
    dualize,
    reverse_dual,
    reverse_primal,
    spec_from_mapping,
    spec_to_mapping,
    validate_spec,
)


def arrays_equal(a, b):
    return (a.theta == b.theta and a.theta_star == b.theta_star
            and a.phi1 == b.phi1 and a.phi2 == b.phi2)


def test_krawtchouk_vanishing_second_sequence_rejected():
    # r = s*s_star makes the second split sequence identically zero
    spec = make_krawtchouk("1")
    violations = validate_spec(spec)
    assert any(v.clause == "krawtchouk:r-product" for v in violations)
    with pytest.raises(InvalidSpec):
        build_parameter_array(spec)


def test_krawtchouk_worked_sequences(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    assert arr.theta == [QQ(0), QQ(1), QQ(2), QQ(3)]
    assert arr.theta_star == [QQ(0), QQ(1), QQ(2), QQ(3)]
    assert arr.phi1 == [QQ(-6), QQ(-8), QQ(-6)]
    assert arr.phi2 == [QQ(-3), QQ(-4), QQ(-3)]


def test_dual_q_krawtchouk_worked_values(dual_q_krawtchouk_spec):
    arr = build_parameter_array(dual_q_krawtchouk_spec)
    assert arr.theta_star[1] == QQ("-2/3")
    assert arr.theta[1] == QQ("34/3")
    assert arr.phi1_at(1) == QQ("-52/81")


def test_krawtchouk_half_r_valid():
    assert validate_spec(make_krawtchouk("1/2")) == []


def test_orphan_over_rationals_unsupported():
    spec = TypeSpec(LeonardType.ORPHAN, 3, QQ, QQ(0), QQ(0),
                    {"h": QQ(1), "h_star": QQ(1), "s": QQ(2), "s_star": QQ(2),
                     "r": QQ(3)})
    with pytest.raises(UnsupportedCharacteristic):
        validate_spec(spec)


def test_orphan_over_gf4_builds():
    gf4 = ExtensionField(2, 2)
    t = gf4.generator
    spec = TypeSpec(LeonardType.ORPHAN, 3, gf4, gf4(0), gf4(0),
                    {"h": gf4(1), "h_star": gf4(1), "s": t, "s_star": t,
                     "r": t})
    assert validate_spec(spec) == []
    arr = build_parameter_array(spec)
    assert arr.phi1_at(2) == gf4(1)


def test_orphan_over_gf2_impossible():
    gf2 = PrimeField(2)
    spec = TypeSpec(LeonardType.ORPHAN, 3, gf2, gf2(0), gf2(0),
                    {"h": gf2(1), "h_star": gf2(1), "s": gf2(1),
                     "s_star": gf2(1), "r": gf2(1)})
    assert any(v.clause == "orphan:s-not-one" for v in validate_spec(spec))


def test_q_racah_product_clause():
    spec = TypeSpec(LeonardType.Q_RACAH, 3, QQ, QQ(0), QQ(0),
                    {"q": QQ(2), "h": QQ(1), "h_star": QQ(1), "s": QQ(3),
                     "s_star": QQ(5), "r1": QQ(1), "r2": QQ(1)})
    assert any(v.clause == "q-racah:r1r2-product" for v in validate_spec(spec))


def test_racah_characteristic_clause():
    params = {"h": None, "h_star": None, "s": None, "s_star": None,
              "r1": None, "r2": None}
    gf3 = PrimeField(3)
    spec = TypeSpec(LeonardType.RACAH, 3, gf3, gf3(0), gf3(0),
                    {k: gf3(1) for k in params})
    with pytest.raises(UnsupportedCharacteristic):
        validate_spec(spec)


def test_wrong_parameter_keys_rejected():
    spec = TypeSpec(LeonardType.KRAWTCHOUK, 3, QQ, QQ(0), QQ(0),
                    {"s": QQ(1), "s_star": QQ(1)})
    with pytest.raises(InvalidSpec):
        validate_spec(spec)
    spec = TypeSpec(LeonardType.KRAWTCHOUK, 3, QQ, QQ(0), QQ(0),
                    {"s": QQ(1), "s_star": QQ(1), "r": QQ(2), "q": QQ(2)})
    with pytest.raises(InvalidSpec):
        validate_spec(spec)


def test_d_below_three_rejected():
    spec = make_krawtchouk("2", d=2)
    with pytest.raises(InvalidSpec):
        validate_spec(spec)


def test_exemplars_build_valid_arrays(exemplar_specs):
    for spec in exemplar_specs.values():
        arr = build_parameter_array(spec)
        arr.validate()


def test_degenerate_array_guard():
    arr = ParameterArray(QQ, 3, [QQ(0), QQ(1), QQ(2), QQ(2)],
                         [QQ(0), QQ(1), QQ(2), QQ(3)],
                         [QQ(1)] * 3, [QQ(1)] * 3)
    with pytest.raises(DegenerateArray):
        arr.validate()
    arr = ParameterArray(QQ, 3, [QQ(0), QQ(1), QQ(2), QQ(3)],
                         [QQ(0), QQ(1), QQ(2), QQ(3)],
                         [QQ(1), QQ(0), QQ(1)], [QQ(1)] * 3)
    with pytest.raises(DegenerateArray):
        arr.validate()


# -- transforms -------------------------------------------------------------


def generic_arrays():
    """Random arrays with the structural invariants (validity not required)."""

    def build(seed):
        rng = random.Random(seed)
        d = rng.randint(3, 6)
        theta = rng.sample(range(-50, 50), d + 1)
        theta_star = rng.sample(range(-50, 50), d + 1)
        phi1 = [rng.choice([x for x in range(-9, 10) if x]) for _ in range(d)]
        phi2 = [rng.choice([x for x in range(-9, 10) if x]) for _ in range(d)]
        return ParameterArray(QQ, d, [QQ(x) for x in theta],
                              [QQ(x) for x in theta_star],
                              [QQ(x) for x in phi1], [QQ(x) for x in phi2])

    return st.builds(build, st.integers(min_value=0, max_value=10 ** 9))


@given(generic_arrays())
def test_reverse_dual_is_involution(arr):
    assert arrays_equal(reverse_dual(reverse_dual(arr)), arr)


@given(generic_arrays())
def test_reverse_primal_is_involution(arr):
    assert arrays_equal(reverse_primal(reverse_primal(arr)), arr)


@given(generic_arrays())
def test_dualize_is_involution(arr):
    assert arrays_equal(dualize(dualize(arr)), arr)


@given(generic_arrays())
def test_reversals_commute(arr):
    assert arrays_equal(reverse_dual(reverse_primal(arr)),
                        reverse_primal(reverse_dual(arr)))


def test_reverse_dual_worked(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    down = reverse_dual(arr)
    assert down.theta_star == [QQ(3), QQ(2), QQ(1), QQ(0)]
    assert down.theta == arr.theta
    assert down.phi1 == arr.phi2[::-1]
    assert down.phi2 == arr.phi1[::-1]


def test_dualize_worked(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    dual = dualize(arr)
    assert dual.theta == arr.theta_star
    assert dual.theta_star == arr.theta
    assert dual.phi1 == arr.phi1
    assert dual.phi2 == arr.phi2[::-1]


def test_affine_identity(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    same = affine_transform(arr, QQ(1), QQ(0), QQ(1), QQ(0))
    assert arrays_equal(same, arr)


def test_affine_scaling_worked(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    scaled = affine_transform(arr, QQ(2), QQ(0), QQ(1), QQ(0))
    assert scaled.theta == [QQ(0), QQ(2), QQ(4), QQ(6)]
    assert scaled.phi1 == [QQ(-12), QQ(-16), QQ(-12)]


def test_affine_composition(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    one = QQ(1)
    zero = QQ(0)
    x1, z1, x2, z2 = QQ(2), QQ(3), QQ(5), QQ(-1)
    twice = affine_transform(affine_transform(arr, x2, z2, one, zero),
                             x1, z1, one, zero)
    composed = affine_transform(arr, x1 * x2, x1 * z2 + z1, one, zero)
    assert arrays_equal(twice, composed)


def test_affine_zero_scale_rejected(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    with pytest.raises(ZeroScale):
        affine_transform(arr, QQ(0), QQ(0), QQ(1), QQ(0))


def test_spec_mapping_roundtrip(exemplar_specs):
    for spec in exemplar_specs.values():
        mapping = spec_to_mapping(spec)
        back = spec_from_mapping(mapping)
        assert back.name == spec.name and back.d == spec.d
        assert back.field == spec.field
        assert back.theta0 == spec.theta0
        assert back.params == spec.params


def test_all_thirteen_types_enumerated():
    assert len(ALL_TYPES) == 13
    assert LeonardType.from_string("Dual Q Hahn") is LeonardType.DUAL_Q_HAHN
