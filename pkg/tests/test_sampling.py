import random

import pytest

from conftest import QQ
from leonardz.errors import SamplingExhausted
from leonardz.exactfield import ExtensionField, PrimeField
from leonardz.parray import ALL_TYPES, LeonardType, validate_spec
from leonardz.sampling import (
    MODE_DIM2,
    MODE_GENERIC,
    MODE_SELF_DUAL,
    modes_for_type,
    sample_spec,
)


def ctx_for(name):
    return ExtensionField(2, 2) if name is LeonardType.ORPHAN else QQ


@pytest.mark.parametrize("name", ALL_TYPES, ids=lambda t: t.value)
def test_generic_samples_are_valid(name):
    ctx = ctx_for(name)
    rng = random.Random(f"valid|{name.value}")
    for _ in range(5):
        spec = sample_spec(name, 3, ctx, rng)
        assert spec.name is name
        assert validate_spec(spec) == []


@pytest.mark.parametrize("name", ALL_TYPES, ids=lambda t: t.value)
def test_all_modes_sample_validly(name):
    ctx = ctx_for(name)
    d = 3 if name is LeonardType.ORPHAN else 4
    for mode in modes_for_type(name, d):
        rng = random.Random(f"modes|{name.value}|{mode}")
        spec = sample_spec(name, d, ctx, rng, mode=mode)
        assert validate_spec(spec) == []


def test_sampling_is_deterministic():
    def draw(seed):
        rng = random.Random(seed)
        spec = sample_spec(LeonardType.Q_RACAH, 5, QQ, rng)
        return [str(v) for v in spec.params.values()]

    assert draw("fixed") == draw("fixed")
    assert draw("fixed") != draw("other")


def test_modes_for_type_structure():
    assert modes_for_type(LeonardType.DUAL_HAHN, 4) == [MODE_GENERIC]
    kraw = modes_for_type(LeonardType.KRAWTCHOUK, 4)
    assert MODE_DIM2 in kraw and MODE_SELF_DUAL in kraw
    bi_odd = modes_for_type(LeonardType.BANNAI_ITO, 5)
    assert MODE_DIM2 not in bi_odd
    bi_even = modes_for_type(LeonardType.BANNAI_ITO, 4)
    assert MODE_DIM2 in bi_even
    assert "z:s_star=-2r1" in bi_even


def test_sampling_exhausts_on_impossible_cell():
    # no valid orphan exists over GF(2): s and s_star cannot avoid 1
    gf2 = PrimeField(2)
    rng = random.Random(0)
    with pytest.raises(SamplingExhausted):
        sample_spec(LeonardType.ORPHAN, 3, gf2, rng, retries=30)


def test_forced_conditions_hold_exactly():
    rng = random.Random("force")
    spec = sample_spec(LeonardType.Q_RACAH, 4, QQ, rng, mode="z:s_star=r2^2")
    assert spec.params["s_star"] == spec.params["r2"] ** 2
    q, d = spec.params["q"], spec.d
    assert spec.params["r1"] * spec.params["r2"] == \
        spec.params["s"] * spec.params["s_star"] * q ** (d + 1)
    spec = sample_spec(LeonardType.KRAWTCHOUK, 4, QQ, rng, mode=MODE_DIM2)
    assert spec.params["s"] * spec.params["s_star"] == 2 * spec.params["r"]
    spec = sample_spec(LeonardType.BANNAI_ITO, 4, QQ, rng, mode=MODE_DIM2)
    assert spec.params["s"] == QQ(5)
    assert spec.params["s_star"] == -2 * spec.params["r1"]


def test_orphan_gf8_sampling():
    gf8 = ExtensionField(2, 3)
    rng = random.Random("orphan8")
    spec = sample_spec(LeonardType.ORPHAN, 3, gf8, rng)
    assert validate_spec(spec) == []
    assert spec.field.characteristic == 2
