import random

import pytest

from leonardz.exactfield import ExtensionField, Rationals
from leonardz.parray import ALL_TYPES, LeonardType, TypeSpec
from leonardz.sampling import sample_spec

QQ = Rationals()


def make_krawtchouk(r, d=3, s="1", s_star="1", theta0="0", theta_star0="0"):
    return TypeSpec(LeonardType.KRAWTCHOUK, d, QQ, QQ(theta0), QQ(theta_star0),
                    {"s": QQ(s), "s_star": QQ(s_star), "r": QQ(r)})


@pytest.fixture(scope="session")
def rationals():
    return QQ


@pytest.fixture(scope="session")
def kraw_dim1():
    """Valid worked instance with a one-dimensional zero diagonal space."""
    return make_krawtchouk("2")


@pytest.fixture(scope="session")
def kraw_dim2():
    """Valid worked instance with constant diagonal intersection numbers."""
    return make_krawtchouk("1/2")


@pytest.fixture(scope="session")
def dual_q_krawtchouk_spec():
    return TypeSpec(LeonardType.DUAL_Q_KRAWTCHOUK, 3, QQ, QQ(0), QQ(0),
                    {"q": QQ(3), "h": QQ(1), "h_star": QQ(1), "s": QQ(2)})


@pytest.fixture(scope="session")
def dual_hahn_spec():
    return TypeSpec(LeonardType.DUAL_HAHN, 3, QQ, QQ(0), QQ(0),
                    {"h": QQ(1), "s": QQ(1), "s_star": QQ(1), "r": QQ(1)})


@pytest.fixture(scope="session")
def exemplar_specs():
    """One deterministically sampled valid spec per type, at d = 3 (d = 4 for
    the even-diameter checks of the Bannai/Ito family)."""
    out = {}
    for name in ALL_TYPES:
        ctx = ExtensionField(2, 2) if name is LeonardType.ORPHAN else QQ
        rng = random.Random(f"exemplar|{name.value}")
        out[name] = sample_spec(name, 3, ctx, rng)
    rng = random.Random("exemplar|bannai-ito|even")
    out["bannai-ito-even"] = sample_spec(LeonardType.BANNAI_ITO, 4, QQ, rng)
    return out
