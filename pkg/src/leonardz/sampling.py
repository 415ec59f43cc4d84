"""Seeded random sampling of valid type specs, with condition forcing.

Most classification conditions (a squared parameter, a forced product) cut
out measure-zero sets, so they are substituted into the draw before the
remaining parameters are sampled.  Constraint clauses that random draws
can still violate are handled by rejection within a bounded retry budget.

Modes:

    generic          free parameters (dependent ones derived)
    z:<row>          force one nonzero-space condition row
    dim2             force the dimension-2 row of the type
    self-dual        force the self-duality equalities of the type
    self-dual-spin   self-dual plus the spin condition row
"""

from __future__ import annotations

from .errors import SamplingExhausted
from .exactfield import sample_element
from .parray import LeonardType, TypeSpec, validate_spec

DEFAULT_HEIGHT = 12
DEFAULT_RETRIES = 100

MODE_GENERIC = "generic"
MODE_DIM2 = "dim2"
MODE_SELF_DUAL = "self-dual"
MODE_SELF_DUAL_SPIN = "self-dual-spin"

_Z_MODES = {
    LeonardType.Q_RACAH: ("z:s_star=r1^2", "z:s_star=r2^2"),
    LeonardType.Q_HAHN: ("z:s_star=r^2",),
    LeonardType.RACAH: ("z:s_star=2r1", "z:s_star=2r2"),
    LeonardType.BANNAI_ITO: ("z:s_star=-2r1", "z:s_star=-2r2"),
}

_DIM2_TYPES = frozenset((
    LeonardType.Q_RACAH, LeonardType.DUAL_Q_KRAWTCHOUK, LeonardType.HAHN,
    LeonardType.KRAWTCHOUK, LeonardType.BANNAI_ITO))

_SELF_DUAL_TYPES = frozenset((
    LeonardType.Q_RACAH, LeonardType.AFFINE_Q_KRAWTCHOUK, LeonardType.RACAH,
    LeonardType.KRAWTCHOUK, LeonardType.BANNAI_ITO, LeonardType.ORPHAN))

_SPIN_CONDITION_TYPES = frozenset((
    LeonardType.Q_RACAH, LeonardType.RACAH, LeonardType.BANNAI_ITO))


def modes_for_type(name, d):
    """All sampling modes exercised for a (type, d) campaign cell."""
    modes = [MODE_GENERIC]
    modes.extend(_Z_MODES.get(name, ()))
    if name in _DIM2_TYPES:
        if name is not LeonardType.BANNAI_ITO or d % 2 == 0:
            modes.append(MODE_DIM2)
    if name in _SELF_DUAL_TYPES:
        modes.append(MODE_SELF_DUAL)
    if name in _SPIN_CONDITION_TYPES:
        modes.append(MODE_SELF_DUAL_SPIN)
    return modes


def _nonzero(ctx, rng, height):
    x = sample_element(ctx, rng, height)
    while not x:
        x = sample_element(ctx, rng, height)
    return x


def _draw(name, d, ctx, rng, height, mode):
    """One candidate parameter set for the given mode; may violate clauses."""
    nz = lambda: _nonzero(ctx, rng, height)
    any_ = lambda: sample_element(ctx, rng, height)
    theta0 = any_()
    theta_star0 = any_()
    self_dual = mode in (MODE_SELF_DUAL, MODE_SELF_DUAL_SPIN)
    if self_dual:
        theta_star0 = theta0

    if name is LeonardType.Q_RACAH:
        q, h, r1 = nz(), nz(), nz()
        if mode == MODE_SELF_DUAL_SPIN:
            hs, s = h, r1 * r1
            ss = s
        elif self_dual:
            hs, s = h, nz()
            ss = s
        elif mode == "z:s_star=r1^2":
            hs, s, ss = nz(), nz(), r1 * r1
        elif mode == "z:s_star=r2^2":
            hs, s = nz(), nz()
            r2 = r1
            ss = r2 * r2
            r1 = s * ss * q ** (d + 1) / r2
            return theta0, theta_star0, {"q": q, "h": h, "h_star": hs, "s": s,
                                         "s_star": ss, "r1": r1, "r2": r2}
        elif mode == MODE_DIM2:
            hs = nz()
            ss = r1 * r1
            s = -(q ** (-d - 1))
        else:
            hs, s, ss = nz(), nz(), nz()
        r2 = s * ss * q ** (d + 1) / r1
        return theta0, theta_star0, {"q": q, "h": h, "h_star": hs, "s": s,
                                     "s_star": ss, "r1": r1, "r2": r2}

    if name is LeonardType.Q_HAHN:
        q, h, hs, r = nz(), nz(), nz(), nz()
        ss = r * r if mode == "z:s_star=r^2" else nz()
        return theta0, theta_star0, {"q": q, "h": h, "h_star": hs,
                                     "s_star": ss, "r": r}

    if name is LeonardType.DUAL_Q_HAHN:
        return theta0, theta_star0, {"q": nz(), "h": nz(), "h_star": nz(),
                                     "s": nz(), "r": nz()}

    if name is LeonardType.QUANTUM_Q_KRAWTCHOUK:
        return theta0, theta_star0, {"q": nz(), "h_star": nz(),
                                     "s": nz(), "r": nz()}

    if name is LeonardType.Q_KRAWTCHOUK:
        return theta0, theta_star0, {"q": nz(), "h": nz(), "h_star": nz(),
                                     "s_star": nz()}

    if name is LeonardType.AFFINE_Q_KRAWTCHOUK:
        h = nz()
        hs = h if self_dual else nz()
        return theta0, theta_star0, {"q": nz(), "h": h, "h_star": hs, "r": nz()}

    if name is LeonardType.DUAL_Q_KRAWTCHOUK:
        q = nz()
        s = -(q ** (-d - 1)) if mode == MODE_DIM2 else nz()
        return theta0, theta_star0, {"q": q, "h": nz(), "h_star": nz(), "s": s}

    if name is LeonardType.RACAH:
        h, r1 = nz(), nz()
        if mode == MODE_SELF_DUAL_SPIN:
            hs, s = h, 2 * r1
            ss = s
        elif self_dual:
            hs, s = h, any_()
            ss = s
        elif mode == "z:s_star=2r1":
            hs, s, ss = nz(), any_(), 2 * r1
        elif mode == "z:s_star=2r2":
            hs, s = nz(), any_()
            r2 = r1
            ss = 2 * r2
            r1 = s + ss + d + 1 - r2
            return theta0, theta_star0, {"h": h, "h_star": hs, "s": s,
                                         "s_star": ss, "r1": r1, "r2": r2}
        else:
            hs, s, ss = nz(), any_(), any_()
        r2 = s + ss + d + 1 - r1
        return theta0, theta_star0, {"h": h, "h_star": hs, "s": s,
                                     "s_star": ss, "r1": r1, "r2": r2}

    if name is LeonardType.HAHN:
        hs, s, r = nz(), nz(), any_()
        ss = 2 * r if mode == MODE_DIM2 else any_()
        return theta0, theta_star0, {"h_star": hs, "s": s, "s_star": ss, "r": r}

    if name is LeonardType.DUAL_HAHN:
        return theta0, theta_star0, {"h": nz(), "s": any_(), "s_star": nz(),
                                     "r": any_()}

    if name is LeonardType.KRAWTCHOUK:
        s = nz()
        ss = s if self_dual else nz()
        if mode == MODE_DIM2:
            r = s * ss / 2
        else:
            r = nz()
        return theta0, theta_star0, {"s": s, "s_star": ss, "r": r}

    if name is LeonardType.BANNAI_ITO:
        h, r1 = nz(), nz()
        if mode == MODE_SELF_DUAL_SPIN:
            hs, s = h, -2 * r1
            ss = s
        elif self_dual:
            hs, s = h, any_()
            ss = s
        elif mode == "z:s_star=-2r1":
            hs, s, ss = nz(), any_(), -2 * r1
        elif mode == "z:s_star=-2r2":
            hs, s = nz(), any_()
            r2 = r1
            ss = -2 * r2
            r1 = -s - ss + d + 1 - r2
            return theta0, theta_star0, {"h": h, "h_star": hs, "s": s,
                                         "s_star": ss, "r1": r1, "r2": r2}
        elif mode == MODE_DIM2:
            hs = nz()
            ss = -2 * r1
            s = ctx(d + 1)
        else:
            hs, s, ss = nz(), any_(), any_()
        r2 = -s - ss + d + 1 - r1
        return theta0, theta_star0, {"h": h, "h_star": hs, "s": s,
                                     "s_star": ss, "r1": r1, "r2": r2}

    if name is LeonardType.ORPHAN:
        h, s, r = nz(), nz(), nz()
        hs = h if self_dual else nz()
        ss = s if self_dual else nz()
        return theta0, theta_star0, {"h": h, "h_star": hs, "s": s,
                                     "s_star": ss, "r": r}

    raise ValueError(f"no sampler for {name}")


def sample_spec(name, d, ctx, rng, height=DEFAULT_HEIGHT, mode=MODE_GENERIC,
                retries=DEFAULT_RETRIES):
    """Draw a valid TypeSpec; raises SamplingExhausted after the retry budget."""
    for _ in range(retries):
        theta0, theta_star0, params = _draw(name, d, ctx, rng, height, mode)
        spec = TypeSpec(name, d, ctx, theta0, theta_star0, params)
        if not validate_spec(spec):
            return spec
    raise SamplingExhausted(
        f"no valid {name.value} sample for d={d} mode={mode} "
        f"within {retries} retries")
