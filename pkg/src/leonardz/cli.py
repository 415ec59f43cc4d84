"""Command line front end.

Three subcommands:

    analyze         run one instance through the full pipeline
    verify-tables   run the randomized verification campaign
    counterexample  recompute and certify the diameter-2 boundary example

Exit codes: 0 success, 1 usage error, 2 invalid spec, 3 internal
consistency failure.  Reports are deterministic functions of the
arguments and seed, printed as line-oriented key/value text with exact
element strings only.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import analyze_instance
from .campaign import (
    DEFAULT_D_MAX,
    DEFAULT_D_MIN,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    render_report,
    run_campaign,
)
from .counterexample import counterexample_d2
from .counterexample import render_report as render_counterexample
from .errors import InvalidSpec, LeonardError
from .parray import ALL_TYPES, LeonardType, spec_from_mapping, spec_to_mapping
from .sampling import DEFAULT_HEIGHT

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_SPEC = 2
EXIT_INCONSISTENT = 3

SEED_ENV_VAR = "LEONARD_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def read_config(path):
    """Parse a config file of one `key = value` pair per line."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def build_parser():
    parser = _Parser(prog="leonardz",
                     description="Exact verification toolkit for Leonard "
                                 "systems and their zero diagonal spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one instance")
    pa.add_argument("--type", dest="type_name")
    pa.add_argument("--d", type=int)
    pa.add_argument("--field", default=None)
    pa.add_argument("--theta0")
    pa.add_argument("--theta-star0", dest="theta_star0")
    pa.add_argument("--param", action="append", default=[],
                    metavar="NAME=VALUE")
    pa.add_argument("--config")

    pv = sub.add_parser("verify-tables", help="run the verification campaign")
    pv.add_argument("--d-min", dest="d_min", type=int, default=None)
    pv.add_argument("--d-max", dest="d_max", type=int, default=None)
    pv.add_argument("--trials", type=int, default=None)
    pv.add_argument("--seed", type=int, default=None)
    pv.add_argument("--types")
    pv.add_argument("--height", type=int, default=None)
    pv.add_argument("--config")

    sub.add_parser("counterexample", help="run the fixed boundary example")
    return parser


def _spec_mapping_from_args(args):
    mapping = {}
    if args.config:
        mapping.update(read_config(args.config))
    if args.type_name is not None:
        mapping["type"] = args.type_name
    if args.d is not None:
        mapping["d"] = str(args.d)
    if args.field is not None:
        mapping["field"] = args.field
    if args.theta0 is not None:
        mapping["theta0"] = args.theta0
    if args.theta_star0 is not None:
        mapping["theta_star0"] = args.theta_star0
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        mapping[key.strip()] = value.strip()
    if "type" not in mapping:
        raise UsageError("missing --type (or a config with a type key)")
    if "d" not in mapping:
        raise UsageError("missing --d (or a config with a d key)")
    return mapping


def _fmt_bool(x):
    return "true" if x else "false"


def _seq_line(fmt, values):
    return ", ".join(fmt(x) for x in values)


def _matrix_lines(out, label, mtx, fmt):
    for i, row in enumerate(mtx):
        out.append(f"  {label}.row{i} = {_seq_line(fmt, row)}")


def render_analysis(chk):
    spec = chk.spec
    fmt = spec.field.format
    out = ["spec:"]
    for key, value in spec_to_mapping(spec).items():
        out.append(f"  {key} = {value}")
    out.append("array:")
    out.append(f"  theta = {_seq_line(fmt, chk.arr.theta)}")
    out.append(f"  theta_star = {_seq_line(fmt, chk.arr.theta_star)}")
    out.append(f"  phi1 = {_seq_line(fmt, chk.arr.phi1)}")
    out.append(f"  phi2 = {_seq_line(fmt, chk.arr.phi2)}")
    out.append("intersection_numbers:")
    out.append(f"  a = {_seq_line(fmt, chk.nums.a)}")
    out.append(f"  b = {_seq_line(fmt, chk.nums.b)}")
    out.append(f"  c = {_seq_line(fmt, chk.nums.c)}")
    out.append(f"  a_minus = {_seq_line(fmt, chk.apm.a_minus)}")
    out.append(f"  a_plus = {_seq_line(fmt, chk.apm.a_plus)}")
    out.append("zspace:")
    out.append(f"  rank_M = {chk.zreport.rank_m}")
    out.append(f"  dim_Z = {chk.zreport.dim_z}")
    _matrix_lines(out, "M", chk.zreport.M, fmt)
    _matrix_lines(out, "T", chk.zreport.T, fmt)
    _matrix_lines(out, "L", chk.zreport.L, fmt)
    for k, coeffs in enumerate(chk.zreport.coeff_basis):
        out.append(f"  kernel{k} = {_seq_line(fmt, coeffs.as_list())}")
    for k, mtx in enumerate(chk.zreport.matrix_basis):
        _matrix_lines(out, f"Z{k}", mtx, fmt)
    out.append("predicates:")
    out.append(f"  z_nonzero = {_fmt_bool(chk.z_nonzero_pred)}")
    out.append(f"  condition = {chk.z_condition or 'none'}")
    out.append(f"  dim2 = {_fmt_bool(chk.dim2_pred)}")
    out.append(f"  self_dual = {_fmt_bool(chk.self_dual)}")
    out.append(f"  spin = {_fmt_bool(chk.spin)}")
    out.append(f"  relation_row = {chk.relation_row or 'none'}")
    out.append("consistency:")
    for name in sorted(chk.flags):
        out.append(f"  {name} = {'pass' if chk.flags[name] else 'FAIL'}")
    out.append(f"result: {'OK' if chk.ok else 'INCONSISTENT'}")
    return "\n".join(out) + "\n"


def cmd_analyze(args, stdout):
    mapping = _spec_mapping_from_args(args)
    spec = spec_from_mapping(mapping)
    chk = analyze_instance(spec, deep=True)
    stdout.write(render_analysis(chk))
    return EXIT_OK if chk.ok else EXIT_INCONSISTENT


def _resolve(args, config, key, default, cast=int):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return cast(config[key])
    return default


def cmd_verify_tables(args, stdout):
    config = read_config(args.config) if args.config else {}
    d_min = _resolve(args, config, "d_min", DEFAULT_D_MIN)
    d_max = _resolve(args, config, "d_max", DEFAULT_D_MAX)
    trials = _resolve(args, config, "trials", DEFAULT_TRIALS)
    height = _resolve(args, config, "height", DEFAULT_HEIGHT)
    seed = getattr(args, "seed", None)
    if seed is None and "seed" in config:
        seed = int(config["seed"])
    if seed is None and os.environ.get(SEED_ENV_VAR):
        seed = int(os.environ[SEED_ENV_VAR])
    if seed is None:
        seed = DEFAULT_SEED
    types_text = args.types if args.types is not None else config.get("types")
    if types_text:
        types = [LeonardType.from_string(t) for t in types_text.split(",") if t]
    else:
        types = list(ALL_TYPES)
    if d_min < 3:
        raise UsageError("--d-min must be at least 3")
    if d_max < d_min:
        raise UsageError("--d-max must be at least --d-min")
    if trials < 1:
        raise UsageError("--trials must be at least 1")
    report = run_campaign(types=types, d_min=d_min, d_max=d_max, trials=trials,
                          seed=seed, height=height)
    stdout.write(render_report(report))
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def cmd_counterexample(stdout):
    report = counterexample_d2()
    stdout.write(render_counterexample(report))
    golden = (report.idempotents_match and report.patterns_hold
              and report.g0g0star_vanishes)
    return EXIT_OK if golden else EXIT_INCONSISTENT


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            return cmd_analyze(args, stdout)
        if args.command == "verify-tables":
            return cmd_verify_tables(args, stdout)
        if args.command == "counterexample":
            return cmd_counterexample(stdout)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except InvalidSpec as e:
        stderr.write(f"invalid spec ({type(e).__name__}): {e}\n")
        return EXIT_INVALID_SPEC
    except LeonardError as e:
        stderr.write(f"internal consistency failure ({type(e).__name__}): {e}\n")
        return EXIT_INCONSISTENT
    except OSError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
