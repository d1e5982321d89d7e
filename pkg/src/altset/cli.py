"""Command-line interface.

Every report is plain text, one fact per line, mostly ``key=value``.
Exit status: 0 on success, 1 on domain errors (e.g. the standard part of
an infinite number), 2 on usage errors (bad flags, unreadable files,
malformed values).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import continuum, horizon, motion
from .errors import AltSetError, ParseError
from .hf import universe_up_to_rank, von_neumann
from .omega import DefinableSequence, classify, prolong, standard_part
from .parsing import parse_element, parse_rational

CONFIG_KEYS = {"horizon.hard", "horizon.soft", "theta", "theta.time", "epsilon"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altset", description="Exact nonstandard numbers, horizons and continua.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("classify", help="classify a field element")
    p.add_argument("expr", help="expression in w, e.g. '(1)/(w)'")

    p = sub.add_parser("st", help="standard part of a bounded element")
    p.add_argument("expr")

    p = sub.add_parser("prolong", help="prolong a sequence given as a rule in n")
    p.add_argument("rule", help="rational function of n, e.g. '1/(n+1)'")
    p.add_argument("--shift", type=int, default=0, help="use n -> rule(n + SHIFT)")
    p.add_argument("--terms", type=int, default=0, help="also print the first TERMS standard values")

    def horizon_flags(p):
        p.add_argument("--soft", type=_positive_int)
        p.add_argument("--hard", type=_positive_int)
        p.add_argument("--config", metavar="FILE")

    p = sub.add_parser("feasible-scan", help="verdicts of 'n is small' for n = 0..hard")
    horizon_flags(p)

    for name in ("sigma", "pi"):
        p = sub.add_parser(name, help=f"{name}-class membership below the horizon")
        p.add_argument("--family", required=True, help="feasible | infinitesimal-band | threshold:<c>")
        p.add_argument("--x", required=True, help="element (rational or expression in w)")
        horizon_flags(p)

    def spec_flags(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--theta", type=_rational, help="uniform threshold")
        group.add_argument("--epsilon", type=_rational, help="relative threshold")
        p.add_argument("--config", metavar="FILE")

    p = sub.add_parser("connected", help="connectedness of a point set")
    p.add_argument("--points", required=True, metavar="FILE")
    spec_flags(p)

    p = sub.add_parser("figure", help="figure of a point set inside an ambient set")
    p.add_argument("--points", required=True, metavar="FILE")
    p.add_argument("--ambient", required=True, metavar="FILE")
    spec_flags(p)

    p = sub.add_parser("defect", help="find a non-transitive chain x~y~z")
    p.add_argument("--points", required=True, metavar="FILE")
    spec_flags(p)

    p = sub.add_parser("motion-check", help="continuity and observability of a trace")
    p.add_argument("--trace", required=True, metavar="FILE")
    p.add_argument("--theta-time", type=_rational, help="time threshold (defaults to the space threshold)")
    spec_flags(p)

    p = sub.add_parser("zeno", help="steps of the halving walk until the goal is indiscernible")
    p.add_argument("--theta", type=_rational, required=True)
    p.add_argument("--start", type=_rational, default=Fraction(1))
    p.add_argument("--ratio", type=_rational, default=Fraction(1, 2))

    p = sub.add_parser("hf-demo", help="von Neumann numbers and universe sizes")
    p.add_argument("--n", type=int, default=4, help="largest von Neumann number to print")
    p.add_argument("--rank", type=int, default=4, help="largest rank bound for universe sizes")
    return parser


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _config(args) -> dict[str, str]:
    if not getattr(args, "config", None):
        return {}
    try:
        config = horizon.read_config(_read_lines(args.config))
    except ValueError as exc:
        raise UsageError(f"{args.config}: {exc}") from None
    unknown = sorted(set(config) - CONFIG_KEYS)
    if unknown:
        raise UsageError(f"{args.config}: unknown key {unknown[0]!r}")
    return config


def _horizon(args) -> horizon.Horizon:
    config = _config(args)
    if args.hard is not None:
        config["horizon.hard"] = str(args.hard)
    if args.soft is not None:
        config["horizon.soft"] = str(args.soft)
    try:
        return horizon.horizon_from_config(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(args) -> continuum.IndiscernibilitySpec:
    config = _config(args)
    theta, epsilon = args.theta, args.epsilon
    if theta is None and epsilon is None:
        if "theta" in config:
            theta = parse_rational(config["theta"])
        elif "epsilon" in config:
            epsilon = parse_rational(config["epsilon"])
        else:
            raise UsageError("one of --theta or --epsilon is required")
    try:
        if theta is not None:
            return continuum.WitnessedUniform(theta)
        return continuum.WitnessedRelative(epsilon)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _points(path: str) -> list[continuum.Point]:
    try:
        return continuum.read_points(_read_lines(path))
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _element(text: str, var: str = "w"):
    try:
        return parse_element(text, var)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def _fmt_points(points) -> str:
    return ";".join(str(p) for p in points)


def cmd_classify(args, out):
    out.write(classify(_element(args.expr)).labels() + "\n")


def cmd_st(args, out):
    out.write(f"st={standard_part(_element(args.expr))}\n")


def cmd_prolong(args, out):
    seq = DefinableSequence(_element(args.rule, "n"), shift=args.shift)
    for n in range(args.terms):
        out.write(f"n={n} value={seq[n]}\n")
    value = prolong(seq)
    cls = classify(value)
    out.write(f"value={value}\n")
    out.write(f"class={cls.labels()}\n")
    if cls.is_bounded:
        out.write(f"st={standard_part(value)}\n")


def cmd_feasible_scan(args, out):
    h = _horizon(args)
    for n, verdict in enumerate(horizon.feasible_scan(h)):
        out.write(f"n={n} verdict={verdict}\n")


def _family(args, kind):
    try:
        family = horizon.family_by_name(args.family)
    except (KeyError, ParseError, ValueError):
        raise UsageError(f"unknown family {args.family!r}; known: {', '.join(horizon.FAMILY_NAMES)}") from None
    if family.kind is not kind:
        family = horizon.complement_family(family)
    return family


def cmd_sigma(args, out):
    family = _family(args, horizon.Kind.SIGMA)
    x = _standardize(_element(args.x))
    verdict, index = horizon.sigma_eval(family, x, _horizon(args))
    line = f"family={family.name} verdict={verdict}"
    if index is not None:
        line += f" witness={index}"
    out.write(line + "\n")


def cmd_pi(args, out):
    family = _family(args, horizon.Kind.PI)
    x = _standardize(_element(args.x))
    verdict, index = horizon.pi_eval(family, x, _horizon(args))
    line = f"family={family.name} verdict={verdict}"
    if index is not None:
        line += f" counterexample={index}"
    out.write(line + "\n")


def _standardize(x):
    return x.to_fraction() if x.is_standard() else x


def cmd_connected(args, out):
    points = _points(args.points)
    result = continuum.is_connected(_spec(args), points)
    if result.connected:
        out.write("connected=true\n")
    else:
        out.write("connected=false\n")
        out.write(f"part={_fmt_points(result.part)}\n")
        out.write(f"rest={_fmt_points(result.rest)}\n")


def cmd_figure(args, out):
    spec = _spec(args)
    fig = continuum.figure(spec, _points(args.points), _points(args.ambient))
    out.write(f"size={len(fig)}\n")
    for p in fig:
        out.write(f"point={p}\n")


def cmd_defect(args, out):
    chain = continuum.transitivity_defect(_spec(args), _points(args.points))
    out.write(f"chain={'none' if chain is None else _fmt_points(chain)}\n")


def cmd_motion_check(args, out):
    space = _spec(args)
    theta_t = args.theta_time
    if theta_t is None:
        config = _config(args)
        if "theta.time" in config:
            theta_t = parse_rational(config["theta.time"])
        elif isinstance(space, continuum.WitnessedUniform):
            theta_t = space.theta
        else:
            raise UsageError("--theta-time is required with --epsilon")
    try:
        rows = motion.read_trace(_read_lines(args.trace))
    except ParseError as exc:
        raise UsageError(f"{args.trace}: {exc}") from None
    try:
        trace = motion.MotionTrace(tuple(rows), continuum.WitnessedUniform(theta_t), space)
    except ValueError as exc:
        if isinstance(exc, AltSetError):
            raise
        raise UsageError(f"{args.trace}: {exc}") from None
    for label, check in (("continuous", motion.check_continuous), ("observable", motion.check_observable)):
        result = check(trace)
        if result.ok:
            out.write(f"{label}=true\n")
        else:
            a, b = result.pair
            out.write(f"{label}=false violation={a};{b}\n")


def cmd_zeno(args, out):
    try:
        spec = continuum.WitnessedUniform(args.theta)
        steps, final = motion.zeno_dichotomy(spec, args.start, args.ratio)
    except ValueError as exc:
        if isinstance(exc, AltSetError):
            raise
        raise UsageError(str(exc)) from None
    out.write(f"n={steps} final={final}\n")


def cmd_hf_demo(args, out):
    if args.n < 0 or args.rank < 0:
        raise UsageError("--n and --rank must be non-negative")
    for k in range(args.n + 1):
        v = von_neumann(k)
        out.write(f"von_neumann({k})={v} size={len(v)} rank={v.rank}\n")
    for k in range(args.rank + 1):
        out.write(f"universe(rank<{k}) size={len(universe_up_to_rank(k))}\n")


COMMANDS = {
    "classify": cmd_classify,
    "st": cmd_st,
    "prolong": cmd_prolong,
    "feasible-scan": cmd_feasible_scan,
    "sigma": cmd_sigma,
    "pi": cmd_pi,
    "connected": cmd_connected,
    "figure": cmd_figure,
    "defect": cmd_defect,
    "motion-check": cmd_motion_check,
    "zeno": cmd_zeno,
    "hf-demo": cmd_hf_demo,
}


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        COMMANDS[args.command](args, stdout)
    except (UsageError, ParseError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except AltSetError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
