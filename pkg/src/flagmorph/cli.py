"""Command line interface: ``flagmorph <command> ...``.

Exit status is 0 on success, 1 when the input is rejected by the
mathematics (outside an operation's hypotheses, search too large) and 2 on
usage errors.  JSON output is deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bundles, chow, obstruction, symmetric, witness
from .errors import DomainError


@dataclass(frozen=True)
class RunConfig:
    bound: int = obstruction.DEFAULT_BOUND
    cap: int = obstruction.DEFAULT_CAP
    samples: int = 100
    seed: int = 0
    format: str = "json"

    def __post_init__(self):
        if self.bound < 0 or self.cap < 1 or self.samples < 1 or self.seed < 0:
            raise ValueError("bound, cap, samples and seed must be non-negative (cap, samples positive)")


class UsageError(Exception):
    pass


def int_list(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def fraction_list(text: str) -> list:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True)


# argument helpers ---------------------------------------------------------------

def _config_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run configuration")
    g.add_argument("--bound", type=int, default=obstruction.DEFAULT_BOUND,
                   help="search box half-width B (default %(default)s)")
    g.add_argument("--cap", type=int, default=obstruction.DEFAULT_CAP,
                   help="largest search space accepted (default %(default)s)")
    g.add_argument("--samples", type=int, default=100, help="random points for witness checks")
    g.add_argument("--seed", type=int, default=0, help="seed for random points")
    g.add_argument("--format", choices=("json", "csv", "text"), default="json")
    return p


def _add_flag_args(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, help="rank n of A_n (ambient C^{n+1})")
    p.add_argument("--dims", type=int_list, help="marked dimensions, e.g. 1,3,4")
    p.add_argument("--m", type=int, help="dimension of the source projective space")
    p.add_argument("--i", type=int, help="start of the unmarked run i..i+m-3")
    p.add_argument("--flag", help='flag variety as JSON: {"n":..,"dims":[..]} or {"n":..,"m":..,"i":..}')


def _flag_from_args(args) -> chow.FlagVariety:
    try:
        if args.flag:
            data = json.loads(args.flag)
            if "m" in data and getattr(args, "m", None) is None:
                args.m = int(data["m"])
            return chow.FlagVariety.from_json(data)
        if args.n is None:
            raise UsageError("--n is required")
        if args.dims is not None:
            return chow.FlagVariety(args.n, tuple(args.dims))
        if args.i is not None and getattr(args, "m", None) is not None:
            return chow.FlagVariety.from_complement_run(args.n, args.m, args.i)
        raise UsageError("give --dims, or --m and --i")
    except (DomainError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid flag variety: {exc}") from None


def _config(args) -> RunConfig:
    try:
        return RunConfig(args.bound, args.cap, args.samples, args.seed, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


# commands -----------------------------------------------------------------------

def cmd_chow_present(args, cfg) -> str:
    fv = _flag_from_args(args)
    pres = chow.presentation(fv)
    payload = pres.to_json()
    if cfg.format == "text":
        lines = [f"flag variety: {fv}",
                 "variables: " + ", ".join(payload["variables"]),
                 "blocks: " + " | ".join(",".join(b) for b in payload["blocks"]),
                 "relations: " + ", ".join(payload["relations"])]
        return "\n".join(lines)
    return dumps(payload)


def cmd_decide(args, cfg) -> str:
    _require(args, "n", "m")
    if args.dims is not None:
        marked = args.dims
    elif args.i is not None:
        marked = _flag_from_args(args).dims
    else:
        raise UsageError("give --i or --dims")
    v = obstruction.decide_pm_to_flag(args.n, args.m, marked, search=not args.no_search,
                                      bound=cfg.bound, cap=cfg.cap)
    return dumps(v.to_json())


def cmd_decide_flag(args, cfg) -> str:
    _require(args, "source_n", "source_dims", "n", "m")
    target = _flag_from_args(args)
    v = obstruction.decide_flag_to_flag((args.source_n, args.source_dims),
                                        (target.n, args.m, target.dims))
    return dumps(v.to_json())


def cmd_search(args, cfg) -> str:
    _require(args, "m")
    fv = _flag_from_args(args)
    sys_ = obstruction.build_system(fv, args.m)
    sols = obstruction.bounded_search(sys_, cfg.bound, cap=cfg.cap)
    if cfg.format == "csv":
        return obstruction.solutions_csv(sys_, sols).rstrip("\n")
    payload = {
        "flag": fv.to_json(), "m": args.m, "bound": cfg.bound,
        "unknowns": sys_.names,
        "equalities": {c.label: c.polynomial.to_text() for c in sys_.equalities},
        "inequalities": {c.label: c.polynomial.to_text() for c in sys_.inequalities},
        "solutions": [list(s.values) for s in sols],
    }
    if cfg.format == "text":
        rows = [" ".join(sys_.names)] + [" ".join(map(str, s.values)) for s in sols]
        return "\n".join(rows)
    return dumps(payload)


def cmd_identity(args, cfg) -> str:
    kind = args.identity
    if kind == "claim":
        result = {"identity": "claim", "j": args.j, "k": args.k,
                  "holds": symmetric.claim_check(args.j, args.k)}
    elif kind == "genfun":
        result = {"identity": "genfun", "k": args.k, "degree": args.degree,
                  "holds": symmetric.genfun_check(args.k, args.degree)}
    elif kind == "parity":
        rep = obstruction.recurrence_certificate(args.k, args.a_max, args.b1_max, args.length)
        result = {"identity": "parity", **rep.to_json()}
    else:
        trace = obstruction.odd_case_certificate(args.point, args.m)
        result = {"identity": "odd", **trace.to_json()}
    return dumps(result)


def cmd_witness(args, cfg) -> str:
    _require(args, "n", "i", "m")
    if args.witness == "build":
        _require(args, "point")
        p = witness.embed_in_fiber(args.n, args.i, args.m, args.point)
        return dumps(p.to_json())
    fv = chow.FlagVariety.from_complement_run(args.n, args.m, args.i)
    if args.input:
        with (sys.stdin if args.input == "-" else open(args.input)) as fh:
            p = witness.FlagPoint.from_json(json.load(fh))
        return dumps({"flag": fv.to_json(), "valid": witness.verify_flag_point(fv, p)})
    return dumps(witness.verify_batch(args.n, args.i, args.m, cfg.samples, cfg.seed).to_json())


def cmd_bundle(args, cfg) -> str:
    t = bundles.SplittingType(args.m, tuple(args.type))
    return dumps(bundles.classify(t).to_json())


def build_parser() -> argparse.ArgumentParser:
    cfg = _config_parent()
    parser = argparse.ArgumentParser(
        prog="flagmorph",
        description="Constancy verdicts and witnesses for morphisms from P^m to type-A flag varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    chow_p = sub.add_parser("chow", help="Chow ring presentations")
    chow_sub = chow_p.add_subparsers(dest="chow_command", required=True)
    present = chow_sub.add_parser("present", parents=[cfg], help="variables, blocks and relations")
    _add_flag_args(present)
    present.set_defaults(func=cmd_chow_present)

    decide = sub.add_parser("decide", parents=[cfg], help="verdict for P^m -> A_n/P(I)")
    _add_flag_args(decide)
    decide.add_argument("--no-search", action="store_true",
                        help="skip the bounded search attached to Unknown verdicts")
    decide.set_defaults(func=cmd_decide)

    dflag = sub.add_parser("decide-flag", parents=[cfg], help="verdict for A/P(J) -> A_n/P(I)")
    _add_flag_args(dflag)
    dflag.add_argument("--source-n", type=int, help="rank of the source flag variety")
    dflag.add_argument("--source-dims", type=int_list, help="marked dimensions J of the source")
    dflag.set_defaults(func=cmd_decide_flag)

    search = sub.add_parser("search", parents=[cfg], help="bounded search for pullback assignments")
    _add_flag_args(search)
    search.set_defaults(func=cmd_search)

    ident = sub.add_parser("identity", help="symbolic identity checks and certificates")
    id_sub = ident.add_subparsers(dest="identity", required=True)
    claim = id_sub.add_parser("claim", parents=[cfg])
    claim.add_argument("--j", type=int, required=True)
    claim.add_argument("--k", type=int, required=True)
    genfun = id_sub.add_parser("genfun", parents=[cfg])
    genfun.add_argument("--k", type=int, required=True)
    genfun.add_argument("--degree", type=int, required=True, help="truncation degree D")
    parity = id_sub.add_parser("parity", parents=[cfg])
    parity.add_argument("--k", type=int, required=True)
    parity.add_argument("--a-max", type=int, default=6)
    parity.add_argument("--b1-max", type=int, default=6)
    parity.add_argument("--length", type=int, default=10, help="largest l for the parity facts")
    odd = id_sub.add_parser("odd", parents=[cfg], help="replay the odd-degree cascade at a point")
    odd.add_argument("--point", type=int_list, required=True)
    odd.add_argument("--m", type=int, required=True)
    for p in (claim, genfun, parity, odd):
        p.set_defaults(func=cmd_identity)

    wit = sub.add_parser("witness", help="symplectic witness morphisms")
    wit_sub = wit.add_subparsers(dest="witness", required=True)
    build = wit_sub.add_parser("build", parents=[cfg], help="image of one point as a FlagPoint")
    verify = wit_sub.add_parser("verify", parents=[cfg],
                                help="check a FlagPoint file, or a seeded random batch")
    for p in (build, verify):
        p.add_argument("--n", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--m", type=int)
        p.set_defaults(func=cmd_witness)
    build.add_argument("--point", type=fraction_list, help="homogeneous coordinates, e.g. 1,0,1/2,3")
    verify.add_argument("--input", help="FlagPoint JSON file, or - for stdin")

    bundle = sub.add_parser("bundle", help="uniform bundle splitting criteria")
    b_sub = bundle.add_subparsers(dest="bundle_command", required=True)
    classify = b_sub.add_parser("classify", parents=[cfg])
    classify.add_argument("--m", type=int, required=True)
    classify.add_argument("--type", type=int_list, required=True, help="splitting type, e.g. 2,1,1")
    classify.set_defaults(func=cmd_bundle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if cfg.format == "csv" and args.func is not cmd_search:
            raise UsageError("csv output is only available for the search command")
        out = args.func(args, cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"flagmorph: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
