"""Command-line front end.

Every subcommand writes one JSON object per line to stdout (or a plain
table with ``--output table``) and, for experiment commands, a verdict
summary to stderr.  Exit status: 0 when everything passed, 1 when any
FAIL or FINDING occurred, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter
from typing import Iterable, Optional, Sequence

from . import __version__
from .conjectures import (
    FAIL,
    FINDING,
    PASS,
    ExperimentRecord,
    boros_moll_row,
    check_conjecture,
    check_qr_relation,
    logconcavity_record,
    multiplier_check,
    sector_experiment,
)
from .polycore import ParseError, Poly, format_poly_text, format_rational, parse_poly, parse_weights, poly_to_json
from .pool import default_jobs
from .rootcert import is_in_p_plus, is_real_rooted, is_weakly_hurwitz
from .symfunc import Identity, Mode, verify_identity
from .transforms import Kind, TransformSpec, apply_transform, iterate_transform

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- output helpers ---------------------------------------------------------

def _clean(obj):
    """Make an object strict-JSON safe: non-finite floats become strings."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(_clean(obj), allow_nan=False)


class Emitter:
    """Buffers records and writes them in the order they were produced."""

    def __init__(self, args, out=None, err=None):
        self.mode = args.output
        self.timing = args.timing
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.verdicts: Counter = Counter()

    def record(self, obj: dict, row: Sequence[str], verdict: str):
        self.verdicts[verdict] += 1
        if self.mode == "json":
            print(dumps(obj), file=self.out)
        else:
            print("  ".join(row), file=self.out)

    def experiments(self, records: Iterable[ExperimentRecord]):
        for r in records:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            self.record(r.to_json(self.timing), [r.verdict.ljust(8), r.experiment, params], r.verdict)

    def summary(self):
        if not self.verdicts:
            return
        width = max(len(k) for k in self.verdicts)
        print("verdict".ljust(width) + "  count", file=self.err)
        for k in sorted(self.verdicts):
            print(k.ljust(width) + f"  {self.verdicts[k]:5d}", file=self.err)

    def exit_code(self) -> int:
        return EXIT_FAIL if self.verdicts[FAIL] or self.verdicts[FINDING] else EXIT_OK


# -- input ------------------------------------------------------------------

def read_poly(path: str) -> Poly:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    return parse_poly(text)


def transform_spec(args) -> TransformSpec:
    kind = Kind(args.op)
    weights = None
    if kind in (Kind.U_ALPHA, Kind.V_ALPHA):
        if args.alpha is None:
            raise UsageError(f"--op {args.op} needs --alpha")
        weights = parse_weights(args.alpha)
    elif kind is Kind.T_MU:
        if args.mu is None:
            raise UsageError("--op T needs --mu")
        weights = parse_weights(args.mu)
    r = None
    if kind in (Kind.S_R, Kind.S_R_PRIME):
        if args.r is None:
            raise UsageError(f"--op {args.op} needs --r")
        r = args.r
    return TransformSpec(kind, weights, r)


# -- commands ---------------------------------------------------------------

def cmd_certify(args, em: Emitter) -> int:
    p = read_poly(args.file)
    if args.property == "real-rooted":
        if p.is_zero():
            raise UsageError("the zero polynomial has no real-rootedness verdict")
        cert = is_real_rooted(p, isolate=not args.no_isolate)
    elif args.property == "p-plus":
        cert = is_in_p_plus(p, args.n, isolate=not args.no_isolate)
    else:
        cert = is_weakly_hurwitz(p)
    verdict = FAIL if not cert.passed else PASS
    em.record(cert.to_json(), [cert.verdict.value, f"degree={cert.degree}",
                               f"distinct_real_roots={cert.distinct_real_roots}", cert.fail_reason or ""], verdict)
    return em.exit_code()


def cmd_transform(args, em: Emitter) -> int:
    out = apply_transform(transform_spec(args), read_poly(args.file))
    if em.mode == "json":
        print(dumps(poly_to_json(out)), file=em.out)
    else:
        print(format_poly_text(out), file=em.out)
    return EXIT_OK


def cmd_iterate(args, em: Emitter) -> int:
    depth = args.depth if args.depth is not None else 10
    rep = iterate_transform(transform_spec(args), read_poly(args.file), depth, args.check)
    verdict = PASS if rep.depth_achieved == depth else FINDING
    em.record(rep.to_json(), [verdict.ljust(8), f"depth={rep.depth_achieved}/{depth}", rep.failure or ""], verdict)
    return em.exit_code()


def cmd_identity(args, em: Emitter) -> int:
    mu = parse_weights(args.mu) if args.mu is not None else None
    trials = args.trials if args.trials is not None else 50
    try:
        rep = verify_identity(args.check, mu, args.n, args.mode, trials, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = PASS if rep.verdict else FAIL
    em.record(rep.to_json(), [verdict.ljust(8), rep.identity.value, f"n={rep.n}", rep.mode.value,
                              f"trials={rep.trials}"], verdict)
    return em.exit_code()


def _coeff_record(m: int) -> ExperimentRecord:
    return ExperimentRecord("borosmoll-coeffs", {"m": m}, PASS,
                            {"d": [format_rational(c) for c in boros_moll_row(m).d]})


def _qr_record(m: int) -> ExperimentRecord:
    return ExperimentRecord("borosmoll-qr", {"m": m}, PASS if check_qr_relation(m) else FAIL, {})


def cmd_borosmoll(args, em: Emitter) -> int:
    ms = range(args.m_max + 1)
    if args.check == "coeffs":
        recs = [_coeff_record(m) for m in ms]
    elif args.check == "qr":
        recs = [_qr_record(m) for m in ms]
    elif args.check == "logconcave":
        depth = args.depth if args.depth is not None else 5
        recs = [logconcavity_record(m, depth) for m in ms]
    else:
        recs = check_conjecture(args.check, args.m_max, args.jobs)
    em.experiments(recs)
    return em.exit_code()


def cmd_multiplier(args, em: Emitter) -> int:
    em.experiments(multiplier_check(parse_weights(args.lam), args.n_max, args.n_min))
    return em.exit_code()


def cmd_sector(args, em: Emitter) -> int:
    rec = sector_experiment(parse_weights(args.alpha), read_poly(args.poly), args.theta, args.kind, args.slack)
    em.experiments([rec])
    return em.exit_code()


def cmd_selftest(args, em: Emitter) -> int:
    from .acceptance import run_all

    results = run_all(quick=not args.full, seed=args.seed)
    for r in results:
        obj = {"criterion": r.number, "title": r.title, "verdict": PASS if r.ok else FAIL, "detail": r.detail}
        if em.timing:
            obj["seconds"] = round(r.seconds, 6)
        if em.mode == "json":
            em.record(obj, [], obj["verdict"])
        else:
            em.record(obj, [r.line()], obj["verdict"])
    if em.mode == "json":
        for r in results:
            print(r.line(), file=em.err)
    return em.exit_code()


# -- parser -----------------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = p.add_argument_group("global options")
    g.add_argument("--seed", type=int, default=d(0), help="master seed (default 0)")
    g.add_argument("--jobs", type=int, default=d(None), help="worker processes (default: $ZEROGEOM_JOBS or all cores)")
    g.add_argument("--output", choices=("json", "table"), default=d(None),
                   help="json lines (default) or a plain table; transform defaults to the text format")
    g.add_argument("--slack", type=float, default=d(1e-9), help="angle slack for numeric checks")
    g.add_argument("--depth", type=int, default=d(None))
    g.add_argument("--trials", type=int, default=d(None))
    g.add_argument("--timing", action="store_true", default=d(False), help="include wall times (not deterministic)")


def _op_flags(p: argparse.ArgumentParser):
    p.add_argument("--op", required=True, choices=[k.value for k in Kind])
    p.add_argument("--alpha", help="weights for U and V, dense '1,-1' or sparse '0:1,1:-1'")
    p.add_argument("--mu", help="weights for T")
    p.add_argument("--r", type=int, help="shift for Sr and Sr-prime")
    p.add_argument("file", help="polynomial file, or - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zerogeom", description="Exact zero-location certificates for coefficient transforms.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        _global_flags(sp, suppress=True)
        sp.set_defaults(func=fn)
        return sp

    sp = add("certify", cmd_certify, "certify a zero-location property")
    sp.add_argument("property", choices=("real-rooted", "p-plus", "hurwitz"))
    sp.add_argument("file", help="polynomial file, or - for stdin")
    sp.add_argument("--n", type=int, help="degree bound for p-plus (default: the degree)")
    sp.add_argument("--no-isolate", action="store_true", help="skip isolating intervals")

    _op_flags(add("transform", cmd_transform, "apply one coefficient transform"))

    sp = add("iterate", cmd_iterate, "iterate a transform and check each iterate")
    _op_flags(sp)
    sp.add_argument("--check", choices=("nonneg", "in_p_plus"), default="nonneg")

    sp = add("identity", cmd_identity, "verify a symmetric-function identity")
    sp.add_argument("--check", required=True, choices=[i.value for i in Identity])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mu", help="weights for el-exp")
    sp.add_argument("--mode", choices=[m.value for m in Mode], default="random")

    sp = add("borosmoll", cmd_borosmoll, "Boros-Moll coefficients and conjecture probes")
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--check", choices=("coeffs", "logconcave", "fact0", "fact2", "qr"), default="coeffs")

    sp = add("multiplier", cmd_multiplier, "finite multiplier-sequence test")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=0)

    sp = add("sector", cmd_sector, "sector-doubling experiment for U or V")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", type=float, required=True)
    sp.add_argument("--poly", required=True, help="polynomial file, or - for stdin")
    sp.add_argument("--kind", choices=("U", "V"), default="U")

    sp = add("selftest", cmd_selftest, "run the acceptance checks")
    sp.add_argument("--full", action="store_true", help="full sample sizes instead of the fast subset")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.jobs is None:
        args.jobs = default_jobs()
    if args.output is None:
        args.output = "table" if args.command == "transform" else "json"
    em = Emitter(args)
    try:
        code = args.func(args, em)
    except (UsageError, ParseError, ValueError, OSError) as exc:
        print(f"zerogeom {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    em.summary()
    return code


if __name__ == "__main__":
    sys.exit(main())
