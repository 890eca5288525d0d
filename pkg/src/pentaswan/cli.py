"""Command-line front end.

Thin adapters only: every subcommand parses flags, calls the library, and
formats the result.  Exit codes: 0 success, 1 usage error, 2 internal
invariant violation (two routes that must agree did not -- that would be a
finding, not a usage problem).
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from . import __version__, gf2poly, search, swan, verify, zpoly
from .gf2poly import BitPoly, PentShape, ShapeError
from .swan import OutOfTheoryError
from .zpoly import ConsistencyError

USAGE_ERROR = 1
INVARIANT_VIOLATION = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on bad usage, not argparse's 2
        raise _UsageError(message)


def _poly_from_args(args) -> BitPoly:
    if args.poly is not None:
        return BitPoly.from_hex(args.poly)
    if args.n is None:
        raise _UsageError("need --poly or --n")
    if args.k is not None:
        if not args.n > args.k > 0:
            raise _UsageError("trinomial needs n > k > 0")
        return BitPoly.from_exponents([args.n, args.k, 0])
    if args.s is None:
        raise _UsageError("need --s (pentanomial), --k (trinomial) or --poly")
    return gf2poly.pent_poly(PentShape(args.n, args.s))


def _parse_mod(text: str) -> int | None:
    if text == "exact":
        return None
    if text.startswith("2^") and text[2:].isdigit():
        return 1 << int(text[2:])
    raise _UsageError(f"--mod must be 'exact' or '2^k', got {text!r}")


def _emit(args, human: str, machine: dict) -> None:
    if getattr(args, "format", None) == "json":
        print(json.dumps(machine, sort_keys=True))
    else:
        print(human)


def _cmd_predict(args) -> int:
    if args.k is not None:
        verdict = swan.trinomial_parity(args.n, args.k)
        name = f"X^{args.n}+X^{args.k}+1"
        human = (
            f"{name}: even factor count, reducible (Swan case for n={args.n}, k={args.k})"
            if verdict.implies_reducible
            else f"{name}: odd factor count, inconclusive for irreducibility"
        )
        _emit(args, human, {"n": args.n, "k": args.k, "parity": verdict.parity,
                            "implies_reducible": verdict.implies_reducible})
        return 0
    if args.s is None:
        raise _UsageError("predict needs --n with --s (pentanomial) or --k (trinomial)")
    shape = PentShape(args.n, args.s)
    if args.s % 2:
        raise OutOfTheoryError("no closed form for odd s; use the brute-force 'test'")
    certified = swan.thm1_reducible(shape)
    machine: dict = {"n": args.n, "s": args.s, "certified_reducible": certified}
    if args.n % 2 == 0:
        human = f"reducible (perfect square: n = {args.n} and s = {args.s} both even)"
    else:
        verdict = swan.pent_parity(shape)
        machine["parity"] = verdict.parity
        machine["discriminant_mod8"] = swan.pent_discriminant_closed_form(shape)
        if certified:
            human = (
                f"reducible (even factor count: n = {args.n} with n mod 8 = {args.n % 8}, s even)"
            )
        else:
            human = (
                f"no certificate (odd factor count: n = {args.n} with n mod 8 = {args.n % 8}; "
                "odd parity is inconclusive for irreducibility)"
            )
    _emit(args, human, machine)
    return 0


def _cmd_test(args) -> int:
    p = _poly_from_args(args)
    if p.degree < 1:
        raise _UsageError("polynomial must have degree at least 1")
    total, parity = gf2poly.factor_count(p)
    irreducible = gf2poly.is_irreducible(p)
    if irreducible != (total == 1):
        raise ConsistencyError(
            f"irreducibility test and factor count disagree on {p!r}"
        )
    human = (
        "irreducible, 1 factor"
        if irreducible
        else f"reducible, {total} factors (parity {parity})"
    )
    _emit(args, human, {"poly": p.to_hex(), "degree": p.degree, "irreducible": irreducible,
                        "factors": total, "parity": parity})
    return 0


def _cmd_disc(args) -> int:
    routes: dict[str, int] = {}
    shape = None
    if args.poly is None:
        if args.n is None or args.s is None:
            raise _UsageError("disc needs --n and --s, or --poly")
        shape = PentShape(args.n, args.s)
        F = zpoly.lift(gf2poly.pent_poly(shape))
    else:
        F = zpoly.lift(BitPoly.from_hex(args.poly))
    if args.oracle in ("closed", "both"):
        if shape is None:
            raise _UsageError("the closed form needs a shape (--n/--s), not --poly")
        routes["closed_form"] = swan.pent_discriminant_closed_form(shape)
    if args.oracle in ("resultant", "both"):
        routes["resultant"] = zpoly.discriminant_mod8(F)
    lines = [f"{name}: {value}" for name, value in routes.items()]
    agree = len(set(routes.values())) == 1
    if len(routes) > 1:
        lines.append("agree" if agree else "DISAGREE")
    _emit(args, "\n".join(lines), {**routes, "agree": agree})
    if not agree:
        raise ConsistencyError("discriminant routes disagree")
    return 0


def _cmd_powersums(args) -> int:
    p = _poly_from_args(args)
    F = zpoly.lift(p)
    table = zpoly.power_sums(F, args.upto, _parse_mod(args.mod))
    if args.format == "json":
        print(json.dumps({"poly": p.to_hex(), "modulus": table.modulus,
                          "values": {str(m): table[m] for m in range(args.upto + 1)}}))
    else:
        for m in range(args.upto + 1):
            print(f"S_{m} = {table[m]}")
    return 0


def _cmd_search(args) -> int:
    if args.format not in ("csv", "jsonl"):
        raise _UsageError("search --format must be csv or jsonl")
    shapes = search.enumerate_shapes(args.n_min, args.n_max, args.s_parity, args.n_parity)
    kept: list[search.SearchRecord] = []
    if args.resume:
        if not args.out:
            raise _UsageError("--resume needs --out")
        try:
            with open(args.out) as f:
                previous = search.read_csv(f) if args.format == "csv" else search.read_jsonl(f)
        except FileNotFoundError:
            previous = []
        restart = search.checkpoint_restart_n(previous)
        if restart is not None:
            # the last n-column may be partial: redo it, keep everything below
            kept = [rec for rec in previous if rec.n < restart]
            shapes = (sh for sh in shapes if sh.n >= restart)
    records = search.survey(shapes, prune=not args.no_prune,
                            prefilter_depth=args.prefilter_depth, jobs=args.jobs)
    writer = search.write_csv if args.format == "csv" else search.write_jsonl

    def emit(out):
        def stream():
            yield from kept
            yield from records
        return writer(stream(), out)

    with open(args.out, "w", newline="") if args.out else nullcontext(sys.stdout) as out:
        count = emit(out)
    print(f"classified {count} shapes", file=sys.stderr)
    return 0


def _cmd_stats(args) -> int:
    with open(args.input) if args.input != "-" else nullcontext(sys.stdin) as f:
        first = f.read(1)
        rest = first + f.read()
    records = (
        search.read_jsonl(rest.splitlines(True).__iter__())
        if first == "{"
        else search.read_csv(rest.splitlines(True).__iter__())
    )
    print(json.dumps(search.stats(records).to_json_dict(), indent=2, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_all(
        parity_max=args.parity_max, thm1_max=args.thm1_max, disc_max=args.disc_max,
        trinomial_max=args.trinomial_max, powersum_max=args.powersum_max,
        pair_max=args.pair_max, jobs=args.jobs,
    )
    for r in results:
        print(r.summary())
    return 0 if all(r.ok for r in results) else INVARIANT_VIOLATION


def build_parser() -> _Parser:
    parser = _Parser(prog="pentaswan", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext):
        p = sub.add_parser(name, help=helptext)
        p.set_defaults(fn=fn)
        return p

    p = add("predict", _cmd_predict, "closed-form parity / reducibility verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int, help="trinomial exponent (predict for X^n+X^k+1)")
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = add("test", _cmd_test, "brute-force irreducibility and factor count")
    p.add_argument("--poly", help="hex coefficient string, X^0 coefficient first")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = add("disc", _cmd_disc, "discriminant mod 8 via closed form and/or resultant")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--poly")
    p.add_argument("--oracle", choices=("closed", "resultant", "both"), default="both")
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = add("powersums", _cmd_powersums, "power sums of the roots of the integer lift")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--poly")
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--mod", default="exact", help="'exact' or '2^k'")
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = add("search", _cmd_search, "survey a range of shapes, emitting CSV or JSONL")
    p.add_argument("--n-min", type=int, default=7)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--s-parity", choices=("even", "odd"), default="even")
    p.add_argument("--n-parity", choices=("odd", "all"), default="odd")
    p.add_argument("--prefilter-depth", type=int, default=search.DEFAULT_PREFILTER_DEPTH)
    p.add_argument("--no-prune", action="store_true",
                   help="skip the closed-form certificate, test every shape")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--resume", action="store_true",
                   help="continue an interrupted run from the last complete n in --out")

    p = add("stats", _cmd_stats, "aggregate a survey CSV/JSONL into a JSON report")
    p.add_argument("input", help="path to a survey file, or - for stdin")

    p = add("verify", _cmd_verify, "run the closed-form vs oracle agreement suites")
    p.add_argument("--parity-max", type=int, default=500)
    p.add_argument("--thm1-max", type=int, default=500)
    p.add_argument("--disc-max", type=int, default=60)
    p.add_argument("--trinomial-max", type=int, default=300)
    p.add_argument("--powersum-max", type=int, default=200)
    p.add_argument("--pair-max", type=int, default=120)
    p.add_argument("--jobs", type=int, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except (ShapeError, OutOfTheoryError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except ConsistencyError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return INVARIANT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
