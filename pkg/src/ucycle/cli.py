"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 runtime guard (step limit, overflow, enumeration too large).
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import CountOverflowError, TooLargeError
from .euler import NotEulerianError, generate_random_ucycle
from .families import FAMILY_NAMES, FamilyError, make_family
from .oracle import enumerate_all_ucycles, verify_ucycle
from .rng import RandomStream
from .samplers import RejectionLimitError, random_word
from .stats import covertime_experiment, report_dict, uniformity_test
from .walk import WalkAbortedError
from .words import InvalidSymbolError, format_word, parse_word

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, help="64-bit seed (default: system entropy, echoed)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output")
    fmt.add_argument("--tsv", action="store_true", help="tab-separated output")
    common.add_argument("--max-steps", type=int, help="backward-walk step guard (default 10^4 |S|)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--engine", choices=("auto", "dense", "reference"), default="auto")

    fam = _Parser(add_help=False)
    fam.add_argument("--family", required=True, choices=FAMILY_NAMES)
    fam.add_argument("--n", type=int)
    fam.add_argument("--k", type=int)
    fam.add_argument("--t", type=int, help="subset weight")
    fam.add_argument("--content", type=_int_list, help="multiset multiplicities c0,c1,...")
    fam.add_argument("--min", dest="lo", type=int, help="minimum weight")
    fam.add_argument("--max", dest="hi", type=int, help="maximum weight")
    fam.add_argument("--z", type=int, help="forbidden zero-run length")

    p = _Parser(prog="ucycle", description="Uniformly random universal cycles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    parents = [common, fam]

    g = sub.add_parser("generate", parents=parents, help="random universal cycles")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--stats", action="store_true", help="append steps, ratio, attempts")

    s = sub.add_parser("sample", parents=parents, help="random members of S")
    s.add_argument("--count", type=int, default=1)

    v = sub.add_parser("verify", parents=parents, help="check sequences (argument or stdin)")
    v.add_argument("sequence", nargs="?")

    sub.add_parser("enumerate", parents=parents, help="all universal cycles (small S)")
    sub.add_parser("count", parents=parents, help="print |S| and |V|")

    c = sub.add_parser("covertime", parents=parents, help="cover-time ratio statistics")
    c.add_argument("--iters", type=int, default=10000)
    c.add_argument("--full", action="store_true", help="run the complete generation")

    u = sub.add_parser("uniformity", parents=parents, help="chi-square test against the oracle")
    u.add_argument("--samples", type=int, default=1000)
    return p


def _family(args):
    return make_family(args.family, n=args.n, k=args.k, t=args.t, content=args.content,
                       lo=args.lo, hi=args.hi, z=args.z)


def _stream(args, err):
    if args.seed is None:
        r = RandomStream()
        print(f"# seed {r.seed}", file=err)
        return r
    return RandomStream(args.seed)


def run(argv, out, err) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        f = _family(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except (FamilyError, InvalidSymbolError) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except (TooLargeError, CountOverflowError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_GUARD
    try:
        return COMMANDS[args.command](args, f, out, err)
    except (WalkAbortedError, TooLargeError, CountOverflowError, OverflowError,
            RejectionLimitError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_GUARD
    except InvalidSymbolError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except NotEulerianError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_VERIFY


def cmd_generate(args, f, out, err):
    r = _stream(args, err)
    off = f.display_offset
    for i in range(args.count):
        seq, st = generate_random_ucycle(f, r.split(i), max_steps=args.max_steps,
                                         engine=args.engine)
        line = format_word(seq, off)
        if args.stats:
            line += f"\t{st.steps}\t{st.cover_ratio:.6f}\t{st.attempts}"
        print(line, file=out)
    return EXIT_OK


def cmd_sample(args, f, out, err):
    r = _stream(args, err)
    for i in range(args.count):
        print(format_word(random_word(f, r.split(i)), f.display_offset), file=out)
    return EXIT_OK


def cmd_verify(args, f, out, err):
    if args.sequence is not None:
        lines = [args.sequence]
    else:
        lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    status = EXIT_OK
    for ln in lines:
        seq = parse_word(ln.split("\t")[0], f.display_offset)
        res = verify_ucycle(f, seq)
        print("ok" if res.ok else f"FAIL {res.kind}: {res.message}", file=out)
        if not res.ok:
            status = EXIT_VERIFY
    return status


def cmd_enumerate(args, f, out, err):
    for seq in sorted(enumerate_all_ucycles(f)):
        print(format_word(seq, f.display_offset), file=out)
    return EXIT_OK


def cmd_count(args, f, out, err):
    s, v = f.cardinality, f.vertex_count()
    if args.json:
        print(json.dumps({"family": f.name, "params": _jsonable(f.params()), "S": s, "V": v}),
              file=out)
    elif args.tsv:
        print(f"{s}\t{v}", file=out)
    else:
        print(f"|S| = {s}", file=out)
        print(f"|V| = {v}", file=out)
    return EXIT_OK


def cmd_covertime(args, f, out, err):
    r = _stream(args, err)
    rep = covertime_experiment(f, args.iters, r, threads=args.threads, full=args.full,
                               max_steps=args.max_steps, engine=args.engine)
    if args.json:
        d = rep.to_json()
        d["params"] = _jsonable(d["params"])
        print(json.dumps(d), file=out)
    elif args.tsv:
        print("\t".join(str(x) for x in (rep.iterations, f"{rep.min_ratio:.4f}",
                                         f"{rep.max_ratio:.4f}", f"{rep.avg_ratio:.4f}",
                                         f"{rep.wall_seconds:.3f}")), file=out)
    else:
        print(f"{f!r}  iterations={rep.iterations}  min={rep.min_ratio:.2f}  "
              f"max={rep.max_ratio:.2f}  avg={rep.avg_ratio:.2f}  "
              f"seconds={rep.wall_seconds:.2f}", file=out)
    if rep.error:
        print(f"error: {rep.error} (partial report over {rep.completed} iterations)", file=err)
        return EXIT_GUARD
    return EXIT_OK


def cmd_uniformity(args, f, out, err):
    r = _stream(args, err)
    res = uniformity_test(f, args.samples, r)
    if args.json:
        print(json.dumps({"chi_square": res.chi_square, "dof": res.dof,
                          "threshold": res.threshold, "pass": res.passed}), file=out)
    else:
        print(f"chi_square={res.chi_square:.3f}  dof={res.dof}  "
              f"threshold={res.threshold:.3f}  {'pass' if res.passed else 'FAIL'}", file=out)
    return EXIT_OK if res.passed else EXIT_VERIFY


def _jsonable(params):
    return {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}


COMMANDS = {
    "generate": cmd_generate,
    "sample": cmd_sample,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "covertime": cmd_covertime,
    "uniformity": cmd_uniformity,
}


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
