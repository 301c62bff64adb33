"""Command-line interface: ``dyckposet <subcommand> ...``.

Exit status is 0 on success, 1 when the answer is a domain "no" (containment
fails, formula and enumeration disagree) and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import asymptotics, poset, sequences
from .cache import CacheRecord, ResultCache
from .paths import (
    CAP_ENV_VAR,
    DEFAULT_CAP,
    CapExceededError,
    DyckParseError,
    DyckWord,
    factorize,
    generate_all,
    parse,
    render,
    statistics,
)
from .patterns import avoiders, contains, count_avoiders_brute, count_occurrences


class UsageError(Exception):
    pass


def _word(text: str) -> DyckWord:
    try:
        return parse(text)
    except DyckParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _write_csv(rows, out) -> None:
    csv.writer(out, lineterminator="\n").writerows(rows)


def _dump_json(data, out) -> None:
    json.dump(data, out, indent=2)
    out.write("\n")


def cmd_gen(args, out) -> int:
    words = generate_all(args.n, args.cap)
    if args.count:
        print(sum(1 for _ in words), file=out)
        return 0
    for w in words:
        print(render(w, args.alphabet), file=out)
    return 0


def cmd_stats(args, out) -> int:
    q = args.word
    dec = factorize(q)
    st = statistics(q)
    data = {
        "word": q.steps,
        "semilength": str(q.semilength),
        "factor_count": str(dec.k),
        "factors": [f.word.steps for f in dec.factors],
        "factor_semilengths": [str(f) for f in dec.semilengths],
        "factor_ascents": [str(a) for a in dec.ascent_counts],
        "peaks": str(st.peak_count),
        "udu": str(st.udu_count),
        "dud": str(st.dud_count),
    }
    if args.json:
        _dump_json(data, out)
    else:
        for key, value in data.items():
            if isinstance(value, list):
                value = " ".join(value)
            print(f"{key}: {value}", file=out)
    return 0


def cmd_contains(args, out) -> int:
    result = contains(args.text, args.pattern)
    print("true" if result else "false", file=out)
    return 0 if result else 1


def cmd_occurrences(args, out) -> int:
    print(count_occurrences(args.text, args.pattern), file=out)
    return 0


def cmd_covers(args, out) -> int:
    q = args.word
    if args.up:
        count_fn, set_fn = poset.covering_count, poset.covering_set
    else:
        if q.semilength == 0:
            raise UsageError("the empty word covers nothing")
        count_fn, set_fn = poset.covered_count, poset.covered_set
    if args.list:
        for w in set_fn(q):
            print(w.steps or "", file=out)
        return 0
    value = count_fn(q)
    print(value, file=out)
    if args.check:
        listed = len(set_fn(q))
        if listed != value:
            print(f"mismatch: enumeration gives {listed}", file=sys.stderr)
            return 1
    return 0


def _formula_value(pattern: DyckWord, n: int, cap):
    fam = sequences.detect_family(pattern)
    if fam is None:
        raise UsageError(
            f"{pattern.steps or '(empty)'} is not one of the closed-form families; use --method brute"
        )
    return sequences.d_formula(fam, n, cap)


def cmd_avoid(args, out) -> int:
    p, n = args.pattern, args.n
    if args.list:
        for w in avoiders(n, p, args.cap):
            print(w.steps, file=out)
        return 0
    cache = ResultCache(args.cache) if args.cache else None
    cached = cache.get(p.steps, n) if cache else None

    brute = formula = None
    if args.method in ("brute", "both"):
        if cached is not None and cached.engine == "brute":
            brute = cached.count
        else:
            brute = count_avoiders_brute(n, p, args.cap)
            if cache:
                cache.put(CacheRecord(p.steps, n, brute, "brute"))
        print(f"brute {brute}", file=out)
    if args.method in ("formula", "both"):
        res = _formula_value(p, n, args.cap)
        formula = res.value
        if cache:
            cache.put(CacheRecord(p.steps, n, formula, res.engine))
        suffix = "" if res.engine == "formula" else " (no closed form at this n; enumerated)"
        print(f"formula {formula}{suffix}", file=out)
    if args.method == "both":
        ok = brute == formula
        print("match" if ok else "mismatch", file=out)
        return 0 if ok else 1
    return 0


def cmd_crosscheck(args, out) -> int:
    fam = sequences.PatternFamily(sequences.Family(args.family), args.k)
    report = sequences.crosscheck(fam, args.n_max, args.cap)
    _write_csv(report.csv_rows(), out)
    return 0 if report.all_match else 1


def cmd_interval(args, out) -> int:
    iv = poset.interval(args.bottom, args.top, args.cap)
    if args.dot:
        out.write(poset.to_dot(iv))
    elif args.json:
        _dump_json(poset.to_json(iv), out)
    else:
        for layer in iv.layers:
            print(" ".join(w.steps or "-" for w in layer), file=out)
    return 0


def cmd_mobius(args, out) -> int:
    print(poset.mobius(args.bottom, args.top, args.cap), file=out)
    return 0


def cmd_chains(args, out) -> int:
    print(poset.saturated_chain_count(args.bottom, args.top, args.cap), file=out)
    return 0


def cmd_shape(args, out) -> int:
    print(" ".join(map(str, asymptotics.complement_shape(args.word).parts)), file=out)
    return 0


def cmd_alpha(args, out) -> int:
    print(asymptotics.alpha(args.word), file=out)
    return 0


def cmd_conjecture(args, out) -> int:
    if args.pattern.semilength == 0:
        raise UsageError("the conjecture needs a nonempty pattern")
    report = asymptotics.conjecture_report(args.pattern, args.n_max, args.n_min, args.cap)
    if args.format == "json":
        _dump_json(report.to_json(), out)
    elif args.format == "csv":
        _write_csv(report.csv_rows(), out)
    else:
        data = report.to_json()

        def frac(f):
            if f is None:
                return "-"
            return f["num"] if f["den"] == "1" else f"{f['num']}/{f['den']}"

        print(f"pattern: {data['pattern']}  x={data['x']} a={data['a']} b={data['b']} "
              f"k={data['k']} alpha={data['alpha']}", file=out)
        print(f"predicted constant: {frac(data['predicted_constant'])}", file=out)
        print(f"trailing ratio d_n/n^k: {frac(data['trailing_ratio'])}", file=out)
        print(f"k-th difference estimate: {frac(data['difference_estimate'])}", file=out)
        flag = "degenerate" if report.degenerate else ("DIVERGENT" if report.divergent else "equal")
        print(f"predicted vs trailing: {flag}", file=out)
        _write_csv(report.csv_rows(), out)
    return 0


def cmd_tables(args, out) -> int:
    n = args.size
    if args.which == "catalan":
        rows = [["n", "catalan"]] + [[str(i), str(sequences.catalan(i))] for i in range(n + 1)]
    elif args.which == "narayana":
        rows = [[str(sequences.narayana(i, j)) for j in range(i + 1)] for i in range(n + 1)]
    else:
        rows = [[str(sequences.ballot(i, j)) for j in range(i + 1)] for i in range(n + 1)]
    _write_csv(rows, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckposet",
        description="Exact computations in the Dyck pattern poset.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cap", type=int, default=None,
        help=f"largest semilength to enumerate (default ${CAP_ENV_VAR} or {DEFAULT_CAP})",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "list all Dyck words of a semilength")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--alphabet", choices=["UD", "()", "10"], default="UD")
    p.add_argument("--count", action="store_true", help="print only the number of words")

    p = add("stats", cmd_stats, "factor decomposition and window statistics")
    p.add_argument("word", type=_word)
    p.add_argument("--json", action="store_true")

    for name, func, help_text in (
        ("contains", cmd_contains, "does TEXT contain PATTERN"),
        ("occurrences", cmd_occurrences, "number of occurrences of PATTERN in TEXT"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--text", type=_word, required=True)
        p.add_argument("--pattern", type=_word, required=True)

    p = add("covers", cmd_covers, "words covered by / covering a word")
    p.add_argument("word", type=_word)
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--down", action="store_true", help="words covered by WORD (default)")
    direction.add_argument("--up", action="store_true", help="words covering WORD")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="closed-form count (default)")
    mode.add_argument("--list", action="store_true", help="enumerate the words")
    p.add_argument("--check", action="store_true", help="compare the count with the enumeration")

    p = add("avoid", cmd_avoid, "count words of semilength N avoiding PATTERN")
    p.add_argument("--pattern", type=_word, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=["brute", "formula", "both"], default="brute")
    p.add_argument("--list", action="store_true", help="list the avoiders instead of counting")
    p.add_argument("--cache", metavar="DIR", help="directory of cached counts")

    p = add("crosscheck", cmd_crosscheck, "closed form against enumeration, as CSV")
    p.add_argument("--family", choices=[f.value for f in sequences.Family], required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = add("interval", cmd_interval, "Hasse diagram of [BOTTOM, TOP]")
    p.add_argument("bottom", type=_word)
    p.add_argument("top", type=_word)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    for name, func, help_text in (
        ("mobius", cmd_mobius, "Möbius function mu(BOTTOM, TOP)"),
        ("chains", cmd_chains, "saturated chains from BOTTOM to TOP"),
    ):
        p = add(name, func, help_text)
        p.add_argument("bottom", type=_word)
        p.add_argument("top", type=_word)

    p = add("shape", cmd_shape, "Ferrers shape between WORD and U^xD^x")
    p.add_argument("word", type=_word)

    p = add("alpha", cmd_alpha, "saturated Dyck-lattice chains from WORD to U^xD^x")
    p.add_argument("word", type=_word)

    p = add("conjecture", cmd_conjecture, "exact growth report for d_n(PATTERN)")
    p.add_argument("pattern", type=_word)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")

    p = add("tables", cmd_tables, "Catalan, Narayana or ballot numbers")
    which = p.add_mutually_exclusive_group(required=True)
    for name in ("catalan", "narayana", "ballot"):
        which.add_argument(f"--{name}", dest="which", action="store_const", const=name)
    p.add_argument("size", type=int, nargs="?", default=10, help="largest index (default 10)")

    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, CapExceededError, poset.NotComparableError, ValueError) as exc:
        print(f"dyckposet {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
