"""Command-line front end: gen, rank, check, minimize, emn, dump.

Exit codes: 0 success/PASS, 1 FAIL verdict, 2 input error, 3 I/O error,
4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import errors
from .fixpoint import RecalcConfig, linear_fair_ranking
from .optimize import (
    emn_sweep_composite,
    min_backward_fair,
    min_backward_injective,
    verify_copeland_upper_bound,
)
from .ranking import (
    FairnessClass,
    Ranking,
    backward_arcs,
    copeland_ranking,
    is_fair,
    parse_ranking,
    serialize_ranking,
)
from .tournament import (
    gen_composite,
    gen_random,
    gen_rotational,
    parse_tournament,
    serialize_tournament,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_VERIFY = 4


def frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator} (~{float(f):.6f})"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_tournament(path: str):
    return parse_tournament(_read(path))


# -- subcommands ------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family == "rotational":
        if args.l is None:
            raise errors.TournamentSyntaxError("--l is required for rotational")
        t = gen_rotational(args.l)
    elif args.family == "composite":
        if args.l is None:
            raise errors.TournamentSyntaxError("--l is required for composite")
        t = gen_composite(args.l)
    else:
        if args.n is None:
            raise errors.TournamentSyntaxError("--n is required for random")
        t = gen_random(args.n, args.seed)
    _write(args.out, serialize_tournament(t))
    summary = f"n={t.n} edges={t.num_arcs}"
    if args.out == "-":
        print(summary, file=sys.stderr)
    else:
        print(summary)
    return EXIT_OK


def cmd_rank(args) -> int:
    t = _load_tournament(args.in_path)
    if args.method == "copeland":
        r = copeland_ranking(t)
        report = backward_arcs(t, r)
        _write(args.out, serialize_ranking(r))
        print(f"method=copeland bw={frac_str(report.fraction)}")
        return EXIT_OK
    result = linear_fair_ranking(t, RecalcConfig())
    report = backward_arcs(t, result.ranking)
    _write(args.out, serialize_ranking(result.ranking))
    print(f"method=linear-fair bw={frac_str(report.fraction)} "
          f"escalations={result.escalations}")
    for comp in result.components:
        if comp.perron is None:
            print(f"  component {list(comp.vertices)}: singleton")
        else:
            print(f"  component {list(comp.vertices)}: lambda={comp.perron.eigenvalue:.9f} "
                  f"residual={comp.perron.residual:.3e}")
    if args.json_report:
        _write(args.json_report, json.dumps(result.to_json(), indent=2) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    t = _load_tournament(args.in_path)
    r = parse_ranking(_read(args.ranking))
    r.require_domain(t)
    c = FairnessClass.from_string(args.cls)
    verdict = is_fair(t, r, c)
    report = backward_arcs(t, r)
    if verdict.ok:
        print(f"PASS class={c.value} bw={frac_str(report.fraction)}")
        return EXIT_OK
    print(f"FAIL class={c.value} pair={verdict.certificate} reason={verdict.reason} "
          f"bw={frac_str(report.fraction)}")
    return EXIT_FAIL


def cmd_minimize(args) -> int:
    t = _load_tournament(args.in_path)
    if args.space == "injective":
        res = min_backward_injective(t)
    else:
        c = FairnessClass.from_string(args.cls)
        res = min_backward_fair(t, c)
    print(f"space={args.space} count={res.count} fraction={frac_str(res.fraction)}")
    witness = " ".join(
        f"{v}:{res.witness[v]}" for v in sorted(res.witness.values.keys())
    )
    print(f"witness {witness}")
    return EXIT_OK


def cmd_emn(args) -> int:
    if args.exhaustive is not None:
        report = verify_copeland_upper_bound(args.exhaustive, mode="exhaustive")
        if args.format == "json":
            payload = {
                "n": report.n,
                "checked": report.checked,
                "bound": {"num": report.bound.numerator, "den": report.bound.denominator},
                "max_fraction": {
                    "num": report.max_fraction.numerator,
                    "den": report.max_fraction.denominator,
                },
                "all_within": report.all_within,
            }
            print(json.dumps(payload, indent=2))
        else:
            print(f"n={report.n} checked={report.checked} "
                  f"bound={frac_str(report.bound)} max={frac_str(report.max_fraction)} "
                  f"within={'yes' if report.all_within else 'NO'}")
        return EXIT_OK if report.all_within else EXIT_VERIFY
    report = emn_sweep_composite(args.lmax, args.materialize)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print("l     n      edges        min_bw       fraction")
        for row in report.rows:
            mark = "*" if row.materialized else " "
            print(f"{row.l:<5d} {row.n:<6d} {row.edges:<12d} {row.min_backward:<12d} "
                  f"{frac_str(row.fraction)}{mark}")
        print(f"limit {frac_str(report.limit)}")
    return EXIT_OK


def cmd_dump(args) -> int:
    t = _load_tournament(args.in_path)
    if args.ranking:
        r = parse_ranking(_read(args.ranking))
        r.require_domain(t)
    else:
        r = None
    if r is None:
        order = list(t.vertices())
        backward = set()
    else:
        order = sorted(t.vertices(), key=lambda v: (r[v], v))
        backward = set(backward_arcs(t, r).backward)
    header = "    " + " ".join(f"{v:>3d}" for v in order)
    print(header)
    for x in order:
        cells = []
        for y in order:
            if x == y:
                cells.append("  . ")
            elif t.has_arc(x, y):
                cells.append("[*] " if (x, y) in backward else " *  ")
            else:
                cells.append(" .  ")
        print(f"{x:>3d} " + "".join(cells))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fairrank",
                                description="Tournament rankings under fairness axioms")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="generate a tournament")
    g.add_argument("--family", choices=["rotational", "composite", "random"], required=True)
    g.add_argument("--l", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("rank", help="compute a ranking")
    r.add_argument("--in", dest="in_path", required=True)
    r.add_argument("--method", choices=["copeland", "linear-fair"], required=True)
    r.add_argument("--out", default="-")
    r.add_argument("--json-report", default=None)
    r.set_defaults(func=cmd_rank)

    c = sub.add_parser("check", help="check a ranking against a fairness class")
    c.add_argument("--in", dest="in_path", required=True)
    c.add_argument("--ranking", required=True)
    c.add_argument("--class", dest="cls", required=True,
                   choices=[fc.value for fc in FairnessClass])
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("minimize", help="minimize backward arcs over a ranking class")
    m.add_argument("--in", dest="in_path", required=True)
    m.add_argument("--space", choices=["injective", "weak-orders"], required=True)
    m.add_argument("--class", dest="cls", default="weak",
                   choices=[fc.value for fc in FairnessClass])
    m.set_defaults(func=cmd_minimize)

    e = sub.add_parser("emn", help="backward-fraction harness for the 3/4 limit")
    e.add_argument("--family", choices=["composite"], default="composite")
    e.add_argument("--lmax", type=int, default=4)
    e.add_argument("--materialize", type=int, default=0)
    e.add_argument("--exhaustive", type=int, default=None)
    e.add_argument("--format", choices=["text", "json", "csv"], default="text")
    e.set_defaults(func=cmd_emn)

    d = sub.add_parser("dump", help="ASCII table of a tournament")
    d.add_argument("--in", dest="in_path", required=True)
    d.add_argument("--ranking", default=None)
    d.add_argument("--table", action="store_true", default=True)
    d.set_defaults(func=cmd_dump)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except errors.VerificationFailedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (errors.FairrankError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
