"""Command-line front end: canonicalize, match, classify, bench, selftest.

Exit codes: 0 success (or EQUIVALENT), 1 not-equivalent or selftest
failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path
from typing import Sequence

from . import selftest
from .canon import Mode, canonical_form, match
from .truthtable import Literal, TruthTable, format_literal

USAGE_ERROR = 2


class _SpecAction(argparse.Action):
    """Collect --hex/--cubes/--random in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        specs = getattr(namespace, "specs", None) or []
        specs.append((option_string.lstrip("-"), values))
        namespace.specs = specs


def _add_spec_options(p: argparse.ArgumentParser, what: str) -> None:
    p.add_argument("--hex", action=_SpecAction, metavar="HEX",
                   help=f"{what} as a big-endian hex truth table")
    p.add_argument("--cubes", action=_SpecAction, metavar="FILE",
                   help=f"{what} as a cube-list file (lines of 0/1/-)")
    p.add_argument("--random", action=_SpecAction, metavar="SEED",
                   help=f"{what} generated pseudo-randomly from SEED")


def _resolve_spec(spec: tuple[str, str], n: int, density: float) -> TruthTable:
    kind, value = spec
    if kind == "hex":
        return TruthTable.from_hex(value, n)
    if kind == "cubes":
        return TruthTable.from_cubes(Path(value).read_text(), n)
    return TruthTable.random(n, int(value), density)


def _mode(name: str) -> Mode:
    return Mode.DC if name == "dc" else Mode.COFACTOR


def _parse_n_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_canon(args: argparse.Namespace) -> int:
    specs = getattr(args, "specs", None) or []
    if len(specs) != 1:
        raise ValueError("canon needs exactly one of --hex/--cubes/--random")
    f = _resolve_spec(specs[0], args.n, args.density)
    res = canonical_form(f, _mode(args.mode))
    print(f"canonical: {res.table.to_hex()}")
    print(f"transform: {res.candidate}")
    print(f"output-phase: {'positive' if res.candidate.out_phase else 'negative'}")
    print(f"candidates: {res.candidates_examined}")
    return 0


def cmd_match(args: argparse.Namespace) -> int:
    specs = getattr(args, "specs", None) or []
    if len(specs) != 2:
        raise ValueError("match needs exactly two of --hex/--cubes/--random")
    f = _resolve_spec(specs[0], args.n, args.density)
    g = _resolve_spec(specs[1], args.n, args.density)
    t = match(f, g, _mode(args.mode))
    if t is None:
        print("NOT-EQUIVALENT")
        return 1
    inv = t.invert()
    lits = [
        format_literal(type(f).__mro__ and __import__("npnmatch.truthtable", fromlist=["Literal"]).Literal(inv.perm[i], inv.phases[i]))
        for i in range(f.n)
    ]
    head = "" if t.out_phase else "~"
    print("EQUIVALENT")
    print(f"g(x1..x{f.n}) = {head}f({', '.join(lits)})")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    functions: list[tuple[str, TruthTable]] = []
    for path in args.files:
        for ln, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            functions.append((f"{path}:{ln}", TruthTable.from_hex(line, args.n)))
    for spec in getattr(args, "specs", None) or []:
        if spec[0] != "cubes":
            raise ValueError("classify extra functions must use --cubes")
        functions.append((spec[1], TruthTable.from_cubes(Path(spec[1]).read_text(), args.n)))
    if not functions:
        raise ValueError("no functions to classify")
    mode = _mode(args.mode)
    buckets: dict[int, list[int]] = {}
    canons: list[str] = []
    for idx, (_, f) in enumerate(functions):
        res = canonical_form(f, mode)
        canons.append(res.table.to_hex())
        buckets.setdefault(res.table.bits, []).append(idx)
    print(f"functions: {len(functions)}")
    print(f"classes: {len(buckets)}")
    for ci, (bits, members) in enumerate(
        sorted(buckets.items(), key=lambda kv: -len(kv[1]))
    ):
        rep = TruthTable(args.n, bits).to_hex()
        print(f"class {ci}: canonical={rep} members={len(members)}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["func_id", "source", "canonical_hex", "class_id"])
            class_of = {
                bits: ci
                for ci, (bits, _) in enumerate(
                    sorted(buckets.items(), key=lambda kv: -len(kv[1]))
                )
            }
            for idx, (src, f) in enumerate(functions):
                bits = int(canons[idx], 16)
                w.writerow([idx, src, canons[idx], class_of[bits]])
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    modes = [Mode.DC, Mode.COFACTOR] if args.mode == "both" else [_mode(args.mode)]
    rows: list[tuple] = []
    summary: dict[tuple[int, Mode], list[tuple[float, int]]] = {}
    for n in _parse_n_range(args.n):
        for i in range(args.count):
            f = TruthTable.random(n, f"{args.seed}:{n}:{i}", args.density)
            for mode in modes:
                t0 = time.perf_counter()
                res = canonical_form(f, mode)
                dt = time.perf_counter() - t0
                rows.append((n, mode.value, args.seed, i, f"{dt:.6f}",
                             res.candidates_examined))
                summary.setdefault((n, mode), []).append(
                    (dt, res.candidates_examined)
                )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "mode", "seed", "func_id", "runtime_s", "candidates"])
            w.writerows(rows)
    print(f"{'n':>3} {'mode':>9} {'avg_runtime_s':>14} {'avg_candidates':>15}")
    for (n, mode), vals in sorted(summary.items(), key=lambda kv: (kv[0][0], kv[0][1].value)):
        at = statistics.fmean(v[0] for v in vals)
        ac = statistics.fmean(v[1] for v in vals)
        print(f"{n:>3} {mode.value:>9} {at:>14.6f} {ac:>15.2f}")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    return 0 if selftest.run() else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="npnmatch",
        description="NPN Boolean matching via signature-based canonical forms",
    )
    sub = p.add_subparsers(dest="command", required=True)

    canon = sub.add_parser("canon", help="print the canonical form of one function")
    canon.add_argument("--n", type=int, required=True, help="variable count")
    _add_spec_options(canon, "the function")
    canon.add_argument("--mode", choices=["dc", "cofactor"], default="dc")
    canon.add_argument("--density", type=float, default=0.5)
    canon.set_defaults(run=cmd_canon)

    m = sub.add_parser("match", help="decide NPN equivalence of two functions")
    m.add_argument("--n", type=int, required=True)
    _add_spec_options(m, "each function (give two)")
    m.add_argument("--mode", choices=["dc", "cofactor"], default="dc")
    m.add_argument("--density", type=float, default=0.5)
    m.set_defaults(run=cmd_match)

    cl = sub.add_parser("classify", help="bucket a corpus by canonical form")
    cl.add_argument("files", nargs="*", help="files with one hex table per line")
    cl.add_argument("--n", type=int, required=True)
    _add_spec_options(cl, "an extra function")
    cl.add_argument("--mode", choices=["dc", "cofactor"], default="dc")
    cl.add_argument("--csv", metavar="FILE", help="write per-function rows")
    cl.set_defaults(run=cmd_classify)

    b = sub.add_parser("bench", help="time canonicalization on random functions")
    b.add_argument("--n", required=True, help="variable count or range, e.g. 7..12")
    b.add_argument("--count", type=int, default=100, help="functions per n")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--density", type=float, default=0.5)
    b.add_argument("--mode", choices=["dc", "cofactor", "both"], default="both")
    b.add_argument("--csv", metavar="FILE")
    b.set_defaults(run=cmd_bench)

    st = sub.add_parser("selftest", help="run the built-in regression fixtures")
    st.add_argument("--oracle-level", type=int, choices=[3, 4], default=3,
                    help="exhaustive sweep arity (4 is slow)")
    st.set_defaults(run=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
