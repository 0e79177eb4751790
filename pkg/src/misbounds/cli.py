"""Command-line front end: ``misbounds {count,make,recognize,verify}``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
parse errors.  Inputs and outputs are graph6 lines; ``--format json``
switches record output to one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from typing import TextIO

from . import families as fam
from .families import FamilyId, FamilyOrderError
from .generate import GenerationLimitError
from .graph import GraphFormatError, is_connected, is_triangle_free, parse_graph6, to_graph6
from .matching import matching_number
from .mis import count_independent_sets, count_mis
from .verify import FILTERS, TheoremId, corpus_universe, format_summary, generated_universe, run_check

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _lines(path: str | None) -> Iterator[tuple[int, str]]:
    stream = sys.stdin if path in (None, "-") else open(path, encoding="ascii")
    try:
        for lineno, raw in enumerate(stream, 1):
            line = raw.strip()
            if line:
                yield lineno, line
    finally:
        if stream is not sys.stdin:
            stream.close()


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit(out: TextIO, fmt: str, record: dict, text: str) -> None:
    out.write(json.dumps(record, sort_keys=True) + "\n" if fmt == "json" else text + "\n")


def _error(out: TextIO, fmt: str, lineno: int, line: str, message: str) -> None:
    print(f"line {lineno}: {message}", file=sys.stderr)
    if fmt == "json":
        out.write(json.dumps({"line": lineno, "input": line, "error": message}, sort_keys=True) + "\n")


# --------------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    status = EXIT_OK
    with _output(args.out) as out:
        for lineno, line in _lines(args.input):
            try:
                g = parse_graph6(line)
            except GraphFormatError as exc:
                _error(out, args.format, lineno, line, str(exc))
                status = EXIT_USAGE
                continue
            rec = {
                "graph6": line,
                "n": g.n,
                "mu": matching_number(g),
                "mis": count_mis(g),
                # may exceed 64 bits, so always a decimal string
                "i": str(count_independent_sets(g)),
                "triangle_free": is_triangle_free(g),
                "connected": is_connected(g),
            }
            text = "\t".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in rec.items())
            _emit(out, args.format, rec, text)
    return status


# --------------------------------------------------------------------------
# make


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _construct(family: FamilyId, a) -> Iterator:
    F = FamilyId
    if a.n is not None and family not in (F.A_N, F.B_N, F.D_N) or (
        family in (F.H_T, F.F_T, F.Q3, F.Q4) and a.base is None
    ):
        if a.n is None:
            raise UsageError(f"{family.value} needs --n to enumerate its members")
        yield from fam.enumerate_family(family, a.n, a.t)
        return
    need = lambda name: _required(a, name, family)  # noqa: E731
    if family is F.GENERAL_T1:
        yield fam.make_general_extremal(need("t"), 0 if a.r is None else a.r)
    elif family is F.E_T:
        yield fam.make_E(need("t"), a.ell if a.ell is not None else 1)
    elif family is F.L_T:
        yield fam.make_L(need("t"))
    elif family is F.A5:
        yield fam.make_A5()
    elif family is F.H7:
        yield fam.make_H7()
    elif family is F.T_ODD:
        yield fam.make_T(need("r"))
    elif family is F.M_T:
        yield fam.make_M(need("t"), a.ell, 0 if a.r is None else a.r)
    elif family is F.A_N:
        yield fam.make_An(need("n"))
    elif family is F.B_N:
        yield fam.make_Bn(need("n"))
    elif family is F.D_N:
        if a.variant is None:
            yield from fam.enumerate_family(family, need("n"))
        else:
            yield fam.make_Dn(need("n"), a.variant, a.r)
    elif family is F.P_CLASS:
        yield fam.make_P(*_triple(a))
    elif family is F.G_T:
        t = need("t")
        if t % 2:
            yield fam.make_G(t, r=a.r if a.r is not None else 1)
        else:
            yield fam.make_G(t, ell=_triple(a))
    elif family in (F.Q3, F.Q4):
        base = parse_graph6(a.base)
        make = fam.make_Q3 if family is F.Q3 else fam.make_Q4
        yield make(base, a.s if a.s is not None else 1, _ints(a.attach))
    else:  # pragma: no cover
        raise UsageError(f"cannot build {family.value}")


def _required(a, name: str, family: FamilyId):
    value = getattr(a, name)
    if value is None:
        raise UsageError(f"{family.value} needs --{name}")
    return value


def _triple(a) -> tuple[int, int, int]:
    return tuple(1 if x is None else x for x in (a.l1, a.l2, a.l3))


def cmd_make(args) -> int:
    family = FamilyId(args.family)
    with _output(args.out) as out:
        for g in _construct(family, args):
            out.write(to_graph6(g) + "\n")
    return EXIT_OK


# --------------------------------------------------------------------------
# recognize


def cmd_recognize(args) -> int:
    family = FamilyId(args.family)
    status = EXIT_OK
    with _output(args.out) as out:
        for lineno, line in _lines(args.input):
            try:
                g = parse_graph6(line)
                member = fam.recognize(g, family, args.t)
            except (GraphFormatError, FamilyOrderError) as exc:
                _error(out, args.format, lineno, line, str(exc))
                status = EXIT_USAGE
                continue
            _emit(out, args.format, {"graph6": line, "member": member}, f"{line}\t{str(member).lower()}")
    return status


# --------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    thm = TheoremId(args.theorem)
    filt = tuple(args.filter) if args.filter is not None else FILTERS[thm]
    if args.corpus is not None:
        universe = corpus_universe(args.corpus, args.max_n, filt)
    else:
        if args.max_n is None:
            raise UsageError("verify needs --max-n (or --corpus)")
        universe = generated_universe(args.max_n, filt, args.min_n)
    report = run_check(thm, *universe, workers=args.workers)
    with _output(args.out) as out:
        out.write(report.to_jsonl() if args.format == "json" else format_summary([report]))
    return EXIT_OK if report.ok else EXIT_FAILED


# --------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _order(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 64:
        raise argparse.ArgumentTypeError("must be between 1 and 64")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misbounds",
        description="Maximal independent sets versus matching number on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, inp=True):
        if inp:
            p.add_argument("--input", "-i", help="graph6 file (default: stdin)")
        p.add_argument("--out", "-o", help="write output here instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("count", help="n, mu, mis, i and flags for each graph6 line")
    io(p)
    p.set_defaults(func=cmd_count)

    families = [f.value for f in FamilyId]
    p = sub.add_parser("make", help="emit members of an extremal family as graph6")
    p.add_argument("family", choices=families)
    p.add_argument("--n", type=_order, help="order; enumerates all members when the family is parameterised")
    p.add_argument("--t", type=int, help="matching number")
    p.add_argument("--r", type=int, help="isolated vertices, star leaves or spider legs")
    p.add_argument("--ell", type=int, help="leaf count")
    p.add_argument("--s", type=int, help="size of the attached star (Q3, Q4)")
    p.add_argument("--l1", type=int)
    p.add_argument("--l2", type=int)
    p.add_argument("--l3", type=int)
    p.add_argument("--variant", choices=("H7", "T"))
    p.add_argument("--base", help="graph6 of the base graph (Q3, Q4)")
    p.add_argument("--attach", help="comma-separated base vertices joined to the new centre")
    io(p, inp=False)
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("recognize", help="membership verdict for each graph6 line")
    p.add_argument("family", choices=families)
    p.add_argument("--t", type=int, help="restrict to matching number t")
    io(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="exhaustively check a bound or lemma")
    p.add_argument("theorem", choices=[t.value for t in TheoremId])
    p.add_argument("--max-n", type=_order)
    p.add_argument("--min-n", type=_order, default=1)
    p.add_argument("--filter", nargs="*", choices=("connected", "triangle-free"),
                   help="universe filter (default: the statement's hypothesis)")
    p.add_argument("--corpus", help="graph6 file to use instead of the internal generator")
    p.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)
    io(p, inp=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GenerationLimitError, FamilyOrderError, GraphFormatError,
            FileNotFoundError, ValueError) as exc:
        print(f"misbounds {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:  # pragma: no cover
        return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
