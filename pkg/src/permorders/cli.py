"""Command-line front end.

Six verbs, one job each:

* ``classify-poi``      closed-form report for a principal order ideal
* ``classify-interval`` closed-form report for an interval [bottom, top]
* ``reduced-words``     dump R(w), lexicographically sorted
* ``census``            counted-vs-formula rows for chosen sections
* ``verify``            every census section; exit 1 on any mismatch
* ``hasse``             deterministic DOT for an interval or a cover-list file

Permutations are digit strings up to degree 9 (``2143``) or comma form
beyond; ``--bottom`` also accepts a generator as ``s2`` (or a bare single
digit), sized to match ``--top``.  Exit codes: 0 fine, 1 verification
mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import census as census_mod
from .criteria import classify_interval_report, classify_poi_report
from .hasse import interval_to_dot, poset_to_dot
from .orders import BRUHAT, WEAK
from .perms import Perm, format_perm, generator, parse_perm
from .posets import from_cover_file
from .words import REDUCED_WORD_CAP, format_word, reduced_words

_GEN_RE = re.compile(r"s_?(\d+)$")


def _parse_endpoint(text: str, degree: int | None) -> Perm:
    """A permutation, or a generator (``s2`` / bare digit) given a degree."""
    text = text.strip()
    m = _GEN_RE.match(text)
    k = None
    if m:
        k = int(m.group(1))
    elif text.isdigit() and len(text) == 1 and int(text) >= 2:
        k = int(text)
    if k is not None:
        if degree is None:
            raise ValueError(f"generator {text!r} needs a full endpoint to fix the degree")
        return generator(degree, k)
    return parse_perm(text)


def _parse_range(text: str) -> list[int]:
    """``"4"`` or ``"3..7"`` (inclusive)."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _report_lines(rep) -> list[str]:
    out = [f"subject {rep.subject} ({rep.order} order)"]
    for name, part in (("predicate", rep.predicate), ("structural", rep.structural)):
        if part is None:
            out.append(f"  {name:10s} -")
            continue
        flags = ", ".join(
            f"{label}={'yes' if val else 'no'}"
            for label, val in zip(("lattice", "modular", "distributive", "boolean"), part.flags)
        )
        extras = []
        if part.rank is not None:
            extras.append(f"rank={part.rank}")
        if part.atom_count is not None:
            extras.append(f"atoms={part.atom_count}")
        out.append(f"  {name:10s} {flags}" + (f" ({', '.join(extras)})" if extras else ""))
    if rep.agree is not None:
        out.append(f"  agree      {'yes' if rep.agree else 'NO'}")
    return out


def _emit_rows(rows, fmt: str, pretty: bool) -> None:
    if pretty:
        head = f"{'n':>2} {'k':>2} {'order':7} {'class':24} {'counted':>10} {'formula':>10}  match"
        print(head)
        for r in rows:
            k = "-" if r.k is None else r.k
            print(
                f"{r.n:>2} {k:>2} {r.order:7} {r.cls:24} {r.counted:>10} {r.formula:>10}  "
                + ("ok" if r.match else "MISMATCH")
            )
    elif fmt == "json":
        print(json.dumps([r.as_dict() for r in rows], indent=2))
    else:
        sys.stdout.write(census_mod.rows_to_csv(rows))


def _add_order_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=(BRUHAT, WEAK), required=True)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="permorders", description=__doc__.split("\n")[0])
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify-poi", help="classify the order ideal below a permutation")
    p.add_argument("perm")
    _add_order_flag(p)
    p.add_argument("--structural", action="store_true", help="also classify the built poset")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("classify-interval", help="classify an interval [bottom, top]")
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    _add_order_flag(p)
    p.add_argument("--structural", action="store_true")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("reduced-words", help="list all reduced words of a permutation")
    p.add_argument("perm")
    p.add_argument("--max-length", type=int, default=REDUCED_WORD_CAP)

    p = sub.add_parser("census", help="count interval classes and compare with formulas")
    p.add_argument("--section", choices=census_mod.SECTIONS + ("all",), default="all")
    p.add_argument("--n", required=True, help="degree or inclusive range, e.g. 3..7")
    p.add_argument("--mode", choices=("predicate", "structural"), default="predicate")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--structural-cap", type=int, default=census_mod.STRUCTURAL_CAP)
    p.add_argument("--lattice-cap", type=int, default=census_mod.PREDICATE_CAP)

    p = sub.add_parser("verify", help="run all census sections; exit 1 on mismatch")
    p.add_argument("--n", required=True)
    p.add_argument("--mode", choices=("predicate", "structural", "both"), default="predicate")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--structural-cap", type=int, default=census_mod.STRUCTURAL_CAP)
    p.add_argument("--lattice-cap", type=int, default=7)

    p = sub.add_parser("hasse", help="emit Graphviz DOT for an interval or cover-list file")
    p.add_argument("--bottom")
    p.add_argument("--top")
    p.add_argument("--order", choices=(BRUHAT, WEAK))
    p.add_argument("--poset", help="cover-list file instead of an interval")
    p.add_argument("--highlight-support", action="store_true")
    p.add_argument("-o", "--output", help="write DOT here instead of stdout")
    return top


def _run(args: argparse.Namespace) -> int:
    if args.verb == "classify-poi":
        w = parse_perm(args.perm)
        rep = classify_poi_report(w, args.order, structural=args.structural)
        if args.pretty:
            print("\n".join(_report_lines(rep)))
        else:
            print(json.dumps(rep.as_dict(), indent=2))
        return 0

    if args.verb == "classify-interval":
        top = _parse_endpoint(args.top, None)
        bottom = _parse_endpoint(args.bottom, len(top))
        rep = classify_interval_report(bottom, top, args.order, structural=args.structural)
        if args.pretty:
            print("\n".join(_report_lines(rep)))
        else:
            print(json.dumps(rep.as_dict(), indent=2))
        return 0

    if args.verb == "reduced-words":
        w = parse_perm(args.perm)
        for word in sorted(reduced_words(w, max_length=args.max_length)):
            print(format_word(word))
        return 0

    if args.verb == "census":
        sections = census_mod.SECTIONS if args.section == "all" else (args.section,)
        rows = census_mod.census_rows(
            sections,
            _parse_range(args.n),
            mode=args.mode,
            structural_cap=args.structural_cap,
            lattice_cap=args.lattice_cap,
            workers=args.workers,
        )
        _emit_rows(rows, args.format, args.pretty)
        return 0

    if args.verb == "verify":
        rows, ok = census_mod.verify(
            _parse_range(args.n),
            mode=args.mode,
            structural_cap=args.structural_cap,
            lattice_cap=args.lattice_cap,
            workers=args.workers,
        )
        _emit_rows(rows, args.format, args.pretty)
        if not ok:
            bad = [r for r in rows if not r.match]
            print(f"verification failed: {len(bad)} row(s) off", file=sys.stderr)
            return 1
        print(f"all {len(rows)} rows match", file=sys.stderr)
        return 0

    if args.verb == "hasse":
        if args.poset:
            if args.bottom or args.top or args.order:
                raise ValueError("--poset excludes --bottom/--top/--order")
            text = poset_to_dot(from_cover_file(args.poset))
        else:
            if not (args.bottom and args.top and args.order):
                raise ValueError("hasse needs --bottom, --top and --order (or --poset FILE)")
            top = _parse_endpoint(args.top, None)
            bottom = _parse_endpoint(args.bottom, len(top))
            text = interval_to_dot(bottom, top, args.order, args.highlight_support)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0

    raise AssertionError(f"unhandled verb {args.verb}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
