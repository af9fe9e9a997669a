"""Command-line driver.

    ljpsearch CALCULUS COMMAND TEXT [TERM] [--max-size N] [--format text|json] [--back]

Decision commands (check, inhabited, finite) exit 0 for yes and 1 for no;
any usage, parse or precondition error exits 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import decide, ljp, ljt
from .forest import node_count
from .formulas import FocusL, FocusR, InvertL, InvertR, LjtFocus, LjtInvert, LjtStable, Stable
from .search import finrep_closed
from .search import memo_sizes as search_memo_sizes
from .syntax import CALCULI, ParseError, parse, render

COMMANDS = ("check", "space", "inhabited", "finite", "count", "enumerate",
            "translate", "oracle")
SCHEMA = "1"
MEMO_ENV = "LJPSEARCH_MEMO_STATS"
_SEQUENTS = (Stable, InvertR, FocusL, FocusR, InvertL, LjtStable, LjtInvert, LjtFocus)


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ljpsearch",
        description="Proof search, inhabitation, finiteness and counting for LJP and LJT.")
    p.add_argument("calculus", choices=CALCULI)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("text", help="a sequent (a formula, sequent or term for translate)")
    p.add_argument("term", nargs="?", help="proof term, for check")
    p.add_argument("--max-size", type=int, default=10,
                   help="size bound for enumerate and oracle (default 10)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--back", action="store_true",
                   help="translate: map an LJP image back to LJT")
    return p


def _witness_order(ts, size):
    return sorted(ts, key=lambda t: (size(t), render(t)))


def _translate(text: str, back: bool):
    if back:
        for kind in ("sequent", "term", "formula"):
            try:
                v = parse(kind, "ljp", text)
                break
            except ParseError as exc:
                err = exc
        else:
            raise err
        if isinstance(v, _SEQUENTS):
            g = v.ctx.map(ljt.erase)
            if isinstance(v, InvertR):
                return LjtInvert(g, ljt.erase(v.goal))
            if isinstance(v, Stable):
                return LjtStable(g, ljt.erase(v.goal))
            if isinstance(v, FocusL):
                return LjtFocus(g, ljt.erase(v.focus), ljt.erase(v.goal))
            raise UsageError("only invert-right, stable and focus-left sequents come from LJT")
        if ljp.is_constructor(v):
            return ljt.forget(v)
        return ljt.erase(v)
    for kind in ("sequent", "term", "formula"):
        try:
            v = parse(kind, "ljt", text)
            break
        except ParseError as exc:
            err = exc
    else:
        raise err
    if isinstance(v, _SEQUENTS):
        return ljt.star_sequent(v)
    if isinstance(v, ljt.TERMS + ljt.SPINES):
        return ljt.star_term(v)
    return ljt.star_formula(v)


def run_query(args) -> tuple:
    """``(result, witnesses, forest_nodes)`` for parsed arguments."""
    cal, cmd = args.calculus, args.command
    if cmd == "translate":
        if cal != "ljt":
            raise UsageError("translate works on LJT input (use --back for LJP images)")
        return render(_translate(args.text, args.back)), [], None
    if args.back:
        raise UsageError("--back only applies to translate")
    if (args.term is not None) != (cmd == "check"):
        raise UsageError("a proof term is required by check and accepted by no other command")
    if args.max_size < 0:
        raise UsageError("--max-size must be non-negative")

    seq = parse("sequent", cal, args.text)
    image = ljt.star_sequent(seq) if cal == "ljt" else seq
    if cmd == "check":
        term = parse("term", cal, args.term)
        ok = ljt.check_ljt(seq, term) if cal == "ljt" else ljp.check(seq, term)
        return ok, [], None
    if cmd == "space":
        f = finrep_closed(image)
        return render(f), [], node_count(f)
    if cmd == "inhabited":
        return decide.inhabited(image), [], None
    if cmd == "finite":
        return decide.finite(image), [], None
    if cmd == "count":
        try:
            return decide.count(image), [], None
        except decide.NotFiniteError:
            raise UsageError("infinitely many inhabitants; count needs a finite sequent") from None
    if cmd == "enumerate":
        f = finrep_closed(image)
        if cal == "ljt":
            ws = _witness_order(ljt.members_ljt(seq, args.max_size), ljt.size)
        else:
            ws = _witness_order(decide.forest_members(f, args.max_size), ljp.size)
        return len(ws), ws, node_count(f)
    if cal == "ljt":
        ws = _witness_order(ljt.oracle_search_ljt(seq, args.max_size), ljt.size)
    else:
        ws = _witness_order(decide.oracle_search(seq, args.max_size), ljp.size)
    return len(ws), ws, None


def _exit_code(cmd: str, result) -> int:
    if cmd in ("check", "inhabited", "finite"):
        return 0 if result else 1
    return 0


def _show(result) -> str:
    if isinstance(result, bool):
        return "true" if result else "false"
    return str(result)


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        result, witnesses, nodes = run_query(args)
    except (ParseError, UsageError, ljt.IllegalTerm, ValueError) as exc:
        print(f"ljpsearch: error: {exc}", file=sys.stderr)
        return 2
    elapsed = (time.perf_counter() - t0) * 1000.0

    if args.format == "json":
        query = {"calculus": args.calculus, "command": args.command, "input": args.text}
        if args.term is not None:
            query["term"] = args.term
        if args.command in ("enumerate", "oracle"):
            query["max_size"] = args.max_size
        if args.back:
            query["back"] = True
        doc = {
            "schema": SCHEMA,
            "query": query,
            "result": result,
            "witnesses": [render(w) for w in witnesses],
            "stats": {"forest_nodes": nodes, "elapsed_ms": round(elapsed, 3)},
        }
        print(json.dumps(doc, indent=2, ensure_ascii=True))
    else:
        print(_show(result))
        for w in witnesses:
            print(render(w))

    if os.environ.get(MEMO_ENV):
        sizes = {**search_memo_sizes(), **decide.memo_sizes()}
        print("memo " + " ".join(f"{k}={v}" for k, v in sorted(sizes.items())),
              file=sys.stderr)
    return _exit_code(args.command, result)


if __name__ == "__main__":
    sys.exit(main())
