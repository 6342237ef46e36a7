"""Command line front end.

    mingenus genus --class '{"g":2,"handles":[[0,0,0,0],[0,0,0,0]],"e":1,"f":0}'
    mingenus normalize --class '{"g":1,"handles":[[0,0,0,0]],"e":1,"f":0}' --format json
    mingenus genus --batch classes.jsonl
    mingenus orbit --target exotic --g 2 --depth 3
    mingenus selftest --seed 7 --samples 1000

Exit status: 0 on success, 1 on a domain error (or any failed record in
batch mode, or a failed self-test), 2 on unparsable input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .autgroup import (DEFAULT_DEPTH, check_membership_in_H, exotic_phi,
                       from_word, word_search)
from .errors import BudgetExceededError, MinGenusError, ParseError
from .genus import (adjunction_bound, complexity_x, complexity_xc, minimal_genus,
                    thurston_norm_pushforward)
from .homology import parse_class
from .mapclass import apply_word, format_word, parse_word
from .normalform import full_normalize
from .selftest import SUITES, run_selftest
from .surfcalc import check_transcript, replay_construction
from .twisted import parse_twisted, twisted_minimal_genus, twisted_self_intersection

# expanded words longer than this are reported as runs only
WORD_LIMIT = 10**5

CLASS_COMMANDS = ("genus", "bound", "complexity", "normalize", "replay", "twisted-genus")


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(f"{self.prog}: error: {message}")


def _genus(s):
    r = minimal_genus(s)
    return {"class": s.to_json(), "value": r.value, "case": r.case.value}


def _bound(s):
    return {"class": s.to_json(), "bound": adjunction_bound(s)}


def _complexity(s):
    return {"class": s.to_json(), "x": complexity_x(s), "x_c": complexity_xc(s),
            "thurston_norm": thurston_norm_pushforward(s)}


def _normalize(s):
    r = full_normalize(s)
    sq, e, div = r.invariants()
    word = format_word(r.word) if r.word_length <= WORD_LIMIT else None
    return {"class": s.to_json(), "normal": r.normal.to_json(), "word": word,
            "runs": [[str(m), k] for m, k in r.runs], "word_length": r.word_length,
            "invariants": {"self_intersection": sq, "e": e, "divisibility": div}}


def _replay(s):
    r = replay_construction(s, normalize=True)
    return {"class": s.to_json(), "normal": r.surface.cls.to_json(), "genus": r.genus,
            "family": r.family, "minimal_genus": minimal_genus(s).value,
            "chi_consistent": check_transcript(r.transcript), "transcript": r.lines()}


def _twisted(s):
    r = twisted_minimal_genus(s)
    return {"class": s.to_json(), "value": r.value, "case": r.case.value,
            "self_intersection": twisted_self_intersection(s)}


HANDLERS = {
    "genus": (parse_class, _genus),
    "bound": (parse_class, _bound),
    "complexity": (parse_class, _complexity),
    "normalize": (parse_class, _normalize),
    "replay": (parse_class, _replay),
    "twisted-genus": (parse_twisted, _twisted),
}


def _text(cmd, rec) -> str:
    if "error" in rec:
        return f"line {rec['line']}: error: {rec['error']}"
    cls = rec.get("class")
    head = f"{json.dumps(cls, separators=(',', ':'))}: " if cls is not None else ""
    if cmd in ("genus", "twisted-genus"):
        body = f"G = {rec['value']} ({rec['case']})"
    elif cmd == "bound":
        body = f"adjunction bound = {rec['bound']}"
    elif cmd == "complexity":
        body = f"x = {rec['x']}, x_c = {rec['x_c']}, ||p_* s||_T = {rec['thurston_norm']}"
    elif cmd == "normalize":
        inv = rec["invariants"]
        body = (f"normal {json.dumps(rec['normal'], separators=(',', ':'))}\n"
                f"  word: {' '.join(f'{m}*{k}' if k > 1 else m for m, k in rec['runs']) or '(empty)'}\n"
                f"  invariants: s.s = {inv['self_intersection']}, e = {inv['e']}, "
                f"div = {inv['divisibility']}")
    elif cmd == "replay":
        lines = "\n".join("  " + ln for ln in rec["transcript"])
        summary = {k: rec[k] for k in ("genus", "family", "minimal_genus", "chi_consistent")}
        head = head.rstrip(": ") + "\n" if head else ""
        body = f"{lines}\nsummary: {json.dumps(summary, sort_keys=True)}"
    elif cmd == "act":
        body = f"image {json.dumps(rec['image'], separators=(',', ':'))}"
    else:
        body = json.dumps(rec, sort_keys=True)
    prefix = f"line {rec['line']}: " if "line" in rec else ""
    return prefix + head + body


def _emit(out, fmt, cmd, rec):
    if fmt == "json":
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        out.write(_text(cmd, rec) + "\n")


def _run_class_command(args, out, err) -> int:
    parse, handle = HANDLERS[args.command]
    if args.cls is not None:
        try:
            s = parse(args.cls)
        except ParseError as exc:
            err.write(f"parse error: {exc}\n")
            return 2
        _emit(out, args.format, args.command, handle(s))
        return 0
    try:
        with open(args.batch, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        err.write(f"cannot read batch file: {exc}\n")
        return 2
    status = 0
    for n, line in enumerate(lines, 1):
        try:
            if not line.strip():
                raise ParseError("empty line")
            rec = {"line": n, **handle(parse(line))}
        except MinGenusError as exc:
            rec = {"line": n, "error": str(exc)}
            status = 1
        _emit(out, args.format, args.command, rec)
    return status


def _run_act(args, out, err) -> int:
    try:
        s = parse_class(args.cls)
        raw = args.word.strip()
        word = parse_word(json.loads(raw) if raw.startswith("[") else raw)
    except (ParseError, json.JSONDecodeError) as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    image = apply_word(word, s)
    _emit(out, args.format, "act", {"class": s.to_json(), "word": format_word(word),
                                    "image": image.to_json()})
    return 0


def _run_orbit(args, out, err) -> int:
    if args.target == "exotic":
        target = exotic_phi(args.g)
    else:
        if not args.word:
            err.write("--target move-word needs --word\n")
            return 2
        try:
            raw = args.word.strip()
            target = from_word(parse_word(json.loads(raw) if raw.startswith("[") else raw), args.g)
        except (ParseError, json.JSONDecodeError) as exc:
            err.write(f"parse error: {exc}\n")
            return 2
    try:
        outcome = word_search(target, args.depth, args.node_budget)
    except BudgetExceededError as exc:
        err.write(f"{exc}; partial statistics: {json.dumps(exc.stats, sort_keys=True)}\n")
        return 1
    rec = {"target": args.target, "g": args.g, "depth": args.depth, "found": outcome.found,
           "word": None if outcome.word is None else format_word(outcome.word),
           "nodes": outcome.nodes, "levels": outcome.levels, "summary": outcome.summary()}
    if args.samples:
        rep = check_membership_in_H(target, args.samples, args.seed)
        rec["membership"] = rep.to_json()
    if args.format == "json":
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        out.write(outcome.summary() + "\n")
        if "membership" in rec:
            m = rec["membership"]
            out.write(f"Q preserved: {m['q_preserved']}; G counterexample in {m['samples']} "
                      f"samples: {m['g_counterexample']}\n")
    return 0


def _run_selftest(args, out, err) -> int:
    results = run_selftest(args.seed, args.samples, args.only)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out.write(json.dumps({"seed": args.seed, "samples": args.samples, "passed": ok,
                              "results": [r.to_json() for r in results]}, sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mingenus", description="Minimal genus function of Sigma_g x T^2.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    # accepted after the subcommand too; SUPPRESS keeps it from clobbering the global value
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in CLASS_COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--class", dest="cls", help="class literal (JSON)")
        src.add_argument("--batch", help="file with one class literal per line")
    sp = sub.add_parser("act", parents=[common], help="apply a move word to a class")
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--word", required=True,
                    help='JSON array of move literals or a comma separated list, e.g. "Rz(1),Fy"')
    sp = sub.add_parser("orbit", parents=[common], help="bounded word search for an automorphism")
    sp.add_argument("--target", choices=("exotic", "move-word"), default="exotic")
    sp.add_argument("--word", help="move word defining the target (with --target move-word)")
    sp.add_argument("--g", type=int, default=2)
    sp.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    sp.add_argument("--node-budget", type=int, default=None,
                    help="default: $MINGENUS_NODE_BUDGET or 10**6")
    sp.add_argument("--samples", type=int, default=0,
                    help="also sample G-invariance of the target on this many classes")
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("selftest", parents=[common], help="run the randomised invariant suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--only", nargs="*", choices=sorted(SUITES))
    return p


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except _ArgError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        if args.command in HANDLERS:
            return _run_class_command(args, out, err)
        if args.command == "act":
            return _run_act(args, out, err)
        if args.command == "orbit":
            return _run_orbit(args, out, err)
        return _run_selftest(args, out, err)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except MinGenusError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run())
