"""Batch front end: sessions, verification sweeps, enumerations, exports.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
Identical invocations print identical bytes; sweeps may parallelize per
FIBWALK_THREADS but reports are merged in index order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automata as au
from . import identities as idn
from . import logic
from . import repetitions as rp


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fibwalk")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("session", help="run a session script")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("enumerate", help="list members of a predicate")
    s.add_argument("pred")
    s.add_argument("--limit", type=int, required=True,
                   help="inclusive bound on every component")

    s = sub.add_parser("verify", help="run a verification sweep")
    s.add_argument("target", choices=["partition", "lemma1", "lemma2",
                                      "theorem", "identities", "all"])
    s.add_argument("--max-n", type=int, default=None)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("en", help="print the e(n) record")
    s.add_argument("n", type=int)

    s = sub.add_parser("mgamma", help="automaton for {n : e(n) >= p/q}")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--largest-below", action="store_true",
                   help="print the largest n with e(n) < p/q instead")

    s = sub.add_parser("export-dfa", help="write a predicate's automaton")
    s.add_argument("pred")
    s.add_argument("--dot", required=True, metavar="PATH")

    s = sub.add_parser("crossover", help="bound-crossover table for one i")
    s.add_argument("i", type=int)
    s.add_argument("--family", choices=["b1", "b2"], required=True)
    s.add_argument("--csv", required=True, metavar="PATH")
    return p


def _lookup_pred(name: str) -> au.SyncDFA:
    env = rp.session_env()
    try:
        return env.lookup(name).validated()
    except logic.LogicError:
        raise SystemExit(f"fibwalk: unknown predicate {name!r}; "
                         f"have: {', '.join(sorted(env.preds))}")


def _cmd_session(args) -> int:
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as e:
        print(f"fibwalk: {e}", file=sys.stderr)
        return 2
    try:
        report = logic.run_session(text)
    except logic.LogicError as e:
        print(f"fibwalk: {args.file}: {e}", file=sys.stderr)
        return 2
    out = report.to_json() if args.json else report.text
    sys.stdout.write(out)
    return 0


def _cmd_enumerate(args) -> int:
    dfa = _lookup_pred(args.pred)
    for item in au.enumerate_accepted(dfa, args.limit):
        if isinstance(item, tuple):
            print(" ".join(str(v) for v in item))
        else:
            print(item)
    return 0


def _verify_reports(target: str, max_n: int | None) -> list[dict]:
    reports = []
    if target in ("partition", "all"):
        reports.append(rp.partition_report(max_n or 5000))
    if target in ("lemma1", "all"):
        reports.append(rp.lemma1_report(max_n or 2000))
    if target in ("lemma2", "all"):
        reports.append(rp.lemma2_report(max_n or 2000))
    if target in ("theorem", "all"):
        reports.append(rp.verify_theorem(max_n or 20000))
    if target in ("identities", "all"):
        reports.extend(idn.identities_report(max_n or 200))
    return reports


def _cmd_verify(args) -> int:
    reports = _verify_reports(args.target, args.max_n)
    if args.json:
        print(rp.verification_report_json(reports), end="")
    else:
        for r in reports:
            lo, hi = r.get("range", ["-", "-"])
            verdict = "PASS" if r["verdict"] else "FAIL"
            extra = ""
            if "min_slack" in r:
                extra = f"  min slack {r['min_slack']:.6f} at n={r['argmin']}"
            print(f"verify {r['claim']} [{lo}..{hi}]: {verdict}{extra}")
    return 0 if all(r["verdict"] for r in reports) else 1


def _cmd_en(args) -> int:
    if args.n < 1:
        print("fibwalk: e(n) needs n >= 1", file=sys.stderr)
        return 2
    rec = rp.exponent_record(args.n)
    print(f"e({rec.n}) = {rec.x}/{rec.y} "
          f"(suffix length {rec.x}, period {rec.y})")
    return 0


def _cmd_mgamma(args) -> int:
    try:
        if args.largest_below:
            n = rp.largest_index_below(args.p, args.q)
            print(f"largest n with e(n) < {args.p}/{args.q}: {n}")
            return 0
        dfa = rp.m_gamma_automaton(args.p, args.q)
    except ValueError as e:
        print(f"fibwalk: {e}", file=sys.stderr)
        return 2
    first = [au.word_to_values(w, 1)[0]
             for w in au.first_accepted_words(dfa, 10)]
    print(f"M_{{{args.p}/{args.q}}}: {au.live_state_count(dfa)} states; "
          f"first members: {', '.join(str(v) for v in first)}")
    return 0


def _cmd_export_dfa(args) -> int:
    dfa = _lookup_pred(args.pred)
    try:
        with open(args.dot, "w") as fh:
            fh.write(au.to_dot(dfa))
    except OSError as e:
        print(f"fibwalk: {e}", file=sys.stderr)
        return 2
    print(f"wrote {args.pred} ({au.live_state_count(dfa)} states) "
          f"to {args.dot}")
    return 0


def _cmd_crossover(args) -> int:
    try:
        table = idn.crossover(args.i, args.family)
    except ValueError as e:
        print(f"fibwalk: {e}", file=sys.stderr)
        return 2
    try:
        with open(args.csv, "w") as fh:
            idn.crossover_csv(table, fh)
    except OSError as e:
        print(f"fibwalk: {e}", file=sys.stderr)
        return 2
    verdict = "bracketed" if table.bracket_ok else "NOT bracketed"
    print(f"crossover i={table.i} family={table.family} "
          f"j'={table.j_prime}: {verdict}; wrote {args.csv}")
    return 0 if table.bracket_ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    handler = {
        "session": _cmd_session,
        "enumerate": _cmd_enumerate,
        "verify": _cmd_verify,
        "en": _cmd_en,
        "mgamma": _cmd_mgamma,
        "export-dfa": _cmd_export_dfa,
        "crossover": _cmd_crossover,
    }[args.command]
    try:
        return handler(args)
    except SystemExit as e:
        if isinstance(e.code, str):
            print(e.code, file=sys.stderr)
            return 2
        return e.code if isinstance(e.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
