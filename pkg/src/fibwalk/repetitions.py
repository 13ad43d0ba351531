"""Classification of prefix lengths by their maximal suffix repetition.

For n >= 2 the indices split three ways:

  * G:  e(n) > alpha^2, where e(n) is the largest exponent over all
        suffixes of the length-n prefix of the infinite Fibonacci word;
  * B1: n = F_i - F_j - 1 with i >= 5 and 3 <= j <= i - 2;
  * B2: n = F_i - F_{2j+1} with i >= 5 and 1 <= j <= (i - 3) / 2.

Everything here is double-checked: the compiled automata from the
bundled script against the direct string oracle, and witness arithmetic
against both.
"""

from __future__ import annotations

import csv
import json
import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import IO

import numpy as np

from . import automata as au
from . import logic
from .exact import below_alpha2, exceeds_alpha_squared, theorem_margin_sign
from .fibword import (ExponentRecord, exponent_record_fast, exponent_table,
                      generate_prefix, has_period, worker_count)
from .numeration import fib, fib_index


def script_text(name: str) -> str:
    """One of the bundled session scripts by file name."""
    return (resources.files("fibwalk") / "scripts" / name).read_text()


@lru_cache(maxsize=1)
def _session() -> tuple[logic.PredicateEnv, logic.SessionReport]:
    env = logic.PredicateEnv()
    report = logic.run_session(script_text("good_partition.wal"), env)
    return env, report


def session_env() -> logic.PredicateEnv:
    """Environment with the bundled classification predicates compiled."""
    return _session()[0]


def session_report() -> logic.SessionReport:
    return _session()[1]


def good_automaton() -> au.SyncDFA:
    return session_env().lookup("good").dfa


@lru_cache(maxsize=1)
def b1_set_automaton() -> au.SyncDFA:
    b1 = session_env().lookup("b1").dfa  # tracks (n, x, y)
    return au.project(au.project(b1, 2), 1)


@lru_cache(maxsize=1)
def b2_set_automaton() -> au.SyncDFA:
    b2 = session_env().lookup("b2").dfa
    return au.project(au.project(b2, 2), 1)


# ---------------------------------------------------------------------------
# oracle table, grown on demand


_TABLE: list[ExponentRecord] = []  # _TABLE[n-1] = record for n


def ensure_table(n_max: int) -> list[ExponentRecord]:
    """e(n) records for n = 1..n_max from a grow-only shared cache."""
    global _TABLE
    if n_max > len(_TABLE):
        _TABLE = exponent_table(n_max, threads=worker_count())
    return _TABLE[:n_max]


def exponent_record(n: int) -> ExponentRecord:
    if 1 <= n <= len(_TABLE):
        return _TABLE[n - 1]
    return exponent_record_fast(n)


# ---------------------------------------------------------------------------
# witnesses and classification


def b1_witnesses(n: int) -> list[tuple[int, int]]:
    """All (i, j) with n = F_i - F_j - 1, i >= 5, 3 <= j <= i - 2."""
    out = []
    i = 5
    while fib(i - 1) <= n + 1:  # F_j <= F_{i-2} forces F_{i-1} <= n + 1
        j = fib_index(fib(i) - n - 1)
        if j is not None and 3 <= j <= i - 2:
            out.append((i, j))
        i += 1
    return out


def b2_witnesses(n: int) -> list[tuple[int, int]]:
    """All (i, j) with n = F_i - F_{2j+1}, i >= 5, 1 <= j <= (i - 3) / 2."""
    out = []
    i = 5
    while fib(i - 1) <= n:  # F_{2j+1} <= F_{i-2} forces F_{i-1} <= n
        k = fib_index(fib(i) - n)
        if k is not None and k % 2 == 1 and 3 <= k <= i - 2:
            out.append((i, (k - 1) // 2))
        i += 1
    return out


@dataclass(frozen=True)
class ClassifiedIndex:
    n: int
    cls: str  # "G" | "B1" | "B2"
    witness: object  # (i, j) for B1/B2, ExponentRecord for G


def classify(n: int) -> ClassifiedIndex:
    """Assign n >= 2 to G, B1, or B2 with a verified witness.

    G membership is decided twice, by the compiled automaton and by the
    exact comparison of the oracle's e(n) against alpha^2; they must
    agree.
    """
    if n < 2:
        raise ValueError("classification starts at n = 2")
    by_automaton = bool(au.accepts(good_automaton(), (n,)))
    record = exponent_record(n)
    by_oracle = exceeds_alpha_squared(record.x, record.y)
    if by_automaton != by_oracle:
        raise AssertionError(
            f"good automaton and oracle disagree at n={n}: "
            f"{by_automaton} vs {by_oracle} (e={record.x}/{record.y})")
    if by_automaton:
        return ClassifiedIndex(n, "G", record)
    w1 = b1_witnesses(n)
    if w1:
        i, j = w1[0]
        if fib(i) - fib(j) - 1 != n:
            raise AssertionError(f"witness arithmetic broken at n={n}")
        return ClassifiedIndex(n, "B1", (i, j))
    w2 = b2_witnesses(n)
    if w2:
        i, j = w2[0]
        if fib(i) - fib(2 * j + 1) != n:
            raise AssertionError(f"witness arithmetic broken at n={n}")
        return ClassifiedIndex(n, "B2", (i, j))
    raise AssertionError(f"n={n} fits no class; partition violated")


# ---------------------------------------------------------------------------
# sweep verifications


def partition_report(n_max: int) -> dict:
    """Totality and unambiguity of the three-way split on [2, n_max]."""
    ensure_table(n_max)
    ns = np.arange(2, n_max + 1, dtype=np.int64)
    in_good = au.accepts_batch(good_automaton(), ns.reshape(-1, 1))
    in_b1 = au.accepts_batch(b1_set_automaton(), ns.reshape(-1, 1))
    in_b2 = au.accepts_batch(b2_set_automaton(), ns.reshape(-1, 1))
    failures = []
    counts = {"G": 0, "B1": 0, "B2": 0}
    for pos, n in enumerate(int(v) for v in ns):
        g, b1, b2 = bool(in_good[pos]), bool(in_b1[pos]), bool(in_b2[pos])
        record = _TABLE[n - 1]
        oracle_g = exceeds_alpha_squared(record.x, record.y)
        ok = (g == oracle_g
              and g != (b1 or b2)
              and not (b1 and b2)
              and (not b1 or bool(b1_witnesses(n)))
              and (not b2 or bool(b2_witnesses(n))))
        if ok:
            counts["G" if g else ("B1" if b1 else "B2")] += 1
        else:
            failures.append(n)
    return {"claim": "partition", "range": [2, n_max],
            "verdict": not failures, "counts": counts,
            "failures": failures[:20]}


def verify_partition(n_max: int) -> bool:
    return partition_report(n_max)["verdict"]


def lemma1_report(n_max: int) -> dict:
    """String-level period check for every B1 witness pair up to n_max.

    Either the whole prefix has period F_{i-2}, or its suffix of length
    F_j - 1 has period F_{j-2}; both sides are recorded when both hold.
    """
    prefix = generate_prefix(n_max)
    checked = 0
    failures = []
    both = 0
    for n in range(2, n_max + 1):
        for i, j in b1_witnesses(n):
            w = prefix[:n]
            first = has_period(w, fib(i - 2))
            tail = w[n - (fib(j) - 1):] if fib(j) - 1 <= n else ""
            second = bool(tail) and has_period(tail, fib(j - 2))
            checked += 1
            if first and second:
                both += 1
            if not (first or second):
                failures.append([n, i, j])
    return {"claim": "lemma1", "range": [2, n_max], "verdict": not failures,
            "witness_pairs": checked, "both_alternatives": both,
            "failures": failures[:20]}


def verify_lemma1(n_max: int) -> bool:
    return lemma1_report(n_max)["verdict"]


def lemma2_report(n_max: int) -> dict:
    """Period F_{i-2} for every B2 witness; the extra suffix claim for j >= 2."""
    prefix = generate_prefix(n_max)
    checked = 0
    failures = []
    for n in range(2, n_max + 1):
        for i, j in b2_witnesses(n):
            w = prefix[:n]
            ok = has_period(w, fib(i - 2))
            if ok and j >= 2:
                tail = w[n - fib(2 * j + 1):]
                ok = has_period(tail, fib(2 * j - 1))
            checked += 1
            if not ok:
                failures.append([n, i, j])
    return {"claim": "lemma2", "range": [2, n_max], "verdict": not failures,
            "witness_pairs": checked, "failures": failures[:20]}


def verify_lemma2(n_max: int) -> bool:
    return lemma2_report(n_max)["verdict"]


def verify_theorem(n_max: int) -> dict:
    """Exact check of e(n) >= alpha^2 - 3/sqrt(n) for 1 <= n <= n_max.

    The verdict path never touches floats; the reported slack is a float
    rendering of e(n) - (alpha^2 - 3/sqrt(n)) for display only.
    """
    table = ensure_table(n_max)
    failures = []
    min_slack = None
    argmin = None
    for rec in table:
        sign = theorem_margin_sign(rec.x, rec.y, rec.n)
        if sign < 0:
            failures.append(rec.n)
        slack = rec.x / rec.y - (2.618033988749895 - 3.0 / rec.n ** 0.5)
        if min_slack is None or slack < min_slack:
            min_slack, argmin = slack, rec.n
    base_pass = all(theorem_margin_sign(r.x, r.y, r.n) > 0
                    for r in table[:min(21, n_max)])
    return {"claim": "theorem", "range": [1, n_max],
            "verdict": not failures, "base_range_pass": base_pass,
            "min_slack": min_slack, "argmin": argmin,
            "failures": failures[:20]}


# ---------------------------------------------------------------------------
# M_{p/q} automata and the largest-index query


def ratio_reach_automaton(p: int, q: int, strict: bool = False) -> au.SyncDFA:
    """One-track automaton for {n : e(n) >= p/q} (or > with strict).

    Fuses the suffix predicate with a running comparison of q*x against
    p*y: alongside the suffix automaton's state, track the deficit
    q*x - p*y of the digits read so far as a pair (u, v) standing for
    u*F_{s+2} + v*F_{s+1}.  Reading one more digit column multiplies the
    deficit by the golden ratio in this basis and adds q*a - p*b, i.e.
    (u, v) -> (u + v + q*a - p*b, u); at the end it is worth u + v.
    Once u, v >= max(p, q) + 1 no suffix of digits can pull the total
    back below zero (and symmetrically for the negative side), so such
    states collapse to two absorbing sign states.  Building the
    comparison inside the product keeps the state count tiny; the
    standalone comparison automaton would have O((p + q)^2) states.
    """
    suff = session_env().lookup("suff").validated()  # tracks (n, x, y)
    sink = next(s for s, row in enumerate(suff.transitions)
                if all(d == s for d in row) and s not in suff.accepting)
    c = max(p, q)
    start = (suff.initial, 0, 0)
    dead = ("DEAD",)
    idx = {start: 0, dead: 1}
    order = [start, dead]
    work = deque([start])
    rows: dict[tuple, tuple[int, ...]] = {dead: (1,) * 8}
    while work:
        st = work.popleft()
        s = st[0]
        row = []
        for sym in range(8):
            a, b = (sym >> 1) & 1, (sym >> 2) & 1
            s2 = suff.transitions[s][sym]
            if s2 == sink:
                ns = dead
            elif len(st) == 2:
                ns = (s2, st[1])  # comparison sign already settled
            else:
                nu, nv = st[1] + st[2] + q * a - p * b, st[1]
                if nu >= c + 1 and nv >= c + 1:
                    ns = (s2, "+")
                elif nu <= -c - 1 and nv <= -c - 1:
                    ns = (s2, "-")
                else:
                    ns = (s2, nu, nv)
            if ns not in idx:
                idx[ns] = len(order)
                order.append(ns)
                work.append(ns)
            row.append(idx[ns])
        rows[st] = tuple(row)
    accepting = set()
    for st in order:
        if st == dead or st[0] not in suff.accepting:
            continue
        if len(st) == 2:
            ok = st[1] == "+"
        else:
            d = st[1] + st[2]
            ok = d > 0 if strict else d >= 0
        if ok:
            accepting.add(idx[st])
    fused = au.minimize(au.SyncDFA(3, tuple(rows[st] for st in order), 0,
                                   frozenset(accepting)))
    # erase x before y: determinizing with the suffix length gone first
    # keeps the subset construction small (the other order blows up)
    return au.project(au.project(fused, 1), 1)


def _with_ratio_predicate(p: int, q: int, strict: bool) -> logic.PredicateEnv:
    """Session env extended with hs(n) = [e(n) >= p/q] (> when strict)."""
    env = session_env().copy()
    env.define("hs", "def", ratio_reach_automaton(p, q, strict))
    return env


def formula_ratio_automaton(p: int, q: int, strict: bool = False) -> au.SyncDFA:
    """Same set as ratio_reach_automaton via the formula pipeline.

    Spells out p*y <= q*x (or <) with the chained-addition multiplier,
    so it only works for p, q within that builder's cap.  Kept as an
    independent construction to cross-check the fused one.
    """
    op = "<" if strict else "<="
    src = f"?msd_fib Ex,y $suff(n,x,y) & {p}*y{op}{q}*x"
    return logic.compile_predicate(session_env(), src).dfa


def m_gamma_automaton(p: int, q: int) -> au.SyncDFA:
    """Automaton for M_{p/q} = {n : e(n) >= p/q}."""
    if q < 1:
        raise ValueError("denominator must be >= 1")
    if p < q:
        warnings.warn(f"{p}/{q} < 1: every n >= 1 is accepted",
                      stacklevel=2)
    return ratio_reach_automaton(p, q, strict=False)


def largest_index_below(p: int, q: int,
                        cross_check_margin: int = 2000) -> int:
    """The largest n with e(n) < p/q, for 1 <= p/q < alpha^2.

    Computed from the automata; then the exponent oracle confirms
    e(n) < p/q at the answer and e(m) >= p/q for the next
    cross_check_margin values of m.
    """
    if q < 1:
        raise ValueError("denominator must be >= 1")
    if p <= q:
        raise ValueError(f"{p}/{q} <= 1 but every exponent is >= 1; "
                         "no index lies below")
    if not below_alpha2(p, q):
        raise ValueError(f"{p}/{q} >= alpha^2: indices below it never "
                         "run out, so no largest one exists")
    env = _with_ratio_predicate(p, q, strict=False)
    rel = logic.compile_predicate(
        env, "?msd_fib (~$hs(n)) & Am (m>n) => $hs(m)")
    words = au.first_accepted_words(rel.dfa, 2)
    if len(words) != 1:
        raise AssertionError(f"largest-index automaton for {p}/{q} accepts "
                             f"{len(words)} values, expected exactly 1")
    n_star = au.word_to_values(words[0], 1)[0]
    if cross_check_margin:
        table = ensure_table(n_star + cross_check_margin)
        gamma = Fraction(p, q)
        rec = table[n_star - 1]
        if not rec.exponent < gamma:
            raise AssertionError(f"oracle refutes e({n_star}) < {p}/{q}")
        for m in range(n_star + 1, n_star + cross_check_margin + 1):
            if table[m - 1].exponent < gamma:
                raise AssertionError(
                    f"oracle found e({m}) < {p}/{q} beyond the answer")
    return n_star


# ---------------------------------------------------------------------------
# reports


def classification_csv(n_max: int, out: IO[str]) -> None:
    """Rows (n, class, i, j, x, y, exponent) for n in [2, n_max]."""
    ensure_table(n_max)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "class", "i", "j", "x", "y", "exponent"])
    for n in range(2, n_max + 1):
        c = classify(n)
        rec = _TABLE[n - 1]
        i, j = c.witness if c.cls != "G" else ("", "")
        writer.writerow([n, c.cls, i, j, rec.x, rec.y,
                         f"{rec.x}/{rec.y}"])


def verification_report_json(reports: list[dict]) -> str:
    return json.dumps(reports, indent=2, sort_keys=True) + "\n"
