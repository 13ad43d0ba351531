"""Synchronized multi-track DFA algebra over Zeckendorf digit tuples.

A SyncDFA reads k digits per step, one per track, msd-first.  Tuples of
naturals are encoded by left-padding every track with zeros to a common
length.  Constructed automata keep two invariants:

  * transitions are total; a dead sink absorbs whatever falls off, and
  * where a construction says so, every track is a valid Zeckendorf
    string (no "11"), and the language contains exactly the paddings of
    the tuples of the recognized relation.

Symbols are integers: the digit of track t occupies bit t, so a column
(d_0, ..., d_{k-1}) is sum(d_t << t).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .numeration import zeck_decode, zeck_encode


@dataclass(frozen=True)
class SyncDFA:
    """Complete DFA over the 2^arity digit-tuple alphabet."""

    arity: int
    transitions: tuple[tuple[int, ...], ...]  # [state][symbol] -> state
    initial: int
    accepting: frozenset[int]

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    @property
    def n_symbols(self) -> int:
        return 1 << self.arity

    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(transition matrix, accepting mask) as numpy, cached on the instance."""
        cached = self.__dict__.get("_np_cache")
        if cached is None:
            t = np.array(self.transitions, dtype=np.int32)
            t = t.reshape(self.n_states, self.n_symbols)
            mask = np.zeros(self.n_states, dtype=bool)
            mask[list(self.accepting)] = True
            cached = (t, mask)
            object.__setattr__(self, "_np_cache", cached)
        return cached

    def check_structure(self) -> None:
        m = self.n_symbols
        for row in self.transitions:
            if len(row) != m:
                raise AssertionError("transition table not total")
            for q in row:
                if not 0 <= q < self.n_states:
                    raise AssertionError("transition target out of range")
        if not 0 <= self.initial < self.n_states:
            raise AssertionError("initial state out of range")
        if not all(0 <= q < self.n_states for q in self.accepting):
            raise AssertionError("accepting state out of range")


def columns_of(values: tuple[int, ...] | list[int]) -> list[int]:
    """Synchronized symbol sequence (msd-first) for a tuple of naturals."""
    digits = [zeck_encode(v).digits for v in values]
    width = max((len(d) for d in digits), default=0)
    padded = [d.rjust(width, "0") for d in digits]
    return [sum((padded[t][i] == "1") << t for t in range(len(values)))
            for i in range(width)]


def accepts(a: SyncDFA, values: tuple[int, ...] | list[int]) -> bool:
    """Run the canonical padded encoding of the tuple through the automaton."""
    if len(values) != a.arity:
        raise ValueError(f"expected {a.arity} values, got {len(values)}")
    q = a.initial
    for sym in columns_of(values):
        q = a.transitions[q][sym]
    return q in a.accepting


def accepts_batch(a: SyncDFA, values: np.ndarray) -> np.ndarray:
    """Vectorized accepts over an (N, arity) array of naturals."""
    t, mask = a._arrays()
    values = np.asarray(values, dtype=np.int64)
    if values.ndim == 1:
        values = values.reshape(-1, 1)
    n, k = values.shape
    if k != a.arity:
        raise ValueError(f"expected arity {a.arity}, got {k}")
    top = int(values.max(initial=0))
    weights = []
    x, y = 1, 2
    while x <= top:
        weights.append(x)
        x, y = y, x + y
    states = np.full(n, a.initial, dtype=np.int32)
    rem = values.copy()
    bits = 1 << np.arange(k, dtype=np.int64)
    for w in reversed(weights):
        d = rem >= w
        rem -= d * w
        syms = d @ bits
        states = t[states, syms]
    return mask[states]


# ---------------------------------------------------------------------------
# validity (canonical-representation) automata


@lru_cache(maxsize=None)
def validity_on(arity: int, tracks: tuple[int, ...]) -> SyncDFA:
    """Accepts words whose listed tracks contain no adjacent 1 digits.

    States are the possible "last digit was 1" masks over the watched
    tracks, plus a dead sink.
    """
    watched = 0
    for t in tracks:
        if not 0 <= t < arity:
            raise ValueError("track out of range")
        watched |= 1 << t
    masks = [m for m in range(1 << arity) if m & watched == m]
    index = {m: i for i, m in enumerate(masks)}
    dead = len(masks)
    n_sym = 1 << arity
    rows = []
    for m in masks:
        row = []
        for s in range(n_sym):
            row.append(dead if m & s else index[s & watched])
        rows.append(tuple(row))
    rows.append(tuple(dead for _ in range(n_sym)))
    return SyncDFA(arity, tuple(rows), index[0],
                   frozenset(range(len(masks))))


def validity_automaton(arity: int) -> SyncDFA:
    """Canonical universe: every track a valid Zeckendorf string."""
    return validity_on(arity, tuple(range(arity)))


# ---------------------------------------------------------------------------
# minimization (Hopcroft partition refinement) and canonical numbering


def _reachable(a: SyncDFA) -> list[int]:
    seen = [False] * a.n_states
    seen[a.initial] = True
    order = [a.initial]
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for nxt in a.transitions[q]:
            if not seen[nxt]:
                seen[nxt] = True
                order.append(nxt)
                queue.append(nxt)
    return order

def _hopcroft_blocks(t: np.ndarray, acc: np.ndarray) -> np.ndarray:
    """Block id per state for the coarsest congruence refining {F, Q-F}."""
    n, m = t.shape
    # inverse edges, one sorted slice family per symbol
    order = np.argsort(t, axis=0, kind="stable").astype(np.int32)
    starts = np.empty((m, n + 1), dtype=np.int64)
    targets = np.arange(n + 1)
    for s in range(m):
        starts[s] = np.searchsorted(t[order[:, s], s], targets)

    block_of = np.where(acc, 0, 1).astype(np.int32)
    blocks: dict[int, np.ndarray] = {}
    acc_states = np.nonzero(acc)[0].astype(np.int32)
    rej_states = np.nonzero(~acc)[0].astype(np.int32)
    if acc_states.size:
        blocks[0] = acc_states
    if rej_states.size:
        blocks[1] = rej_states
    if len(blocks) < 2:
        only = next(iter(blocks), None)
        if only == 1:
            block_of[:] = 0
            blocks = {0: rej_states}
        return block_of
    next_id = 2
    work = deque([0 if acc_states.size <= rej_states.size else 1])
    in_work = {work[0]}

    while work:
        a_id = work.popleft()
        in_work.discard(a_id)
        splitter = blocks[a_id].copy()
        for s in range(m):
            segs = [order[starts[s][q]:starts[s][q + 1], s] for q in splitter]
            if not segs:
                continue
            preds = np.concatenate(segs)
            if preds.size == 0:
                continue
            hit_ids = block_of[preds]
            for b in np.unique(hit_ids):
                y = blocks[b]
                hit = preds[hit_ids == b]
                if hit.size == y.size:
                    continue
                rest = np.setdiff1d(y, hit, assume_unique=True)
                new_id = next_id
                next_id += 1
                blocks[b] = rest
                blocks[new_id] = hit
                block_of[hit] = new_id
                if b in in_work:
                    work.append(new_id)
                    in_work.add(new_id)
                else:
                    smaller = new_id if hit.size <= rest.size else b
                    work.append(smaller)
                    in_work.add(smaller)
    return block_of


def minimize(a: SyncDFA) -> SyncDFA:
    """Unique minimal complete DFA in canonical (BFS, symbol-ascending) numbering.

    Minimal canonical automata for the same language are structurally equal.
    """
    order = _reachable(a)
    remap = {old: i for i, old in enumerate(order)}
    t = np.array([[remap[a.transitions[q][s]] for s in range(a.n_symbols)]
                  for q in order], dtype=np.int32)
    acc = np.array([q in a.accepting for q in order], dtype=bool)
    block_of = _hopcroft_blocks(t, acc)
    return _renumber(a.arity, t, acc, block_of, remap[a.initial])


def _renumber(arity: int, t: np.ndarray, acc: np.ndarray,
              block_of: np.ndarray, initial: int) -> SyncDFA:
    n, m = t.shape
    new_of_block: dict[int, int] = {}
    reps: list[int] = []

    def visit(block: int, rep: int) -> int:
        idx = new_of_block.get(block)
        if idx is None:
            idx = len(reps)
            new_of_block[block] = idx
            reps.append(rep)
        return idx

    visit(int(block_of[initial]), initial)
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(reps):
        rep = reps[i]
        rows.append(tuple(visit(int(block_of[t[rep, s]]), int(t[rep, s]))
                          for s in range(m)))
        i += 1
    accepting = frozenset(i for i, rep in enumerate(reps) if acc[rep])
    return SyncDFA(arity, tuple(rows), 0, accepting)


def moore_state_count(a: SyncDFA) -> int:
    """Independent minimal state count by iterated signature refinement."""
    order = _reachable(a)
    remap = {old: i for i, old in enumerate(order)}
    t = np.array([[remap[a.transitions[q][s]] for s in range(a.n_symbols)]
                  for q in order], dtype=np.int64)
    block = np.array([q in a.accepting for q in order], dtype=np.int64)
    n_blocks = len(np.unique(block))
    while True:
        sig = np.concatenate([block.reshape(-1, 1), block[t]], axis=1)
        _, block = np.unique(sig, axis=0, return_inverse=True)
        count = len(np.unique(block))
        if count == n_blocks:
            return count
        n_blocks = count


def live_state_count(a: SyncDFA) -> int:
    """States from which acceptance is reachable; the dead sink is not counted."""
    t, mask = a._arrays()
    live = mask.copy()
    while True:
        grew = live[t].any(axis=1) | live
        if (grew == live).all():
            break
        live = grew
    return int(live.sum())


# ---------------------------------------------------------------------------
# boolean algebra, projection, track surgery


def product(a: SyncDFA, b: SyncDFA, mode: str) -> SyncDFA:
    """Intersection ("and") or union ("or") of two aligned-track automata."""
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")
    if mode not in ("and", "or"):
        raise ValueError(f"bad product mode {mode!r}")
    both = mode == "and"
    n_sym = a.n_symbols
    index: dict[tuple[int, int], int] = {(a.initial, b.initial): 0}
    pairs = [(a.initial, b.initial)]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(pairs):
        pa, pb = pairs[i]
        row = []
        for s in range(n_sym):
            nxt = (a.transitions[pa][s], b.transitions[pb][s])
            j = index.get(nxt)
            if j is None:
                j = len(pairs)
                index[nxt] = j
                pairs.append(nxt)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    if both:
        accepting = frozenset(i for i, (pa, pb) in enumerate(pairs)
                              if pa in a.accepting and pb in b.accepting)
    else:
        accepting = frozenset(i for i, (pa, pb) in enumerate(pairs)
                              if pa in a.accepting or pb in b.accepting)
    return minimize(SyncDFA(a.arity, tuple(rows), 0, accepting))


def complement(a: SyncDFA) -> SyncDFA:
    """Complement relative to the canonical-representation universe."""
    flipped = SyncDFA(a.arity, a.transitions, a.initial,
                      frozenset(range(a.n_states)) - a.accepting)
    return product(flipped, validity_automaton(a.arity), "and")


def remap_tracks(a: SyncDFA, new_arity: int, positions: tuple[int, ...]) -> SyncDFA:
    """Move track i of `a` to track positions[i] of a new_arity-track automaton.

    Positions must be distinct.  Tracks of the result not listed are
    unconstrained here; callers add validity for genuinely new tracks.
    """
    if len(positions) != a.arity or len(set(positions)) != a.arity:
        raise ValueError("positions must list each old track once")
    if any(not 0 <= p < new_arity for p in positions):
        raise ValueError("position out of range")
    n_sym_new = 1 << new_arity
    sym_map = [sum(((s >> p) & 1) << i for i, p in enumerate(positions))
               for s in range(n_sym_new)]
    rows = tuple(tuple(row[sym_map[s]] for s in range(n_sym_new))
                 for row in a.transitions)
    return SyncDFA(new_arity, rows, a.initial, a.accepting)


def expand_insert(a: SyncDFA, new_arity: int, positions: tuple[int, ...]) -> SyncDFA:
    """remap_tracks plus validity on the inserted tracks, minimized."""
    inserted = tuple(sorted(set(range(new_arity)) - set(positions)))
    wide = remap_tracks(a, new_arity, positions)
    if not inserted:
        return minimize(wide)
    return product(wide, validity_on(new_arity, inserted), "and")


def project(a: SyncDFA, track: int) -> SyncDFA:
    """Existential quantification: erase one track, keep leading-zero closure.

    The NFA start set is everything reachable from the initial state by
    columns that are zero outside the erased track, which is exactly the
    closure needed so shorter representations of the remaining tracks
    stay accepted when the witness needs more digits.
    """
    if not 0 <= track < a.arity:
        raise ValueError("track out of range")
    if a.arity == 0:
        raise ValueError("cannot project an arity-0 automaton")
    new_arity = a.arity - 1
    n_sym_new = 1 << new_arity
    low_mask = (1 << track) - 1

    def olds(s_new: int) -> tuple[int, int]:
        low = s_new & low_mask
        high = s_new >> track
        base = low | (high << (track + 1))
        return base, base | (1 << track)

    start = {a.initial}
    frontier = [a.initial]
    while frontier:
        q = frontier.pop()
        for sym in (0, 1 << track):
            nxt = a.transitions[q][sym]
            if nxt not in start:
                start.add(nxt)
                frontier.append(nxt)

    start_key = frozenset(start)
    index: dict[frozenset[int], int] = {start_key: 0}
    sets = [start_key]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(sets):
        cur = sets[i]
        row = []
        for s_new in range(n_sym_new):
            s0, s1 = olds(s_new)
            nxt = frozenset(a.transitions[q][s]
                            for q in cur for s in (s0, s1))
            j = index.get(nxt)
            if j is None:
                j = len(sets)
                index[nxt] = j
                sets.append(nxt)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    accepting = frozenset(i for i, group in enumerate(sets)
                          if group & a.accepting)
    return minimize(SyncDFA(new_arity, tuple(rows), 0, accepting))


def is_empty(a: SyncDFA) -> bool:
    return not any(q in a.accepting for q in _reachable(a))


def decide_true(a: SyncDFA) -> bool:
    """Verdict of an arity-0 automaton; acceptance must not depend on padding."""
    if a.arity != 0:
        raise ValueError("decide_true needs an arity-0 automaton")
    q = a.initial
    verdicts = []
    for _ in range(a.n_states + 1):
        verdicts.append(q in a.accepting)
        q = a.transitions[q][0]
    if any(v != verdicts[0] for v in verdicts):
        raise AssertionError("arity-0 automaton not padding-invariant")
    return verdicts[0]


# ---------------------------------------------------------------------------
# tuple-regex compiler


class RegexError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _RegexParser:
    """([d,...,d] | 0 | 1 | (...) | concat | '|' | '*') over a fixed arity."""

    def __init__(self, text: str, arity: int):
        self.text = text
        self.arity = arity
        self.pos = 0
        # NFA under construction: eps[i] = set, step[i] = {sym: set}
        self.eps: list[set[int]] = []
        self.step: list[dict[int, set[int]]] = []

    def _new_state(self) -> int:
        self.eps.append(set())
        self.step.append({})
        return len(self.eps) - 1

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> SyncDFA:
        start, end = self._alt()
        self._skip_ws()
        if self.pos != len(self.text):
            raise RegexError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return self._determinize(start, end)

    def _alt(self) -> tuple[int, int]:
        first = self._concat()
        branches = [first]
        while self._peek() == "|":
            self.pos += 1
            branches.append(self._concat())
        if len(branches) == 1:
            return first
        s, e = self._new_state(), self._new_state()
        for bs, be in branches:
            self.eps[s].add(bs)
            self.eps[be].add(e)
        return s, e

    def _concat(self) -> tuple[int, int]:
        parts = []
        while True:
            c = self._peek()
            if c in ("", "|", ")"):
                break
            parts.append(self._factor())
        if not parts:
            s = self._new_state()
            return s, s
        for (_, e1), (s2, _) in zip(parts, parts[1:]):
            self.eps[e1].add(s2)
        return parts[0][0], parts[-1][1]

    def _factor(self) -> tuple[int, int]:
        frag = self._atom()
        while self._peek() == "*":
            self.pos += 1
            s, e = self._new_state(), self._new_state()
            fs, fe = frag
            self.eps[s].update((fs, e))
            self.eps[fe].update((fs, e))
            frag = (s, e)
        return frag

    def _atom(self) -> tuple[int, int]:
        c = self._peek()
        if c == "(":
            self.pos += 1
            frag = self._alt()
            if self._peek() != ")":
                raise RegexError("expected ')'", self.pos)
            self.pos += 1
            return frag
        if c == "[":
            open_pos = self.pos
            self.pos += 1
            digits = []
            while True:
                d = self._peek()
                if d not in ("0", "1"):
                    raise RegexError("expected digit 0 or 1", self.pos)
                digits.append(int(d))
                self.pos += 1
                nxt = self._peek()
                if nxt == ",":
                    self.pos += 1
                    continue
                if nxt == "]":
                    self.pos += 1
                    break
                raise RegexError("expected ',' or ']'", self.pos)
            if len(digits) != self.arity:
                raise RegexError(
                    f"tuple width {len(digits)} != arity {self.arity}", open_pos)
            sym = sum(d << i for i, d in enumerate(digits))
            return self._symbol_edge(sym)
        if c in ("0", "1"):
            if self.arity != 1:
                raise RegexError("bare digit needs arity 1", self.pos)
            self.pos += 1
            return self._symbol_edge(int(c))
        raise RegexError(f"unexpected {c!r}" if c else "unexpected end", self.pos)

    def _symbol_edge(self, sym: int) -> tuple[int, int]:
        s, e = self._new_state(), self._new_state()
        self.step[s].setdefault(sym, set()).add(e)
        return s, e

    def _closure(self, states: frozenset[int]) -> frozenset[int]:
        out = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for nxt in self.eps[q]:
                if nxt not in out:
                    out.add(nxt)
                    stack.append(nxt)
        return frozenset(out)

    def _determinize(self, start: int, end: int) -> SyncDFA:
        n_sym = 1 << self.arity
        init = self._closure(frozenset([start]))
        index = {init: 0}
        sets = [init]
        rows: list[tuple[int, ...]] = []
        i = 0
        while i < len(sets):
            cur = sets[i]
            row = []
            for sym in range(n_sym):
                moved = set()
                for q in cur:
                    moved.update(self.step[q].get(sym, ()))
                nxt = self._closure(frozenset(moved))
                j = index.get(nxt)
                if j is None:
                    j = len(sets)
                    index[nxt] = j
                    sets.append(nxt)
                row.append(j)
            rows.append(tuple(row))
            i += 1
        accepting = frozenset(i for i, group in enumerate(sets) if end in group)
        return minimize(SyncDFA(self.arity, tuple(rows), 0, accepting))


def compile_regex(pattern: str, arity: int) -> SyncDFA:
    """Thompson construction, subset construction, minimization.

    The language is exactly the regex language over raw digit tuples;
    canonicality is NOT imposed here (the shift relation needs raw
    [1,1] columns), callers intersect with validity where meaningful.
    """
    if arity < 0:
        raise ValueError("arity must be >= 0")
    return _RegexParser(pattern, arity).parse()


# ---------------------------------------------------------------------------
# arithmetic relation automata


@lru_cache(maxsize=None)
def adder(bound: int = 4) -> SyncDFA:
    """The 3-track relation x + y = z on canonical padded triples.

    Reachability over carry states (u, v): with s digits remaining the
    suffix must still contribute u*F_{s+2} + v*F_{s+1} toward z - x - y.
    Reading digits (a, b, c) of weight F_{s+1} updates
    (u, v) -> (u + v + a + b - c, u); the empty suffix contributes
    u*F_2 + v*F_1 = u + v, so acceptance is u + v = 0.  States beyond the
    pruning bound cannot recover and go dead; the bound is certified by
    exhaustive oracle tests and by bound-independence.
    """
    states: dict[tuple[int, int] | None, int] = {(0, 0): 0, None: 1}
    order: list[tuple[int, int] | None] = [(0, 0), None]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(order):
        st = order[i]
        row = []
        for sym in range(8):
            a, b, c = sym & 1, (sym >> 1) & 1, (sym >> 2) & 1
            if st is None:
                nxt = None
            else:
                u, v = st
                nu, nv = u + v + a + b - c, u
                nxt = None if abs(nu) > bound or abs(nv) > bound else (nu, nv)
            j = states.get(nxt)
            if j is None:
                j = len(order)
                states[nxt] = j
                order.append(nxt)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    accepting = frozenset(i for i, st in enumerate(order)
                          if st is not None and st[0] + st[1] == 0)
    raw = SyncDFA(3, tuple(rows), 0, accepting)
    return product(raw, validity_automaton(3), "and")


_COMPARATOR_ACCEPT = {
    "=": ("eq",),
    "<": ("lt",),
    "<=": ("eq", "lt"),
    ">": ("gt",),
    ">=": ("eq", "gt"),
}


@lru_cache(maxsize=None)
def comparator(rel: str) -> SyncDFA:
    """Two-track order relation; numeric order equals padded msd-lex order."""
    if rel not in _COMPARATOR_ACCEPT:
        raise ValueError(f"unknown comparator {rel!r}")
    names = ["eq", "lt", "gt"]
    idx = {n: i for i, n in enumerate(names)}
    rows = []
    for st in names:
        row = []
        for sym in range(4):
            a, b = sym & 1, (sym >> 1) & 1
            if st == "eq":
                nxt = "eq" if a == b else ("lt" if a < b else "gt")
            else:
                nxt = st
            row.append(idx[nxt])
        rows.append(tuple(row))
    accepting = frozenset(idx[n] for n in _COMPARATOR_ACCEPT[rel])
    raw = SyncDFA(2, tuple(rows), idx["eq"], accepting)
    return product(raw, validity_automaton(2), "and")


@lru_cache(maxsize=None)
def const_equal(c: int) -> SyncDFA:
    """One-track relation {x = c}: the padded representations of c."""
    if c < 0:
        raise ValueError("constant must be a natural")
    digits = zeck_encode(c).digits
    # state i = matched the first i digits after the leading-zero block
    n = len(digits)
    dead = n + 1
    rows = []
    for i in range(n):
        want = 1 if digits[i] == "1" else 0
        row = []
        for sym in (0, 1):
            if sym == want:
                row.append(i + 1)
            elif i == 0 and sym == 0:
                row.append(0)  # still inside the leading-zero padding
            else:
                row.append(dead)
        rows.append(tuple(row))
    # state n: all digits matched, nothing more may follow
    rows.append((dead if n else 0, dead))
    if n == 0:
        rows[-1] = (0, dead)  # c = 0 accepts 0*
    rows.append((dead, dead))
    raw = SyncDFA(1, tuple(rows), 0, frozenset([n]))
    return minimize(raw)


@lru_cache(maxsize=None)
def const_add(c: int) -> SyncDFA:
    """Two-track relation y = x + c, folded from the adder."""
    if c == 0:
        return comparator("=")
    # tracks: 0 = x, 1 = c-holder, 2 = y, then drop the middle track
    three = expand_insert(const_equal(c), 3, (1,))
    relation = product(adder(), three, "and")
    return project(relation, 1)


@lru_cache(maxsize=None)
def const_multiple(c: int) -> SyncDFA:
    """Two-track relation y = c*x for 0 <= c <= 64, by chained addition."""
    if not 0 <= c <= 64:
        raise ValueError("constant multiplier limited to 0..64")
    if c == 0:
        zero = expand_insert(const_equal(0), 2, (1,))
        return zero
    if c == 1:
        return comparator("=")
    prev = const_multiple(c - 1)            # (x, t): t = (c-1)x
    lifted = expand_insert(prev, 3, (0, 1))  # (x, t, y)
    add = remap_tracks(adder(), 3, (1, 0, 2))  # t + x = y
    return project(product(lifted, add, "and"), 1)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_accepted(a: SyncDFA, limit: int, chunk: int = 1 << 14) -> list:
    """Accepted tuples with every component <= limit, ascending.

    Arity 1 returns ints; higher arities return tuples in lexicographic
    (hence per-track numeric) order.
    """
    if a.arity == 0:
        raise ValueError("enumerate needs arity >= 1")
    if a.arity == 1:
        out: list[int] = []
        for lo in range(0, limit + 1, chunk):
            vals = np.arange(lo, min(lo + chunk, limit + 1), dtype=np.int64)
            hits = accepts_batch(a, vals.reshape(-1, 1))
            out.extend(int(v) for v in vals[hits])
        return out
    results: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...]) -> None:
        if len(prefix) == a.arity - 1:
            vals = np.arange(0, limit + 1, dtype=np.int64)
            cols = np.empty((vals.size, a.arity), dtype=np.int64)
            cols[:, :-1] = prefix
            cols[:, -1] = vals
            hits = accepts_batch(a, cols)
            results.extend(prefix + (int(v),) for v in vals[hits])
            return
        for v in range(limit + 1):
            rec(prefix + (v,))

    rec(())
    return results


def first_accepted_words(a: SyncDFA, k: int, max_len: int = 4000) -> list[list[int]]:
    """First k accepted canonical words in length-then-lex (numeric) order.

    A canonical word is empty or starts with a nonzero column.  Stops
    early when no live state remains reachable.
    """
    if a.arity == 0:
        raise ValueError("needs arity >= 1")
    t, mask = a._arrays()
    found: list[list[int]] = []
    if a.initial in a.accepting:
        found.append([])
    live = mask.copy()
    while True:
        grew = live[t].any(axis=1) | live
        if (grew == live).all():
            break
        live = grew
    exact = [mask]  # exact[r][q]: accepting reachable in exactly r steps
    frontier = {int(t[a.initial, s]) for s in range(1, a.n_symbols)}
    length = 1
    while len(found) < k and length <= max_len:
        exact.append(exact[-1][t].any(axis=1))
        if not any(live[q] for q in frontier):
            break
        # lexicographic DFS, first column nonzero
        stack = [(a.initial, 0, [])]
        while stack and len(found) < k:
            state, depth, word = stack.pop()
            if depth == length:
                if mask[state]:
                    found.append(word)
                continue
            first = 1 if depth == 0 else 0
            remaining = length - depth - 1
            for s in range(a.n_symbols - 1, first - 1, -1):
                nxt = int(t[state, s])
                if exact[remaining][nxt]:
                    stack.append((nxt, depth + 1, word + [s]))
        frontier = {int(t[q, s]) for q in frontier for s in range(a.n_symbols)}
        length += 1
    return found[:k]


def word_to_values(word: list[int], arity: int) -> tuple[int, ...]:
    strings = word_to_track_strings(word, arity)
    return tuple(zeck_decode(s) for s in strings)


def word_to_track_strings(word: list[int], arity: int) -> tuple[str, ...]:
    return tuple("".join(str((sym >> t) & 1) for sym in word)
                 for t in range(arity))


# ---------------------------------------------------------------------------
# export


def to_dot(a: SyncDFA) -> str:
    """DOT drawing of the live part (dead sink omitted), one line per transition."""
    t, mask = a._arrays()
    live = mask.copy()
    while True:
        grew = live[t].any(axis=1) | live
        if (grew == live).all():
            break
        live = grew
    lines = ["digraph dfa {", "  rankdir=LR;", '  hidden [shape=point, label=""];']
    for q in range(a.n_states):
        if not live[q]:
            continue
        shape = "doublecircle" if q in a.accepting else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines.append(f"  hidden -> {a.initial};")
    for q in range(a.n_states):
        if not live[q]:
            continue
        for s in range(a.n_symbols):
            nxt = a.transitions[q][s]
            if not live[nxt]:
                continue
            label = "[" + ",".join(str((s >> i) & 1) for i in range(a.arity)) + "]"
            lines.append(f'  {q} -> {nxt} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(a: SyncDFA) -> str:
    """Plain-text dump of the complete automaton."""
    lines = [f"arity {a.arity} / states {a.n_states} / initial {a.initial}",
             "accepting: " + " ".join(str(q) for q in sorted(a.accepting))]
    for q in range(a.n_states):
        for s in range(a.n_symbols):
            label = "[" + ",".join(str((s >> i) & 1) for i in range(a.arity)) + "]"
            lines.append(f"{q} {label} -> {a.transitions[q][s]}")
    return "\n".join(lines) + "\n"
