"""A first-order predicate language compiled to synchronized automata.

Scripts are sequences of commands, each ended by a colon:

    reg NAME (msd_fib | {0,1})+ "REGEX":
    def NAME "?msd_fib FORMULA":
    eval NAME "?msd_fib FORMULA":
    test NAME COUNT:

Formulas quantify over naturals written in Zeckendorf form.  Operators,
weakest binding first: E/A quantifiers (maximal rightward scope), <=>,
=> (right associative), |, &, ~.  Atoms are comparisons (= < <= > >=),
positional predicate calls $name(term, ...), and word atoms
F[term]=F[term] over the infinite Fibonacci word.  Terms use + - and
constant multiplication; subtraction is existentially closed at the
atom, so an atom containing a - b is false whenever a < b.

Free variables of a stored predicate are ordered alphabetically; calls
bind arguments to that order positionally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iter_product

from . import automata as au
from .automata import SyncDFA
from .fibword import fib_word_dfao, symbol_at


class LogicError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = -1


@dataclass(frozen=True)
class Const:
    value: int
    pos: int = -1


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    pos: int = -1


@dataclass(frozen=True)
class Sub:
    left: object
    right: object
    pos: int = -1


@dataclass(frozen=True)
class Mul:
    left: object
    right: object
    pos: int = -1


@dataclass(frozen=True)
class Cmp:
    op: str
    left: object
    right: object
    pos: int = -1


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = -1


@dataclass(frozen=True)
class SeqEq:
    left: object
    right: object
    pos: int = -1


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Imp:
    left: object
    right: object


@dataclass(frozen=True)
class Iff:
    left: object
    right: object


@dataclass(frozen=True)
class Exists:
    names: tuple[str, ...]
    body: object


@dataclass(frozen=True)
class Forall:
    names: tuple[str, ...]
    body: object


def free_vars(f) -> frozenset[str]:
    if isinstance(f, Var):
        return frozenset([f.name])
    if isinstance(f, Const):
        return frozenset()
    if isinstance(f, (Add, Sub, Mul, And, Or, Imp, Iff)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Cmp, SeqEq)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Call):
        out = frozenset()
        for a in f.args:
            out |= free_vars(a)
        return out
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (Exists, Forall)):
        return free_vars(f.body) - frozenset(f.names)
    raise TypeError(f"not a formula node: {f!r}")


# ---------------------------------------------------------------------------
# formula tokenizer / parser


_MULTI_OPS = ("<=>", "<=", ">=", "=>", "<", ">", "=", "+", "-", "*",
              "&", "|", "~", "(", ")", "[", "]", ",", "$")


@dataclass(frozen=True)
class _Tok:
    kind: str  # op text, "var", "seq", "num", "E", "A", "end"
    text: str
    pos: int


def _tokenize_formula(src: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(_Tok("num", src[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            if c in "EA":
                toks.append(_Tok(c, c, i))
                i += 1
                continue
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            word = src[i:j]
            toks.append(_Tok("seq" if c.isupper() else "var", word, i))
            i = j
            continue
        for op in _MULTI_OPS:
            if src.startswith(op, i):
                toks.append(_Tok(op, op, i))
                i += len(op)
                break
        else:
            raise LogicError(f"unexpected character {c!r} in formula at offset {i}")
    toks.append(_Tok("end", "", n))
    return toks


class _Backtrack(Exception):
    pass


class _FormulaParser:
    def __init__(self, src: str):
        self.toks = _tokenize_formula(src)
        self.i = 0
        self.strict = True  # raise LogicError; False inside backtracking probes

    def _peek(self) -> _Tok:
        return self.toks[self.i]

    def _next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _fail(self, message: str, pos: int):
        if self.strict:
            raise LogicError(f"{message} at offset {pos}")
        raise _Backtrack()

    def _expect(self, kind: str) -> _Tok:
        t = self._next()
        if t.kind != kind:
            self._fail(f"expected {kind!r}, found {t.text or 'end'!r}", t.pos)
        return t

    def parse(self):
        f = self._iff()
        t = self._peek()
        if t.kind != "end":
            raise LogicError(f"trailing {t.text!r} at offset {t.pos}")
        return f

    def _iff(self):
        f = self._imp()
        while self._peek().kind == "<=>":
            self._next()
            f = Iff(f, self._imp())
        return f

    def _imp(self):
        f = self._or()
        if self._peek().kind == "=>":
            self._next()
            return Imp(f, self._imp())
        return f

    def _or(self):
        f = self._and()
        while self._peek().kind == "|":
            self._next()
            f = Or(f, self._and())
        return f

    def _and(self):
        f = self._unary()
        while self._peek().kind == "&":
            self._next()
            f = And(f, self._unary())
        return f

    def _unary(self):
        t = self._peek()
        if t.kind == "~":
            self._next()
            return Not(self._unary())
        if t.kind in ("E", "A"):
            self._next()
            names = [self._expect("var").text]
            while self._peek().kind == ",":
                self._next()
                names.append(self._expect("var").text)
            body = self._iff()  # maximal rightward scope
            cls = Exists if t.kind == "E" else Forall
            return cls(tuple(names), body)
        return self._atom()

    def _atom(self):
        t = self._peek()
        if t.kind == "$":
            self._next()
            name_tok = self._next()
            if name_tok.kind not in ("var", "seq"):
                self._fail("expected predicate name after '$'", name_tok.pos)
            self._expect("(")
            args = [self._term()]
            while self._peek().kind == ",":
                self._next()
                args.append(self._term())
            self._expect(")")
            return Call(name_tok.text, tuple(args), t.pos)
        if t.kind == "seq":
            return self._seq_atom()
        if t.kind == "(":
            saved = self.i
            self.strict = False
            try:
                return self._cmp_atom()
            except _Backtrack:
                self.i = saved
            finally:
                self.strict = True
            self._next()
            f = self._iff()
            self._expect(")")
            return f
        return self._cmp_atom()

    def _seq_atom(self):
        t = self._next()
        if t.text != "F":
            self._fail(f"unknown sequence {t.text!r}", t.pos)
        self._expect("[")
        left = self._term()
        self._expect("]")
        self._expect("=")
        t2 = self._next()
        if t2.kind != "seq" or t2.text != "F":
            self._fail("expected 'F' on the right of a word atom", t2.pos)
        self._expect("[")
        right = self._term()
        self._expect("]")
        return SeqEq(left, right, t.pos)

    def _cmp_atom(self):
        left = self._term()
        t = self._next()
        if t.kind not in ("=", "<", "<=", ">", ">="):
            self._fail(f"expected comparison, found {t.text or 'end'!r}", t.pos)
        right = self._term()
        return Cmp(t.kind, left, right, t.pos)

    def _term(self):
        f = self._mul()
        while self._peek().kind in ("+", "-"):
            op = self._next()
            g = self._mul()
            f = Add(f, g, op.pos) if op.kind == "+" else Sub(f, g, op.pos)
        return f

    def _mul(self):
        f = self._primary()
        while self._peek().kind == "*":
            op = self._next()
            f = Mul(f, self._primary(), op.pos)
        return f

    def _primary(self):
        t = self._next()
        if t.kind == "num":
            return Const(int(t.text), t.pos)
        if t.kind == "var":
            return Var(t.text, t.pos)
        if t.kind == "(":
            inner = self._term()
            self._expect(")")
            return inner
        self._fail(f"expected a term, found {t.text or 'end'!r}", t.pos)


def parse_formula(src: str):
    """Parse the body of a def/eval command, including the ?msd_fib tag."""
    stripped = src.lstrip()
    if not stripped.startswith("?msd_fib"):
        raise LogicError("formula must start with the ?msd_fib numeration tag")
    body = stripped[len("?msd_fib"):]
    if body[:1] not in ("", " ", "\t", "\n", "(", "~", "$"):
        raise LogicError("formula must start with the ?msd_fib numeration tag")
    return _FormulaParser(body).parse()


# ---------------------------------------------------------------------------
# script-level parsing


@dataclass(frozen=True)
class RegCmd:
    name: str
    tags: tuple[str, ...]
    pattern: str
    line: int


@dataclass(frozen=True)
class DefCmd:
    name: str
    source: str
    line: int
    store: bool = True  # False for eval


@dataclass(frozen=True)
class TestCmd:
    name: str
    count: int
    line: int


class _ScriptScanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _line(self, pos: int) -> int:
        return self.text.count("\n", 0, pos) + 1

    def _col(self, pos: int) -> int:
        nl = self.text.rfind("\n", 0, pos)
        return pos - nl

    def _skip(self) -> None:
        while self.i < len(self.text):
            c = self.text[self.i]
            if c in " \t\r\n":
                self.i += 1
            elif c == "#":
                nl = self.text.find("\n", self.i)
                self.i = len(self.text) if nl < 0 else nl + 1
            else:
                return

    def _error(self, message: str, pos: int):
        raise LogicError(message, self._line(pos), self._col(pos))

    def _word(self) -> tuple[str, int]:
        self._skip()
        start = self.i
        if start >= len(self.text):
            self._error("unexpected end of script", start)
        c = self.text[start]
        if not (c.isalpha() or c == "_"):
            self._error(f"expected a name, found {c!r}", start)
        j = start
        while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
            j += 1
        self.i = j
        return self.text[start:j], start

    def _quoted(self) -> tuple[str, int]:
        self._skip()
        start = self.i
        if start >= len(self.text) or self.text[start] != '"':
            self._error('expected a double-quoted string', start)
        end = self.text.find('"', start + 1)
        if end < 0:
            self._error("unterminated string", start)
        self.i = end + 1
        return self.text[start + 1:end], start + 1

    def _colon(self) -> None:
        self._skip()
        if self.i >= len(self.text) or self.text[self.i] != ":":
            self._error("expected ':' to end the command", self.i)
        self.i += 1

    def commands(self) -> list:
        out = []
        while True:
            self._skip()
            if self.i >= len(self.text):
                return out
            word, pos = self._word()
            line = self._line(pos)
            if word == "reg":
                name, _ = self._word()
                tags = []
                while True:
                    self._skip()
                    if self.i < len(self.text) and self.text[self.i] == "{":
                        end = self.text.find("}", self.i)
                        if end < 0:
                            self._error("unterminated alphabet tag", self.i)
                        tag = "".join(self.text[self.i:end + 1].split())
                        if tag != "{0,1}":
                            self._error(f"unsupported alphabet {tag!r}", self.i)
                        tags.append(tag)
                        self.i = end + 1
                        continue
                    if self.i < len(self.text) and self.text[self.i] == '"':
                        break
                    tag, tpos = self._word()
                    if tag != "msd_fib":
                        self._error(f"unsupported numeration tag {tag!r}", tpos)
                    tags.append(tag)
                if not tags:
                    self._error("reg needs at least one track tag", pos)
                pattern, _ = self._quoted()
                self._colon()
                out.append(RegCmd(name, tuple(tags), pattern, line))
            elif word in ("def", "eval"):
                name, _ = self._word()
                source, _ = self._quoted()
                self._colon()
                out.append(DefCmd(name, source, line, store=True)
                           if word == "def" else
                           DefCmd(name, source, line, store=False))
            elif word == "test":
                name, _ = self._word()
                self._skip()
                start = self.i
                while self.i < len(self.text) and self.text[self.i].isdigit():
                    self.i += 1
                if self.i == start:
                    self._error("test needs a count", start)
                count = int(self.text[start:self.i])
                self._colon()
                out.append(TestCmd(name, count, line))
            else:
                self._error(f"unknown command {word!r}", pos)


def parse_script(text: str) -> list:
    return _ScriptScanner(text).commands()


# ---------------------------------------------------------------------------
# compilation to automata


@dataclass(frozen=True)
class Rel:
    """An automaton together with the variable owning each track."""

    dfa: SyncDFA
    names: tuple[str, ...]  # sorted; names[i] owns track i


@dataclass
class StoredPred:
    name: str
    kind: str  # "reg" | "def" | "eval"
    dfa: SyncDFA
    arity: int

    _validated: SyncDFA | None = field(default=None, repr=False)

    def validated(self) -> SyncDFA:
        """The relation intersected with per-track canonicality."""
        if self._validated is None:
            self._validated = au.product(
                self.dfa, au.validity_automaton(self.arity), "and")
        return self._validated


class PredicateEnv:
    def __init__(self):
        self.preds: dict[str, StoredPred] = {}

    def define(self, name: str, kind: str, dfa: SyncDFA) -> StoredPred:
        if name in self.preds:
            raise LogicError(f"name {name!r} is already defined")
        p = StoredPred(name, kind, dfa, dfa.arity)
        self.preds[name] = p
        return p

    def lookup(self, name: str) -> StoredPred:
        p = self.preds.get(name)
        if p is None:
            raise LogicError(f"unknown predicate {name!r}")
        return p

    def copy(self) -> "PredicateEnv":
        env = PredicateEnv()
        env.preds = dict(self.preds)
        return env


@lru_cache(maxsize=1)
def sequence_atom_automaton() -> SyncDFA:
    """Two-track relation {(s, t): word symbol at s equals symbol at t}."""
    dfao = fib_word_dfao()
    trans = dfao["transition"]
    out = dfao["output"]
    n = dfao["states"]
    pairs = [(i, j) for i in range(n) for j in range(n)]
    index = {p: k for k, p in enumerate(pairs)}
    rows = []
    for i, j in pairs:
        row = []
        for sym in range(4):
            a, b = sym & 1, (sym >> 1) & 1
            row.append(index[(trans[i][a], trans[j][b])])
        rows.append(tuple(row))
    accepting = frozenset(k for k, (i, j) in enumerate(pairs)
                          if out[i] == out[j])
    raw = SyncDFA(2, tuple(rows), index[(dfao["initial"], dfao["initial"])],
                  accepting)
    return au.product(raw, au.validity_automaton(2), "and")


def _align(a: Rel, b: Rel) -> tuple[SyncDFA, SyncDFA, tuple[str, ...]]:
    names = tuple(sorted(set(a.names) | set(b.names)))
    pos = {v: i for i, v in enumerate(names)}
    wa = au.expand_insert(a.dfa, len(names), tuple(pos[v] for v in a.names))
    wb = au.expand_insert(b.dfa, len(names), tuple(pos[v] for v in b.names))
    return wa, wb, names


def _boolean(a: Rel, b: Rel, mode: str) -> Rel:
    wa, wb, names = _align(a, b)
    return Rel(au.product(wa, wb, mode), names)


def _negate(a: Rel) -> Rel:
    return Rel(au.complement(a.dfa), a.names)


def _project_name(a: Rel, name: str) -> Rel:
    if name not in a.names:
        return a
    t = a.names.index(name)
    rest = a.names[:t] + a.names[t + 1:]
    return Rel(au.project(a.dfa, t), rest)


class _AtomBuilder:
    """Lowers one atom's terms into relation fragments, then conjoins them.

    Helper variables introduced for subterms are projected away as soon
    as no later fragment mentions them, which keeps the running track
    count near the atom's own variable count.
    """

    def __init__(self, compiler: "_Compiler"):
        self.compiler = compiler
        self.fragments: list[tuple[SyncDFA, tuple[str, ...]]] = []
        self.n_temps = 0

    def _temp(self) -> str:
        name = f"t#{self.n_temps}"
        self.n_temps += 1
        return name

    def add(self, dfa: SyncDFA, names: tuple[str, ...]) -> None:
        fixed = []
        for v in names:
            if v in fixed:
                alias = self._temp()
                self.fragments.append((au.comparator("="), (v, alias)))
                fixed.append(alias)
            else:
                fixed.append(v)
        self.fragments.append((dfa, tuple(fixed)))

    def lower(self, term, target: str | None = None) -> str:
        out = target if target is not None else None

        def sink() -> str:
            nonlocal out
            if out is None:
                out = self._temp()
            return out

        if isinstance(term, Var):
            if target is not None:
                raise AssertionError("bare variable never lowered to a target")
            return term.name
        if isinstance(term, Const):
            self.add(au.const_equal(term.value), (sink(),))
            return out
        if isinstance(term, Add):
            l, r = term.left, term.right
            if isinstance(r, Const):
                a = self.lower(l)
                self.add(au.const_add(r.value), (a, sink()))
                return out
            if isinstance(l, Const):
                a = self.lower(r)
                self.add(au.const_add(l.value), (a, sink()))
                return out
            a, b = self.lower(l), self.lower(r)
            self.add(au.adder(), (a, b, sink()))
            return out
        if isinstance(term, Sub):
            l, r = term.left, term.right
            if isinstance(r, Const):
                a = self.lower(l)
                self.add(au.const_add(r.value), (sink(), a))  # a = out + c
                return out
            a, b = self.lower(l), self.lower(r)
            self.add(au.adder(), (b, sink(), a))  # b + out = a
            return out
        if isinstance(term, Mul):
            l, r = term.left, term.right
            if isinstance(l, Const) and isinstance(r, Const):
                return self.lower(Const(l.value * r.value, term.pos), out)
            if isinstance(l, Const):
                c, operand = l.value, r
            elif isinstance(r, Const):
                c, operand = r.value, l
            else:
                raise LogicError(
                    f"multiplication needs a literal constant side "
                    f"at offset {term.pos}")
            try:
                mult = au.const_multiple(c)
            except ValueError as exc:
                raise LogicError(f"{exc} at offset {term.pos}") from None
            a = self.lower(operand)
            self.add(mult, (a, sink()))
            return out
        raise TypeError(f"not a term: {term!r}")

    def build(self) -> Rel:
        if not self.fragments:
            raise AssertionError("atom produced no fragments")
        last_use: dict[str, int] = {}
        for idx, (_, names) in enumerate(self.fragments):
            for v in names:
                last_use[v] = idx
        rel: Rel | None = None
        for idx, (dfa, names) in enumerate(self.fragments):
            ordered = tuple(sorted(names))
            pos = {v: i for i, v in enumerate(ordered)}
            frag = Rel(au.expand_insert(dfa, len(names),
                                        tuple(pos[v] for v in names))
                       if ordered != names else au.minimize(dfa),
                       ordered)
            rel = frag if rel is None else _boolean(rel, frag, "and")
            for v in list(rel.names):
                if v.startswith("t#") and last_use[v] <= idx:
                    rel = _project_name(rel, v)
        for v in list(rel.names):  # helper vars with no later use at all
            if v.startswith("t#"):
                rel = _project_name(rel, v)
        return rel


class _Compiler:
    def __init__(self, env: PredicateEnv):
        self.env = env

    def compile(self, f) -> Rel:
        if isinstance(f, Not):
            return _negate(self.compile(f.body))
        if isinstance(f, And):
            return _boolean(self.compile(f.left), self.compile(f.right), "and")
        if isinstance(f, Or):
            return _boolean(self.compile(f.left), self.compile(f.right), "or")
        if isinstance(f, Imp):
            return _boolean(_negate(self.compile(f.left)),
                            self.compile(f.right), "or")
        if isinstance(f, Iff):
            a, b = self.compile(f.left), self.compile(f.right)
            wa, wb, names = _align(a, b)
            both = au.product(wa, wb, "and")
            neither = au.product(au.complement(wa), au.complement(wb), "and")
            return Rel(au.product(both, neither, "or"), names)
        if isinstance(f, Exists):
            rel = self.compile(f.body)
            for v in f.names:
                rel = _project_name(rel, v)
            return rel
        if isinstance(f, Forall):
            rel = _negate(self.compile(f.body))
            for v in f.names:
                rel = _project_name(rel, v)
            return _negate(rel)
        if isinstance(f, (Cmp, Call, SeqEq)):
            return self._atom(f)
        raise TypeError(f"not a formula node: {f!r}")

    def _atom(self, f) -> Rel:
        b = _AtomBuilder(self)
        if isinstance(f, Cmp):
            l, r = f.left, f.right
            if f.op == "=" and isinstance(l, Var) and not isinstance(r, Var):
                b.lower(r, target=l.name)
            elif f.op == "=" and isinstance(r, Var) and not isinstance(l, Var):
                b.lower(l, target=r.name)
            else:
                x, y = b.lower(l), b.lower(r)
                b.add(au.comparator(f.op), (x, y))
        elif isinstance(f, SeqEq):
            x, y = b.lower(f.left), b.lower(f.right)
            b.add(sequence_atom_automaton(), (x, y))
        elif isinstance(f, Call):
            pred = self.env.lookup(f.name)
            if len(f.args) != pred.arity:
                raise LogicError(
                    f"${f.name} takes {pred.arity} arguments, "
                    f"got {len(f.args)} at offset {f.pos}")
            names = tuple(b.lower(t) for t in f.args)
            b.add(pred.validated(), names)
        else:
            raise TypeError(f"not an atom: {f!r}")
        return b.build()


def compile_formula(f, env: PredicateEnv) -> Rel:
    return _Compiler(env).compile(f)


def compile_predicate(env: PredicateEnv, source: str) -> Rel:
    """Compile a '?msd_fib ...' formula against an environment."""
    return compile_formula(parse_formula(source), env)


# ---------------------------------------------------------------------------
# sessions


@dataclass(frozen=True)
class SessionEntry:
    line: str
    data: dict


@dataclass(frozen=True)
class SessionReport:
    entries: tuple[SessionEntry, ...]

    @property
    def text(self) -> str:
        return "".join(e.line + "\n" for e in self.entries)

    def to_json(self) -> str:
        return json.dumps([e.data for e in self.entries],
                          indent=2, sort_keys=True) + "\n"


def run_session(text: str, env: PredicateEnv | None = None) -> SessionReport:
    """Execute a script, defining predicates and reporting each command."""
    if env is None:
        env = PredicateEnv()
    entries: list[SessionEntry] = []
    for cmd in parse_script(text):
        if isinstance(cmd, RegCmd):
            try:
                dfa = au.compile_regex(cmd.pattern, len(cmd.tags))
            except au.RegexError as exc:
                raise LogicError(f"in reg {cmd.name}: {exc}", cmd.line, 1)
            env.define(cmd.name, "reg", dfa)
            states = au.live_state_count(dfa)
            entries.append(SessionEntry(
                f"reg {cmd.name}: arity {dfa.arity}, states {states}",
                {"command": "reg", "name": cmd.name,
                 "arity": dfa.arity, "states": states}))
        elif isinstance(cmd, DefCmd):
            rel = compile_predicate(env, cmd.source)
            kind = "def" if cmd.store else "eval"
            env.define(cmd.name, kind, rel.dfa)
            if not cmd.store and rel.dfa.arity == 0:
                verdict = au.decide_true(rel.dfa)
                word = "TRUE" if verdict else "FALSE"
                entries.append(SessionEntry(
                    f"eval {cmd.name}: {word}",
                    {"command": "eval", "name": cmd.name, "verdict": verdict}))
            else:
                states = au.live_state_count(rel.dfa)
                entries.append(SessionEntry(
                    f"{kind} {cmd.name}: arity {rel.dfa.arity}, states {states}",
                    {"command": kind, "name": cmd.name,
                     "arity": rel.dfa.arity, "states": states,
                     "tracks": list(rel.names)}))
        elif isinstance(cmd, TestCmd):
            pred = env.lookup(cmd.name)
            if pred.arity == 0:
                raise LogicError(f"test {cmd.name}: needs arity >= 1", cmd.line, 1)
            words = au.first_accepted_words(pred.validated(), cmd.count)
            shown = []
            data = []
            for w in words:
                reps = au.word_to_track_strings(w, pred.arity)
                vals = au.word_to_values(w, pred.arity)
                reps = tuple(r if r else "0" for r in reps)
                if pred.arity == 1:
                    shown.append(f"{reps[0]} (={vals[0]})")
                else:
                    shown.append("[" + ",".join(reps) + "] (="
                                 + ",".join(str(v) for v in vals) + ")")
                data.append({"reps": list(reps), "values": list(vals)})
            listing = ", ".join(shown) if shown else "(none)"
            entries.append(SessionEntry(
                f"test {cmd.name} {cmd.count}: {listing}",
                {"command": "test", "name": cmd.name,
                 "count": cmd.count, "witnesses": data}))
        else:
            raise AssertionError(f"unhandled command {cmd!r}")
    return SessionReport(tuple(entries))


# ---------------------------------------------------------------------------
# brute-force interpreter (independent of the automata)


class BruteForce:
    """Evaluates formulas by direct recursion over bounded naturals.

    Base predicates (reg names) are supplied as Python callables; def
    bodies are macro-expanded with memoization.  Quantifiers range over
    0..bound.  Subtraction below zero makes the enclosing atom false,
    mirroring the compiled existential closure.
    """

    def __init__(self, base: dict[str, object], bound: int):
        self.base = dict(base)
        self.defs: dict[str, tuple[tuple[str, ...], object]] = {}
        self.bound = bound
        self._memo: dict[tuple, bool] = {}

    def add_def(self, name: str, formula) -> None:
        if name in self.base or name in self.defs:
            raise LogicError(f"name {name!r} is already defined")
        params = tuple(sorted(free_vars(formula)))
        self.defs[name] = (params, formula)

    def load_script(self, text: str) -> None:
        """Register every def command; reg names must already be in base."""
        for cmd in parse_script(text):
            if isinstance(cmd, RegCmd):
                if cmd.name not in self.base:
                    raise LogicError(
                        f"no base semantics supplied for reg {cmd.name!r}")
            elif isinstance(cmd, DefCmd) and cmd.store:
                self.add_def(cmd.name, parse_formula(cmd.source))

    def term(self, t, asg: dict) -> int | None:
        if isinstance(t, Var):
            return asg[t.name]
        if isinstance(t, Const):
            return t.value
        if isinstance(t, (Add, Sub, Mul)):
            a = self.term(t.left, asg)
            b = self.term(t.right, asg)
            if a is None or b is None:
                return None
            if isinstance(t, Add):
                return a + b
            if isinstance(t, Mul):
                return a * b
            return a - b if a >= b else None
        raise TypeError(f"not a term: {t!r}")

    def call(self, name: str, args: tuple[int, ...]) -> bool:
        fn = self.base.get(name)
        if fn is not None:
            return bool(fn(*args))
        params, body = self.defs[name]
        if len(params) != len(args):
            raise LogicError(f"${name} takes {len(params)} arguments")
        key = (name, args)
        hit = self._memo.get(key)
        if hit is None:
            hit = self.eval(body, dict(zip(params, args)))
            self._memo[key] = hit
        return hit

    def eval(self, f, asg: dict) -> bool:
        if isinstance(f, Cmp):
            a = self.term(f.left, asg)
            b = self.term(f.right, asg)
            if a is None or b is None:
                return False
            return {"=": a == b, "<": a < b, "<=": a <= b,
                    ">": a > b, ">=": a >= b}[f.op]
        if isinstance(f, SeqEq):
            a = self.term(f.left, asg)
            b = self.term(f.right, asg)
            if a is None or b is None:
                return False
            return symbol_at(a) == symbol_at(b)
        if isinstance(f, Call):
            vals = tuple(self.term(t, asg) for t in f.args)
            if any(v is None for v in vals):
                return False
            return self.call(f.name, vals)
        if isinstance(f, Not):
            return not self.eval(f.body, asg)
        if isinstance(f, And):
            return self.eval(f.left, asg) and self.eval(f.right, asg)
        if isinstance(f, Or):
            return self.eval(f.left, asg) or self.eval(f.right, asg)
        if isinstance(f, Imp):
            return (not self.eval(f.left, asg)) or self.eval(f.right, asg)
        if isinstance(f, Iff):
            return self.eval(f.left, asg) == self.eval(f.right, asg)
        if isinstance(f, (Exists, Forall)):
            rng = range(self.bound + 1)
            want_any = isinstance(f, Exists)
            for combo in iter_product(rng, repeat=len(f.names)):
                inner = dict(asg)
                inner.update(zip(f.names, combo))
                if self.eval(f.body, inner) == want_any:
                    return want_any
            return not want_any
        raise TypeError(f"not a formula node: {f!r}")

    def holds(self, name: str, *args: int) -> bool:
        return self.call(name, args)
