"""Predicate DSL: parsing, compilation, sessions, interpreter agreement."""

import pytest

from fibwalk import automata as au
from fibwalk import logic
from fibwalk import repetitions as rp
from fibwalk.logic import (BruteForce, LogicError, PredicateEnv,
                           compile_predicate, parse_formula, parse_script,
                           run_session)
from fibwalk.numeration import fib, floor_alpha2, zeck_decode, zeck_encode

SEC2_GOLDEN = """\
reg isfib: arity 1, states 2
reg evenfib: arity 1, states 3
reg oddfib: arity 1, states 3
reg adjfib: arity 2, states 4
def ffactoreq: arity 3, states 11
def suff: arity 3, states 75
reg shift: arity 2, states 2
def phi2n: arity 2, states 8
def good: arity 1, states 12
def b1: arity 3, states 8
def b2: arity 3, states 7
eval test: TRUE
"""


def shift_value(a):
    # appending a zero digit bumps every Fibonacci weight one index up
    return zeck_decode(zeck_encode(a).digits + "0")


def base_semantics(limit=4000):
    fibs = set()
    k = 2
    while fib(k) <= limit:
        fibs.add(fib(k))
        k += 1
    even = {fib(2 * j) for j in range(1, 25) if fib(2 * j) <= limit}
    odd = {fib(2 * j + 1) for j in range(1, 25) if fib(2 * j + 1) <= limit}
    adj = {(1, 1)} | {(fib(j + 1), fib(j)) for j in range(2, 25)
                      if fib(j + 1) <= limit}
    return {
        "isfib": lambda x: x in fibs,
        "evenfib": lambda x: x in even,
        "oddfib": lambda x: x in odd,
        "adjfib": lambda x, y: (x, y) in adj,
        "shift": lambda a, b: shift_value(a) == b,
    }


# ---------------------------------------------------------------------------
# parsing


def test_parse_formula_shapes():
    f = parse_formula("?msd_fib x=1 & y=2")
    assert isinstance(f, logic.And)
    f = parse_formula("?msd_fib ~x=1")
    assert isinstance(f, logic.Not)
    f = parse_formula("?msd_fib Ex x=y")
    assert isinstance(f, logic.Exists)
    f = parse_formula("?msd_fib Ax,y x=y")
    assert isinstance(f, logic.Forall)
    assert f.names == ("x", "y")


def test_parse_precedence_via_interpreter():
    bf = BruteForce({}, 5)
    # & binds tighter than |
    f = parse_formula("?msd_fib x=1 | x=2 & x=3")
    assert bf.eval(f, {"x": 1})
    assert not bf.eval(f, {"x": 2})
    # => is right associative and looser than |
    g = parse_formula("?msd_fib x=1 | x=2 => x=2")
    assert bf.eval(g, {"x": 2})
    assert not bf.eval(g, {"x": 1})
    assert bf.eval(g, {"x": 3})  # antecedent false
    # ~ applies to the nearest atom
    h = parse_formula("?msd_fib ~x=1 & x=2")
    assert bf.eval(h, {"x": 2})
    assert not bf.eval(h, {"x": 1})


def test_parse_arithmetic_terms():
    bf = BruteForce({}, 20)
    f = parse_formula("?msd_fib x+2*y=10")
    assert bf.eval(f, {"x": 4, "y": 3})
    assert not bf.eval(f, {"x": 3, "y": 3})
    # natural subtraction: an underflowing atom is false
    g = parse_formula("?msd_fib x-y=1")
    assert bf.eval(g, {"x": 3, "y": 2})
    assert not bf.eval(g, {"x": 2, "y": 3})


def test_parse_errors_carry_position():
    with pytest.raises(LogicError) as ei:
        parse_formula("?msd_fib x=")
    assert "offset" in str(ei.value)
    with pytest.raises(LogicError):
        parse_formula("?msd_fib Ex")
    with pytest.raises(LogicError):
        parse_formula("?msd_fib x==1")
    with pytest.raises(LogicError):
        parse_formula("?msd_fib $f(x")
    # script-level errors are tagged with line and column
    with pytest.raises(LogicError) as ei:
        parse_script('def x "?msd_fib n=1"')
    assert "line 1" in str(ei.value)


def test_parse_script_commands():
    cmds = parse_script(rp.script_text("good_partition.wal"))
    kinds = [type(c).__name__ for c in cmds]
    assert kinds.count("RegCmd") == 5
    assert kinds.count("DefCmd") == 7  # six defs plus the closed eval
    names = [c.name for c in cmds]
    assert names[-1] == "test"


def test_script_errors():
    with pytest.raises(LogicError):
        parse_script('def x "?msd_fib n=1"')  # missing colon
    with pytest.raises(LogicError):
        run_session('def a "?msd_fib n=1":\ndef a "?msd_fib n=2":')
    with pytest.raises(LogicError):
        run_session('eval t "?msd_fib $nothere(n)":')


# ---------------------------------------------------------------------------
# compilation


def test_compile_simple_relations():
    env = PredicateEnv()
    rel = compile_predicate(env, "?msd_fib x+y=z")
    assert rel.names == ("x", "y", "z")
    assert au.accepts(rel.dfa, (3, 5, 8))
    assert not au.accepts(rel.dfa, (3, 5, 9))
    rel2 = compile_predicate(env, "?msd_fib Ey x+y=10 & y>=4")
    got = [n for n in range(12) if au.accepts(rel2.dfa, (n,))]
    assert got == list(range(7))


def test_compile_sequence_atom():
    env = PredicateEnv()
    rel = compile_predicate(env, "?msd_fib F[i]=F[j]")
    from fibwalk.fibword import symbol_at
    for i in range(40):
        for j in range(40):
            assert au.accepts(rel.dfa, (i, j)) == (symbol_at(i) == symbol_at(j))


def test_compile_closed_formulas():
    env = PredicateEnv()
    yes = compile_predicate(env, "?msd_fib An n>=1 => n+1>=2")
    assert yes.dfa.arity == 0
    assert au.decide_true(yes.dfa)
    no = compile_predicate(env, "?msd_fib En n+2=1")
    assert not au.decide_true(no.dfa)


def test_quantifier_duality_small():
    env = PredicateEnv()
    a = compile_predicate(env, "?msd_fib Ax (x<=n) => x<=10")
    b = compile_predicate(env, "?msd_fib ~(Ex (x<=n) & ~(x<=10))")
    assert au.minimize(a.dfa) == au.minimize(b.dfa)


def test_call_argument_aliasing():
    # repeated variables in a call collapse tracks; adjfib(x,x) only at 1
    env = rp.session_env()
    rel = compile_predicate(env, "?msd_fib $adjfib(x,x)")
    got = [n for n in range(200) if au.accepts(rel.dfa, (n,))]
    assert got == [1]
    # and term arguments go through the adder
    rel2 = compile_predicate(env, "?msd_fib $adjfib(n+1,n)")
    got2 = [n for n in range(200) if au.accepts(rel2.dfa, (n,))]
    assert got2 == [1, 2]  # (2,1) and (3,2) only


# ---------------------------------------------------------------------------
# sessions


def test_session_golden_text(script_report):
    assert script_report("good_partition.wal").text == SEC2_GOLDEN


def test_session_json_shape(script_report):
    import json
    data = json.loads(script_report("good_partition.wal").to_json())
    assert data[-1] == {"command": "eval", "name": "test", "verdict": True}
    assert data[5]["states"] == 75


def test_session_test_command_lists_representations():
    report = run_session(
        'reg isfib msd_fib "0*10*":\ntest isfib 4:')
    assert report.entries[-1].line == \
        "test isfib 4: 1 (=1), 10 (=2), 100 (=3), 1000 (=5)"


def test_session_env_reuse():
    env = rp.session_env()
    assert env.lookup("good").arity == 1
    assert au.live_state_count(env.lookup("good").dfa) == 12
    with pytest.raises(LogicError):
        env.lookup("missing")


# ---------------------------------------------------------------------------
# compiled automata vs the brute-force interpreter


def test_interpreter_agrees_on_suff_samples(env):
    bf = BruteForce(base_semantics(), 60)
    bf.load_script(rp.script_text("good_partition.wal"))
    dfa = env.lookup("suff").validated()
    cases = [(n, x, y) for n in (5, 8, 12) for x in range(1, n + 1)
             for y in range(1, x + 1)]
    for n, x, y in cases:
        assert bf.holds("suff", n, x, y) == au.accepts(dfa, (n, x, y)), \
            (n, x, y)


def test_interpreter_agrees_on_ffactoreq_samples(env):
    bf = BruteForce(base_semantics(), 40)
    bf.load_script(rp.script_text("good_partition.wal"))
    dfa = env.lookup("ffactoreq").validated()
    for i in range(0, 12):
        for j in range(0, 12):
            for n in range(0, 8):
                assert bf.holds("ffactoreq", i, j, n) == \
                    au.accepts(dfa, (i, j, n))


def test_interpreter_agrees_on_phi2n(env):
    bf = BruteForce(base_semantics(), 170)
    bf.load_script(rp.script_text("good_partition.wal"))
    dfa = env.lookup("phi2n").validated()
    for n in range(0, 61):
        s = floor_alpha2(n)
        assert bf.holds("phi2n", n, s)
        assert au.accepts(dfa, (n, s))
    for n, s in [(0, 1), (1, 3), (5, 12), (50, 129)]:
        assert not bf.holds("phi2n", n, s)
        assert not au.accepts(dfa, (n, s))


def test_interpreter_agrees_on_good_small(env):
    bf = BruteForce(base_semantics(), 30)
    bf.load_script(rp.script_text("good_partition.wal"))
    dfa = env.lookup("good").validated()
    for n in range(2, 11):
        assert bf.holds("good", n) == au.accepts(dfa, (n,)), n
    bf40 = BruteForce(base_semantics(), 40)
    bf40.load_script(rp.script_text("good_partition.wal"))
    for n in (13, 14):
        assert bf40.holds("good", n)
        assert au.accepts(dfa, (n,))


def test_interpreter_agrees_on_b1_b2(env):
    bf = BruteForce(base_semantics(), 150)
    bf.load_script(rp.script_text("good_partition.wal"))
    b1 = env.lookup("b1").validated()
    b2 = env.lookup("b2").validated()
    b1_members = {n for n in range(2, 34)
                  if any(au.accepts(b1, (n, x, y))
                         for x in range(150) for y in range(x))}
    # spot-check the interpreter on a thinned grid; full product is slow
    for n in (2, 4, 6, 9, 12, 17, 20, 25, 33):
        got = any(bf.holds("b1", n, x, y)
                  for x in range(n, 70) for y in range(36))
        assert got == (n in b1_members), n
    for n, x, y in [(3, 5, 2), (16, 21, 5), (29, 34, 5)]:
        assert bf.holds("b2", n, x, y)
        assert au.accepts(b2, (n, x, y))
    assert not bf.holds("b2", 4, 5, 2)
    assert not au.accepts(b2, (4, 5, 2))


def test_brute_force_guards():
    bf = BruteForce({}, 10)
    with pytest.raises(LogicError):
        bf.load_script('reg mystery msd_fib "0*":')
    bf2 = BruteForce(base_semantics(), 10)
    bf2.load_script(rp.script_text("good_partition.wal"))
    with pytest.raises(LogicError):
        bf2.add_def("suff", parse_formula("?msd_fib x=1"))
