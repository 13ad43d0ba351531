"""Prefix-length classification, threshold automata, verification sweeps."""

import io
import warnings
from fractions import Fraction

import pytest

from fibwalk import automata as au
from fibwalk import repetitions as rp
from fibwalk.fibword import e_of_n
from fibwalk.numeration import fib

G_THROUGH_43 = [13, 14, 22, 23, 24, 26, 27, 34, 35, 36, 37, 38, 39, 40, 43]
B1_THROUGH_33 = [2, 4, 5, 7, 9, 10, 12, 15, 17, 18, 20, 25, 28, 30, 31, 33]
B2_THROUGH_87 = [3, 6, 8, 11, 16, 19, 21, 29, 32, 42, 50, 53, 55, 76, 84, 87]


def test_good_automaton_states_and_listing():
    good = rp.good_automaton()
    assert au.live_state_count(good) == 12
    assert au.enumerate_accepted(good, 43) == G_THROUGH_43


def test_family_set_listings():
    assert au.enumerate_accepted(rp.b1_set_automaton(), 33) == B1_THROUGH_33
    assert au.enumerate_accepted(rp.b2_set_automaton(), 87) == B2_THROUGH_87


def test_families_disjoint_and_cover():
    b1 = set(au.enumerate_accepted(rp.b1_set_automaton(), 3000))
    b2 = set(au.enumerate_accepted(rp.b2_set_automaton(), 3000))
    g = set(au.enumerate_accepted(rp.good_automaton(), 3000))
    assert not (b1 & b2)
    assert not (g & (b1 | b2))
    assert g | b1 | b2 >= set(range(2, 3001))


def test_witness_search():
    assert rp.b1_witnesses(4) == [(6, 4)]  # 4 = F_6 - F_4 - 1 = 8 - 3 - 1
    assert rp.b2_witnesses(16) == [(8, 2)]  # 16 = F_8 - F_5 = 21 - 5
    assert rp.b1_witnesses(13) == []
    assert rp.b2_witnesses(13) == []


def test_classify_goldens():
    c = rp.classify(13)
    assert c.cls == "G"
    assert (c.witness.x, c.witness.y) == (8, 3)  # suffix exponent 8/3
    c = rp.classify(12)
    assert c.cls == "B1" and c.witness == (8, 6)  # 12 = F_8 - F_6 - 1
    c = rp.classify(3)
    assert c.cls == "B2" and c.witness == (5, 1)  # 3 = F_5 - F_3, j = 1
    c = rp.classify(2)
    assert c.cls == "B1" and c.witness == (5, 3)
    with pytest.raises(ValueError):
        rp.classify(1)


def test_classify_matches_exponent_threshold():
    from fibwalk.exact import exceeds_alpha_squared
    for n in range(2, 200):
        rec = e_of_n(n)
        in_g = rp.classify(n).cls == "G"
        assert in_g == exceeds_alpha_squared(rec.x, rec.y)


def test_partition_report():
    rep = rp.partition_report(300)
    assert rep["verdict"] is True
    counts = rep["counts"]
    assert counts["G"] + counts["B1"] + counts["B2"] == 299
    assert rp.verify_partition(100)


def test_lemma1_report():
    rep = rp.lemma1_report(300)
    assert rep["verdict"] is True
    assert rep["witness_pairs"] == 47
    # every pair satisfied at least one alternative; count of both held
    assert 0 < rep["both_alternatives"] <= 47


def test_lemma2_report():
    rep = rp.lemma2_report(300)
    assert rep["verdict"] is True
    assert rep["witness_pairs"] == 26


def test_verify_theorem_window():
    rep = rp.verify_theorem(500)
    assert rep["verdict"] is True
    assert rep["base_range_pass"] is True
    assert rep["failures"] == []
    assert rep["argmin"] == 355
    assert abs(rep["min_slack"] - 0.0412) < 5e-4


def test_exponent_record_table_and_fast_agree():
    rp.ensure_table(400)
    for n in (1, 7, 130, 399):
        rec = rp.exponent_record(n)
        slow = e_of_n(n)
        assert (rec.x, rec.y) == (slow.x, slow.y)
    # beyond the table the fast path serves
    rec = rp.exponent_record(800)
    assert rec.exponent == e_of_n(800).exponent


def test_ratio_reach_matches_formula_pipeline():
    # the fused threshold automaton equals the one compiled from the
    # quantified formula, for both comparison senses
    for strict in (False, True):
        fused = rp.ratio_reach_automaton(12, 5, strict)
        formula = rp.formula_ratio_automaton(12, 5, strict)
        assert au.minimize(fused) == au.minimize(formula)


def test_m_gamma_oracle_agreement():
    rp.ensure_table(1500)
    for p, q in [(2, 1), (5, 2), (3, 1)]:
        dfa = rp.m_gamma_automaton(p, q)
        for n in range(1, 1501):
            rec = rp.exponent_record(n)
            want = rec.exponent >= Fraction(p, q)
            assert au.accepts(dfa, (n,)) == want, (p, q, n)


def test_m_gamma_first_members():
    dfa = rp.m_gamma_automaton(3, 1)
    words = au.first_accepted_words(dfa, 3)
    vals = [au.word_to_values(w, 1)[0] for w in words]
    assert vals == [14, 23, 24]


def test_m_gamma_low_ratio_warns():
    with pytest.warns(UserWarning):
        rp.m_gamma_automaton(1, 3)


def test_largest_index_below_goldens():
    assert rp.largest_index_below(12, 5) == 80
    assert rp.largest_index_below(20, 8) == 219


def test_largest_index_below_guards():
    with pytest.raises(ValueError):
        rp.largest_index_below(1, 1)
    with pytest.raises(ValueError):
        rp.largest_index_below(8, 3)  # 8/3 > alpha^2


def test_classification_csv():
    buf = io.StringIO()
    rp.classification_csv(12, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,class,i,j,x,y,exponent"
    assert len(lines) == 12  # header + n = 2..12
    assert lines[1].startswith("2,B1,5,3,")
    assert lines[-1].startswith("12,B1,8,6,")


def test_verification_report_json_round_trip():
    import json
    blob = rp.verification_report_json([rp.partition_report(50)])
    data = json.loads(blob)
    assert data[0]["claim"] == "partition"
    assert data[0]["verdict"] is True


def test_script_text_packages_scripts():
    text = rp.script_text("good_partition.wal")
    assert text.lstrip().startswith("#")
    with pytest.raises(FileNotFoundError):
        rp.script_text("missing.wal")
