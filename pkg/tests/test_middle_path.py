import random

import pytest
from hypothesis import given, strategies as st

from middlepath.analytics import case_counts
from middlepath.errors import InvalidCutoffs, InvalidParams
from middlepath.gapped import full_affine_score
from middlepath.middle_path import (CellCase, MiddlePathParams, OpCounters, TriageDecision,
                                    classify_cell, derive_cutoff_mp, diagonal_score,
                                    hsp_window, middle_path_score, run_middle_path, triage)
from middlepath.scoring import make_dna_scheme
from middlepath.seqio import Sequence, subsequence
from middlepath.ungapped import ExtensionParams, Hsp

from oracles import restricted_brute_force

dna_text = st.text("ACGT", min_size=1, max_size=24)


def S(text, name="s"):
    return Sequence(name, text)


def test_classify_examples():
    assert classify_cell(10, 10, 10) is CellCase.CASE4
    assert classify_cell(3, 7, 10) is CellCase.CASE1
    assert classify_cell(10, 7, 10) is CellCase.CASE3
    assert classify_cell(3, 20, 10) is CellCase.CASE2
    assert all(classify_cell(a, b, 1) is CellCase.CASE4 for a in range(5) for b in range(5))


def test_cutoff_examples():
    assert derive_cutoff_mp(20, 40) == 30
    assert derive_cutoff_mp(0, 2) == 1
    assert derive_cutoff_mp(21, 40) == 30
    assert derive_cutoff_mp(-5, 0) == -3
    with pytest.raises(InvalidCutoffs):
        derive_cutoff_mp(40, 40)


def test_triage_examples():
    assert triage(45, 20, 40) is TriageDecision.ACCEPT_DIRECT
    assert triage(40, 20, 40) is TriageDecision.ACCEPT_DIRECT
    assert triage(30, 20, 40) is TriageDecision.FULL_GAPPED
    assert triage(29, 20, 40) is TriageDecision.BELOW_CUTOFF


@given(st.integers(-200, 200), st.integers(-100, 100), st.integers(1, 100))
def test_triage_partition(score, s1, gap):
    s2 = s1 + gap
    d = triage(score, s1, s2)
    cutoff = derive_cutoff_mp(s1, s2)
    expected = {
        TriageDecision.ACCEPT_DIRECT: score >= s2,
        TriageDecision.FULL_GAPPED: cutoff <= score < s2,
        TriageDecision.BELOW_CUTOFF: score < cutoff,
    }
    assert [k for k, v in expected.items() if v] == [d]


def test_params_validation():
    with pytest.raises(InvalidParams):
        MiddlePathParams(n_step=0)
    with pytest.raises(InvalidParams):
        middle_path_score(S("A"), S("A"), make_dna_scheme(), 0)


@pytest.mark.parametrize("n_step", [1, 2, 5, 10, 60])
def test_identity_scores_length(n_step):
    s = S("ACGTTGCA" * 5)
    score, _ = middle_path_score(s, s, make_dna_scheme(1, -3, 5, 2), n_step)
    assert score == 40


def test_large_n_is_diagonal(dna):
    rng = random.Random(11)
    for _ in range(300):
        q = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 30)))
        t = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 30)))
        n_step = max(len(q), len(t)) + 1
        score, counters = middle_path_score(S(q), S(t), dna, n_step)
        assert score == diagonal_score(S(q), S(t), dna)
        assert counters.case_counts[1:] == (0, 0, 0)


@given(dna_text, dna_text, st.integers(0, 4), st.integers(1, 3))
def test_n1_equals_gotoh(q, t, go, ge):
    scheme = make_dna_scheme(1, -2, go, ge)
    assert middle_path_score(S(q), S(t), scheme, 1)[0] == full_affine_score(S(q), S(t), scheme)[0]


@given(st.text("ACGT", min_size=1, max_size=10), st.text("ACGT", min_size=1, max_size=10),
       st.integers(1, 5), st.integers(0, 3))
def test_restricted_oracle(q, t, n_step, go):
    scheme = make_dna_scheme(1, -2, go, 1)
    got = middle_path_score(S(q), S(t), scheme, n_step)[0]
    assert got == restricted_brute_force(q, t, scheme.score, go, 1, n_step)


@given(dna_text, dna_text, st.sampled_from([2, 3, 5, 10]), st.integers(2, 3))
def test_bounds(q, t, n_step, k):
    scheme = make_dna_scheme(1, -3, 5, 2)
    full = middle_path_score(S(q), S(t), scheme, 1)[0]
    here = middle_path_score(S(q), S(t), scheme, n_step)[0]
    coarse = middle_path_score(S(q), S(t), scheme, k * n_step)[0]
    assert diagonal_score(S(q), S(t), scheme) <= here <= full
    assert coarse <= here


@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 12))
def test_counters_match_closed_form(m, n, n_step):
    rng = random.Random(m * 1000 + n)
    q = "".join(rng.choice("ACGT") for _ in range(m))
    t = "".join(rng.choice("ACGT") for _ in range(n))
    _, c = middle_path_score(S(q), S(t), make_dna_scheme(), n_step)
    assert c.cells == m * n
    assert c.case_counts == case_counts(m, n, n_step)
    assert c.case_counts[3] == (m // n_step) * (n // n_step)
    cc = c.case_counts
    assert c.comparisons == cc[1] + cc[2] + 3 * cc[3]
    assert c.arithmetic == cc[0] + 3 * (cc[1] + cc[2]) + 4 * cc[3]
    assert c.overhead == c.cells
    assert c.total == c.comparisons + c.arithmetic + c.overhead


def test_counter_addition():
    a = OpCounters.from_cases((1, 2, 3, 4))
    b = OpCounters.from_cases((4, 3, 2, 1))
    assert a + b == OpCounters.from_cases((5, 5, 5, 5))


def test_run_middle_path_identity():
    s = S("ACGTTGCAAT" * 5)
    hsp = Hsp(1, 50, 1, 50, 50)
    scheme = make_dna_scheme(1, -3, 5, 2)
    out = run_middle_path(hsp, s, s, scheme, MiddlePathParams(10, 40), ExtensionParams(20, 20), 0)
    assert (out.score, out.decision) == (50, TriageDecision.ACCEPT_DIRECT)
    assert out.window == (1, 50, 1, 50)
    out = run_middle_path(hsp, s, s, scheme, MiddlePathParams(10, 60), ExtensionParams(20, 20), 0)
    assert (out.score, out.decision) == (50, TriageDecision.FULL_GAPPED)


def test_run_middle_path_mutated_below_oracle():
    rng = random.Random(5)
    scheme = make_dna_scheme(1, -3, 5, 2)
    q = "".join(rng.choice("ACGT") for _ in range(80))
    t = list(q)
    del t[40:42]
    t[10] = "A" if t[10] != "A" else "C"
    t = "".join(t)
    hsp = Hsp(20, 35, 20, 35, 16)
    out = run_middle_path(hsp, S(q), S(t), scheme, MiddlePathParams(5, 40),
                          ExtensionParams(20, 20), 10)
    qs, qe, ts, te = out.window
    oracle, _ = full_affine_score(subsequence(S(q), qs, qe), subsequence(S(t), ts, te), scheme)
    assert out.score <= oracle


def test_window_clamps():
    assert hsp_window(Hsp(3, 10, 5, 12, 8), 12, 14, 5) == (1, 12, 1, 14)
    assert hsp_window(Hsp(20, 30, 20, 30, 11), 100, 100, 0) == (20, 30, 20, 30)
