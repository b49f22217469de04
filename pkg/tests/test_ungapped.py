import math
import random

import pytest
from hypothesis import given, strategies as st

from middlepath.scoring import make_dna_scheme
from middlepath.seeding import SeedHit, SeedPair
from middlepath.seqio import Sequence
from middlepath.ungapped import ExtensionParams, Hsp, dedupe_hsps, extend_ungapped

from oracles import best_diagonal_segment


def _pair(q1, t1, q2, t2, w):
    return SeedPair(SeedHit(q1, t1, w), SeedHit(q2, t2, w))


def test_identity_extends_fully():
    s = Sequence("s", "ACGTACGT")
    hsp = extend_ungapped(_pair(3, 3, 4, 4, 2), s, s, make_dna_scheme(1, -3), ExtensionParams(20, 4))
    assert hsp == Hsp(1, 8, 1, 8, 8)


def test_xdrop_stops_in_mismatch_tail():
    q, t = Sequence("q", "AAAATTTT"), Sequence("t", "AAAACCCC")
    scheme = make_dna_scheme(1, -3)
    pair = _pair(1, 1, 2, 2, 2)
    hsp = extend_ungapped(pair, q, t, scheme, ExtensionParams(2, 3))
    assert hsp == Hsp(1, 4, 1, 4, 4)
    assert best_diagonal_segment(q.residues, t.residues, scheme.score, 1, 3, 0) == (4, 1, 4)
    assert extend_ungapped(pair, q, t, scheme, ExtensionParams(2, 10)) is None


def test_score_recomputes_and_lengths_match():
    rng = random.Random(3)
    scheme = make_dna_scheme(2, -3)
    for _ in range(200):
        q = "".join(rng.choice("ACGT") for _ in range(60))
        t = list(q)
        for i in range(len(t)):
            if rng.random() < 0.2:
                t[i] = rng.choice("ACGT")
        t = "".join(t)
        i = rng.randint(1, 50)
        hsp = extend_ungapped(_pair(i, i, i + 2, i + 2, 3), Sequence("q", q), Sequence("t", t),
                              scheme, ExtensionParams(10, -10**6))
        assert hsp.q_end - hsp.q_start == hsp.t_end - hsp.t_start
        assert hsp.q_start <= i and hsp.q_end >= i + 2
        assert hsp.score == sum(scheme.score(q[k - 1], t[k - 1])
                                for k in range(hsp.q_start, hsp.q_end + 1))


@given(st.text("ACGT", min_size=8, max_size=40), st.text("ACGT", min_size=8, max_size=40),
       st.data())
def test_infinite_drop_matches_brute_force(q, t, data):
    scheme = make_dna_scheme(1, -2)
    d = data.draw(st.integers(-(len(q) - 4), len(t) - 4))
    lo = max(1, 1 - d)
    hi = min(len(q), len(t) - d)
    q0 = data.draw(st.integers(lo, hi - 3))
    pair = _pair(q0, q0 + d, q0 + 1, q0 + 1 + d, 2)
    hsp = extend_ungapped(pair, Sequence("q", q), Sequence("t", t), scheme,
                          ExtensionParams(math.inf, -10**6))
    best, s, e = best_diagonal_segment(q, t, scheme.score, q0, q0 + 2, d)
    assert (hsp.score, hsp.q_start, hsp.q_end) == (best, s, e)
    finite = extend_ungapped(pair, Sequence("q", q), Sequence("t", t), scheme,
                             ExtensionParams(2, -10**6))
    seed_score = sum(scheme.score(q[k - 1], t[k + d - 1]) for k in range(q0, q0 + 3))
    assert seed_score <= finite.score <= best


def test_dedupe():
    a = Hsp(1, 8, 1, 8, 8)
    assert dedupe_hsps([a, a]) == [a]
    assert dedupe_hsps([Hsp(2, 5, 2, 5, 4), a]) == [a]
    other = Hsp(1, 8, 3, 10, 5)
    assert dedupe_hsps([other, a]) == [a, other]


def test_dedupe_keeps_better_contained():
    outer, inner = Hsp(1, 10, 1, 10, 3), Hsp(3, 6, 3, 6, 4)
    assert dedupe_hsps([outer, inner]) == [inner, outer]
