"""Unrestricted affine-gap global alignment (three-state Gotoh).

States per cell (i, j), i over query and j over target:

    M  : query[i] aligned to target[j]
    Ix : gap in the target, query[i] consumed      (edit step INSERT_Q)
    Iy : gap in the query, target[j] consumed      (edit step INSERT_T)

Gaps open only from M, so a gap of one kind is never directly followed by a
gap of the other kind.  This is the same move set as the middle-path DP with
every line eligible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numba
import numpy as np

from .middle_path import NEG_INF, OpCounters
from .scoring import ScoringScheme
from .seqio import Sequence

BASELINE_COMPARISONS = 5
BASELINE_ARITHMETIC = 5
BASELINE_OVERHEAD = 1


class Step(enum.Enum):
    MATCH = "M"
    INSERT_Q = "Q"
    INSERT_T = "T"


@dataclass(frozen=True)
class GappedAlignment:
    score: int
    q_start: int
    q_end: int
    t_start: int
    t_end: int
    edit_path: tuple[Step, ...]

    @property
    def cigar(self) -> str:
        return "".join(s.value for s in self.edit_path)


def baseline_counters(cells: int) -> OpCounters:
    return OpCounters(BASELINE_COMPARISONS * cells, BASELINE_ARITHMETIC * cells,
                      BASELINE_OVERHEAD * cells, cells, (0, 0, 0, cells))


@numba.njit(cache=True, nogil=True)
def _fill(qc, tc, scores, gap_ext, gap_first):
    m = qc.shape[0]
    n = tc.shape[0]
    neg = NEG_INF
    M = np.full((m + 1, n + 1), neg, dtype=np.int64)
    X = np.full((m + 1, n + 1), neg, dtype=np.int64)
    Y = np.full((m + 1, n + 1), neg, dtype=np.int64)
    M[0, 0] = 0
    for i in range(1, m + 1):
        X[i, 0] = max(M[i - 1, 0] - gap_first, X[i - 1, 0] - gap_ext)
    for j in range(1, n + 1):
        Y[0, j] = max(M[0, j - 1] - gap_first, Y[0, j - 1] - gap_ext)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            diag = max(M[i - 1, j - 1], max(X[i - 1, j - 1], Y[i - 1, j - 1]))
            M[i, j] = max(diag + scores[qc[i - 1], tc[j - 1]], neg)
            X[i, j] = max(max(M[i - 1, j] - gap_first, X[i - 1, j] - gap_ext), neg)
            Y[i, j] = max(max(M[i, j - 1] - gap_first, Y[i, j - 1] - gap_ext), neg)
    return M, X, Y


def _matrices(query, target, scheme):
    return _fill(scheme.encode(query), scheme.encode(target), scheme.substitution.scores,
                 scheme.gap_extension, scheme.insertion_cost)


def full_affine_score(query: Sequence, target: Sequence,
                      scheme: ScoringScheme) -> tuple[int, OpCounters]:
    M, X, Y = _matrices(query, target, scheme)
    m, n = query.length, target.length
    score = max(M[m, n], X[m, n], Y[m, n])
    return int(score), baseline_counters(m * n)


def full_affine_align(query: Sequence, target: Sequence,
                      scheme: ScoringScheme) -> GappedAlignment:
    """Optimal global alignment with a deterministic traceback.

    At equal scores the traceback prefers MATCH, then INSERT_T, then INSERT_Q.
    """
    M, X, Y = _matrices(query, target, scheme)
    sub = scheme.substitution.scores
    qc, tc = scheme.encode(query), scheme.encode(target)
    first = scheme.insertion_cost
    mats = {Step.MATCH: M, Step.INSERT_T: Y, Step.INSERT_Q: X}
    order = (Step.MATCH, Step.INSERT_T, Step.INSERT_Q)

    i, j = query.length, target.length
    score = max(M[i, j], X[i, j], Y[i, j])
    state = next(s for s in order if mats[s][i, j] == score)
    path = []
    # the origin is the MATCH state with value 0
    while i > 0 or j > 0:
        path.append(state)
        if state is Step.MATCH:
            prev = M[i, j] - sub[qc[i - 1], tc[j - 1]]
            i, j = i - 1, j - 1
            state = next(s for s in order if mats[s][i, j] == prev)
        elif state is Step.INSERT_T:
            here = Y[i, j]
            j -= 1
            state = Step.MATCH if M[i, j] - first == here else Step.INSERT_T
        else:
            here = X[i, j]
            i -= 1
            state = Step.MATCH if M[i, j] - first == here else Step.INSERT_Q
    path.reverse()
    return GappedAlignment(int(score), 1, query.length, 1, target.length, tuple(path))


def replay_score(path, query: Sequence, target: Sequence, scheme: ScoringScheme) -> int:
    """Score an edit path from scratch (used to cross-check tracebacks)."""
    i = j = 0
    total = 0
    prev = None
    for step in path:
        if step is Step.MATCH:
            total += scheme.score(query.residues[i], target.residues[j])
            i += 1
            j += 1
        else:
            total -= scheme.gap_extension if step is prev else scheme.insertion_cost
            if step is Step.INSERT_Q:
                i += 1
            else:
                j += 1
        prev = step
    if i != query.length or j != target.length:
        raise ValueError("edit path does not span both sequences")
    return total
