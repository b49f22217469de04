"""X-drop ungapped extension of seed pairs into HSPs."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams
from .scoring import ScoringScheme
from .seeding import SeedPair
from .seqio import Sequence


@dataclass(frozen=True)
class ExtensionParams:
    x_drop_ungapped: float = 20
    s1: int = 20

    def __post_init__(self):
        if not self.x_drop_ungapped >= 1:
            raise InvalidParams(f"x_drop_ungapped must be >= 1, got {self.x_drop_ungapped}")


@dataclass(frozen=True, order=True)
class Hsp:
    q_start: int
    q_end: int
    t_start: int
    t_end: int
    score: int

    @property
    def diagonal(self) -> int:
        return self.t_start - self.q_start

    @property
    def length(self) -> int:
        return self.q_end - self.q_start + 1

    def contains(self, other: "Hsp") -> bool:
        return (self.diagonal == other.diagonal
                and self.q_start <= other.q_start and other.q_end <= self.q_end)


def _best_prefix(steps: np.ndarray, x_drop: float) -> tuple[int, int]:
    """Best prefix sum of ``steps`` under X-drop; returns (gain, length).

    The walk stops at the first step falling more than ``x_drop`` below the
    running best.  Ties keep the shorter prefix.
    """
    if steps.size == 0:
        return 0, 0
    run = np.cumsum(steps)
    peak = np.maximum.accumulate(np.maximum(run, 0))
    dropped = np.flatnonzero(peak - run > x_drop)
    if dropped.size:
        run = run[:dropped[0]]
        if run.size == 0:
            return 0, 0
    k = int(np.argmax(run))
    if run[k] <= 0:
        return 0, 0
    return int(run[k]), k + 1


def _extend_codes(pair: SeedPair, qc: np.ndarray, tc: np.ndarray,
                  scores: np.ndarray, params: ExtensionParams) -> Hsp | None:
    d = pair.diagonal
    q0 = pair.first.q_pos
    q1 = pair.second.q_pos + pair.second.length - 1
    # 0-based query indices of the seed span and its diagonal partners
    seed = int(scores[qc[q0 - 1:q1], tc[q0 - 1 + d:q1 + d]].sum())

    left_steps = min(q0, q0 + d) - 1
    li = np.arange(q0 - 2, q0 - 2 - left_steps, -1)
    gain_l, len_l = _best_prefix(scores[qc[li], tc[li + d]], params.x_drop_ungapped)

    right_steps = min(len(qc) - q1, len(tc) - (q1 + d))
    ri = np.arange(q1, q1 + right_steps)
    gain_r, len_r = _best_prefix(scores[qc[ri], tc[ri + d]], params.x_drop_ungapped)

    score = seed + gain_l + gain_r
    if score < params.s1:
        return None
    qs, qe = q0 - len_l, q1 + len_r
    return Hsp(qs, qe, qs + d, qe + d, score)


def extend_ungapped(pair: SeedPair, query: Sequence, target: Sequence,
                    scheme: ScoringScheme, params: ExtensionParams) -> Hsp | None:
    """Extend the span covering both hits left, then right, along its diagonal.

    Each direction keeps a running best and stops once the running score
    falls more than ``x_drop_ungapped`` below it (or a sequence ends); the
    segment is then trimmed back to the best-scoring extent.  Returns None
    when that score is below ``params.s1``.
    """
    return _extend_codes(pair, scheme.encode(query), scheme.encode(target),
                         scheme.substitution.scores, params)


def dedupe_hsps(hsps: list[Hsp]) -> list[Hsp]:
    """Drop duplicates and same-diagonal HSPs contained in a better-or-equal one."""
    unique = sorted(set(hsps), key=lambda h: (-h.score, h.q_start, h.t_start, h.q_end))
    kept: list[Hsp] = []
    for h in unique:
        if any(k.contains(h) and k.score >= h.score for k in kept):
            continue
        kept.append(h)
    return kept


INFINITE_DROP = math.inf
