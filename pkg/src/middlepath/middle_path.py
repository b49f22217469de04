"""Restricted-insertion affine-gap DP and cutoff_mp triage.

The matrix has query residues on rows (index ``a``) and target residues on
columns (index ``b``).  Gap moves are confined to insertion-eligible lines:

* ``ins_q`` runs along query row ``a`` (horizontal moves, each consuming one
  target residue) and is live only when ``a % N == 0``;
* ``ins_t`` runs down target column ``b`` (vertical moves, each consuming one
  query residue) and is live only when ``b % N == 0``.

Row 0 and column 0 are multiples of every N, so leading gaps are always
available.  With N = 1 every cell is eligible and the recurrence is the
ordinary affine-gap global DP; larger N only removes moves.

Per cell the update mirrors the four cases:

    Best(a,b) = tempBest(a-1,b-1) + score[a,b]
    case 1:  tempBest = Best
    case 2:  tempBest = max(Best, ins_t);  ins_t = max(ins_t - ext, Best - ins_cost)
    case 3:  tempBest = max(Best, ins_q);  ins_q = max(ins_q - ext, Best - ins_cost)
    case 4:  both lanes; the two lanes are compared first, then the winner vs Best

Lane values are stored pre-charged: the value kept after visiting a cell is
what arriving at the next cell along the lane is worth.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numba
import numpy as np

from .errors import InvalidCutoffs, InvalidParams
from .scoring import ScoringScheme
from .seqio import Sequence, subsequence
from .ungapped import ExtensionParams, Hsp

NEG_INF = -(10 ** 9)

# (comparisons, arithmetic) charged per cell, indexed by case number - 1
CASE_COMPARISONS = (0, 1, 1, 3)
CASE_ARITHMETIC = (1, 3, 3, 4)
OVERHEAD_PER_CELL = 1


class CellCase(enum.IntEnum):
    CASE1 = 1  # no insertion
    CASE2 = 2  # target-side (ins_t) only
    CASE3 = 3  # query-side (ins_q) only
    CASE4 = 4  # both


class TriageDecision(enum.Enum):
    ACCEPT_DIRECT = "AcceptDirect"
    FULL_GAPPED = "FullGapped"
    BELOW_CUTOFF = "BelowCutoff"


class BelowCutoffPolicy(enum.Enum):
    REJECT = "reject"
    DISPLAY_UNGAPPED = "display"


@dataclass(frozen=True)
class OpCounters:
    """Abstract operation counts accumulated over DP cells.

    Counters from separate runs merge with ``+``.
    """
    comparisons: int = 0
    arithmetic: int = 0
    overhead: int = 0
    cells: int = 0
    case_counts: tuple[int, int, int, int] = (0, 0, 0, 0)

    @classmethod
    def from_cases(cls, case_counts) -> "OpCounters":
        cc = tuple(int(c) for c in case_counts)
        cells = sum(cc)
        return cls(
            comparisons=sum(w * c for w, c in zip(CASE_COMPARISONS, cc)),
            arithmetic=sum(w * c for w, c in zip(CASE_ARITHMETIC, cc)),
            overhead=OVERHEAD_PER_CELL * cells,
            cells=cells,
            case_counts=cc,
        )

    @property
    def total(self) -> int:
        return self.comparisons + self.arithmetic + self.overhead

    def __add__(self, other: "OpCounters") -> "OpCounters":
        return OpCounters(
            self.comparisons + other.comparisons,
            self.arithmetic + other.arithmetic,
            self.overhead + other.overhead,
            self.cells + other.cells,
            tuple(a + b for a, b in zip(self.case_counts, other.case_counts)),
        )


@dataclass(frozen=True)
class MiddlePathParams:
    n_step: int = 10
    s2: int = 40
    below_cutoff_policy: BelowCutoffPolicy = BelowCutoffPolicy.REJECT

    def __post_init__(self):
        if self.n_step < 1:
            raise InvalidParams(f"n_step must be >= 1, got {self.n_step}")


@dataclass(frozen=True)
class MiddlePathOutcome:
    score: int
    counters: OpCounters
    decision: TriageDecision
    window: tuple[int, int, int, int] = field(default=(0, 0, 0, 0))


def classify_cell(a: int, b: int, n_step: int) -> CellCase:
    row = a % n_step == 0
    col = b % n_step == 0
    if row and col:
        return CellCase.CASE4
    if row:
        return CellCase.CASE3
    if col:
        return CellCase.CASE2
    return CellCase.CASE1


@numba.njit(cache=True, nogil=True)
def _restricted_dp(qc, tc, scores, ext, ins_cost, n_step):
    m = qc.shape[0]
    n = tc.shape[0]
    neg = NEG_INF
    cases = np.zeros(4, dtype=np.int64)

    # row 0: origin plus the leading horizontal gap
    temp_prev = np.empty(n + 1, dtype=np.int64)
    temp_cur = np.empty(n + 1, dtype=np.int64)
    temp_prev[0] = 0
    lane = -ins_cost
    for b in range(1, n + 1):
        temp_prev[b] = lane
        lane = max(lane - ext, neg)

    # ins_t[b]: value of entering row a of column b from above
    ins_t = np.full(n + 1, neg, dtype=np.int64)
    ins_t[0] = -ins_cost

    for a in range(1, m + 1):
        row_ok = a % n_step == 0
        temp_cur[0] = ins_t[0]
        ins_t[0] = max(ins_t[0] - ext, neg)
        ins_q = neg
        qa = qc[a - 1]
        for b in range(1, n + 1):
            best = max(temp_prev[b - 1] + scores[qa, tc[b - 1]], neg)
            col_ok = b % n_step == 0
            if row_ok and col_ok:
                cases[3] += 1
                vin = ins_t[b]
                if ins_q > vin:
                    top = ins_q
                else:
                    top = vin
                temp = top if top > best else best
                opened = best - ins_cost
                ins_q = max(max(ins_q - ext, opened), neg)
                ins_t[b] = max(max(vin - ext, opened), neg)
            elif row_ok:
                cases[2] += 1
                temp = ins_q if ins_q > best else best
                ins_q = max(max(ins_q - ext, best - ins_cost), neg)
            elif col_ok:
                cases[1] += 1
                vin = ins_t[b]
                temp = vin if vin > best else best
                ins_t[b] = max(max(vin - ext, best - ins_cost), neg)
            else:
                cases[0] += 1
                temp = best
            temp_cur[b] = temp
        temp_prev, temp_cur = temp_cur, temp_prev

    return temp_prev[n], cases


def middle_path_score(query: Sequence, target: Sequence, scheme: ScoringScheme,
                      n_step: int) -> tuple[int, OpCounters]:
    """Global restricted-insertion score of ``query`` vs ``target``.

    Returns the score and the per-case operation counters for the m x n
    interior cells.
    """
    if n_step < 1:
        raise InvalidParams(f"n_step must be >= 1, got {n_step}")
    return _score_codes(scheme.encode(query), scheme.encode(target), scheme, n_step)


def _score_codes(qc, tc, scheme, n_step):
    score, cases = _restricted_dp(qc, tc, scheme.substitution.scores,
                                  scheme.gap_extension, scheme.insertion_cost, n_step)
    return int(score), OpCounters.from_cases(cases)


def diagonal_score(query: Sequence, target: Sequence, scheme: ScoringScheme) -> int:
    """Score of the path with no interior gaps.

    Any length difference is absorbed by one leading gap along row 0 or
    column 0; the remaining residues are aligned on a single diagonal that
    ends in the bottom-right cell.
    """
    sub = scheme.substitution
    q, t = query.residues, target.residues
    shift = len(t) - len(q)
    if shift >= 0:
        pairs = zip(q, t[shift:])
    else:
        pairs = zip(q[-shift:], t)
    return sum(sub[x, y] for x, y in pairs) - scheme.gap_cost(abs(shift))


def derive_cutoff_mp(s1: int, s2: int) -> int:
    if s1 >= s2:
        raise InvalidCutoffs(f"s1 must be < s2, got s1={s1}, s2={s2}")
    return (s1 + s2) // 2


def triage(score: int, s1: int, s2: int) -> TriageDecision:
    """Route a middle-path score.

    ``score >= s2`` is accepted directly, ``cutoff_mp <= score < s2`` goes
    to full gapped alignment, anything lower is below the cutoff.
    """
    cutoff = derive_cutoff_mp(s1, s2)
    if score >= s2:
        return TriageDecision.ACCEPT_DIRECT
    if score >= cutoff:
        return TriageDecision.FULL_GAPPED
    return TriageDecision.BELOW_CUTOFF


def hsp_window(hsp: Hsp, query_len: int, target_len: int,
               margin: int) -> tuple[int, int, int, int]:
    """HSP rectangle grown by ``margin`` and clamped; 1-based inclusive."""
    return (max(1, hsp.q_start - margin), min(query_len, hsp.q_end + margin),
            max(1, hsp.t_start - margin), min(target_len, hsp.t_end + margin))


def run_middle_path(hsp: Hsp, query: Sequence, target: Sequence, scheme: ScoringScheme,
                    mp: MiddlePathParams, ext: ExtensionParams,
                    window_margin: int = 10) -> MiddlePathOutcome:
    """Score the HSP's window with the restricted DP and triage the result."""
    win = hsp_window(hsp, query.length, target.length, window_margin)
    qs, qe, ts, te = win
    score, counters = middle_path_score(subsequence(query, qs, qe),
                                        subsequence(target, ts, te), scheme, mp.n_step)
    return MiddlePathOutcome(score, counters, triage(score, ext.s1, mp.s2), win)
