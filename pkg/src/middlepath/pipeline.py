"""Seed -> ungapped extension -> middle-path triage -> gapped -> E-value filter."""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .errors import InvalidCutoffs, InvalidParams
from .gapped import baseline_counters, full_affine_align
from .middle_path import (BelowCutoffPolicy, MiddlePathParams, OpCounters, TriageDecision,
                          derive_cutoff_mp, hsp_window, run_middle_path)
from .scoring import EvalueParams, ScoringScheme, evalue
from .seeding import SeedingParams, find_word_hits, pair_two_hits
from .seqio import Sequence, subsequence
from .ungapped import ExtensionParams, Hsp, _extend_codes, dedupe_hsps


class Stage(enum.Enum):
    UNGAPPED_ONLY = "UngappedOnly"
    MIDDLE_PATH_DIRECT = "MiddlePathDirect"
    FULL_GAPPED = "FullGapped"


@dataclass(frozen=True)
class PipelineConfig:
    scheme: ScoringScheme
    seeding: SeedingParams = field(default_factory=SeedingParams)
    extension: ExtensionParams = field(default_factory=ExtensionParams)
    middle_path: MiddlePathParams | None = field(default_factory=MiddlePathParams)
    evalue: EvalueParams = field(default_factory=EvalueParams)
    window_margin: int = 10

    def __post_init__(self):
        if self.window_margin < 0:
            raise InvalidParams(f"window_margin must be >= 0, got {self.window_margin}")
        if self.middle_path is not None:
            derive_cutoff_mp(self.extension.s1, self.middle_path.s2)

    @property
    def classic(self) -> bool:
        return self.middle_path is None


@dataclass(frozen=True)
class HitRecord:
    query_id: str
    target_id: str
    hsp: Hsp
    mp_score: int | None
    decision: TriageDecision | None
    final_score: int
    evalue: float
    stage: Stage

    @property
    def key(self) -> tuple:
        h = self.hsp
        return (self.query_id, self.target_id, h.q_start, h.q_end, h.t_start, h.t_end)


@dataclass(frozen=True)
class RunStats:
    hsps_total: int = 0
    routed_direct: int = 0
    routed_gapped: int = 0
    routed_below: int = 0
    mp_counters: OpCounters = field(default_factory=OpCounters)
    gapped_counters: OpCounters = field(default_factory=OpCounters)
    classic_gapped_counters: OpCounters = field(default_factory=OpCounters)

    @property
    def skip_fraction(self) -> float | None:
        if self.hsps_total == 0:
            return None
        return (self.routed_direct + self.routed_below) / self.hsps_total

    @property
    def counted_ops(self) -> int:
        """Operations actually spent in the middle-path and gapped stages."""
        return self.mp_counters.total + self.gapped_counters.total

    def __add__(self, other: "RunStats") -> "RunStats":
        return RunStats(
            self.hsps_total + other.hsps_total,
            self.routed_direct + other.routed_direct,
            self.routed_gapped + other.routed_gapped,
            self.routed_below + other.routed_below,
            self.mp_counters + other.mp_counters,
            self.gapped_counters + other.gapped_counters,
            self.classic_gapped_counters + other.classic_gapped_counters,
        )


def find_hsps(query: Sequence, target: Sequence, config: PipelineConfig) -> list[Hsp]:
    """Deduplicated ungapped HSPs scoring at least s1.

    A target shorter than the word length simply has no hits.
    """
    w = config.seeding.word_length
    if w > query.length or w > target.length:
        return []
    pairs = pair_two_hits(find_word_hits(query, target, config.seeding), config.seeding)
    if not pairs:
        return []
    scheme = config.scheme
    qc, tc = scheme.encode(query), scheme.encode(target)
    scores = scheme.substitution.scores
    hsps = []
    for pair in pairs:
        hsp = _extend_codes(pair, qc, tc, scores, config.extension)
        if hsp is not None:
            hsps.append(hsp)
    return dedupe_hsps(hsps)


def _gapped_on_window(hsp, query, target, config):
    qs, qe, ts, te = hsp_window(hsp, query.length, target.length, config.window_margin)
    aln = full_affine_align(subsequence(query, qs, qe), subsequence(target, ts, te), config.scheme)
    return aln.score, baseline_counters((qe - qs + 1) * (te - ts + 1))


def search_pair(query: Sequence, target: Sequence,
                config: PipelineConfig) -> tuple[list[HitRecord], RunStats]:
    """All unfiltered hit records for one (query, target) pair."""
    hsps = find_hsps(query, target, config)
    mp = config.middle_path
    records = []
    direct = gapped = below = 0
    mp_ops = OpCounters()
    gap_ops = OpCounters()
    classic_ops = OpCounters()

    for hsp in hsps:
        win = hsp_window(hsp, query.length, target.length, config.window_margin)
        classic_ops += baseline_counters((win[1] - win[0] + 1) * (win[3] - win[2] + 1))

        if mp is None:
            score, ops = _gapped_on_window(hsp, query, target, config)
            gap_ops += ops
            gapped += 1
            records.append((hsp, None, None, score, Stage.FULL_GAPPED))
            continue

        outcome = run_middle_path(hsp, query, target, config.scheme, mp,
                                  config.extension, config.window_margin)
        mp_ops += outcome.counters
        if outcome.decision is TriageDecision.ACCEPT_DIRECT:
            direct += 1
            records.append((hsp, outcome.score, outcome.decision, outcome.score,
                            Stage.MIDDLE_PATH_DIRECT))
        elif outcome.decision is TriageDecision.FULL_GAPPED:
            gapped += 1
            score, ops = _gapped_on_window(hsp, query, target, config)
            gap_ops += ops
            records.append((hsp, outcome.score, outcome.decision, score, Stage.FULL_GAPPED))
        else:
            below += 1
            if mp.below_cutoff_policy is BelowCutoffPolicy.DISPLAY_UNGAPPED:
                records.append((hsp, outcome.score, outcome.decision, hsp.score,
                                Stage.UNGAPPED_ONLY))

    hits = [
        HitRecord(query.id, target.id, hsp, mp_score, decision, final,
                  evalue(final, query.length, target.length, config.evalue).evalue, stage)
        for hsp, mp_score, decision, final, stage in records
    ]
    stats = RunStats(len(hsps), direct, gapped, below, mp_ops, gap_ops, classic_ops)
    return hits, stats


def _display_order(rec: HitRecord):
    return (rec.evalue, -rec.final_score, rec.target_id, rec.hsp.q_start, rec.hsp.t_start,
            rec.hsp.q_end, rec.hsp.t_end)


def search(queries: list[Sequence], targets: list[Sequence], config: PipelineConfig,
           threads: int = 1) -> tuple[list[HitRecord], RunStats]:
    """Search every query against every target.

    Records with E-value above ``e_max`` are dropped; the rest are sorted by
    ascending E-value, then descending score, and cut to ``max_display`` per
    query.  Output does not depend on ``threads``.
    """
    jobs = [(q, t) for q in queries for t in targets]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda job: search_pair(*job, config), jobs))
    else:
        results = [search_pair(q, t, config) for q, t in jobs]

    stats = RunStats()
    per_query: dict[str, list[HitRecord]] = {q.id: [] for q in queries}
    for (query, _), (hits, pair_stats) in zip(jobs, results):
        stats += pair_stats
        per_query[query.id].extend(h for h in hits if h.evalue <= config.evalue.e_max)

    out = []
    for query in queries:
        hits = sorted(per_query[query.id], key=_display_order)
        out.extend(hits[:config.evalue.max_display])
    return out, stats


@dataclass(frozen=True)
class ModeComparison:
    mp_hits: list[HitRecord]
    classic_hits: list[HitRecord]
    mp_stats: RunStats
    classic_stats: RunStats
    lost: list[tuple]
    gained: list[tuple]

    @property
    def mp_ops(self) -> int:
        return self.mp_stats.counted_ops

    @property
    def classic_ops(self) -> int:
        return self.classic_stats.counted_ops

    @property
    def reduction(self) -> float | None:
        """1 - mp_ops / classic_ops, or None when no gapped work existed."""
        if self.classic_ops == 0:
            return None
        return 1 - self.mp_ops / self.classic_ops

    @property
    def matched(self) -> int:
        return len(self.classic_hits) - len(self.lost)


def compare_modes(queries: list[Sequence], targets: list[Sequence], config: PipelineConfig,
                  threads: int = 1) -> ModeComparison:
    if config.middle_path is None:
        raise InvalidCutoffs("compare_modes needs a middle-path configuration")
    mp_hits, mp_stats = search(queries, targets, config, threads)
    classic_hits, classic_stats = search(queries, targets, replace(config, middle_path=None),
                                         threads)
    mp_keys = {h.key for h in mp_hits}
    classic_keys = {h.key for h in classic_hits}
    lost = [h.key for h in classic_hits if h.key not in mp_keys]
    gained = [h.key for h in mp_hits if h.key not in classic_keys]
    return ModeComparison(mp_hits, classic_hits, mp_stats, classic_stats, lost, gained)
