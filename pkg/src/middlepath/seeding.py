"""Exact word hits and two-hit pairing along diagonals."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import InvalidParams, WordTooLong
from .seqio import Sequence

MAX_WORD_LENGTH = 32


@dataclass(frozen=True)
class SeedingParams:
    word_length: int = 11
    two_hit_window: int = 40

    def __post_init__(self):
        if not 1 <= self.word_length <= MAX_WORD_LENGTH:
            raise InvalidParams(
                f"word_length must be in 1..{MAX_WORD_LENGTH}, got {self.word_length}"
            )
        if self.two_hit_window < 1:
            raise InvalidParams(f"two_hit_window must be >= 1, got {self.two_hit_window}")


@dataclass(frozen=True, order=True)
class SeedHit:
    # field order gives the (diagonal, q_pos) sort key
    diagonal: int = field(init=False, repr=False)
    q_pos: int
    t_pos: int
    length: int = field(default=1, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "diagonal", self.t_pos - self.q_pos)


@dataclass(frozen=True)
class SeedPair:
    first: SeedHit
    second: SeedHit

    @property
    def diagonal(self) -> int:
        return self.first.diagonal


def find_word_hits(query: Sequence, target: Sequence, params: SeedingParams) -> list[SeedHit]:
    """All (q_pos, t_pos) whose W-length words are identical.

    Query words are hashed once; the target is scanned against the index.
    Returned hits are sorted by (diagonal, q_pos).
    """
    w = params.word_length
    if w > query.length or w > target.length:
        raise WordTooLong(
            f"word length {w} exceeds sequence length "
            f"(query {query.length}, target {target.length})"
        )
    index: dict[str, list[int]] = defaultdict(list)
    q = query.residues
    for i in range(len(q) - w + 1):
        index[q[i:i + w]].append(i + 1)

    t = target.residues
    hits = []
    for j in range(len(t) - w + 1):
        positions = index.get(t[j:j + w])
        if positions:
            for qp in positions:
                hits.append(SeedHit(qp, j + 1, w))
    hits.sort()
    return hits


def pair_two_hits(hits: list[SeedHit], params: SeedingParams) -> list[SeedPair]:
    """Pair consecutive hits on the same diagonal closer than the window.

    Each hit is used at most once: after a pair is formed the scan resumes
    past its second member.
    """
    window = params.two_hit_window
    pairs = []
    i = 0
    while i < len(hits) - 1:
        a, b = hits[i], hits[i + 1]
        if a.diagonal == b.diagonal and 0 < b.q_pos - a.q_pos < window:
            pairs.append(SeedPair(a, b))
            i += 2
        else:
            i += 1
    return pairs
