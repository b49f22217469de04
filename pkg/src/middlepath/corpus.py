"""Synthetic DNA corpora: random targets and mutated query copies."""
from __future__ import annotations

import numpy as np

from .seqio import Sequence

BASES = "ACGT"


def mutate(residues: str, rate: float, rng: np.random.Generator,
           indel_fraction: float = 0.2) -> str:
    """Apply point mutations at ``rate`` per position.

    A mutation is a substitution (to a different base) with probability
    ``1 - indel_fraction``, otherwise a single-base insertion or deletion
    with equal odds.
    """
    out = []
    for ch in residues:
        if rng.random() >= rate:
            out.append(ch)
            continue
        kind = rng.random()
        if kind < 1 - indel_fraction:
            out.append(rng.choice([b for b in BASES if b != ch]))
        elif kind < 1 - indel_fraction / 2:
            out.append(ch)
            out.append(BASES[rng.integers(4)])
        # else: deletion
    return "".join(out) or residues[:1]


def random_dna(length: int, rng: np.random.Generator) -> str:
    return "".join(BASES[i] for i in rng.integers(0, 4, size=length))


def make_corpus(n_queries: int = 50, n_targets: int = 200, length: int = 200,
                min_rate: float = 0.01, max_rate: float = 0.20,
                indel_fraction: float = 0.2, seed: int = 0):
    """Random targets plus queries mutated from randomly chosen targets.

    Returns ``(queries, targets)``; each query's description records its
    source target and mutation rate.
    """
    rng = np.random.default_rng(seed)
    targets = [Sequence(f"t{i:04d}", random_dna(length, rng)) for i in range(n_targets)]
    queries = []
    for i in range(n_queries):
        src = targets[int(rng.integers(n_targets))]
        rate = float(rng.uniform(min_rate, max_rate))
        queries.append(Sequence(f"q{i:04d}", mutate(src.residues, rate, rng, indel_fraction),
                                f"src={src.id} rate={rate:.3f}"))
    return queries, targets
