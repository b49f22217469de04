"""Substitution tables, affine gap parameters and E-values."""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from importlib import resources
from typing import TextIO

import numpy as np

from .errors import InvalidParams, MalformedMatrix, MissingResidue
from .seqio import Alphabet, Sequence

DEFAULT_DNA_LAMBDA = 0.693147
DEFAULT_DNA_K = 1.0
# NCBI gapped BLOSUM62 constants (11/1); only used as CLI defaults for protein.
DEFAULT_PROTEIN_LAMBDA = 0.267
DEFAULT_PROTEIN_K = 0.041


class SubstitutionTable:
    """Integer score table indexed by residue pair.

    Residues are mapped to small integer codes (their order in ``symbols``)
    so that DP kernels can index ``scores`` directly.
    """

    def __init__(self, symbols: str, scores):
        scores = np.asarray(scores, dtype=np.int64)
        if scores.shape != (len(symbols), len(symbols)):
            raise MalformedMatrix(
                f"score table shape {scores.shape} does not match {len(symbols)} symbols"
            )
        if len(set(symbols)) != len(symbols):
            raise MalformedMatrix(f"duplicate residue in header {symbols!r}")
        self.symbols = symbols
        self.scores = scores
        self.scores.setflags(write=False)
        self._lookup = np.full(256, -1, dtype=np.int16)
        for i, ch in enumerate(symbols):
            self._lookup[ord(ch)] = i

    def __getitem__(self, pair: tuple[str, str]) -> int:
        a, b = pair
        return int(self.scores[self.symbols.index(a), self.symbols.index(b)])

    def __contains__(self, residue: str) -> bool:
        return len(residue) == 1 and self._lookup[ord(residue)] >= 0

    def encode(self, residues: str | Sequence) -> np.ndarray:
        if isinstance(residues, Sequence):
            residues = residues.residues
        raw = np.frombuffer(residues.encode("ascii"), dtype=np.uint8)
        codes = self._lookup[raw]
        if codes.size and codes.min() < 0:
            bad = residues[int(np.argmin(codes))]
            raise MissingResidue(f"residue {bad!r} has no row in the substitution table")
        return codes.astype(np.intp)

    def __repr__(self):
        return f"SubstitutionTable({self.symbols!r})"


def load_matrix(stream: TextIO | str, alphabet: Alphabet | None = None) -> SubstitutionTable:
    """Read a whitespace-separated score matrix (NCBI/BLOSUM layout).

    The first non-comment line lists column residues; each later line is a
    row residue followed by one integer per column.  Lines starting with
    ``#`` are ignored.  Asymmetric tables are stored as given.  When
    ``alphabet`` is given, every one of its residues must have a row and a
    column.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    lines = [ln.split() for ln in stream if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedMatrix("matrix file has no header line")
    columns = [c.upper() for c in lines[0]]
    if any(len(c) != 1 for c in columns):
        raise MalformedMatrix(f"column labels must be single residues: {lines[0]}")

    rows: dict[str, list[int]] = {}
    for fields in lines[1:]:
        label = fields[0].upper()
        if len(fields) != len(columns) + 1:
            raise MalformedMatrix(
                f"row {label!r} has {len(fields) - 1} cells, expected {len(columns)}"
            )
        try:
            rows[label] = [int(x) for x in fields[1:]]
        except ValueError as exc:
            raise MalformedMatrix(f"non-integer cell in row {label!r}: {exc}") from None

    required = alphabet.value if alphabet is not None else ""
    missing = [r for r in required if r not in rows or r not in columns]
    if missing:
        raise MissingResidue(f"residues {''.join(missing)!r} absent from matrix")

    symbols = "".join(c for c in columns if c in rows)
    col_index = [columns.index(c) for c in symbols]
    scores = [[rows[r][j] for j in col_index] for r in symbols]
    return SubstitutionTable(symbols, scores)


def blosum62() -> SubstitutionTable:
    text = resources.files("middlepath").joinpath("data/BLOSUM62").read_text()
    return load_matrix(text, Alphabet.PROTEIN)


@dataclass(frozen=True)
class ScoringScheme:
    """Substitution table plus affine gap costs.

    Gap costs are positive magnitudes that get subtracted.  Opening a gap
    and placing its first residue costs ``insertion_cost``; each further
    residue costs ``gap_extension``.
    """
    substitution: SubstitutionTable
    gap_open: int
    gap_extension: int

    def __post_init__(self):
        if self.gap_open < 0:
            raise InvalidParams(f"gap_open must be >= 0, got {self.gap_open}")
        if self.gap_extension < 1:
            raise InvalidParams(f"gap_extension must be >= 1, got {self.gap_extension}")

    @property
    def insertion_cost(self) -> int:
        return self.gap_open + self.gap_extension

    def score(self, x: str, y: str) -> int:
        return self.substitution[x, y]

    def encode(self, seq: Sequence | str) -> np.ndarray:
        return self.substitution.encode(seq)

    def gap_cost(self, length: int) -> int:
        """Total penalty of one gap of ``length`` residues (0 for no gap)."""
        if length <= 0:
            return 0
        return self.insertion_cost + (length - 1) * self.gap_extension


def make_dna_scheme(match: int = 1, mismatch: int = -3, gap_open: int = 5,
                    gap_extension: int = 2) -> ScoringScheme:
    if match <= 0 or mismatch >= 0:
        raise InvalidParams(f"need match > 0 and mismatch < 0, got {match}/{mismatch}")
    symbols = Alphabet.DNA.value
    k = len(symbols)
    scores = np.full((k, k), mismatch, dtype=np.int64)
    np.fill_diagonal(scores, match)
    return ScoringScheme(SubstitutionTable(symbols, scores), gap_open, gap_extension)


@dataclass(frozen=True)
class EvalueParams:
    lambda_: float = DEFAULT_DNA_LAMBDA
    k: float = DEFAULT_DNA_K
    e_max: float = 10.0
    max_display: int = 500

    def __post_init__(self):
        if not (self.lambda_ > 0 and self.k > 0 and self.e_max > 0):
            raise InvalidParams("lambda, k and e_max must all be positive")
        if self.max_display < 1:
            raise InvalidParams("max_display must be >= 1")


@dataclass(frozen=True)
class EvalueReport:
    raw_score: int
    normalized_score: float
    q: float
    evalue: float


def evalue(raw_score: int, query_len: int, target_len: int, params: EvalueParams) -> EvalueReport:
    """Expected chance matches at ``raw_score`` for an m x n search space.

    The bit score is ``(lambda*s - ln K) / ln 2`` and ``E = m*n / 2**bits``.
    Overflow saturates to ``inf`` (or 0.0 for astronomically high scores).
    """
    if query_len < 1 or target_len < 1:
        raise InvalidParams("sequence lengths must be >= 1")
    bits = (params.lambda_ * raw_score - math.log(params.k)) / math.log(2)
    q = float(query_len) * float(target_len)
    try:
        e = q / 2.0 ** bits
    except OverflowError:
        e = 0.0
    except ZeroDivisionError:
        e = math.inf
    return EvalueReport(raw_score, bits, q, e)
