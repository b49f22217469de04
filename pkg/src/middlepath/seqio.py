"""FASTA reading/writing and sequence coordinates.

All reported coordinates are 1-based and inclusive.
"""
from __future__ import annotations

import enum
import io
from dataclasses import dataclass
from typing import Iterable, TextIO

from .errors import EmptyFile, EmptyRecord, IllegalResidue, MissingHeader, OutOfRange


class Alphabet(enum.Enum):
    DNA = "ACGTN"
    PROTEIN = "ACDEFGHIKLMNPQRSTVWYBZX*"

    @property
    def allowed_symbols(self) -> frozenset[str]:
        return frozenset(self.value)

    def __contains__(self, residue: str) -> bool:
        return residue.upper() in self.allowed_symbols

    @classmethod
    def from_name(cls, name: str) -> "Alphabet":
        return cls[name.upper()]


@dataclass(frozen=True)
class Sequence:
    id: str
    residues: str
    description: str = ""

    def __post_init__(self):
        if not self.id:
            raise ValueError("sequence id must be non-empty")
        if not self.residues:
            raise EmptyRecord(f"record {self.id!r} has no residues")

    @property
    def length(self) -> int:
        return len(self.residues)

    def __len__(self) -> int:
        return len(self.residues)


def _validate(record_id: str, residues: str, alphabet: Alphabet) -> None:
    allowed = alphabet.allowed_symbols
    for pos, ch in enumerate(residues, start=1):
        if ch not in allowed:
            raise IllegalResidue(record_id, pos, ch)


def parse_fasta(stream: TextIO | str, alphabet: Alphabet = Alphabet.DNA) -> list[Sequence]:
    """Parse every record of a FASTA stream.

    Residues are upper-cased and whitespace inside residue lines is dropped.
    The id is the header text up to the first whitespace; the rest of the
    header becomes the description.

    Args:
        stream: Open text stream, or a string holding the FASTA text.
        alphabet: Residue alphabet every record must respect.

    Raises:
        EmptyFile: No records were found.
        MissingHeader: Residue data appears before the first header.
        EmptyRecord: A header is followed by no residues.
        IllegalResidue: A residue lies outside ``alphabet``.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    records: list[tuple[str, str, list[str]]] = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            header = line[1:].strip()
            parts = header.split(None, 1)
            if not parts:
                raise MissingHeader("header line with no identifier")
            records.append((parts[0], parts[1] if len(parts) > 1 else "", []))
        else:
            if not records:
                raise MissingHeader("residue data before the first '>' header")
            records[-1][2].append("".join(line.split()))

    if not records:
        raise EmptyFile("no FASTA records found")

    out = []
    for rid, desc, chunks in records:
        residues = "".join(chunks).upper()
        if not residues:
            raise EmptyRecord(f"record {rid!r} has no residues")
        _validate(rid, residues, alphabet)
        out.append(Sequence(rid, residues, desc))
    return out


def read_fasta(path, alphabet: Alphabet = Alphabet.DNA) -> list[Sequence]:
    with open(path, encoding="ascii", errors="strict") as fh:
        return parse_fasta(fh, alphabet)


def write_fasta(seqs: Iterable[Sequence], stream: TextIO, width: int = 60) -> None:
    for seq in seqs:
        header = f">{seq.id} {seq.description}".rstrip()
        stream.write(header + "\n")
        for i in range(0, seq.length, width):
            stream.write(seq.residues[i:i + width] + "\n")


def subsequence(seq: Sequence, start: int, end: int) -> Sequence:
    """Residues ``start..end`` (1-based, inclusive) as a new Sequence."""
    if not 1 <= start <= end <= seq.length:
        raise OutOfRange(
            f"range {start}..{end} outside 1..{seq.length} of {seq.id!r}"
        )
    return Sequence(f"{seq.id}:{start}-{end}", seq.residues[start - 1:end], seq.description)
