#!/usr/bin/env python3
"""Regenerate tests/golden from the fixtures in tests/data.

Only run this after a deliberate output change; the golden files are the
determinism reference.
"""
import io
from pathlib import Path

from middlepath.cli import main

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
GOLDEN = ROOT / "tests" / "golden"

IDENTITY = ["--query", str(DATA / "identity_query.fa"), "--db", str(DATA / "identity_db.fa")]
CORPUS = ["--query", str(DATA / "corpus" / "queries.fa"), "--db", str(DATA / "corpus" / "targets.fa")]

CASES = {
    "search_identity.tsv": ["search", *IDENTITY],
    "search_identity_classic.tsv": ["search", *IDENTITY, "--classic"],
    "search_corpus.tsv": ["search", *CORPUS],
    "search_corpus_classic.tsv": ["search", *CORPUS, "--classic"],
    "search_corpus_display.tsv": ["search", *CORPUS, "--below-cutoff", "display", "--n-step", "5"],
    "ops_n_sweep.csv": ["ops-table", "--mode", "n-sweep"],
    "ops_matrix_sweep.csv": ["ops-table", "--mode", "matrix-sweep"],
}


def render(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    if code != 0:
        raise SystemExit(f"{argv} exited {code}")
    return buf.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        (GOLDEN / name).write_text(render(argv), encoding="ascii", newline="")
        print("wrote", name)
