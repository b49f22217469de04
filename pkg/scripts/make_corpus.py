#!/usr/bin/env python3
"""Write a synthetic query/target FASTA pair.

Example:
    python3 scripts/make_corpus.py --out-dir /tmp/corpus --queries 50 --targets 200
"""
import argparse
from pathlib import Path

from middlepath.corpus import make_corpus
from middlepath.seqio import write_fasta


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, required=True)
    p.add_argument("--queries", type=int, default=50)
    p.add_argument("--targets", type=int, default=200)
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--min-rate", type=float, default=0.01)
    p.add_argument("--max-rate", type=float, default=0.20)
    p.add_argument("--indel-fraction", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    queries, targets = make_corpus(args.queries, args.targets, args.length, args.min_rate,
                                   args.max_rate, args.indel_fraction, args.seed)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    with open(args.out_dir / "queries.fa", "w", encoding="ascii") as fh:
        write_fasta(queries, fh)
    with open(args.out_dir / "targets.fa", "w", encoding="ascii") as fh:
        write_fasta(targets, fh)
    print(f"wrote {len(queries)} queries and {len(targets)} targets to {args.out_dir}")


if __name__ == "__main__":
    main()
