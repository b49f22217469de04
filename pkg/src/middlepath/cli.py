"""Command-line front end: ``search``, ``ops-table`` and ``bench``.

Exit codes: 0 success, 1 I/O or data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence as Seq, TextIO

from . import analytics
from .errors import MiddlePathError
from .middle_path import BelowCutoffPolicy, MiddlePathParams
from .pipeline import PipelineConfig, RunStats, compare_modes, search
from .scoring import (DEFAULT_DNA_K, DEFAULT_DNA_LAMBDA, DEFAULT_PROTEIN_K,
                      DEFAULT_PROTEIN_LAMBDA, EvalueParams, ScoringScheme, blosum62,
                      load_matrix, make_dna_scheme)
from .seeding import SeedingParams
from .seqio import Alphabet, read_fasta
from .ungapped import ExtensionParams

TSV_HEADER = ("query_id", "target_id", "q_start", "q_end", "t_start", "t_end",
              "mp_score", "decision", "final_score", "evalue", "stage")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--query", required=True, help="query FASTA")
    p.add_argument("--db", required=True, help="target FASTA")
    p.add_argument("--alphabet", choices=("dna", "protein"), default="dna")
    p.add_argument("--matrix", help="substitution matrix file (BLOSUM62 bundled for protein)")
    p.add_argument("--match", type=int, default=1)
    p.add_argument("--mismatch", type=int, default=-3)
    p.add_argument("--gap-open", type=int, default=5)
    p.add_argument("--gap-extend", type=int, default=2)
    p.add_argument("--word-size", type=int, help="W (default 11 dna, 3 protein)")
    p.add_argument("--two-hit-window", type=int, default=40)
    p.add_argument("--x-drop", type=int, default=20)
    p.add_argument("--s1", type=int, default=20)
    p.add_argument("--s2", type=int, default=40)
    p.add_argument("--n-step", type=int, default=10)
    p.add_argument("--classic", action="store_true", help="disable the middle-path stage")
    p.add_argument("--below-cutoff", choices=("reject", "display"), default="reject")
    p.add_argument("--evalue", type=float, default=10.0)
    p.add_argument("--max-display", type=int, default=500)
    p.add_argument("--lambda", dest="lambda_", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--margin", type=int, default=10)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed-rng", type=int, help="reserved; unused by search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="middlepath")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="search queries against a FASTA database")
    _add_search_flags(p)

    p = sub.add_parser("ops-table", help="closed-form per-cell operation counts")
    p.add_argument("--mode", choices=("matrix-sweep", "n-sweep"), required=True)
    p.add_argument("--n-step", type=int, default=10)
    p.add_argument("--sizes", type=_int_list, default=list(analytics.DEFAULT_SIZES))
    p.add_argument("--size", type=int, default=100)
    p.add_argument("--n-values", type=_int_list, default=list(analytics.DEFAULT_N_VALUES))
    p.add_argument("--output", help="write CSV here instead of stdout")

    p = sub.add_parser("bench", help="compare middle-path and classic modes over N values")
    _add_search_flags(p)
    p.add_argument("--n-values", type=_int_list, default=list(analytics.DEFAULT_N_VALUES))
    return parser


def _scheme(args, alphabet: Alphabet) -> ScoringScheme:
    if args.matrix:
        with open(args.matrix, encoding="ascii") as fh:
            table = load_matrix(fh, alphabet)
        return ScoringScheme(table, args.gap_open, args.gap_extend)
    if alphabet is Alphabet.PROTEIN:
        return ScoringScheme(blosum62(), args.gap_open, args.gap_extend)
    return make_dna_scheme(args.match, args.mismatch, args.gap_open, args.gap_extend)


def _config(args, n_step: int | None = None) -> tuple[PipelineConfig, Alphabet]:
    """Validate search flags; parameter errors become usage errors."""
    alphabet = Alphabet.from_name(args.alphabet)
    protein = alphabet is Alphabet.PROTEIN
    try:
        if not args.classic and args.s1 >= args.s2:
            raise UsageError(f"--s1 ({args.s1}) must be < --s2 ({args.s2})")
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        if args.margin < 0:
            raise UsageError("--margin must be >= 0")
        word = args.word_size if args.word_size is not None else (3 if protein else 11)
        seeding = SeedingParams(word, args.two_hit_window)
        extension = ExtensionParams(args.x_drop, args.s1)
        mp = None
        if not args.classic:
            mp = MiddlePathParams(n_step if n_step is not None else args.n_step, args.s2,
                                  BelowCutoffPolicy(args.below_cutoff))
        lam = args.lambda_ if args.lambda_ is not None else (
            DEFAULT_PROTEIN_LAMBDA if protein else DEFAULT_DNA_LAMBDA)
        k = args.k if args.k is not None else (DEFAULT_PROTEIN_K if protein else DEFAULT_DNA_K)
        ev = EvalueParams(lam, k, args.evalue, args.max_display)
        if args.gap_open < 0 or args.gap_extend < 1:
            raise UsageError("need --gap-open >= 0 and --gap-extend >= 1")
        builtin = args.matrix is None and not protein
        scheme = _scheme(args, alphabet) if builtin else None
    except MiddlePathError as exc:
        raise UsageError(str(exc)) from None
    if scheme is None:
        # matrix file problems are data errors, not usage errors
        scheme = _scheme(args, alphabet)
    return PipelineConfig(scheme, seeding, extension, mp, ev, args.margin), alphabet


def _fmt_stats(stats: RunStats) -> list[str]:
    skip = stats.skip_fraction
    lines = ["# stats:"]
    fields = [
        ("hsps_total", stats.hsps_total),
        ("routed_direct", stats.routed_direct),
        ("routed_gapped", stats.routed_gapped),
        ("routed_below", stats.routed_below),
        ("skip_fraction", "NA" if skip is None else f"{skip:.4f}"),
    ]
    for name in ("mp_counters", "gapped_counters", "classic_gapped_counters"):
        c = getattr(stats, name)
        fields.append((f"{name}.cells", c.cells))
        fields.append((f"{name}.comparisons", c.comparisons))
        fields.append((f"{name}.arithmetic", c.arithmetic))
        fields.append((f"{name}.overhead", c.overhead))
        fields.append((f"{name}.total", c.total))
    lines.extend(f"# {k}={v}" for k, v in fields)
    return lines


def cmd_search(args, out: TextIO) -> int:
    config, alphabet = _config(args)
    queries = read_fasta(args.query, alphabet)
    targets = read_fasta(args.db, alphabet)
    hits, stats = search(queries, targets, config, threads=args.threads)
    out.write("\t".join(TSV_HEADER) + "\n")
    for h in hits:
        row = [h.query_id, h.target_id, h.hsp.q_start, h.hsp.q_end, h.hsp.t_start, h.hsp.t_end,
               "-" if h.mp_score is None else h.mp_score,
               "-" if h.decision is None else h.decision.value,
               h.final_score, f"{h.evalue:.4e}", h.stage.value]
        out.write("\t".join(str(x) for x in row) + "\n")
    out.write("\n".join(_fmt_stats(stats)) + "\n")
    return 0


def cmd_ops_table(args, out: TextIO) -> int:
    if args.mode == "matrix-sweep":
        if args.n_step < 1 or not args.sizes or min(args.sizes) < 1:
            raise UsageError("--n-step and every --sizes entry must be >= 1")
        reports = analytics.sweep_matrix_sizes(args.sizes, args.n_step)
    else:
        if args.size < 1 or not args.n_values or min(args.n_values) < 1:
            raise UsageError("--size and every --n-values entry must be >= 1")
        reports = analytics.sweep_n_values(args.size, args.n_values)
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="") as fh:
            analytics.write_csv(reports, fh)
    else:
        analytics.write_csv(reports, out)
    return 0


BENCH_COLUMNS = ("N", "routed_direct", "routed_gapped", "routed_below", "skip_fraction",
                 "mp_gapped_ops", "classic_ops", "reduction_pct", "hits_lost")


def cmd_bench(args, out: TextIO) -> int:
    if args.classic:
        raise UsageError("bench compares against classic mode itself; drop --classic")
    if not args.n_values or min(args.n_values) < 1:
        raise UsageError("every --n-values entry must be >= 1")
    config, alphabet = _config(args, n_step=args.n_values[0])
    queries = read_fasta(args.query, alphabet)
    targets = read_fasta(args.db, alphabet)
    out.write("\t".join(BENCH_COLUMNS) + "\n")
    for n_step in args.n_values:
        cfg, _ = _config(args, n_step=n_step)
        cmp = compare_modes(queries, targets, cfg, threads=args.threads)
        st = cmp.mp_stats
        skip = "NA" if st.skip_fraction is None else f"{st.skip_fraction:.4f}"
        red = "NA" if cmp.reduction is None else f"{100 * cmp.reduction:.4f}"
        row = (n_step, st.routed_direct, st.routed_gapped, st.routed_below, skip,
               cmp.mp_ops, cmp.classic_ops, red, len(cmp.lost))
        out.write("\t".join(str(x) for x in row) + "\n")
    return 0


COMMANDS = {"search": cmd_search, "ops-table": cmd_ops_table, "bench": cmd_bench}


def main(argv: Seq[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"middlepath {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (MiddlePathError, OSError, UnicodeError) as exc:
        print(f"middlepath {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
