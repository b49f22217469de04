"""Seed-and-extend alignment with a restricted-insertion middle-path triage stage."""
from .analytics import (OpCountReport, SavingsModel, analytic_counts, estimate_pipeline_saving,
                        sweep_matrix_sizes, sweep_n_values, verify_counts)
from .gapped import GappedAlignment, Step, full_affine_align, full_affine_score
from .middle_path import (BelowCutoffPolicy, CellCase, MiddlePathOutcome, MiddlePathParams,
                          OpCounters, TriageDecision, classify_cell, derive_cutoff_mp,
                          diagonal_score, middle_path_score, run_middle_path, triage)
from .pipeline import HitRecord, PipelineConfig, RunStats, Stage, compare_modes, search
from .scoring import (EvalueParams, EvalueReport, ScoringScheme, SubstitutionTable, evalue,
                      load_matrix, make_dna_scheme)
from .seeding import SeedHit, SeedPair, SeedingParams, find_word_hits, pair_two_hits
from .seqio import Alphabet, Sequence, parse_fasta, read_fasta, subsequence, write_fasta
from .ungapped import ExtensionParams, Hsp, dedupe_hsps, extend_ungapped

__version__ = "0.1.0"
