"""Closed-form per-cell operation counts and the pipeline savings estimate.

With R = floor(m/N) eligible query rows and C = floor(n/N) eligible target
columns, the case counts of an m x n matrix are

    case4 = R*C,  case3 = R*(n-C),  case2 = (m-R)*C,  case1 = (m-R)*(n-C)

and the per-cell averages follow from the per-case charges in
``middle_path``.  The unrestricted baseline costs 5 + 5 + 1 = 11 per cell.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TextIO

from .errors import DimensionMismatch, InvalidParams
from .middle_path import CASE_ARITHMETIC, CASE_COMPARISONS, OVERHEAD_PER_CELL, OpCounters

BASELINE_TOTAL_PER_CELL = 11

DEFAULT_SIZES = (10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 1000, 10000, 100000)
DEFAULT_N_VALUES = (1, 2, 5, 10, 20, 50, 100)

# Published rows: (comparisons, arithmetic, total, improvement %) per cell.
# Matrix-size sweep at N = 10.
PUBLISHED_SIZE_SWEEP = {
    10: ("0.21", "1.39", "2.6", "76.37"),
    20: ("0.2", "1.37", "2.57", "76.64"),
    30: ("0.197", "1.363", "2.56", "76.73"),
    40: ("0.195", "1.36", "2.555", "76.78"),
    50: ("0.194", "1.358", "2.552", "76.8"),
    60: ("0.193", "1.355", "2.548", "76.84"),
    70: ("0.1928", "1.353", "2.5458", "76.86"),
    80: ("0.1925", "1.35", "2.5425", "76.89"),
    90: ("0.1922", "1.349", "2.5412", "76.90"),
    100: ("0.192", "1.349", "2.54", "76.91"),
    1000: ("0.1901", "1.3479", "2.5380", "76.93"),
    10000: ("0.1897", "1.3470", "2.5367", "76.94"),
    100000: ("0.18903", "1.34612", "2.53515", "76.96"),
}
# N sweep on a 100 x 100 matrix.
PUBLISHED_N_SWEEP = {
    1: ("3", "4", "8", "27.28"),
    2: ("1.24", "2.79", "5.03", "54.28"),
    5: ("0.356", "1.632", "2.988", "72.84"),
    10: ("0.192", "1.354", "2.546", "76.86"),
    20: ("0.0985", "1.189", "2.2875", "79.21"),
    50: ("0.04", "1.08", "2.12", "80.73"),
    100: ("0.02", "1.04", "2.06", "81.28"),
}
COUNT_TOLERANCE = Fraction("0.01")
IMPROVEMENT_TOLERANCE = Fraction("0.02")

CSV_HEADER = ("m", "n", "N", "comparisons_per_cell", "arithmetic_per_cell",
              "total_per_cell", "improvement_percent", "deviation_note")


@dataclass(frozen=True)
class OpCountReport:
    m: int
    n: int
    n_step: int
    comparisons_per_cell: float
    arithmetic_per_cell: float
    total_per_cell: float
    improvement_percent: float
    case_counts: tuple[int, int, int, int]
    deviation_note: str = ""

    def values(self) -> tuple[float, float, float, float]:
        return (self.comparisons_per_cell, self.arithmetic_per_cell,
                self.total_per_cell, self.improvement_percent)


def case_counts(m: int, n: int, n_step: int) -> tuple[int, int, int, int]:
    rows, cols = m // n_step, n // n_step
    return ((m - rows) * (n - cols), (m - rows) * cols, rows * (n - cols), rows * cols)


def _exact_rates(m: int, n: int, n_step: int):
    cc = case_counts(m, n, n_step)
    cells = m * n
    comps = Fraction(sum(w * c for w, c in zip(CASE_COMPARISONS, cc)), cells)
    arith = Fraction(sum(w * c for w, c in zip(CASE_ARITHMETIC, cc)), cells)
    total = comps + arith + OVERHEAD_PER_CELL
    improvement = 100 * (BASELINE_TOTAL_PER_CELL - total) / BASELINE_TOTAL_PER_CELL
    return cc, (comps, arith, total, improvement)


def analytic_counts(m: int, n: int, n_step: int) -> OpCountReport:
    if m < 1 or n < 1 or n_step < 1:
        raise InvalidParams(f"need m, n, N >= 1, got {m}, {n}, {n_step}")
    cc, rates = _exact_rates(m, n, n_step)
    return OpCountReport(m, n, n_step, *(float(r) for r in rates), case_counts=cc)


def deviation_note(report: OpCountReport, published: tuple[str, str, str, str] | None) -> str:
    """Empty when the published row agrees with the model, else the published values.

    Agreement means within 0.01 on each per-cell count and 0.02 points on the
    improvement percentage.
    """
    if published is None:
        return ""
    _, rates = _exact_rates(report.m, report.n, report.n_step)
    target = [Fraction(p) for p in published]
    tols = (COUNT_TOLERANCE,) * 3 + (IMPROVEMENT_TOLERANCE,)
    if all(abs(r - p) <= tol for r, p, tol in zip(rates, target, tols)):
        return ""
    return "published " + "/".join(published)


def _with_note(report: OpCountReport, published) -> OpCountReport:
    note = deviation_note(report, published)
    if not note:
        return report
    return OpCountReport(report.m, report.n, report.n_step, *report.values(),
                         case_counts=report.case_counts, deviation_note=note)


def sweep_matrix_sizes(sizes: Iterable[int], n_step: int = 10) -> list[OpCountReport]:
    out = []
    for size in sizes:
        rep = analytic_counts(size, size, n_step)
        published = PUBLISHED_SIZE_SWEEP.get(size) if n_step == 10 else None
        out.append(_with_note(rep, published))
    return out


def sweep_n_values(size: int = 100, n_values: Iterable[int] = DEFAULT_N_VALUES) -> list[OpCountReport]:
    out = []
    for n_step in n_values:
        rep = analytic_counts(size, size, n_step)
        published = PUBLISHED_N_SWEEP.get(n_step) if size == 100 else None
        out.append(_with_note(rep, published))
    return out


def verify_counts(report: OpCountReport, counters: OpCounters) -> bool:
    """Check instrumented counters against the closed form, in integers."""
    cells = report.m * report.n
    if counters.cells != cells:
        raise DimensionMismatch(
            f"counters cover {counters.cells} cells, report describes {report.m}x{report.n}"
        )
    expected = OpCounters.from_cases(case_counts(report.m, report.n, report.n_step))
    return (counters.case_counts == expected.case_counts
            and counters.comparisons == expected.comparisons
            and counters.arithmetic == expected.arithmetic
            and counters.overhead == expected.overhead)


def write_csv(reports: Iterable[OpCountReport], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow([r.m, r.n, r.n_step, *(f"{v:.4f}" for v in r.values()), r.deviation_note])


@dataclass(frozen=True)
class SavingsModel:
    gapped_share: float = 1 / 3
    skip_fraction: float = 0.5
    mp_overhead_fraction: float = 0.125

    def __post_init__(self):
        for name in ("gapped_share", "skip_fraction", "mp_overhead_fraction"):
            v = getattr(self, name)
            if not 0 <= v <= 1:
                raise InvalidParams(f"{name} must lie in [0, 1], got {v}")


def estimate_pipeline_saving(model: SavingsModel) -> float:
    """Fraction of total pipeline time saved (negative means a net loss)."""
    saving = model.gapped_share * (model.skip_fraction - model.mp_overhead_fraction)
    return max(saving, -model.gapped_share * model.mp_overhead_fraction)
