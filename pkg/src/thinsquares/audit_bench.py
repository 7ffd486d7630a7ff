"""Measurements over the basis machinery.

Three instruments: cardinality growth exponents fitted over an x grid,
exhaustive (or stratified) coverage of the greedy decomposition with a shift
histogram, and trial-count growth of the randomized four-square split. The
sum-set bound check with explicit constants lives here too.

Coverage failures are data, not exceptions: a failing n is recorded with its
error kind and the audit keeps going.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass, field, replace

from .core_arith import RandomSource, _check_nat
from .errors import InputTooLarge, PartOutOfBasis, SearchExhausted, ShiftExhausted
from .four_squares import four_squares
from .thin_basis import BasisParams, ThinBasis, build, cardinality, greedy_decompose, verify_trace

_EXHAUSTIVE_LIMIT = 10**6
_COVERAGE_GUARD = 10**7
_SAMPLE_TOTAL = 10**5
_CHUNK = 1 << 16
_BITS_GUARD = 48


@dataclass(frozen=True)
class CardinalityRecord:
    x: int
    n1: int
    n2: int
    total: int


@dataclass
class AuditReport:
    x_grid: list[int] = field(default_factory=list)
    records: list[CardinalityRecord] = field(default_factory=list)
    alpha1: float | None = None
    alpha2: float | None = None
    alpha_union: float | None = None
    coverage_failures: list[tuple[int, str]] = field(default_factory=list)
    t_histogram: dict[int, int] = field(default_factory=dict)
    max_m_ratio: float = 0.0
    coverage_x: int | None = None
    audited: int = 0
    sampled: bool = False

    @property
    def max_t(self) -> int:
        return max(self.t_histogram) if self.t_histogram else 0


def fit_exponent(points: list[tuple[int, int]]) -> float:
    """Least-squares slope of log(count) against log(x)."""
    if len(points) < 3:
        raise ValueError("need at least 3 points to fit an exponent")
    for x, count in points:
        if x < 2 or count < 1:
            raise ValueError(f"point ({x}, {count}) is outside the fit domain")
    xs = [math.log(x) for x, _ in points]
    ys = [math.log(c) for _, c in points]
    return statistics.linear_regression(xs, ys).slope


def cardinality_audit(grid: list[int], params: BasisParams) -> AuditReport:
    """Build a basis per grid point and fit the three growth exponents."""
    if len(grid) < 3:
        raise ValueError("grid must have at least 3 points")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    report = AuditReport(x_grid=list(grid))
    for x in grid:
        basis = build(replace(params, x=x))
        n1, n2, total = cardinality(basis)
        report.records.append(CardinalityRecord(x, n1, n2, total))
    report.alpha1 = fit_exponent([(r.x, r.n1) for r in report.records])
    report.alpha2 = fit_exponent([(r.x, r.n2) for r in report.records])
    report.alpha_union = fit_exponent([(r.x, r.total) for r in report.records])
    return report


def _audit_one(n: int, params: BasisParams, basis: ThinBasis, src: RandomSource,
               report: AuditReport) -> None:
    try:
        trace = greedy_decompose(n, params, src)
    except (ShiftExhausted, PartOutOfBasis, SearchExhausted) as exc:
        report.coverage_failures.append((n, type(exc).__name__))
        return
    if not verify_trace(trace, basis):
        report.coverage_failures.append((n, "verify"))
        return
    hist = report.t_histogram
    hist[trace.t] = hist.get(trace.t, 0) + 1
    report.audited += 1
    if n > 0:
        ratio = trace.m / math.sqrt(n)
        if ratio > report.max_m_ratio:
            report.max_m_ratio = ratio


def coverage_audit(x: int, params: BasisParams, rng: RandomSource) -> AuditReport:
    """Greedy-decompose and verify every n <= x, or a stratified sample above
    the exhaustive limit (uniform draws per decade, 10**5 total).

    Work is partitioned into chunks whose sources derive deterministically
    from (seed, chunk index), so the result is independent of scheduling.
    """
    _check_nat(x, "x")
    if x > _COVERAGE_GUARD:
        raise InputTooLarge(f"coverage_audit guard: x <= {_COVERAGE_GUARD}")
    params = replace(params, x=x) if params.x != x else params
    basis = build(params)
    report = AuditReport(coverage_x=x)
    if x <= _EXHAUSTIVE_LIMIT:
        for chunk, lo in enumerate(range(0, x + 1, _CHUNK)):
            src = rng.spawn(chunk)
            for n in range(lo, min(lo + _CHUNK, x + 1)):
                _audit_one(n, params, basis, src, report)
    else:
        report.sampled = True
        decades = []
        lo = 1
        while lo <= x:
            decades.append((lo, min(lo * 10, x + 1)))
            lo *= 10
        quota = _SAMPLE_TOTAL // len(decades)
        for idx, (dlo, dhi) in enumerate(decades):
            src = rng.spawn(idx)
            span = dhi - dlo
            for _ in range(min(quota, span)):
                _audit_one(dlo + src.uniform_below(span), params, basis, src, report)
    return report


def distinct_power_sums(elements: list[int], s: int) -> int:
    """Distinct values among sums of s elements, repetitions allowed."""
    if s < 1:
        raise ValueError("s must be >= 1")
    sums = {0}
    for _ in range(s):
        sums = {v + a for v in sums for a in elements}
    return len(sums)


@dataclass(frozen=True)
class Lemma5Report:
    x: int
    set_size: int
    lower_ok: bool          # #A >= x^(1/4) / 2
    upper_ok: bool          # #A <= 2 * x^(1/2)
    sum_elements_used: int
    distinct_sums: int
    multiset_bound: int     # C(#used + s - 1, s)
    sums_ok: bool
    heuristic_estimate: float  # #A^s / s!, reported only
    passed: bool


def lemma5_check(basis: ThinBasis, s: int, max_sum_elements: int = 100) -> Lemma5Report:
    """Range check on the basis cardinality with explicit constants, plus the
    exact multiset bound on distinct s-fold sums of a small sub-basis.

    The sub-basis is the max_sum_elements smallest elements of the union;
    counting distinct sums of the full set would be out of reach at audit
    scales. The x^(alpha*s)/s! style estimate is reported, never asserted.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if max_sum_elements > 10**4:
        raise InputTooLarge("sum-set counting is guarded to 10**4 elements")
    x = basis.params.x
    _, _, total = cardinality(basis)
    lower_ok = (2 * total) ** 4 >= x
    upper_ok = total * total <= 4 * x
    elements = []
    for v in basis.elements():
        elements.append(v)
        if len(elements) >= max_sum_elements:
            break
    distinct = distinct_power_sums(elements, s)
    bound = math.comb(len(elements) + s - 1, s)
    sums_ok = distinct <= bound
    heuristic = total**s / math.factorial(s)
    return Lemma5Report(
        x=x,
        set_size=total,
        lower_ok=lower_ok,
        upper_ok=upper_ok,
        sum_elements_used=len(elements),
        distinct_sums=distinct,
        multiset_bound=bound,
        sums_ok=sums_ok,
        heuristic_estimate=heuristic,
        passed=lower_ok and upper_ok and sums_ok,
    )


@dataclass(frozen=True)
class BenchRow:
    bits: int
    samples: int
    mean_trials: float
    max_trials: int
    ratio: float  # mean / (ln N * ln ln N) at N = 2^bits, informational


def rs_trial_bench(bit_sizes: list[int], samples: int, rng: RandomSource) -> list[BenchRow]:
    """Mean and max randomized-draw counts of the four-square split per input
    bit size. Every decomposition is re-verified. The log*loglog ratio column
    is for monotonicity inspection only; nothing is asserted about it."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rows = []
    for idx, bits in enumerate(bit_sizes):
        if not 1 <= bits <= _BITS_GUARD:
            raise ValueError(f"bit sizes must be in [1, {_BITS_GUARD}], got {bits}")
        src = rng.spawn(idx)
        total = 0
        worst = 0
        for _ in range(samples):
            if bits == 1:
                n = 1
            else:
                half = 1 << (bits - 1)
                n = half + src.uniform_below(half)
            rep = four_squares(n, src)
            if rep.x**2 + rep.y**2 + rep.z**2 + rep.w**2 != n:
                raise SearchExhausted(f"four-square output failed verification for {n}")
            total += rep.trials
            worst = max(worst, rep.trials)
        mean = total / samples
        ln_n = bits * math.log(2.0)
        ratio = mean / (ln_n * math.log(ln_n)) if ln_n > 1.0 else float(mean)
        rows.append(BenchRow(bits, samples, mean, worst, ratio))
    return rows


# ---------------------------------------------------------------------------
# Emission: comma-separated tables with a mandatory header row, plus a short
# text summary. File handles or paths are supplied by the caller.

AUDIT_FIELDS = ("x", "n1", "n2", "total", "alpha1", "alpha2", "alpha_union", "max_t", "failures")
BENCH_FIELDS = ("bits", "samples", "mean_trials", "max_trials", "ratio")


def _fmt(v) -> str:
    return f"{v:.6f}" if isinstance(v, float) else str(v)


def audit_rows(card: AuditReport, coverage: AuditReport | None = None) -> list[dict]:
    """One row per grid x; exponents are global fits repeated on each row and
    the coverage columns are filled from the coverage run when one was made."""
    max_t = coverage.max_t if coverage else ""
    failures = len(coverage.coverage_failures) if coverage else ""
    rows = []
    for rec in card.records:
        rows.append({
            "x": rec.x,
            "n1": rec.n1,
            "n2": rec.n2,
            "total": rec.total,
            "alpha1": card.alpha1,
            "alpha2": card.alpha2,
            "alpha_union": card.alpha_union,
            "max_t": max_t,
            "failures": failures,
        })
    return rows


def bench_table(rows: list[BenchRow]) -> list[dict]:
    return [
        {"bits": r.bits, "samples": r.samples, "mean_trials": r.mean_trials,
         "max_trials": r.max_trials, "ratio": r.ratio}
        for r in rows
    ]


def write_csv(rows: list[dict], fieldnames, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt(v) for k, v in row.items()})


def summary_text(card: AuditReport | None = None, coverage: AuditReport | None = None) -> str:
    lines = []
    if card is not None:
        lines.append(
            f"cardinality: grid={card.x_grid} alpha1={card.alpha1:.4f} "
            f"alpha2={card.alpha2:.4f} alpha_union={card.alpha_union:.4f} "
            "(union exponent reported, not asserted)"
        )
    if coverage is not None:
        mode = "sampled" if coverage.sampled else "exhaustive"
        lines.append(
            f"coverage: x={coverage.coverage_x} mode={mode} audited={coverage.audited} "
            f"failures={len(coverage.coverage_failures)} max_t={coverage.max_t} "
            f"max_m_ratio={coverage.max_m_ratio:.4f}"
        )
    return "\n".join(lines)
