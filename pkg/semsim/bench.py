"""
Benchmark harness: score word pairs under registry measures and correlate the
scores with human ratings.

Reports: one row per (measure, ic kind) with Pearson r, Spearman rho, covered
pair count and skipped pairs. Distance measures are reported with their raw
(negative-leaning) correlation.
"""
from __future__ import annotations

import csv
import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter
from scipy import stats

from .errors import (
    ConstantSequence,
    LengthMismatch,
    NoCoveredPairs,
    ParseError,
    SemsimError,
    UnknownWord,
)
from .information_content import ICProvider
from .measure_registry import DEFAULT_PARAMS, MeasureParams, get_descriptor, word_similarity
from .ontology_io import BenchmarkDataset, dataset_frame
from .taxonomy import Taxonomy

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["measure", "ic_kind", "pearson", "spearman", "covered", "skipped"]
NO_IC = "none"
PRECISION = 4

MeasureSpec = Union[str, Tuple[str, MeasureParams]]


# =======================
# Correlation
# =======================

def _check_sequences(xs: Sequence[float], ys: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape:
        raise LengthMismatch(f"sequences differ in length ({x.size} vs {y.size})")
    if x.size < 2:
        raise LengthMismatch(f"correlation needs at least 2 values, got {x.size}")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise ConstantSequence("correlation is undefined for a constant sequence")
    return x, y


def _centered_r(x: np.ndarray, y: np.ndarray) -> float:
    xm = x - x.mean()
    ym = y - y.mean()
    r = float(xm @ ym / math.sqrt(float(xm @ xm) * float(ym @ ym)))
    return min(1.0, max(-1.0, r))


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    x, y = _check_sequences(xs, ys)
    return _centered_r(x, y)


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Pearson correlation of fractional (average-tie) ranks."""
    x, y = _check_sequences(xs, ys)
    return _centered_r(stats.rankdata(x), stats.rankdata(y))


# =======================
# Report types
# =======================

@dataclass(frozen=True)
class SkippedPair:
    index: int
    word1: str
    word2: str
    reason: str


@dataclass(frozen=True)
class BenchRow:
    measure: str
    ic_kind: str
    pearson: float
    spearman: float
    covered: int
    skipped: int
    skipped_pairs: Tuple[SkippedPair, ...] = ()
    # per-pair scores in dataset order; None where skipped
    scores: Tuple[Optional[float], ...] = ()


@dataclass(frozen=True)
class BenchReport:
    dataset: str
    rows: Tuple[BenchRow, ...] = field(default_factory=tuple)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [[r.measure, r.ic_kind, r.pearson, r.spearman, r.covered, r.skipped] for r in self.rows],
            columns=CSV_COLUMNS,
        )


# =======================
# Evaluation
# =======================

def _score_pairs(
    t: Taxonomy,
    ic: Optional[ICProvider],
    name: str,
    params: MeasureParams,
    dataset: BenchmarkDataset,
    t2: Optional[Taxonomy],
    max_workers: Optional[int],
) -> List[Tuple[str, object]]:
    """('ok', score) or ('skip', reason) per pair, in dataset order."""

    def _one(idx: int) -> Tuple[str, object]:
        w1, w2, _ = dataset.pairs[idx]
        try:
            return "ok", word_similarity(t, ic, name, params, w1, w2, t2=t2).score
        except UnknownWord as e:
            return "skip", e.message
        except SemsimError as e:
            return "error", e

    n = len(dataset.pairs)
    if max_workers == 1 or n <= 1:
        results = [_one(i) for i in range(n)]
    else:
        results = [("skip", "")] * n
        workers = max_workers or min(16, max(4, n // 8))
        with ThreadPoolExecutor(max_workers=workers) as ex:
            futs = {ex.submit(_one, i): i for i in range(n)}
            for f in as_completed(futs):
                results[futs[f]] = f.result()

    # first failing pair by index, independent of completion order
    for status, value in results:
        if status == "error":
            raise value
    return results


def _spec(item: MeasureSpec, default: MeasureParams) -> Tuple[str, MeasureParams]:
    if isinstance(item, str):
        return item, default
    name, params = item
    return name, params


def evaluate(
    t: Taxonomy,
    ic: Optional[ICProvider],
    measures: Sequence[MeasureSpec],
    dataset: BenchmarkDataset,
    params: MeasureParams = DEFAULT_PARAMS,
    t2: Optional[Taxonomy] = None,
    max_workers: Optional[int] = None,
) -> BenchReport:
    rows: List[BenchRow] = []
    ratings = [r for _, _, r in dataset.pairs]

    for item in measures:
        name, mparams = _spec(item, params)
        desc = get_descriptor(name)
        results = _score_pairs(t, ic, desc.name, mparams, dataset, t2, max_workers)

        scores: List[Optional[float]] = []
        skipped: List[SkippedPair] = []
        xs: List[float] = []
        ys: List[float] = []
        for idx, (status, value) in enumerate(results):
            if status == "ok":
                scores.append(float(value))
                xs.append(float(value))
                ys.append(ratings[idx])
            else:
                w1, w2, _ = dataset.pairs[idx]
                scores.append(None)
                skipped.append(SkippedPair(idx, w1, w2, str(value)))

        if len(xs) < 2:
            raise NoCoveredPairs(
                f"{desc.name} on {dataset.name}: {len(xs)} covered pair(s) of {len(dataset)}; need at least 2"
            )
        if skipped:
            logger.info("%s: skipped %d of %d pairs", desc.name, len(skipped), len(dataset))
        try:
            r, rho = pearson(xs, ys), spearman(xs, ys)
        except ConstantSequence as e:
            logger.warning("%s on %s: %s; reporting nan", desc.name, dataset.name, e.message)
            r = rho = math.nan

        rows.append(
            BenchRow(
                measure=desc.name,
                ic_kind=ic.kind if (desc.needs_ic and ic is not None) else NO_IC,
                pearson=r,
                spearman=rho,
                covered=len(xs),
                skipped=len(skipped),
                skipped_pairs=tuple(skipped),
                scores=tuple(scores),
            )
        )
    return BenchReport(dataset=dataset.name, rows=tuple(rows))


# =======================
# Rendering
# =======================

def _fmt(x: float) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "nan"
    out = f"{x:.{PRECISION}f}"
    return "0.0000" if out == "-0.0000" else out


def _xlsx_number(x: float) -> Optional[float]:
    # nan stays an empty cell
    return None if math.isnan(x) else round(x, PRECISION)


def _cells(row: BenchRow) -> List[str]:
    return [row.measure, row.ic_kind, _fmt(row.pearson), _fmt(row.spearman), str(row.covered), str(row.skipped)]


def render_report(report: BenchReport, fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in report.rows:
            w.writerow(_cells(row))
        return buf.getvalue()
    if fmt == "markdown":
        lines = [
            f"Dataset: {report.dataset}",
            "",
            "| " + " | ".join(CSV_COLUMNS) + " |",
            "|" + "|".join(["---"] * 2 + ["---:"] * 4) + "|",
        ]
        for row in report.rows:
            lines.append("| " + " | ".join(_cells(row)) + " |")
        return "\n".join(lines) + "\n"
    raise SemsimError(f"unknown report format {fmt!r} (csv | markdown)")


def parse_report_csv(text: str, dataset: str = "") -> BenchReport:
    """Read a rendered CSV back; per-pair detail is not part of the CSV."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty report", 1) from None
    if header != CSV_COLUMNS:
        raise ParseError(f"unexpected header {header!r}", 1)

    rows: List[BenchRow] = []
    for lineno, rec in enumerate(reader, start=2):
        if not rec:
            continue
        if len(rec) != len(CSV_COLUMNS):
            raise ParseError(f"expected {len(CSV_COLUMNS)} columns, got {len(rec)}", lineno)
        try:
            rows.append(
                BenchRow(
                    measure=rec[0],
                    ic_kind=rec[1],
                    pearson=float(rec[2]),
                    spearman=float(rec[3]),
                    covered=int(rec[4]),
                    skipped=int(rec[5]),
                )
            )
        except ValueError as e:
            raise ParseError(str(e), lineno) from e
    return BenchReport(dataset=dataset, rows=tuple(rows))


def report_to_xlsx(report: BenchReport) -> bytes:
    """Workbook with a summary sheet and one sheet listing skipped pairs."""
    wb = Workbook()
    ws = wb.active
    ws.title = "Resumen"

    fill_head = PatternFill("solid", fgColor="0B2E4E")
    font_head = Font(color="FFFFFF", bold=True)
    align_center = Alignment(horizontal="center", vertical="center")
    thin = Side(style="thin", color="E5E7EB")
    border = Border(left=thin, right=thin, top=thin, bottom=thin)

    ws.cell(row=1, column=1, value=f"Dataset: {report.dataset}")
    for j, col in enumerate(CSV_COLUMNS, start=1):
        cell = ws.cell(row=3, column=j, value=col)
        cell.fill = fill_head
        cell.font = font_head
        cell.alignment = align_center
        cell.border = border

    for i, row in enumerate(report.rows, start=4):
        values = [row.measure, row.ic_kind, _xlsx_number(row.pearson), _xlsx_number(row.spearman), row.covered, row.skipped]
        for j, val in enumerate(values, start=1):
            cell = ws.cell(row=i, column=j, value=val)
            cell.border = border
            if isinstance(val, float):
                cell.number_format = "0.0000"
    ws.freeze_panes = ws.cell(row=4, column=1)
    for j, col in enumerate(CSV_COLUMNS, start=1):
        ws.column_dimensions[get_column_letter(j)].width = max(10, len(col) + 4)

    ws2 = wb.create_sheet("Omitidos")
    for j, col in enumerate(["measure", "index", "word1", "word2", "reason"], start=1):
        cell = ws2.cell(row=1, column=j, value=col)
        cell.font = Font(bold=True)
    r = 2
    for row in report.rows:
        for s in row.skipped_pairs:
            for j, val in enumerate([row.measure, s.index, s.word1, s.word2, s.reason], start=1):
                ws2.cell(row=r, column=j, value=val)
            r += 1
    if r == 2:
        ws2.cell(row=2, column=1, value="Sin pares omitidos")

    bio = io.BytesIO()
    wb.save(bio)
    return bio.getvalue()


# =======================
# Dataset inspection
# =======================

@dataclass(frozen=True)
class DatasetSummary:
    name: str
    pairs: int
    low: int
    intermediate: int
    high: int
    mean_rating: float
    words: int


def dataset_summary(ds: BenchmarkDataset) -> DatasetSummary:
    """
    Rating bands relative to the scale: low below 25 %, high from 75 %,
    intermediate in between (on 0-4: [0, 1), [1, 3), [3, 4]).
    """
    df = dataset_frame(ds)
    span = ds.scale_max - ds.scale_min
    rel = (df["rating"] - ds.scale_min) / span
    low = int((rel < 0.25).sum())
    high = int((rel >= 0.75).sum())
    words = pd.unique(pd.concat([df["word1"], df["word2"]]).str.casefold())
    return DatasetSummary(
        name=ds.name,
        pairs=len(df),
        low=low,
        intermediate=len(df) - low - high,
        high=high,
        mean_rating=float(df["rating"].mean()),
        words=len(words),
    )


def scores_frame(report: BenchReport, ds: BenchmarkDataset) -> pd.DataFrame:
    """Per-pair scores next to the human rating, one column per measure row."""
    df = dataset_frame(ds)
    for row in report.rows:
        col = row.measure if row.ic_kind == NO_IC else f"{row.measure} ({row.ic_kind})"
        df[col] = [np.nan if s is None else s for s in row.scores]
    return df
