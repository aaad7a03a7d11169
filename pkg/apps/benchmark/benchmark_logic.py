"""
Benchmark de medidas - logic behind the Streamlit page.

Runs bench.evaluate over the selected measures; measures that cannot run with
the chosen IC provider are reported apart instead of aborting the whole run.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import pandas as pd

from semsim.bench import BenchReport, evaluate, scores_frame
from semsim.errors import SemsimError
from semsim.information_content import ICProvider
from semsim.measure_registry import MeasureParams, get_descriptor, reference_table
from semsim.ontology_io import BenchmarkDataset, load_pair_dataset, parse_pair_dataset
from semsim.taxonomy import Taxonomy

BUNDLED_DATASETS = ["mini8.tsv"]


@dataclass(frozen=True)
class BenchRun:
    report: BenchReport
    failures: Dict[str, str]
    per_pair: pd.DataFrame


def load_dataset(bundled: Optional[str] = None, text: Optional[str] = None, name: str = "upload") -> BenchmarkDataset:
    if text:
        return parse_pair_dataset(text, name=name)
    if not bundled:
        raise SemsimError("selecciona un dataset o sube un archivo")
    return load_pair_dataset(bundled)


def run_benchmark(
    t: Taxonomy,
    ic: Optional[ICProvider],
    measures: Sequence[str],
    ds: BenchmarkDataset,
    params: MeasureParams,
    t2: Optional[Taxonomy] = None,
) -> BenchRun:
    rows = []
    failures: Dict[str, str] = {}
    for name in measures:
        try:
            rep = evaluate(t, ic, [name], ds, params=params, t2=t2)
            rows.extend(rep.rows)
        except SemsimError as e:
            failures[name] = f"{e.name}: {e.message}"
    report = BenchReport(dataset=ds.name, rows=tuple(rows))
    return BenchRun(report=report, failures=failures, per_pair=scores_frame(report, ds))


def published_for(measures: Sequence[str]) -> pd.DataFrame:
    """Published WordNet correlations for the measures on screen."""
    ref = reference_table()
    wanted: List[str] = [get_descriptor(m).name for m in measures]
    return ref[ref["measure"].isin(wanted)].reset_index(drop=True)
