"""
Similitud de palabras - logic behind the Streamlit page.

- Ontology from a bundled fixture name or uploaded text (native / MeSH)
- Optional IC provider (corpus counts or intrinsic)
- score_table: every catalogue measure on one word pair; a measure that cannot
  run (missing IC, unnormalized IC, unknown word) gets its error in the row
  instead of stopping the page
"""
from __future__ import annotations

from typing import List, Optional, Sequence

import pandas as pd

from semsim.errors import SemsimError
from semsim.information_content import ICProvider, make_provider
from semsim.measure_registry import MeasureParams, list_measures, word_similarity
from semsim.ontology_io import load_corpus_counts, load_taxonomy, parse_corpus_counts, taxonomy_from_text
from semsim.taxonomy import Taxonomy

BUNDLED_ONTOLOGIES = ["fix1.tax", "fix2.tax"]
BUNDLED_CORPORA = ["fix_ic.counts"]
IC_KINDS = ["none", "corpus", "intrinsic"]

SCORE_COLUMNS = ["measure", "label", "family", "semantics", "score", "concept1", "concept2", "candidates", "error"]


def load_ontology(bundled: Optional[str] = None, text: Optional[str] = None, fmt: str = "native") -> Taxonomy:
    """Uploaded text wins over the bundled name."""
    if text:
        return taxonomy_from_text(text, fmt)
    if not bundled:
        raise SemsimError("selecciona una ontología o sube un archivo")
    return load_taxonomy(bundled)


def load_provider(
    t: Taxonomy,
    kind: str,
    counts_text: Optional[str] = None,
    bundled_counts: Optional[str] = None,
    smoothing: bool = False,
) -> Optional[ICProvider]:
    counts = None
    if kind == "corpus":
        if counts_text:
            counts = parse_corpus_counts(counts_text, t)
        elif bundled_counts:
            counts = load_corpus_counts(bundled_counts, t)
    return make_provider(t, kind, counts, smoothing=smoothing)


def score_table(
    t: Taxonomy,
    ic: Optional[ICProvider],
    params: MeasureParams,
    w1: str,
    w2: str,
    t2: Optional[Taxonomy] = None,
    measures: Optional[Sequence[str]] = None,
) -> pd.DataFrame:
    rows: List[dict] = []
    for d in list_measures():
        if measures and d.name not in measures:
            continue
        row = {
            "measure": d.name,
            "label": d.label,
            "family": d.family,
            "semantics": d.semantics,
            "score": None,
            "concept1": "",
            "concept2": "",
            "candidates": 0,
            "error": "",
        }
        try:
            ws = word_similarity(t, ic, d.name, params, w1, w2, t2=t2)
            row.update(
                score=ws.score,
                concept1=ws.chosen_pair[0],
                concept2=ws.chosen_pair[1],
                candidates=ws.candidates_considered,
            )
        except SemsimError as e:
            row["error"] = f"{e.name}: {e.message}"
        rows.append(row)
    return pd.DataFrame(rows, columns=SCORE_COLUMNS)
