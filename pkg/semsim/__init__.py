"""
semsim: ontology-based semantic similarity measures.

Path (edge counting), information-content, feature and hybrid measures over an
is-a taxonomy, with parsers, an IC provider, a measure catalogue and a
benchmark harness.
"""
from .errors import SemsimError
from .information_content import ICProvider, corpus_ic, intrinsic_ic
from .measure_registry import (
    MeasureDescriptor,
    MeasureParams,
    WordScore,
    get_descriptor,
    list_measures,
    score_concepts,
    word_similarity,
)
from .ontology_io import (
    load_corpus_counts,
    load_pair_dataset,
    load_taxonomy,
    parse_corpus_counts,
    parse_mesh_tree,
    parse_pair_dataset,
    parse_taxonomy_text,
    serialize_taxonomy,
)
from .taxonomy import Concept, Taxonomy, build_taxonomy

__version__ = "0.1.0"

__all__ = [
    "Concept",
    "ICProvider",
    "MeasureDescriptor",
    "MeasureParams",
    "SemsimError",
    "Taxonomy",
    "WordScore",
    "build_taxonomy",
    "corpus_ic",
    "get_descriptor",
    "intrinsic_ic",
    "list_measures",
    "load_corpus_counts",
    "load_pair_dataset",
    "load_taxonomy",
    "parse_corpus_counts",
    "parse_mesh_tree",
    "parse_pair_dataset",
    "parse_taxonomy_text",
    "score_concepts",
    "serialize_taxonomy",
    "word_similarity",
]
