"""
Measure catalogue + uniform evaluation.

Descriptors come from data/measures.yaml (typology, key properties, published
correlations). Evaluation goes through one dispatch table so every measure is
reachable by its registry token, at concept level (score_concepts) or word
level (word_similarity, best pair over the senses of both words).
"""
from __future__ import annotations

import dataclasses
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

import pandas as pd
import yaml

from .config import BUNDLED_DATA_DIR
from .errors import InvalidParam, MissingICProvider, UnknownMeasure, UnknownWord
from .information_content import ICProvider
from .measures_feature import (
    DEFAULT_FEATURE_PARAMS,
    FeatureParams,
    concept_features,
    sim_rodriguez,
    sim_tversky,
    sim_xsimilarity,
)
from .measures_hybrid import DEFAULT_HYBRID_PARAMS, HybridParams, sim_knappe, sim_zhou
from .measures_ic import dist_jiang_conrath, sim_lin, sim_resnik
from .measures_path import (
    DEFAULT_PATH_PARAMS,
    PathMeasureParams,
    sim_hso,
    sim_leacock_chodorow,
    sim_li,
    sim_shortest_path,
    sim_tbk,
    sim_weighted_links,
    sim_wu_palmer,
)
from .taxonomy import Taxonomy

logger = logging.getLogger(__name__)

CATALOGUE_PATH = BUNDLED_DATA_DIR / "measures.yaml"

SIMILARITY = "similarity"
DISTANCE = "distance"
RELATEDNESS = "relatedness"


# =======================
# Types
# =======================

@dataclass(frozen=True)
class PublishedResult:
    variant: Optional[str]
    bench1: Optional[float]
    bench2: Optional[float]


@dataclass(frozen=True)
class MeasureDescriptor:
    name: str
    label: str
    family: str
    semantics: str
    typology_semantics: Optional[str]
    factors: Mapping[str, bool]
    sources: Mapping[str, bool]
    properties: Optional[Mapping[str, bool]]
    symmetric_at_defaults: bool
    range: Tuple[float, Optional[float]]
    params: Tuple[str, ...] = ()
    published: Tuple[PublishedResult, ...] = ()
    alias_of: Optional[str] = None
    note: str = ""

    @property
    def target(self) -> str:
        return self.alias_of or self.name

    @property
    def is_distance(self) -> bool:
        return self.semantics == DISTANCE

    @property
    def needs_ic(self) -> bool:
        return self.target in _NEEDS_IC

    @property
    def uses_corpus(self) -> bool:
        return bool(self.sources.get("corpus"))


@dataclass(frozen=True)
class MeasureParams:
    path: PathMeasureParams = DEFAULT_PATH_PARAMS
    feature: FeatureParams = DEFAULT_FEATURE_PARAMS
    hybrid: HybridParams = DEFAULT_HYBRID_PARAMS


DEFAULT_PARAMS = MeasureParams()


@dataclass(frozen=True)
class WordScore:
    score: float
    chosen_pair: Tuple[str, str]
    candidates_considered: int
    measure: str = ""


# =======================
# Dispatch
# =======================

Scorer = Callable[[Taxonomy, Optional[ICProvider], MeasureParams, str, str, Optional[Taxonomy]], float]

_SCORERS: Dict[str, Scorer] = {
    "path": lambda t, ic, p, a, b, t2: sim_shortest_path(t, a, b),
    "wlink": lambda t, ic, p, a, b, t2: sim_weighted_links(t, a, b),
    "hso": lambda t, ic, p, a, b, t2: sim_hso(t, a, b, p.path),
    "wup": lambda t, ic, p, a, b, t2: sim_wu_palmer(t, a, b),
    "tbk": lambda t, ic, p, a, b, t2: sim_tbk(t, a, b),
    "li": lambda t, ic, p, a, b, t2: sim_li(t, a, b, p.path),
    "lch": lambda t, ic, p, a, b, t2: sim_leacock_chodorow(t, a, b),
    "resnik": lambda t, ic, p, a, b, t2: sim_resnik(t, ic, a, b),
    "lin": lambda t, ic, p, a, b, t2: sim_lin(t, ic, a, b),
    "jcn": lambda t, ic, p, a, b, t2: dist_jiang_conrath(t, ic, a, b),
    "tversky": lambda t, ic, p, a, b, t2: sim_tversky(
        concept_features(t, a), concept_features(t, b), p.feature.tversky_alpha
    ),
    "xsim": lambda t, ic, p, a, b, t2: sim_xsimilarity(t, a, b),
    "rodriguez": lambda t, ic, p, a, b, t2: sim_rodriguez(t, t2 if t2 is not None else t, a, b, p.feature),
    "knappe": lambda t, ic, p, a, b, t2: sim_knappe(t, a, b, p.hybrid.knappe_p),
    "zhou": lambda t, ic, p, a, b, t2: sim_zhou(t, ic, a, b, p.hybrid.zhou_k),
}

_NEEDS_IC = frozenset({"resnik", "lin", "jcn", "zhou"})

# only these read a second ontology; everything else scores inside `t`
_CROSS_ONTOLOGY = frozenset({"rodriguez"})


def _second_ontology(target: str, t2: Optional[Taxonomy]) -> Optional[Taxonomy]:
    return t2 if target in _CROSS_ONTOLOGY else None


# =======================
# Catalogue
# =======================

def _descriptor(row: Mapping) -> MeasureDescriptor:
    lo, hi = row.get("range") or (None, None)
    published = tuple(
        PublishedResult(variant=p.get("variant"), bench1=p.get("bench1"), bench2=p.get("bench2"))
        for p in row.get("published") or []
    )
    props = row.get("properties")
    return MeasureDescriptor(
        name=str(row["name"]),
        label=str(row.get("label", row["name"])),
        family=str(row["family"]),
        semantics=str(row["semantics"]),
        typology_semantics=row.get("typology_semantics"),
        factors=dict(row.get("factors") or {}),
        sources=dict(row.get("sources") or {}),
        properties=dict(props) if props is not None else None,
        symmetric_at_defaults=bool(row.get("symmetric_at_defaults", False)),
        range=(float(lo), None if hi is None else float(hi)),
        params=tuple(row.get("params") or ()),
        published=published,
        alias_of=row.get("alias_of"),
        note=str(row.get("note", "")),
    )


@lru_cache(maxsize=1)
def _catalogue() -> Tuple[MeasureDescriptor, ...]:
    cfg = yaml.safe_load(CATALOGUE_PATH.read_text(encoding="utf-8")) or {}
    descriptors = tuple(_descriptor(row) for row in cfg.get("measures", []))
    for d in descriptors:
        if d.target not in _SCORERS:
            raise UnknownMeasure(f"catalogue entry {d.name!r} has no implementation")
    logger.debug("loaded %d measure descriptors", len(descriptors))
    return descriptors


def list_measures() -> List[MeasureDescriptor]:
    return list(_catalogue())


def measure_names() -> List[str]:
    return [d.name for d in _catalogue()]


def get_descriptor(name: str) -> MeasureDescriptor:
    key = str(name).strip().lower()
    for d in _catalogue():
        if d.name == key:
            return d
    raise UnknownMeasure(f"unknown measure {name!r} (known: {', '.join(measure_names())})")


def reference_table() -> pd.DataFrame:
    """Published correlations, one row per (measure, reported result)."""
    rows = []
    for d in _catalogue():
        for p in d.published:
            rows.append(
                {
                    "measure": d.name,
                    "label": d.label,
                    "variant": p.variant or "",
                    "bench1": p.bench1,
                    "bench2": p.bench2,
                }
            )
    return pd.DataFrame(rows, columns=["measure", "label", "variant", "bench1", "bench2"])


def descriptor_table() -> pd.DataFrame:
    rows = []
    for d in _catalogue():
        rows.append(
            {
                "measure": d.name,
                "label": d.label,
                "family": d.family,
                "semantics": d.semantics,
                "typology": d.typology_semantics or "",
                "SP": d.factors.get("sp", False),
                "density": d.factors.get("density", False),
                "N": d.factors.get("depth", False),
                "corpus": d.uses_corpus,
                "symmetric": d.symmetric_at_defaults,
                "params": ", ".join(d.params),
            }
        )
    return pd.DataFrame(rows)


# =======================
# Parameters
# =======================

def _param_owner(name: str) -> str:
    for group, cls in (("path", PathMeasureParams), ("feature", FeatureParams), ("hybrid", HybridParams)):
        if name in {f.name for f in dataclasses.fields(cls)}:
            return group
    raise InvalidParam(f"unknown parameter {name!r}")


def _parse_value(name: str, raw: str):
    try:
        if name == "rodriguez_weights":
            values = tuple(float(x) for x in raw.split(",") if x.strip())
            return values
        return float(raw)
    except ValueError as e:
        raise InvalidParam(f"bad value for {name}: {raw!r}") from e


def parse_param_overrides(items: Iterable[str], base: MeasureParams = DEFAULT_PARAMS) -> MeasureParams:
    """Apply `name=value` overrides (e.g. li_alpha=0.3, rodriguez_weights=0.5,0.25,0.25)."""
    grouped: Dict[str, Dict[str, object]] = {"path": {}, "feature": {}, "hybrid": {}}
    for item in items or ():
        if "=" not in item:
            raise InvalidParam(f"expected name=value, got {item!r}")
        name, raw = (s.strip() for s in item.split("=", 1))
        grouped[_param_owner(name)][name] = _parse_value(name, raw)

    return MeasureParams(
        path=dataclasses.replace(base.path, **grouped["path"]),
        feature=dataclasses.replace(base.feature, **grouped["feature"]),
        hybrid=dataclasses.replace(base.hybrid, **grouped["hybrid"]),
    )


# =======================
# Evaluation
# =======================

def score_concepts(
    t: Taxonomy,
    ic: Optional[ICProvider],
    name: str,
    c1: str,
    c2: str,
    params: MeasureParams = DEFAULT_PARAMS,
    t2: Optional[Taxonomy] = None,
) -> float:
    d = get_descriptor(name)
    if d.needs_ic and ic is None:
        raise MissingICProvider(f"measure {d.name!r} needs an information-content provider (--ic / --corpus)")
    return _SCORERS[d.target](t, ic, params, c1, c2, _second_ontology(d.target, t2))


def word_similarity(
    t: Taxonomy,
    ic: Optional[ICProvider],
    name: str,
    params: MeasureParams,
    w1: str,
    w2: str,
    t2: Optional[Taxonomy] = None,
) -> WordScore:
    """
    Best score over all sense pairs: max for similarity/relatedness, min for
    distance. Ties keep the first pair in sorted order.
    """
    d = get_descriptor(name)
    if d.needs_ic and ic is None:
        raise MissingICProvider(f"measure {d.name!r} needs an information-content provider (--ic / --corpus)")

    t2 = _second_ontology(d.target, t2)
    other = t2 if t2 is not None else t
    senses1 = sorted(t.resolve_word(w1))
    senses2 = sorted(other.resolve_word(w2))
    if not senses1:
        raise UnknownWord(f"word {w1!r} names no concept")
    if not senses2:
        raise UnknownWord(f"word {w2!r} names no concept")

    scorer = _SCORERS[d.target]
    best: Optional[Tuple[float, Tuple[str, str]]] = None
    count = 0
    for c1, c2 in itertools.product(senses1, senses2):
        s = scorer(t, ic, params, c1, c2, t2)
        count += 1
        if best is None or (s < best[0] if d.is_distance else s > best[0]):
            best = (s, (c1, c2))

    return WordScore(score=best[0], chosen_pair=best[1], candidates_considered=count, measure=d.name)
