"""
Readers / writers for the text formats semsim works with.

Native taxonomy format (UTF-8, one statement per line, `#` comments):

    concept <id> syn=<w1|w2|...> gloss="free text" feat=<f1|f2|...>
    isa <child> <parent>
    partof <part> <whole>
    @virtual-root <name>

Values containing spaces are double-quoted (`syn="signs and symptoms|signs"`).

MeSH tree file: `term<TAB>tree-number[<TAB>entry1|entry2]`, one code per line.
Corpus counts: `concept_id<TAB>count`.
Pair datasets: `#scale <min> <max>` header, then `word1<TAB>word2<TAB>rating`.
"""
from __future__ import annotations

import logging
import re
import shlex
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import pandas as pd

from .config import BUNDLED_DATA_DIR, env_data_dir
from .errors import (
    DuplicateCode,
    MissingParentCode,
    NegativeCount,
    ParseError,
    RatingOutOfScale,
    SemsimError,
    TooFewPairs,
    UnknownConcept,
)
from .taxonomy import Concept, Taxonomy, build_taxonomy

logger = logging.getLogger(__name__)

MESH_ROOT = "mesh_root"
MESH_CODE = re.compile(r"[A-Z][0-9]{2}(\.[0-9]{1,3})*")

BUNDLED_FIXTURES: Dict[str, str] = {
    "mesh-fig1": "fix1.tax",
    "tbk-fig3": "fix2.tax",
    "fix-ic": "fix_ic.counts",
    "mini8": "mini8.tsv",
}


@dataclass(frozen=True)
class CorpusCounts:
    counts: Mapping[str, int]

    @property
    def total(self) -> int:
        return int(sum(self.counts.values()))

    def get(self, cid: str) -> int:
        return int(self.counts.get(cid, 0))


@dataclass(frozen=True)
class BenchmarkDataset:
    name: str
    scale_min: float
    scale_max: float
    pairs: Tuple[Tuple[str, str, float], ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.pairs)


def _lines(text: str) -> List[Tuple[int, str]]:
    """(1-based line number, stripped line) for non-blank, non-comment lines."""
    out: List[Tuple[int, str]] = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().lstrip("\ufeff")
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def _split_fields(line: str) -> List[str]:
    if "\t" in line:
        return [p.strip() for p in line.split("\t")]
    return line.split()


# =======================
# Native taxonomy format
# =======================

def _split_list(value: str) -> List[str]:
    return [w for w in value.split("|") if w.strip()]


def _parse_concept(tokens: List[str], lineno: int) -> Concept:
    if len(tokens) < 2:
        raise ParseError("concept statement needs an id", lineno)
    cid = tokens[1]
    syn: List[str] = []
    gloss: List[str] = []
    feat: List[str] = []
    for tok in tokens[2:]:
        key, sep, value = tok.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {tok!r}", lineno)
        if key == "syn":
            syn = _split_list(value)
        elif key == "gloss":
            gloss = value.split()
        elif key == "feat":
            feat = _split_list(value)
        else:
            raise ParseError(f"unknown concept attribute {key!r}", lineno)
    try:
        return Concept(cid, frozenset(syn), frozenset(gloss), frozenset(feat))
    except SemsimError as e:
        raise ParseError(e.message, lineno) from e


def parse_taxonomy_text(text: str) -> Taxonomy:
    concepts: List[Concept] = []
    isa: List[Tuple[str, str]] = []
    partof: List[Tuple[str, str]] = []
    virtual_root: Optional[str] = None

    for lineno, line in _lines(text):
        try:
            tokens = shlex.split(line, posix=True)
        except ValueError as e:
            raise ParseError(str(e), lineno) from e
        head = tokens[0]
        if head == "concept":
            concepts.append(_parse_concept(tokens, lineno))
        elif head in ("isa", "partof"):
            if len(tokens) != 3:
                raise ParseError(f"{head} takes exactly two ids", lineno)
            (isa if head == "isa" else partof).append((tokens[1], tokens[2]))
        elif head == "@virtual-root":
            if len(tokens) != 2:
                raise ParseError("@virtual-root takes exactly one name", lineno)
            virtual_root = tokens[1]
        else:
            raise ParseError(f"unknown statement {head!r}", lineno)

    if virtual_root is not None:
        has_parent = {child for child, _ in isa}
        orphans = sorted(c.id for c in concepts if c.id not in has_parent)
        concepts.append(Concept(virtual_root))
        isa.extend((o, virtual_root) for o in orphans if o != virtual_root)

    t = build_taxonomy(concepts, isa, partof)
    logger.info("parsed taxonomy: %d concepts, %d is-a edges", len(t), len(t.isa_edges))
    return t


def _quote(value: str) -> str:
    if value and not any(ch.isspace() or ch in "\"'\\#" for ch in value):
        return value
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def serialize_taxonomy(t: Taxonomy) -> str:
    lines: List[str] = []
    concepts = t.concepts
    for cid in sorted(concepts):
        c = concepts[cid]
        parts = ["concept", _quote(cid), "syn=" + _quote("|".join(sorted(c.synonyms)))]
        if c.gloss_terms:
            parts.append("gloss=" + _quote(" ".join(sorted(c.gloss_terms))))
        if c.feature_terms:
            parts.append("feat=" + _quote("|".join(sorted(c.feature_terms))))
        lines.append(" ".join(parts))
    for child, parent in sorted(t.isa_edges):
        lines.append(f"isa {_quote(child)} {_quote(parent)}")
    for part, whole in sorted(t.partof_edges):
        lines.append(f"partof {_quote(part)} {_quote(whole)}")
    return "\n".join(lines) + "\n"


# =======================
# MeSH tree numbers
# =======================

def _term_id(term: str) -> str:
    return re.sub(r"\s+", "_", term.strip())


def parse_mesh_tree(lines: Union[str, Iterable[str]]) -> Taxonomy:
    """
    Builds is-a edges from tree-number prefixes: the parent of C23.888.119 is
    the term owning C23.888; top-level codes hang from a synthesized mesh_root.
    A term may own several codes (multiple parents).
    """
    if isinstance(lines, str):
        lines = lines.splitlines()

    owner: Dict[str, str] = {}
    code_line: Dict[str, int] = {}
    names: Dict[str, set] = {}

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip().lstrip("\ufeff")
        if not line or line.startswith("#"):
            continue
        if "\t" in line:
            fields = [p.strip() for p in line.split("\t")]
        else:
            head, _, code = line.rpartition(" ")
            fields = [head.strip(), code.strip()]
        if len(fields) < 2 or not fields[0] or not fields[1]:
            raise ParseError("expected term<TAB>tree-number", lineno)
        term, code = fields[0], fields[1]
        if not MESH_CODE.fullmatch(code):
            raise ParseError(f"malformed tree number {code!r}", lineno)
        if code in owner:
            raise DuplicateCode(f"tree number {code} already owned by {owner[code]!r}", lineno)
        cid = _term_id(term)
        if cid == MESH_ROOT:
            raise ParseError(f"{MESH_ROOT!r} is reserved for the synthesized root", lineno)
        owner[code] = cid
        code_line[code] = lineno
        bucket = names.setdefault(cid, set())
        bucket.add(term)
        if len(fields) > 2 and fields[2]:
            bucket.update(_split_list(fields[2]))

    isa: set = set()
    for code, cid in owner.items():
        prefix, dot, _ = code.rpartition(".")
        if not dot:
            isa.add((cid, MESH_ROOT))
            continue
        if prefix not in owner:
            raise MissingParentCode(f"no term owns {prefix} (parent of {code})", code_line[code])
        isa.add((cid, owner[prefix]))

    concepts = [Concept(MESH_ROOT)] + [Concept(cid, frozenset(ns)) for cid, ns in sorted(names.items())]
    t = build_taxonomy(concepts, sorted(isa), [])
    logger.info("parsed MeSH tree: %d codes, %d terms", len(owner), len(names))
    return t


# =======================
# Corpus counts
# =======================

def parse_corpus_counts(text: str, t: Taxonomy) -> CorpusCounts:
    counts: Dict[str, int] = {cid: 0 for cid in t.concept_ids}
    seen: set = set()
    for lineno, line in _lines(text):
        fields = _split_fields(line)
        if len(fields) != 2:
            raise ParseError("expected concept_id<TAB>count", lineno)
        cid, raw = fields
        try:
            n = int(raw)
        except ValueError as e:
            raise ParseError(f"count is not an integer: {raw!r}", lineno) from e
        if cid not in t:
            raise UnknownConcept(f"line {lineno}: unknown concept {cid!r}")
        if n < 0:
            raise NegativeCount(f"negative count for {cid!r}", lineno)
        if cid in seen:
            raise ParseError(f"concept {cid!r} listed twice", lineno)
        seen.add(cid)
        counts[cid] = n
    return CorpusCounts(MappingProxyType(counts))


# =======================
# Pair datasets
# =======================

def parse_pair_dataset(text: str, name: str = "dataset") -> BenchmarkDataset:
    scale: Optional[Tuple[float, float]] = None
    rows: List[Tuple[int, str, str, float]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().lstrip("\ufeff")
        if not line:
            continue
        if line.startswith("#"):
            bits = line[1:].split()
            if bits and bits[0] == "scale":
                if len(bits) != 3:
                    raise ParseError("expected '#scale <min> <max>'", lineno)
                try:
                    lo, hi = float(bits[1]), float(bits[2])
                except ValueError as e:
                    raise ParseError("scale bounds must be numbers", lineno) from e
                if not lo < hi:
                    raise ParseError("scale min must be below scale max", lineno)
                scale = (lo, hi)
            continue
        fields = _split_fields(line)
        if len(fields) != 3:
            raise ParseError("expected word1<TAB>word2<TAB>rating", lineno)
        try:
            rating = float(fields[2])
        except ValueError as e:
            raise ParseError(f"rating is not a number: {fields[2]!r}", lineno) from e
        rows.append((lineno, fields[0], fields[1], rating))

    if len(rows) < 2:
        raise TooFewPairs(f"{name}: {len(rows)} pair(s); correlation needs at least 2")
    if scale is None:
        raise ParseError("missing '#scale <min> <max>' header", rows[0][0])

    lo, hi = scale
    for lineno, _, _, rating in rows:
        if not lo <= rating <= hi:
            raise RatingOutOfScale(f"rating {rating} outside [{lo}, {hi}]", lineno)

    pairs = tuple((w1, w2, rating) for _, w1, w2, rating in rows)
    return BenchmarkDataset(name=name, scale_min=lo, scale_max=hi, pairs=pairs)


def dataset_frame(ds: BenchmarkDataset) -> pd.DataFrame:
    return pd.DataFrame(list(ds.pairs), columns=["word1", "word2", "rating"])


# =======================
# Files
# =======================

def resolve_data_path(path: Union[str, Path]) -> Path:
    """
    Existing paths are returned unchanged; otherwise a bare name (or fixture
    alias such as 'mesh-fig1') is looked up in SEMSIM_DATA_DIR, then in the
    bundled data directory.
    """
    p = Path(path)
    if p.exists():
        return p
    name = BUNDLED_FIXTURES.get(str(path), p.name)
    for base in (env_data_dir(), BUNDLED_DATA_DIR):
        if base is not None and (base / name).exists():
            return base / name
    raise SemsimError(f"file not found: {path}")


def _read(path: Union[str, Path]) -> str:
    return resolve_data_path(path).read_text(encoding="utf-8-sig")


def taxonomy_from_text(text: str, fmt: str = "native") -> Taxonomy:
    if fmt == "mesh":
        return parse_mesh_tree(text)
    if fmt == "native":
        return parse_taxonomy_text(text)
    raise SemsimError(f"unknown ontology format {fmt!r}")


def load_taxonomy(path: Union[str, Path], fmt: str = "auto") -> Taxonomy:
    p = resolve_data_path(path)
    if fmt == "auto":
        fmt = "mesh" if p.suffix.lower() in (".mesh", ".tree", ".mtrees") else "native"
    return taxonomy_from_text(p.read_text(encoding="utf-8-sig"), fmt)


def load_corpus_counts(path: Union[str, Path], t: Taxonomy) -> CorpusCounts:
    return parse_corpus_counts(_read(path), t)


def load_pair_dataset(path: Union[str, Path]) -> BenchmarkDataset:
    p = resolve_data_path(path)
    return parse_pair_dataset(p.read_text(encoding="utf-8-sig"), name=p.stem)
