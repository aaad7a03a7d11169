import sys
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from semsim.information_content import corpus_ic, intrinsic_ic  # noqa: E402
from semsim.ontology_io import load_corpus_counts, load_pair_dataset, load_taxonomy  # noqa: E402
from semsim.taxonomy import Concept, Taxonomy, build_taxonomy  # noqa: E402

# the odd entries need quoting or escaping in the native format
SYNONYM_POOL = [f"w{i}" for i in range(15)] + ["two words", 'say "hi"', "back\\slash", "it's", "#hash"]
GLOSS_POOL = [f"g{i}" for i in range(20)] + ['q"uote', "it's", "back\\slash"]
FEATURE_POOL = [f"f{i}" for i in range(10)] + ["x=y", "two words"]


@pytest.fixture(autouse=True)
def _no_data_dir_override(monkeypatch):
    monkeypatch.delenv("SEMSIM_DATA_DIR", raising=False)


@pytest.fixture(scope="session")
def fix1() -> Taxonomy:
    return load_taxonomy("fix1.tax")


@pytest.fixture(scope="session")
def fix2() -> Taxonomy:
    return load_taxonomy("fix2.tax")


@pytest.fixture(scope="session")
def fix_ic_counts(fix1):
    return load_corpus_counts("fix_ic.counts", fix1)


@pytest.fixture(scope="session")
def corpus_provider(fix1, fix_ic_counts):
    return corpus_ic(fix1, fix_ic_counts)


@pytest.fixture(scope="session")
def intrinsic_provider(fix1):
    return intrinsic_ic(fix1)


@pytest.fixture(scope="session")
def mini8():
    return load_pair_dataset("mini8.tsv")


def _pick(rng: np.random.Generator, pool, max_size: int):
    k = int(rng.integers(0, max_size + 1))
    if k == 0:
        return frozenset()
    return frozenset(rng.choice(pool, size=k, replace=False).tolist())


def make_random_taxonomy(
    rng: np.random.Generator,
    n: int,
    extra_parent_prob: float = 0.2,
    partof_edges: int = 0,
    id_format: str = "c{:02d}",
) -> Taxonomy:
    """Random rooted DAG; every concept's parents come earlier, so no cycles."""
    ids = [id_format.format(i) for i in range(n)]
    concepts = [
        Concept(
            cid,
            synonyms=_pick(rng, SYNONYM_POOL, 2),
            gloss_terms=_pick(rng, GLOSS_POOL, 4),
            feature_terms=_pick(rng, FEATURE_POOL, 3),
        )
        for cid in ids
    ]
    isa = set()
    for i in range(1, n):
        p = int(rng.integers(0, i))
        isa.add((ids[i], ids[p]))
        if i > 1 and rng.random() < extra_parent_prob:
            q = int(rng.integers(0, i))
            if q != p:
                isa.add((ids[i], ids[q]))
    partof = set()
    for _ in range(partof_edges if n >= 2 else 0):
        a, b = rng.choice(n, size=2, replace=False)
        partof.add((ids[int(a)], ids[int(b)]))
    return build_taxonomy(concepts, sorted(isa), sorted(partof))


@pytest.fixture(scope="session")
def random_taxonomy() -> Callable[..., Taxonomy]:
    return make_random_taxonomy
