"""
Explorador de taxonomía - tables for the Streamlit page.
"""
from __future__ import annotations

from typing import Dict

import pandas as pd

from semsim.taxonomy import Taxonomy


def taxonomy_stats(t: Taxonomy) -> Dict[str, int]:
    edges, nodes = t.deep_max()
    return {
        "concepts": len(t),
        "isa": len(t.isa_edges),
        "partof": len(t.partof_edges),
        "deep_max_edges": edges,
        "deep_max_nodes": nodes,
        "leaves": sum(1 for c in t.concept_ids if not t.children(c)),
    }


def concept_frame(t: Taxonomy) -> pd.DataFrame:
    rows = []
    for cid in t.concept_ids:
        c = t.concept(cid)
        rows.append(
            {
                "concept": cid,
                "depth": t.depth(cid),
                "parents": ", ".join(t.parents(cid)),
                "hyponyms": t.hyponym_count(cid),
                "synonyms": ", ".join(sorted(c.synonyms - {cid.casefold()})),
                "features": ", ".join(sorted(c.feature_terms)),
            }
        )
    return pd.DataFrame(rows).sort_values(["depth", "concept"]).reset_index(drop=True)


def outline(t: Taxonomy) -> str:
    """Indented is-a outline from the root; DAG nodes appear under every parent."""
    lines = []

    def _walk(cid: str, level: int) -> None:
        lines.append("    " * level + f"- {cid}")
        for ch in t.children(cid):
            _walk(ch, level + 1)

    _walk(t.root, 0)
    return "\n".join(lines)


def pair_frame(t: Taxonomy, c1: str, c2: str) -> pd.DataFrame:
    info = t.lcs(c1, c2)
    path = t.shortest_path(c1, c2)
    return pd.DataFrame(
        [
            {"campo": "lcs", "valor": info.lcs},
            {"campo": "N (profundidad del lcs)", "valor": info.n},
            {"campo": "N1", "valor": info.n1},
            {"campo": "N2", "valor": info.n2},
            {"campo": "SP (aristas)", "valor": path.edge_length},
            {"campo": "longitud (nodos)", "valor": path.node_length},
            {"campo": "cambios de dirección", "valor": path.direction_changes},
            {"campo": "ruta", "valor": " → ".join(t.route(c1, c2))},
        ]
    )


def ancestor_frame(t: Taxonomy, cid: str) -> pd.DataFrame:
    """Every ancestor of cid (itself included) with its shortest upward distance."""
    rows = [
        {"ancestro": a, "distancia": d, "profundidad": t.depth(a)}
        for a, d in t.up_distances(cid).items()
    ]
    return pd.DataFrame(rows).sort_values(["distancia", "ancestro"]).reset_index(drop=True)
