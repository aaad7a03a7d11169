import os
import sys
from pathlib import Path

_APP_DIR = Path(__file__).resolve().parent
_ROOT = _APP_DIR.parents[1]
for _p in (_APP_DIR, _ROOT):
    if str(_p) not in sys.path:
        sys.path.insert(0, str(_p))

import streamlit as st  # noqa: E402

from semsim.errors import SemsimError  # noqa: E402
from semsim.information_content import ic_table, make_provider  # noqa: E402
from semsim.ontology_io import load_corpus_counts, load_taxonomy, taxonomy_from_text  # noqa: E402
from semsim.measure_registry import descriptor_table  # noqa: E402
from taxonomia_logic import ancestor_frame, concept_frame, outline, pair_frame, taxonomy_stats  # noqa: E402

APP_TITLE = "Explorador de Taxonomía"
APP_ICON = "🌳"

SKIP_PAGE_CONFIG = os.getenv("SEMSIM_SKIP_PAGE_CONFIG", "0") == "1"

if not SKIP_PAGE_CONFIG:
    st.set_page_config(page_title=APP_TITLE, page_icon=APP_ICON, layout="wide")

st.sidebar.subheader("Ontología")
c1, c2 = st.sidebar.columns(2)
with c1:
    onto_name = st.selectbox("Fixture", ["fix1.tax", "fix2.tax"], key="tax_onto")
    fmt = st.selectbox("Formato", ["native", "mesh"], key="tax_fmt")
with c2:
    onto_up = st.file_uploader("Subir ontología", key="tax_onto_up")
    ic_kind = st.selectbox("Contenido de información", ["intrinsic", "corpus"], key="tax_ic")

try:
    if onto_up is not None:
        t = taxonomy_from_text(onto_up.getvalue().decode("utf-8-sig"), fmt)
    else:
        t = load_taxonomy(onto_name)
except SemsimError as e:
    st.error(f"{e.name}: {e.message}")
    st.stop()

stats = taxonomy_stats(t)
k = st.columns(len(stats))
for col, (label, value) in zip(k, stats.items()):
    col.metric(label, value)

tabs = st.tabs(["Conceptos", "Jerarquía", "LCS / ruta", "Contenido de información", "Catálogo de medidas"])

with tabs[0]:
    st.dataframe(concept_frame(t), use_container_width=True, hide_index=True)

with tabs[1]:
    st.code(outline(t), language="text")

with tabs[2]:
    ids = t.concept_ids
    a, b = st.columns(2)
    x = a.selectbox("Concepto 1", ids, key="tax_c1")
    y = b.selectbox("Concepto 2", ids, index=min(1, len(ids) - 1), key="tax_c2")
    st.dataframe(pair_frame(t, x, y), use_container_width=True, hide_index=True)
    with st.expander(f"Ancestros de {x}"):
        st.dataframe(ancestor_frame(t, x), use_container_width=True, hide_index=True)

with tabs[3]:
    try:
        counts = load_corpus_counts("fix_ic.counts", t) if ic_kind == "corpus" else None
        provider = make_provider(t, ic_kind, counts)
        st.dataframe(ic_table(t, provider), use_container_width=True, hide_index=True)
    except SemsimError as e:
        st.warning(f"{e.name}: {e.message}")

with tabs[4]:
    st.dataframe(descriptor_table(), use_container_width=True, hide_index=True)
