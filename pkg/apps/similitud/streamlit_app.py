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
from semsim.measure_registry import parse_param_overrides  # noqa: E402
from similitud_logic import (  # noqa: E402
    BUNDLED_CORPORA,
    BUNDLED_ONTOLOGIES,
    IC_KINDS,
    load_ontology,
    load_provider,
    score_table,
)

APP_TITLE = "Similitud de Palabras"
APP_ICON = "🔎"

SKIP_PAGE_CONFIG = os.getenv("SEMSIM_SKIP_PAGE_CONFIG", "0") == "1"

if not SKIP_PAGE_CONFIG:
    st.set_page_config(page_title=APP_TITLE, page_icon=APP_ICON, layout="wide")


def _upload_text(label: str, key: str):
    up = st.sidebar.file_uploader(label, key=key)
    if up is None:
        return None
    return up.getvalue().decode("utf-8-sig", errors="replace")


# =======================
# Controles
# =======================
st.sidebar.subheader("Entradas")
c1, c2, c3 = st.sidebar.columns(3)
with c1:
    bundled = st.selectbox("Ontología", BUNDLED_ONTOLOGIES, key="sim_onto")
    fmt = st.selectbox("Formato", ["native", "mesh"], key="sim_fmt")
with c2:
    ic_kind = st.selectbox("Contenido de información", IC_KINDS, index=2, key="sim_ic")
    bundled_counts = st.selectbox("Corpus", BUNDLED_CORPORA, key="sim_corpus")
    smoothing = st.checkbox("Suavizar conteos cero", value=False, key="sim_smooth")
with c3:
    raw_params = st.text_area(
        "Parámetros (name=value por línea)",
        value="",
        placeholder="li_alpha=0.2\nzhou_k=0.5\nrodriguez_weights=0.5,0.25,0.25",
        key="sim_params",
    )

onto_text = _upload_text("Subir ontología (.tax / MeSH)", "sim_onto_up")
onto2_text = _upload_text("Segunda ontología para rodriguez (opcional)", "sim_onto2_up")
counts_text = _upload_text("Subir conteos de corpus", "sim_counts_up")

# =======================
# Cálculo
# =======================
w_cols = st.columns([2, 2, 1])
w1 = w_cols[0].text_input("Palabra 1", value="fever", key="sim_w1")
w2 = w_cols[1].text_input("Palabra 2", value="diarrhea", key="sim_w2")
w_cols[2].write("")
run = w_cols[2].button("Calcular", use_container_width=True, key="sim_run")

if run:
    try:
        t = load_ontology(bundled, onto_text, fmt)
        t2 = load_ontology(text=onto2_text, fmt=fmt) if onto2_text else None
        ic = load_provider(t, ic_kind, counts_text, bundled_counts, smoothing=smoothing)
        params = parse_param_overrides([ln for ln in raw_params.splitlines() if ln.strip()])
    except SemsimError as e:
        st.error(f"{e.name}: {e.message}")
        st.stop()

    df = score_table(t, ic, params, w1, w2, t2=t2)
    ok = df[df["error"] == ""]
    bad = df[df["error"] != ""]

    k1, k2, k3 = st.columns(3)
    k1.metric("Conceptos", len(t))
    k2.metric("Medidas calculadas", len(ok))
    k3.metric("Medidas con error", len(bad))

    st.dataframe(
        ok.drop(columns=["error"]),
        use_container_width=True,
        hide_index=True,
        column_config={"score": st.column_config.NumberColumn("score", format="%.4f")},
    )
    if not bad.empty:
        with st.expander("Medidas que no se pudieron calcular"):
            st.dataframe(bad[["measure", "error"]], use_container_width=True, hide_index=True)

    st.download_button(
        "Descargar CSV",
        data=df.to_csv(index=False).encode("utf-8"),
        file_name=f"similitud_{w1}_{w2}.csv",
        mime="text/csv",
    )
else:
    st.info("Escribe dos palabras y presiona **Calcular**.")
