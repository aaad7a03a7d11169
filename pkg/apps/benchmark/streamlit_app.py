import os
import sys
from pathlib import Path

_APP_DIR = Path(__file__).resolve().parent
_ROOT = _APP_DIR.parents[1]
for _p in (_APP_DIR, _ROOT):
    if str(_p) not in sys.path:
        sys.path.insert(0, str(_p))

import streamlit as st  # noqa: E402

from benchmark_logic import BUNDLED_DATASETS, load_dataset, published_for, run_benchmark  # noqa: E402
from semsim.bench import dataset_summary, render_report, report_to_xlsx  # noqa: E402
from semsim.errors import SemsimError  # noqa: E402
from semsim.information_content import make_provider  # noqa: E402
from semsim.measure_registry import measure_names, parse_param_overrides  # noqa: E402
from semsim.ontology_io import load_corpus_counts, load_taxonomy, parse_corpus_counts, taxonomy_from_text  # noqa: E402

APP_TITLE = "Benchmark de Medidas"
APP_ICON = "📊"

SKIP_PAGE_CONFIG = os.getenv("SEMSIM_SKIP_PAGE_CONFIG", "0") == "1"

if not SKIP_PAGE_CONFIG:
    st.set_page_config(page_title=APP_TITLE, page_icon=APP_ICON, layout="wide")

DEFAULT_MEASURES = ["path", "wup", "tbk", "li", "lch", "resnik", "lin", "jcn", "zhou"]

# =======================
# Controles
# =======================
st.sidebar.subheader("Entradas")
c1, c2, c3 = st.sidebar.columns(3)
with c1:
    onto_name = st.selectbox("Ontología", ["fix1.tax", "fix2.tax"], key="bench_onto")
    onto_up = st.file_uploader("Subir ontología (.tax)", key="bench_onto_up")
with c2:
    ds_name = st.selectbox("Dataset", BUNDLED_DATASETS, key="bench_ds")
    ds_up = st.file_uploader("Subir dataset (#scale + pares)", key="bench_ds_up")
with c3:
    ic_kind = st.selectbox("Contenido de información", ["intrinsic", "corpus", "none"], key="bench_ic")
    counts_up = st.file_uploader("Subir conteos de corpus", key="bench_counts_up")

measures = st.sidebar.multiselect("Medidas", measure_names(), default=DEFAULT_MEASURES, key="bench_measures")
raw_params = st.sidebar.text_input("Parámetros (name=value separados por ';')", value="", key="bench_params")
fmt = st.sidebar.radio("Formato del reporte", ["csv", "markdown"], horizontal=True, key="bench_fmt")

run = st.button("Evaluar", type="primary", key="bench_run")

if run:
    try:
        if onto_up is not None:
            t = taxonomy_from_text(onto_up.getvalue().decode("utf-8-sig"))
        else:
            t = load_taxonomy(onto_name)
        ds_text = ds_up.getvalue().decode("utf-8-sig") if ds_up is not None else None
        ds = load_dataset(ds_name, ds_text, name=Path(ds_up.name).stem if ds_up is not None else "upload")
        counts = None
        if ic_kind == "corpus":
            if counts_up is not None:
                counts = parse_corpus_counts(counts_up.getvalue().decode("utf-8-sig"), t)
            else:
                counts = load_corpus_counts("fix_ic.counts", t)
        ic = make_provider(t, ic_kind, counts)
        params = parse_param_overrides([p for p in raw_params.split(";") if p.strip()])
    except SemsimError as e:
        st.error(f"{e.name}: {e.message}")
        st.stop()

    summary = dataset_summary(ds)
    k = st.columns(4)
    k[0].metric("Pares", summary.pairs)
    k[1].metric("Alta (≥75%)", summary.high)
    k[2].metric("Intermedia", summary.intermediate)
    k[3].metric("Baja (<25%)", summary.low)

    with st.spinner("Calculando correlaciones..."):
        result = run_benchmark(t, ic, measures, ds, params)

    tabs = st.tabs(["Correlaciones", "Puntajes por par", "Referencia publicada"])
    with tabs[0]:
        st.dataframe(result.report.to_frame(), use_container_width=True, hide_index=True)
        for name, msg in result.failures.items():
            st.warning(f"{name}: {msg}")
        text = render_report(result.report, fmt)
        st.code(text, language="markdown" if fmt == "markdown" else "text")
        d1, d2 = st.columns(2)
        d1.download_button(
            "Descargar reporte",
            data=text.encode("utf-8"),
            file_name=f"bench_{ds.name}.{'md' if fmt == 'markdown' else 'csv'}",
        )
        d2.download_button(
            "Descargar Excel",
            data=report_to_xlsx(result.report),
            file_name=f"bench_{ds.name}.xlsx",
            mime="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
        )
    with tabs[1]:
        st.dataframe(result.per_pair, use_container_width=True, hide_index=True)
    with tabs[2]:
        st.caption("Valores reportados sobre WordNet completo; no se reproducen con los fixtures incluidos.")
        st.dataframe(published_for(measures), use_container_width=True, hide_index=True)
else:
    st.info("Elige medidas y presiona **Evaluar**.")
