# ui_shell.py
# Shared page wrapper: consistent look + nav-only sidebar, then runs the app
# entrypoint registered in apps.yaml with st.sidebar redirected into the page.
from __future__ import annotations

import os
import runpy
from pathlib import Path
from typing import Dict, List, Optional

import streamlit as st
import streamlit as _stmod  # monkeypatch target
import yaml

_THIS = Path(__file__).resolve()
ROOT = _THIS.parent

EMBED_FLAGS = ["SEMSIM_EMBEDDED", "SEMSIM_SKIP_PAGE_CONFIG"]


def load_registry(root: Path = ROOT) -> List[Dict]:
    """Loads the list of available apps from apps.yaml."""
    try:
        cfg_path = root / "apps.yaml"
        if not cfg_path.exists():
            return []
        cfg = yaml.safe_load(cfg_path.read_text(encoding="utf-8")) or {}
        return cfg.get("apps", [])
    except Exception:
        return []


def find_app(app_id: str, root: Path = ROOT) -> Optional[Dict]:
    for a in load_registry(root):
        if a.get("id") == app_id:
            return a
    return None


def entrypoint_for(app: Dict, root: Path = ROOT) -> Path:
    return root / app.get("workdir", f"apps/{app.get('id')}") / app.get("entry", "streamlit_app.py")


def inject_signature_css() -> None:
    st.markdown(
        """
        <style>
          header[data-testid="stHeader"] { height: 0 !important; min-height: 0 !important; display: none !important; }
          .block-container { padding-top: 3.25rem !important; padding-bottom: 2rem !important; max-width: 98% !important; }
          [data-testid="stSidebarNav"] { display: none !important; }
          section[data-testid="stSidebar"] { background-color: #f8f9fa; border-right: 1px solid #e0e0e0; }
          .ss-topbar {
            width: 100%; background: #314270; border-radius: 12px 12px 0 0;
            padding: 15px 25px; display: flex; align-items: center; min-height: 110px;
          }
          .ss-topbar-title { margin: 0; font-size: 1.8rem; font-weight: 800; color: #ffffff; }
          .ss-topbar-subtitle { margin: 0; font-size: 1rem; color: rgba(255,255,255,0.85); }
          .ss-accent { height: 5px; width: 100%; background: #FFBA00; border-radius: 0 0 12px 12px; margin-bottom: 2rem; }
        </style>
        """,
        unsafe_allow_html=True,
    )


def sidebar_nav(apps: List[Dict]) -> None:
    with st.sidebar:
        st.markdown("### Semsim ToolBox")
        st.caption("NAVEGACIÓN PRINCIPAL")
        st.divider()
        st.page_link("app.py", label="🏠 Inicio")
        for a in apps:
            if a.get("page"):
                st.page_link(a["page"], label=f"{a.get('icon', '⚡')} {a.get('name', a.get('id'))}")


def signature_header(title: str, subtitle: str) -> None:
    st.markdown(
        f"""
        <div class="ss-topbar">
          <div>
            <div class="ss-topbar-title">{title}</div>
            <div class="ss-topbar-subtitle">{subtitle}</div>
          </div>
        </div>
        <div class="ss-accent"></div>
        """,
        unsafe_allow_html=True,
    )


def run_page(app_id: str) -> None:
    st.set_page_config(page_title="Semsim ToolBox", layout="wide", initial_sidebar_state="expanded")
    inject_signature_css()

    apps = load_registry()
    sidebar_nav(apps)

    app = find_app(app_id)
    if app is None:
        st.error(f"La app '{app_id}' no está registrada en apps.yaml.")
        st.stop()

    signature_header(app.get("name", app_id), app.get("subtitle", ""))

    with st.container(border=True):
        control_space = st.container()

    original_sidebar = _stmod.sidebar
    original_cwd = os.getcwd()
    try:
        _stmod.sidebar = control_space

        entrypoint = entrypoint_for(app)
        if not entrypoint.exists():
            st.error(f"No existe el entrypoint: {entrypoint}")
            st.stop()

        os.environ["SEMSIM_EMBEDDED"] = "1"
        os.environ["SEMSIM_SKIP_PAGE_CONFIG"] = "1"

        os.chdir(entrypoint.parent)
        runpy.run_path(str(entrypoint), run_name="__main__")

    except Exception as e:
        st.error(f"Application Error: {e}")
        st.exception(e)

    finally:
        _stmod.sidebar = original_sidebar
        try:
            os.chdir(original_cwd)
        except Exception:
            os.chdir(ROOT)
        for k in EMBED_FLAGS:
            os.environ.pop(k, None)
