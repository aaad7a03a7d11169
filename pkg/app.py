import os
import sys
import time
from pathlib import Path

import streamlit as st

# --- 0. SYSTEM SETUP ---
# Always run from the repository root so pages/ and semsim/ resolve
try:
    CURRENT_FILE = Path(__file__).resolve()
    PROJECT_ROOT = CURRENT_FILE.parent

    if os.getcwd() != str(PROJECT_ROOT):
        os.chdir(PROJECT_ROOT)

    if str(PROJECT_ROOT) not in sys.path:
        sys.path.insert(0, str(PROJECT_ROOT))

except Exception as e:
    print(f"Init Warning: {e}")
    PROJECT_ROOT = Path(".")

# import AFTER sys.path is corrected
from ui_shell import load_registry  # noqa: E402

# --- 1. APP CONFIGURATION ---
st.set_page_config(
    page_title="Semsim ToolBox",
    page_icon="🧠",
    layout="wide",
    initial_sidebar_state="collapsed",
)


def safe_navigate(page_path: str, app_name: str) -> None:
    """Handles the transition to a sub-app safely."""
    try:
        with st.spinner(f"Abriendo {app_name}..."):
            time.sleep(0.2)

        if os.getcwd() != str(PROJECT_ROOT):
            os.chdir(PROJECT_ROOT)

        # prevent blank/failed transitions if the page file is missing
        target_file = (PROJECT_ROOT / page_path).resolve()
        if not target_file.exists():
            st.error(f"Missing page file: {page_path}")
            return

        st.switch_page(page_path)

    except Exception as e:
        st.error(f"Navigation Error: {e}")
        st.exception(e)


# --- 2. LOAD REGISTRY ---
apps = load_registry(PROJECT_ROOT)

# --- 3. STYLE ---
st.markdown(
    """
    <style>
        [data-testid="stSidebar"],
        [data-testid="collapsedControl"],
        header[data-testid="stHeader"] { display: none !important; }

        .block-container { padding-top: 6vh !important; max-width: 1100px !important; }

        .ss-homebar {
            width: 100%; background: #314270; border-radius: 22px;
            padding: 22px 28px; margin-bottom: 48px;
            box-shadow: 0 18px 50px rgba(0,0,0,0.25);
        }
        .ss-homebar-title { font-size: 2.6rem; font-weight: 800; color: #ffffff; margin: 0; }
        .ss-homebar-subtitle { font-size: 1.05rem; color: rgba(255,255,255,0.85); margin: 0; }

        div.stButton > button {
            width: 100%; min-height: 150px; border-radius: 18px;
            text-align: left; padding: 22px;
        }
        div.stButton > button p { font-size: 1.3rem !important; font-weight: 600 !important; }
        div.stButton > button:hover { transform: translateY(-4px); }
    </style>
    """,
    unsafe_allow_html=True,
)

# --- 4. HEADER + CARDS ---
try:
    st.markdown(
        """
        <div class="ss-homebar">
            <div class="ss-homebar-title">Semsim ToolBox</div>
            <div class="ss-homebar-subtitle">Medidas de similitud semántica sobre ontologías</div>
        </div>
        """,
        unsafe_allow_html=True,
    )

    if not apps:
        st.warning("apps.yaml no tiene apps registradas.")

    cols = st.columns(3)
    for i, a in enumerate(apps):
        col = cols[i % 3]
        name = a.get("name", "App")
        icon = a.get("icon", "⚡")
        with col:
            label_text = f"{icon}  \n\n{name}"
            if st.button(label_text, key=f"app_{a.get('id')}"):
                target = a.get("page")
                if target:
                    safe_navigate(target, name)
                else:
                    st.error(f"Module '{name}' not linked.")
            st.caption(a.get("subtitle", ""))

except Exception as e:
    st.error("App crashed while rendering.")
    st.exception(e)
