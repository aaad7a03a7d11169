# pages/03_Taxonomia.py
# Signature wrapper: runs apps/taxonomia/streamlit_app.py inside the shared shell.
from ui_shell import run_page

run_page("taxonomia")
