# pages/01_Similitud.py
# Signature wrapper: runs apps/similitud/streamlit_app.py inside the shared shell.
from ui_shell import run_page

run_page("similitud")
