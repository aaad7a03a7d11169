# pages/02_Benchmark.py
# Signature wrapper: runs apps/benchmark/streamlit_app.py inside the shared shell.
from ui_shell import run_page

run_page("benchmark")
