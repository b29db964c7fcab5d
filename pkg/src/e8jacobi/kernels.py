"""Select the compiled row-reduction kernel, falling back to pure Python.

Set E8JACOBI_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that compare the two backends).
"""

import os

if os.environ.get("E8JACOBI_PURE_PYTHON"):
    from ._rowreduce_py import echelon_int_rows, normalize_int_row
    BACKEND = "python"
else:
    try:
        from ._rowreduce_c import echelon_int_rows, normalize_int_row
        BACKEND = "cython"
    except ImportError:
        from ._rowreduce_py import echelon_int_rows, normalize_int_row
        BACKEND = "python"

__all__ = ["echelon_int_rows", "normalize_int_row", "BACKEND"]
