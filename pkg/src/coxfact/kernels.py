"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``COXFACT_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from coxfact import _kernels_py

_INT64_MAX = 2**63 - 1

_ext = None
if not os.environ.get("COXFACT_PURE_PYTHON"):
    try:
        from coxfact import _kernels as _ext
    except ImportError:  # extension not built
        _ext = None

BACKEND = "compiled" if _ext is not None else "python"


def dp_step(f: list[int], table: np.ndarray, table_rows: list | None = None) -> list[int]:
    """One convolution step over a rank table; exact for arbitrarily large counts.

    The compiled path is used only when the result provably fits in int64.
    """
    if _ext is not None and f:
        bound = max(f) * table.shape[1]
        if min(f) >= 0 and bound <= _INT64_MAX:
            out = _ext.dp_step(np.asarray(f, dtype=np.int64), np.ascontiguousarray(table, dtype=np.int64))
            return out.tolist()
    rows = table_rows if table_rows is not None else table.tolist()
    return _kernels_py.dp_step(f, rows)


def lehmer_rank(perms: np.ndarray) -> np.ndarray:
    if _ext is not None:
        return _ext.lehmer_rank(np.ascontiguousarray(perms, dtype=np.int64))
    return _kernels_py.lehmer_rank(perms)
