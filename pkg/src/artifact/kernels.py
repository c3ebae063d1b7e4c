"""Batch kernels, compiled when available.

The Cython extension ``_ckernels`` is used if it was built; otherwise the
numpy implementation in ``_pykernels`` is loaded.  Setting
``ARTIFACT_PURE_PYTHON=1`` forces the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("ARTIFACT_PURE_PYTHON", "") in ("", "0"):
    try:
        from ._ckernels import dayan_eval, piecewise_eval

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import dayan_eval, piecewise_eval  # noqa: F811

__all__ = ["BACKEND", "dayan_eval", "piecewise_eval"]
