"""Pure-Python/numpy versions of the batch kernels.

Signatures match the compiled ``_ckernels`` module exactly; see
:mod:`artifact.kernels` for the dispatch.
"""

import numpy as np


def piecewise_eval(breakpoints, coeffs, offsets, total, t):
    """Evaluate a piecewise quadratic at every ``t`` in ``[bp[0], bp[-1]]``.

    Pieces are half-open ``[bp[i], bp[i+1])`` except the last, which is
    closed; ``t == bp[-1]`` returns ``total`` exactly.  Values outside the
    breakpoint range are evaluated on the nearest end piece.
    """
    bp = np.asarray(breakpoints, dtype=np.float64)
    c = np.asarray(coeffs, dtype=np.float64)
    off = np.asarray(offsets, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    npieces = bp.shape[0] - 1
    idx = np.searchsorted(bp, t, side="right") - 1
    np.clip(idx, 0, npieces - 1, out=idx)
    x = t - bp[idx]
    out = off[idx] + x * (c[idx, 1] + x * c[idx, 2]) + c[idx, 0]
    out[t == bp[-1]] = total
    return out


def dayan_eval(n1, n2, d1, d2, x):
    """Elementwise closed-form interpolant over broadcastable arrays."""
    n1 = np.asarray(n1, dtype=np.float64)
    n2 = np.asarray(n2, dtype=np.float64)
    d1 = np.asarray(d1, dtype=np.float64)
    d2 = np.asarray(d2, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    sd = (2.0 * n1 * n2 / (n1 + n2)) * (d1 / n1 - d2 / n2)
    return (x / n1) * d1 + (1.0 - x / n1) * (x / (2.0 * n2)) * sd
