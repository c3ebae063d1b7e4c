# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels; drop-in for ``artifact._pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline Py_ssize_t _locate(const double[::1] bp, double t) nogil:
    # last i with bp[i] <= t, clipped to [0, len(bp) - 2]
    cdef Py_ssize_t lo = 0, hi = bp.shape[0] - 1, mid
    if t < bp[1]:
        return 0
    if t >= bp[hi - 1]:
        return hi - 1
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if bp[mid] <= t:
            lo = mid
        else:
            hi = mid
    return lo


def piecewise_eval(breakpoints, coeffs, offsets, double total, t):
    cdef const double[::1] bp = np.ascontiguousarray(breakpoints, dtype=np.float64)
    cdef const double[:, ::1] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef const double[::1] off = np.ascontiguousarray(offsets, dtype=np.float64)
    tarr = np.asarray(t, dtype=np.float64)
    shape = tarr.shape
    cdef const double[::1] tv = np.ascontiguousarray(tarr.ravel())
    out = np.empty(tv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t k, i, n = tv.shape[0]
    cdef double x, end = bp[bp.shape[0] - 1]
    with nogil:
        for k in range(n):
            if tv[k] == end:
                ov[k] = total
                continue
            i = _locate(bp, tv[k])
            x = tv[k] - bp[i]
            ov[k] = off[i] + x * (c[i, 1] + x * c[i, 2]) + c[i, 0]
    return out.reshape(shape)


def dayan_eval(n1, n2, d1, d2, x):
    b = np.broadcast_arrays(*(np.asarray(a, dtype=np.float64) for a in (n1, n2, d1, d2, x)))
    shape = b[0].shape
    cdef const double[::1] vn1 = np.ascontiguousarray(b[0].ravel())
    cdef const double[::1] vn2 = np.ascontiguousarray(b[1].ravel())
    cdef const double[::1] vd1 = np.ascontiguousarray(b[2].ravel())
    cdef const double[::1] vd2 = np.ascontiguousarray(b[3].ravel())
    cdef const double[::1] vx = np.ascontiguousarray(b[4].ravel())
    out = np.empty(vx.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t k, n = vx.shape[0]
    cdef double sd
    with nogil:
        for k in range(n):
            sd = (2.0 * vn1[k] * vn2[k] / (vn1[k] + vn2[k])) * (vd1[k] / vn1[k] - vd2[k] / vn2[k])
            ov[k] = (vx[k] / vn1[k]) * vd1[k] + (1.0 - vx[k] / vn1[k]) * (vx[k] / (2.0 * vn2[k])) * sd
    return out.reshape(shape)
