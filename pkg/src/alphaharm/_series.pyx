# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hypergeometric series kernel.

Semantics match ``alphaharm._series_py.hyp2f1_series`` exactly: same term
recurrence, same stopping rule, same operation order per element.
"""

import numpy as np

from libc.math cimport fabs


def hyp2f1_series(double a, double b, double c, t, long n_poly,
                  long max_terms, double rtol):
    """Elementwise Gauss-series summation; see the fallback for the contract."""
    tv_arr = np.ascontiguousarray(t, dtype=np.float64)
    if tv_arr.ndim != 1:
        raise ValueError("t must be one-dimensional")
    cdef double[::1] tv = tv_arr
    cdef Py_ssize_t m = tv.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef long n_bad = 0
    for i in range(m):
        n_bad += _one_point(a, b, c, tv[i], n_poly, max_terms, rtol, &out[i])
    return out_arr, n_bad


cdef inline long _one_point(double a, double b, double c, double t,
                            long n_poly, long max_terms, double rtol,
                            double *res) nogil:
    cdef double s = 1.0
    cdef double term = 1.0
    cdef double ratio
    cdef double nn
    cdef long n
    cdef int streak = 0
    if n_poly >= 0:
        for n in range(n_poly):
            nn = <double> n
            ratio = (a + nn) * (b + nn) / ((c + nn) * (nn + 1.0))
            term = term * ratio * t
            s = s + term
        res[0] = s
        return 0
    for n in range(max_terms):
        nn = <double> n
        ratio = (a + nn) * (b + nn) / ((c + nn) * (nn + 1.0))
        term = term * ratio * t
        s = s + term
        if fabs(term) <= rtol * fabs(s):
            streak += 1
            if streak >= 3:
                res[0] = s
                return 0
        else:
            streak = 0
    res[0] = s
    return 1
