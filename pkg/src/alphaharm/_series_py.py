"""Pure-Python/NumPy implementation of the hypergeometric series kernel.

This is the fallback backend; `alphaharm._series` is the compiled twin with
identical semantics (same term recurrence, same stopping rule, same
operation order, so results agree bit-for-bit).
"""

import numpy as np


def hyp2f1_series(a, b, c, t, n_poly, max_terms, rtol):
    """Sum the Gauss series sum_n (a)_n (b)_n / ((c)_n n!) t^n elementwise.

    t is converted to a contiguous float64 array. ``n_poly >= 0`` means the
    series is an exact polynomial whose last term has index ``n_poly``;
    ``n_poly < 0`` requests adaptive stopping: three consecutive terms with
    |term| <= rtol * |partial sum|. Returns ``(values, n_bad)`` where
    ``n_bad`` counts elements that hit ``max_terms`` without converging.
    """
    tv = np.ascontiguousarray(t, dtype=np.float64)
    if tv.ndim != 1:
        raise ValueError("t must be one-dimensional")
    if tv.shape[0] == 1:
        val, bad = _scalar_sum(a, b, c, float(tv[0]), n_poly, max_terms, rtol)
        return np.array([val]), bad
    return _vector_sum(a, b, c, tv, n_poly, max_terms, rtol)


def _scalar_sum(a, b, c, t, n_poly, max_terms, rtol):
    s = 1.0
    term = 1.0
    if n_poly >= 0:
        for n in range(n_poly):
            ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0))
            term = term * ratio * t
            s = s + term
        return s, 0
    streak = 0
    for n in range(max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0))
        term = term * ratio * t
        s = s + term
        if abs(term) <= rtol * abs(s):
            streak += 1
            if streak >= 3:
                return s, 0
        else:
            streak = 0
    return s, 1


def _vector_sum(a, b, c, tv, n_poly, max_terms, rtol):
    s = np.ones_like(tv)
    term = np.ones_like(tv)
    if n_poly >= 0:
        for n in range(n_poly):
            ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0))
            term = term * ratio
            term = term * tv
            s = s + term
        return s, 0
    # Active-set summation: converged elements are written out and dropped,
    # so slow points near t = 1 do not drag the whole array along. Each
    # element still sees exactly the scalar-path operation sequence.
    out = np.empty_like(tv)
    idx = np.arange(tv.shape[0])
    t_w = tv.copy()
    streak = np.zeros(tv.shape[0], dtype=np.int64)
    for n in range(max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0))
        term = term * ratio
        term = term * t_w
        s = s + term
        small = np.abs(term) <= rtol * np.abs(s)
        streak = np.where(small, streak + 1, 0)
        done = streak >= 3
        if done.any():
            out[idx[done]] = s[done]
            keep = ~done
            if not keep.any():
                return out, 0
            idx = idx[keep]
            s = s[keep]
            term = term[keep]
            t_w = t_w[keep]
            streak = streak[keep]
    out[idx] = s
    return out, int(idx.size)
