# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled convolution kernel for group-algebra products.

Coefficients are arbitrary-precision Python ints (numerators over a shared
denominator), so only the index bookkeeping is typed; exactness is kept.
"""


def convolve_dense(list idx_a, list coef_a, list idx_b, list coef_b,
                   int[:, ::1] table, Py_ssize_t order):
    """Accumulate coef_a[i]*coef_b[j] at table[idx_a[i], idx_b[j]].

    Returns a dense list of Python ints of length ``order``.
    """
    cdef Py_ssize_t i, j, ia, ib, k
    cdef Py_ssize_t na = len(idx_a), nb = len(idx_b)
    cdef list out = [0] * order
    cdef object ca, cb
    for i in range(na):
        ia = <Py_ssize_t> idx_a[i]
        ca = coef_a[i]
        for j in range(nb):
            ib = <Py_ssize_t> idx_b[j]
            cb = coef_b[j]
            k = table[ia, ib]
            out[k] = out[k] + ca * cb
    return out
