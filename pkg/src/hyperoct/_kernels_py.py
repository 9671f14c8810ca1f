"""Pure-Python fallback for the convolution kernel.

Same contract as the compiled _kernels module, but the Cayley table is
consumed as nested lists (scalar numpy indexing is slower than list access
in interpreted loops).
"""

from __future__ import annotations


def convolve_dense_rows(idx_a, coef_a, idx_b, coef_b, rows, order):
    out = [0] * order
    pairs_b = list(zip(idx_b, coef_b))
    for ia, ca in zip(idx_a, coef_a):
        row = rows[ia]
        for ib, cb in pairs_b:
            k = row[ib]
            out[k] += ca * cb
    return out
