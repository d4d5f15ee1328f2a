"""Compensated summation helpers.

All series accumulations in this package go through :func:`compensated_sum`
so that partial sums with 1e5..1e6 terms of mixed sign do not lose digits to
naive left-to-right accumulation.
"""

from __future__ import annotations

import math

import numpy as np

# Above this length we pairwise-sum numpy chunks and fsum the chunk totals;
# below it, fsum directly (exact up to one final rounding).
_FSUM_CUTOFF = 1 << 20


def compensated_sum(values) -> float:
    """Error-free-transformation sum of a 1-D array or iterable of floats.

    Uses Shewchuk's exact accumulation (``math.fsum``) for moderate lengths.
    Very long numpy arrays are split into chunks whose pairwise sums are then
    fsum-ed; the chunk boundaries are fixed, so results are deterministic.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        arr = arr.ravel()
    n = arr.size
    if n == 0:
        return 0.0
    if n <= _FSUM_CUTOFF:
        return math.fsum(arr)
    chunks = [
        math.fsum(arr[i : i + _FSUM_CUTOFF]) for i in range(0, n, _FSUM_CUTOFF)
    ]
    return math.fsum(chunks)


def neumaier_axis_sum(matrix: np.ndarray, axis: int = 0) -> np.ndarray:
    """Kahan-Neumaier compensated sum along one axis of a 2-D array.

    Vectorised across the other axis; used when many partial sums share the
    same term count (e.g. a sweep over a t grid).
    """
    mat = np.asarray(matrix, dtype=float)
    if axis == 1:
        mat = mat.T
    total = np.zeros(mat.shape[1])
    comp = np.zeros(mat.shape[1])
    for row in mat:
        t = total + row
        swap = np.abs(total) >= np.abs(row)
        comp += np.where(swap, (total - t) + row, (row - t) + total)
        total = t
    return total + comp
