"""Accumulation helpers.

Every accumulation over more than a handful of terms goes through one of
these, so the numerical contract (pairwise or extended-precision
summation) is kept in a single place:

- ``np.dot`` / ``np.sum`` already use pairwise blocking,
- long running prefix sums are done in ``np.longdouble`` and rounded once,
- short heterogeneous sums use ``math.fsum``.
"""

import math

import numpy as np


def fsum(values) -> float:
    return math.fsum(values)


def dot(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.dot(a, b))


def cumsum_extended(values: np.ndarray) -> np.ndarray:
    """Cumulative sum accumulated in extended precision, returned as float64."""
    return np.cumsum(values.astype(np.longdouble)).astype(np.float64)


def prefix_with_zero(values: np.ndarray) -> np.ndarray:
    """Prefix sums P with P[0] = 0 and P[m] = values[1] + ... + values[m].

    ``values`` is indexed from 0; entry 0 is ignored (tables store n = 1..N
    at positions 1..N).
    """
    out = np.empty(len(values), dtype=np.float64)
    out[0] = 0.0
    out[1:] = cumsum_extended(values[1:])
    return out
