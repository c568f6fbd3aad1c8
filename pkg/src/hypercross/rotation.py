"""Closed-form rotations generated by the 3-D and 7-D cross-product matrices.

For a unit axis ``n`` with ``V = cross_matrix(n)`` the cubic identity
``V^3 = -V`` collapses the exponential series to::

    exp(theta V) = I + sin(theta) V + (1 - cos(theta)) V^2

Under the package's operand convention ``V(n) @ v = v x n``, so positive
``theta`` turns ``v`` clockwise about ``n`` (e.g. ``e1 -> -e2`` about ``e3``
at ``pi/2``).
"""

from __future__ import annotations

import numpy as np

from .cross import DimensionError, cross_matrix

_TINY = 1e-300


def rotation_matrix(axis, theta: float) -> np.ndarray:
    axis = np.asarray(axis, dtype=np.float64)
    norm = np.linalg.norm(axis)
    if not norm > _TINY:
        raise ValueError("rotation axis must be nonzero")
    V = cross_matrix(axis / norm)
    return np.eye(axis.size) + np.sin(theta) * V + (1.0 - np.cos(theta)) * (V @ V)


def rotate(v, axis, theta: float) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    if v.shape != np.shape(axis):
        raise DimensionError(f"vector and axis dimensions differ: {v.shape} vs {np.shape(axis)}")
    return rotation_matrix(axis, theta) @ v
