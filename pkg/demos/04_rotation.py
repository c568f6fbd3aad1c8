"""
Rotations from the cubic identity
=================================

For a unit axis n, V = V(n) satisfies V^3 = -V, which folds the exponential
series into I + sin(t) V + (1 - cos(t)) V^2, in 3 and in 7 dimensions.
"""

import numpy as np

from hypercross import cross, rotation
from hypercross.verify import series_exp

R = rotation.rotation_matrix([0, 0, 1], np.pi / 2)
print("e1 about e3 by pi/2 ->", np.round(R @ [1, 0, 0], 15) + 0.0)

rng = np.random.default_rng(3)
axis = rng.uniform(-1, 1, 7)
axis /= np.linalg.norm(axis)
V = cross.cross_matrix(axis)
print("|V^3 + V|            :", np.abs(V @ V @ V + V).max())

theta = 1.9 * np.pi
A = theta * V
closed = rotation.rotation_matrix(axis, theta)
print("vs scaled series     :", np.abs(closed - series_exp(A)).max())
# a bare 30-term Taylor sum is itself off by about theta^30/30!
print("vs bare 30-term sum  :", np.abs(closed - series_exp(A, terms=30, squarings=0)).max())

v = rng.uniform(-1, 1, 7)
w = rotation.rotate(v, axis, theta)
print("norm kept, axis part kept:", np.linalg.norm(w) - np.linalg.norm(v), w @ axis - v @ axis)
