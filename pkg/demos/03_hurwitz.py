"""
Hurwitz matrices and sums of squares
====================================

An m x m matrix H(u), linear in u, with H^T H = |u|^2 I exists for
m = 1, 2, 4, 8.  Applying such a matrix to u itself turns a sum of m
squares into a product identity and yields the quadratic transformations
Levi-Civita (R^2 -> R^2), Kustaanheimo-Stiefel (R^4 -> R^3), R^8 -> R^5
and, from the doubled 16 x 16 matrix, R^16 -> R^9.
"""

import numpy as np

from hypercross import hurwitz, signed

for m in (2, 4, 8, 16):
    print(f"m={m:2d} orthogonal as a polynomial identity: {signed.has_scalar_gram(hurwitz.hurwitz_template(m))}")

print("repaired entry of the 8x8 matrix (row, col, signed variable):", hurwitz.H8_REPAIRS)

rng = np.random.default_rng(2)
for name, f in hurwitz.TRANSFORMS.items():
    u = rng.uniform(-1, 1, hurwitz.TRANSFORM_INPUT_DIMS[name])
    z = f(u)
    print(f"{name:6s} |z| = {np.linalg.norm(z):.15f}  |u|^2 = {u @ u:.15f}")

# the 16x16 matrix is not orthogonal, yet H(u) u still vanishes in seven rows
res = hurwitz.hurwitz_system(rng.uniform(-1, 1, 16))
print("R^16 -> R^9 zero rows:", res.zeros, "largest:", res.residual)

# an antisymmetric n x n matrix in n-1 variables with H^T H = |x|^2 I
for n in (1, 2, 3, 4):
    print(f"n={n}: restricted search finds one: {hurwitz.obstruction_search(n)}")
