"""
Cross products in three and seven dimensions
============================================

The cross product is linear in each argument, so ``a x b = V(b) a`` for a
matrix ``V(b)``.  Only n = 3 and n = 7 admit one.
"""

import numpy as np

from hypercross import cross

rng = np.random.default_rng(1)
a, b = rng.uniform(-1, 1, (2, 7))
c = cross.cross(a, b)
print("a.c, b.c             :", c @ a, c @ b)
print("|c|^2 vs Lagrange    :", c @ c, (a @ a) * (b @ b) - (a @ b) ** 2)

# the same product is the imaginary part of an octonion product, after relabelling the basis
print("octonion agreement   :", np.abs(cross.cross_from_algebra(a, b) - c).max())

# the point-mass inertia tensor is V^T V, so kinetic energy needs no cross product
omega = rng.uniform(-1, 1, 7)
print("kinetic energy       :", cross.kinetic_energy(omega, b), 0.5 * omega @ cross.inertia_tensor(b) @ omega)

# counting free entries of an antisymmetric V against what a cross product requires
print("admissible dimensions:", sorted(cross.admissible_dimensions(100)))

# the Jacobi identity survives in 3-D only
print("Jacobi failures 3-D/7-D:", len(cross.jacobi_failures(3)), len(cross.jacobi_failures(7)))
