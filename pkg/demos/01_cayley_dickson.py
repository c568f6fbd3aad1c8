"""
Hypercomplex numbers by doubling
================================

Each level of the Cayley-Dickson construction pairs two elements of the
level below.  Reals, complexes, quaternions and octonions keep the norm
multiplicative; sedenions do not.
"""

import numpy as np

from hypercross import algebra
from hypercross.algebra import Hypercomplex

# quaternion basis products come out as the familiar table
t = algebra.basis_table(2)
for i, j in [(1, 2), (2, 3), (3, 1), (2, 1)]:
    s, k = t[i, j]
    print(f"e{i} e{j} = {'+' if s > 0 else '-'}e{k}")

# octonions: |ab| = |a||b| still holds, associativity does not
rng = np.random.default_rng(0)
a, b, c = (Hypercomplex(rng.uniform(-1, 1, 8)) for _ in range(3))
print("octonion |ab|^2 - |a|^2|b|^2 =", (a * b).norm_sq() - a.norm_sq() * b.norm_sq())
print("largest associator component  =", np.abs(algebra.associator(a, b, c).coeffs).max())
print("non-associative basis triples =", len(algebra.non_associative_triples(3)))

# sedenions have zero divisors, found by scanning basis sums
i, j, k, l = algebra.zero_divisor_pairs(4)[0]
x = Hypercomplex.basis(4, i) + Hypercomplex.basis(4, j)
y = Hypercomplex.basis(4, k) - Hypercomplex.basis(4, l)
print(f"(e{i} + e{j})(e{k} - e{l}) =", (x * y).coeffs.tolist())
