"""
Spinor forms of the transformations
===================================

Pairing real coordinates into complex ones, v = (u1 + i u2, u3 + i u4, ...),
the Kustaanheimo-Stiefel map is the triple of Pauli forms v^H s_k v and the
R^8 -> R^5 map is five Dirac-matrix forms.
"""

import numpy as np

from hypercross import hurwitz, spinor

rng = np.random.default_rng(4)

u = rng.uniform(-1, 1, 4)
v = spinor.spinor_from_real(u)
print("Pauli forms :", spinor.pauli_form(v))
print("KS map      :", hurwitz.ks_transform(u))

# the conjugate transpose matters: v^T M v is complex
print("v^T s v     :", spinor.quadratic_forms(v, spinor.SIGMA, conjugate=False))

u = rng.uniform(-1, 1, 8)
v = spinor.spinor_from_real(u)
print("Dirac forms :", spinor.dirac_form(v))
print("R^8 -> R^5  :", hurwitz.hurwitz_r8_to_r5(u))

# recover which gamma combinations give each output by least squares
labels = {1: "", -1: "-", 1j: "i ", -1j: "-i "}
for k, terms in enumerate(spinor.solve_dirac_forms(), 1):
    print(f"z{k} = v^H", " + ".join(f"{labels[c]}{name}" for name, c in terms), "v")
