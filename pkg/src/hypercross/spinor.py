"""Quadratic-form (spinor) readings of the Hurwitz transformations.

A real vector ``u`` is paired into complex components
``v1 = u1 + i u2, v2 = u3 + i u4, ...`` and each output is ``v^H M v`` for
a Hermitian ``M``.  The conjugate transpose is required: the plain
transpose ``v^T M v`` is complex in general.

With the Pauli matrices ``(v^H s1 v, v^H s2 v, v^H s3 v)`` is exactly
``ks_transform(u)``.  For the R^8 -> R^5 map the five forms are, with the
Dirac matrices ``g0 = diag(I, -I)``, ``gk = [[0, sk], [-sk, 0]]``,
``g5 = [[0, I], [I, 0]]``::

    z1 = v^H g5 v
    z2 = v^H (-i g3) v
    z3 = v^H ( i g2) v
    z4 = v^H (-i g1) v
    z5 = v^H g0 v

These were obtained by ``solve_dirac_forms``, a least-squares fit over the
real span of ``{1, g0, g1, g2, g3, g5}`` and their ``i``-multiples against
``hurwitz_r8_to_r5``.  The block identity ``diag(I, I)`` is kept among the
candidates; the fit gives it zero weight, ``z5`` needs ``diag(I, -I)``.
"""

from __future__ import annotations

import numpy as np

from .hurwitz import DimensionError, hurwitz_r8_to_r5

SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)
I2 = np.eye(2, dtype=np.complex128)
Z2 = np.zeros((2, 2), dtype=np.complex128)

GAMMA = {
    "I": np.block([[I2, Z2], [Z2, I2]]),
    "g0": np.block([[I2, Z2], [Z2, -I2]]),
    "g1": np.block([[Z2, SIGMA[0]], [-SIGMA[0], Z2]]),
    "g2": np.block([[Z2, SIGMA[1]], [-SIGMA[1], Z2]]),
    "g3": np.block([[Z2, SIGMA[2]], [-SIGMA[2], Z2]]),
    "g5": np.block([[Z2, I2], [I2, Z2]]),
}

# (candidate name, complex coefficient) for each output of the R^8 -> R^5 map
DIRAC_FORMS = (
    (("g5", 1),),
    (("g3", -1j),),
    (("g2", 1j),),
    (("g1", -1j),),
    (("g0", 1),),
)


def _dirac_matrices(forms=DIRAC_FORMS) -> np.ndarray:
    return np.stack([sum(c * GAMMA[name] for name, c in terms) for terms in forms])


DIRAC_MATRICES = _dirac_matrices()


def spinor_from_real(u) -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 1 or u.size % 2:
        raise DimensionError(f"need an even-length real vector, got shape {u.shape}")
    return u[0::2] + 1j * u[1::2]


def quadratic_forms(v, matrices, conjugate: bool = True) -> np.ndarray:
    """``v^H M v`` for each ``M`` (``v^T M v`` when ``conjugate`` is False)."""
    v = np.asarray(v, dtype=np.complex128)
    left = v.conj() if conjugate else v
    return np.einsum("i,kij,j->k", left, matrices, v)


def _real(z: np.ndarray) -> np.ndarray:
    return z.real + 0.0


def pauli_form(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (2,):
        raise DimensionError(f"Pauli form takes 2 complex components, got shape {v.shape}")
    return _real(quadratic_forms(v, SIGMA))


def dirac_form(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (4,):
        raise DimensionError(f"Dirac form takes 4 complex components, got shape {v.shape}")
    return _real(quadratic_forms(v, DIRAC_MATRICES))


def solve_dirac_forms(samples: int = 64, seed: int = 0, atol: float = 1e-9):
    """Fit each output of ``hurwitz_r8_to_r5`` as a real combination of the
    candidate matrices and their ``i``-multiples.

    Returns a tuple shaped like ``DIRAC_FORMS`` with coefficients rounded to
    the nearest of ``0, +-1``; raises if the fit is not exact.
    """
    rng = np.random.default_rng(seed)
    names = list(GAMMA)
    basis = [(n, 1) for n in names] + [(n, 1j) for n in names]
    U = rng.uniform(-1, 1, size=(samples, 8))
    A = np.empty((samples, len(basis)))
    for s, u in enumerate(U):
        v = spinor_from_real(u)
        for b, (n, c) in enumerate(basis):
            # anti-Hermitian candidates give imaginary forms; keep the real part
            A[s, b] = (v.conj() @ (c * GAMMA[n]) @ v).real
    Z = np.array([hurwitz_r8_to_r5(u) for u in U])
    coef, *_ = np.linalg.lstsq(A, Z, rcond=None)
    if np.abs(A @ coef - Z).max() > atol:
        raise ValueError("no exact fit in the candidate span")
    out = []
    for k in range(Z.shape[1]):
        terms = []
        for b, (n, c) in enumerate(basis):
            w = coef[b, k]
            if abs(w) > atol:
                r = round(w)
                if abs(w - r) > atol:
                    raise ValueError(f"non-integral weight {w} on {n}")
                terms.append((n, c * r))
        out.append(tuple(terms))
    return tuple(out)
