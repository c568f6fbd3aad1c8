"""Hurwitz matrices and the quadratic Hurwitz transformations.

``hurwitz_matrix(u)`` returns an ``m x m`` matrix linear in ``u`` for
``m`` in {2, 4, 8, 16}.  For ``m <= 8`` it is orthogonal up to scale,
``H(u)^T H(u) = |u|^2 I``, and has the form ``u_d I + A`` with ``A``
antisymmetric; ``u_d`` is the coordinate returned by ``diagonal_index``.
Setting ``u_d = 0`` gives the antisymmetric matrices with ``H^2 = -|u|^2 I``.

The templates for ``m = 2, 4, 8`` are reference tables.  Entry (5, 3) of the
reference 8x8 matrix is unknown; it is recovered by ``repair_template`` as
the unique value making the matrix orthogonal, which is ``-u3``.

``m = 16`` comes from the doubling recurrence ``doubling_template``, which
reproduces the reference 4x4 and 8x8 matrices exactly.  No 16x16 matrix linear
in 16 variables can be orthogonal (sedenions do not compose norms), and the
doubled one is not; ``H16(u) @ u`` still yields the R^16 -> R^9 map with
seven vanishing rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import signed
from .cross import DimensionError, V7_TEMPLATE, cross_matrix

HURWITZ_SIZES = (2, 4, 8, 16)


def doubling_template(v) -> np.ndarray:
    """Signed template of the doubling recurrence on variables ``v``.

    ``G([a]) = [[a]]`` and, for halves ``p, q``::

        G(p, q) = [[ G(p),           D G(q)      ],
                   [ -(D G(q))^T,    D G(p)^T D ]]

    with ``D = diag(1, -1, ..., -1)``.
    """
    v = [int(x) for x in v]
    m = len(v)
    if m == 1:
        return np.array([[v[0]]], dtype=np.int64)
    if m & (m - 1):
        raise DimensionError(f"doubling needs a power-of-two size, got {m}")
    p, q = doubling_template(v[: m // 2]), doubling_template(v[m // 2 :])
    d = np.ones(m // 2, dtype=np.int64)
    d[1:] = -1
    dq = d[:, None] * q
    dpd = d[:, None] * p.T * d[None, :]
    return np.block([[p, dq], [-dq.T, dpd]])


def _swap_halves(v):
    v = list(v)
    h = len(v) // 2
    return v[h:] + v[:h]


def _hurwitz_invariants(t: np.ndarray) -> bool:
    if not signed.has_scalar_gram(t):
        return False
    d = abs(int(t[0, 0]))
    pure = np.where(np.abs(t) == d, 0, t)
    return signed.is_antisymmetric(pure)


H2_TEMPLATE = signed.as_template([[1, 2], [-2, 1]])

H4_TEMPLATE = signed.as_template(
    [
        [3, 4, 1, 2],
        [-4, 3, 2, -1],
        [-1, -2, 3, 4],
        [-2, 1, -4, 3],
    ]
)

H8_REFERENCE = [
    [5, 6, 7, 8, 1, 2, 3, 4],
    [-6, 5, 8, -7, 2, -1, -4, 3],
    [-7, -8, 5, 6, 3, 4, -1, -2],
    [-8, 7, -6, 5, 4, -3, 2, -1],
    [-1, -2, signed.UNKNOWN, -4, 5, 6, 7, 8],
    [-2, 1, -4, 3, -6, 5, -8, 7],
    [-3, 4, 1, -2, -7, 8, 5, -6],
    [-4, -3, 2, 1, -8, -7, 6, 5],
]
H8_TEMPLATE, H8_REPAIRS = signed.repair_template(H8_REFERENCE, _hurwitz_invariants)

H16_TEMPLATE = doubling_template(_swap_halves(range(1, 17)))

TEMPLATES = {2: H2_TEMPLATE, 4: H4_TEMPLATE, 8: H8_TEMPLATE, 16: H16_TEMPLATE}

# The 4x4 antisymmetric matrix built from (x, y, z) by bordering V3.
BORDERED3_TEMPLATE = signed.as_template(
    [
        [0, 3, -2, 1],
        [-3, 0, 1, 2],
        [2, -1, 0, 3],
        [-1, -2, -3, 0],
    ]
)
# (x, y, z) -> u with BORDERED3(x, y, z) == H4(u): u = (-y, x, 0, z).
BORDERED3_TO_H4 = (-2, 1, 0, 3)

# bordered_from_cross(r) == diag(row) @ H8(u) @ diag(col) with u[|k|-1] = sign(k) r[i]
# for the i-th entry k of ``coords`` (diagonal coordinate u5 = 0).  Found by
# ``signed.match_up_to_signs``; the identity row/column permutation suffices.
BORDERED_TO_H8 = {
    "coords": (-4, -3, 2, 1, -8, -7, 6),
    "row": (1, 1, 1, 1, 1, 1, 1, -1),
    "col": (1, 1, 1, 1, 1, 1, 1, -1),
}


def _vec(u, name="u") -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {u.shape}")
    return u


def hurwitz_template(m: int) -> np.ndarray:
    if m not in TEMPLATES:
        raise DimensionError(f"Hurwitz matrices are provided for m in {{2, 4, 8, 16}}, got {m}")
    return TEMPLATES[m]


def hurwitz_matrix(u) -> np.ndarray:
    u = _vec(u)
    return signed.evaluate(hurwitz_template(u.size), u)


def diagonal_index(m: int) -> int:
    """0-based index of the coordinate sitting on the diagonal of ``H_m``."""
    return abs(int(hurwitz_template(m)[0, 0])) - 1


def bordered_from_cross(r) -> np.ndarray:
    """``[[V(r), r], [-r^T, 0]]`` for ``r`` in R^3 or R^7."""
    r = _vec(r, "r")
    V = cross_matrix(r)
    n = r.size
    H = np.zeros((n + 1, n + 1))
    H[:n, :n] = V
    H[:n, n] = r
    H[n, :n] = -r
    return H


def bordered_template(n: int) -> np.ndarray:
    base = {3: signed.as_template([[0, 3, -2], [-3, 0, 1], [2, -1, 0]]), 7: V7_TEMPLATE}[n]
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    t[:n, :n] = base
    t[:n, n] = np.arange(1, n + 1)
    t[n, :n] = -np.arange(1, n + 1)
    return t


def h8_coordinates_from_r7(r) -> np.ndarray:
    r = _vec(r, "r")
    u = np.zeros(8)
    for i, k in enumerate(BORDERED_TO_H8["coords"]):
        u[abs(k) - 1] = r[i] if k > 0 else -r[i]
    return u


@dataclass(frozen=True)
class TransformResult:
    """Output of ``H_m(u) @ u`` with the left-hand-side signs folded in."""

    z: np.ndarray
    zeros: int
    residual: float


def hurwitz_system(u) -> TransformResult:
    """Evaluate ``H_m(u) @ u`` for ``m`` in {4, 8, 16}.

    The first ``m/2 + 1`` rows read ``(z1, -z2, ..., -z_{m/2+1})``; the rest
    vanish identically.  ``residual`` is the largest magnitude among them.
    """
    u = _vec(u)
    m = u.size
    if m not in (4, 8, 16):
        raise DimensionError(f"Hurwitz systems are defined for m in {{4, 8, 16}}, got {m}")
    w = hurwitz_matrix(u) @ u
    k = m // 2 + 1
    z = w[:k].copy()
    z[1:] = -z[1:]
    tail = w[k:]
    return TransformResult(z + 0.0, m - k, float(np.abs(tail).max()))


def levi_civita(u) -> np.ndarray:
    u = _vec(u)
    if u.size != 2:
        raise DimensionError(f"Levi-Civita map takes R^2, got {u.size}")
    return np.array([u[0] ** 2 - u[1] ** 2, 2 * u[0] * u[1]])


def ks_transform(u) -> np.ndarray:
    """Kustaanheimo-Stiefel map R^4 -> R^3."""
    u = _vec(u)
    if u.size != 4:
        raise DimensionError(f"KS map takes R^4, got {u.size}")
    a, b = u[:2], u[2:]
    top = 2 * signed.evaluate(H2_TEMPLATE, a) @ b
    return np.array([top[0], top[1], a @ a - b @ b])


def hurwitz_r8_to_r5(u) -> np.ndarray:
    u = _vec(u)
    if u.size != 8:
        raise DimensionError(f"R^8 -> R^5 map takes R^8, got {u.size}")
    return hurwitz_system(u).z


def _block(a: np.ndarray) -> np.ndarray:
    if a.size == 1:
        return a.reshape(1, 1)
    return hurwitz_matrix(a)


def hurwitz_recursive(u) -> np.ndarray:
    """``(2 H_m(a) b, |a|^2 - |b|^2)`` for ``u = (a, b)``, ``m`` in {1, 2, 4, 8}."""
    u = _vec(u)
    if u.size not in (2, 4, 8, 16):
        raise DimensionError(f"recursive transform takes R^2m with m in {{1, 2, 4, 8}}, got {u.size}")
    m = u.size // 2
    a, b = u[:m], u[m:]
    top = 2 * _block(a) @ b
    return np.append(top, a @ a - b @ b) + 0.0


TRANSFORMS = {
    "lc": levi_civita,
    "ks": ks_transform,
    "r8r5": hurwitz_r8_to_r5,
    "r16r9": hurwitz_recursive,
}
TRANSFORM_INPUT_DIMS = {"lc": 2, "ks": 4, "r8r5": 8, "r16r9": 16}

# m = 1 recursion vs Levi-Civita: output order swapped, no sign change.
LC_OUTPUT_MAP = (2, 1)
# m = 4 recursion vs the 8x8 system: hurwitz_recursive(u) == hurwitz_r8_to_r5(u[INPUT_MAP])
R8R5_INPUT_MAP = (2, 3, 0, 1, 4, 5, 6, 7)

MAX_OBSTRUCTION_N = 4


def find_orthogonal_antisymmetric(n: int):
    """First ``n x n`` antisymmetric signed template in ``x_1..x_{n-1}`` with
    ``H^T H = (x_1^2 + ... + x_{n-1}^2) I``, or None.

    Entries above the diagonal range over ``{0, +-x_1, ..., +-x_{n-1}}``;
    every assignment is enumerated.  This checks the restricted single-signed-
    coordinate ansatz only.
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_OBSTRUCTION_N:
        raise ValueError(f"obstruction search supports 1 <= n <= {MAX_OBSTRUCTION_N}, got {n!r}")
    nv = n - 1
    if nv == 0:
        # 1x1 zero matrix, empty sum of squares
        return np.zeros((1, 1), dtype=np.int64)
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    alphabet = [0] + [s * k for k in range(1, nv + 1) for s in (1, -1)]
    full = set(range(1, nv + 1))
    for values in itertools.product(alphabet, repeat=len(slots)):
        t = np.zeros((n, n), dtype=np.int64)
        for (i, j), v in zip(slots, values):
            t[i, j], t[j, i] = v, -v
        # diagonal of H^T H needs each variable exactly once per column
        cols = np.abs(t)
        if any(sorted(c[c != 0].tolist()) != sorted(full) for c in cols.T):
            continue
        if signed.has_scalar_gram(t, nv):
            return t
    return None


def obstruction_search(n: int) -> bool:
    return find_orthogonal_antisymmetric(n) is not None
