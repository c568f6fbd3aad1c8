"""Cross products in 3 and 7 dimensions, the point-mass inertia tensor, and
the parameter-counting argument for which dimensions admit a cross product.

Operand convention: ``cross(omega, r) = V(r) @ omega = omega x r``.  With
``(x, y, z) = (x1, x2, x3)`` the 3-D matrix is::

    V3(r) = [[ 0,  z, -y],
             [-z,  0,  x],
             [ y, -x,  0]]

i.e. the negative of the usual skew matrix ``[r]_x``.  The 7-D matrix is the
octonionic reference table; it satisfies both invariants as given, so no entry
needs repair (checked by ``repair_template`` at import).
"""

from __future__ import annotations

import numpy as np

from . import signed
from .algebra import basis_table, multiply_arrays

CROSS_DIMENSIONS = (3, 7)

V3_TEMPLATE = signed.as_template(
    [
        [0, 3, -2],
        [-3, 0, 1],
        [2, -1, 0],
    ]
)


def _cross_invariants(t: np.ndarray) -> bool:
    return signed.is_antisymmetric(t) and signed.has_cross_gram(t)


V7_REFERENCE = [
    [0, 7, -6, -5, 4, 3, -2],
    [-7, 0, -5, 6, 3, -4, 1],
    [6, 5, 0, 7, -2, -1, -4],
    [5, -6, -7, 0, -1, 2, 3],
    [-4, -3, 2, 1, 0, 7, -6],
    [-3, 4, 1, -2, -7, 0, 5],
    [2, -1, 4, -3, 6, -5, 0],
]
V7_TEMPLATE, V7_REPAIRS = signed.repair_template(V7_REFERENCE, _cross_invariants)

TEMPLATES = {3: V3_TEMPLATE, 7: V7_TEMPLATE}

# Signed relabelling of basis vectors e_i -> sign * e_|m| making the
# imaginary part of the Cayley-Dickson product agree with ``cross``.  Found by
# ``find_algebra_maps``; the first in lexicographic search order is frozen.
ALGEBRA_MAPS = {
    3: (1, 2, 3),
    7: (1, 2, 4, 7, -6, -5, 3),
}


class DimensionError(ValueError):
    pass


def _vec(x, name="vector") -> np.ndarray:
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {v.shape}")
    return v


def _cross_dim(*vs) -> int:
    n = vs[0].size
    if any(v.size != n for v in vs):
        raise DimensionError(f"dimension mismatch: {[v.size for v in vs]}")
    if n not in CROSS_DIMENSIONS:
        raise DimensionError(f"cross products exist only in dimensions {{3, 7}}, got {n}")
    return n


def cross_matrix(r) -> np.ndarray:
    r = _vec(r, "r")
    n = _cross_dim(r)
    return signed.evaluate(TEMPLATES[n], r)


def cross(omega, r) -> np.ndarray:
    omega, r = _vec(omega, "omega"), _vec(r, "r")
    _cross_dim(omega, r)
    return cross_matrix(r) @ omega


def _embed(a: np.ndarray, perm) -> np.ndarray:
    out = np.zeros(len(perm) + 1)
    for k, p in enumerate(perm):
        out[abs(p)] = a[k] if p > 0 else -a[k]
    return out


def _pull_back(x: np.ndarray, perm) -> np.ndarray:
    return np.array([x[abs(p)] if p > 0 else -x[abs(p)] for p in perm]) + 0.0


def cross_from_algebra(a, b) -> np.ndarray:
    """Imaginary part of the quaternion/octonion product of pure elements."""
    a, b = _vec(a, "a"), _vec(b, "b")
    n = _cross_dim(a, b)
    perm = ALGEBRA_MAPS[n]
    prod = multiply_arrays(_embed(a, perm), _embed(b, perm))
    return _pull_back(prod, perm)


def find_algebra_maps(n: int = 7, sign: int = 1) -> list[tuple[int, ...]]:
    """Every signed relabelling ``m`` with ``Im(m(a) m(b)) == sign * m(cross(a, b))``
    on basis vectors, by backtracking over ``m(e_1), m(e_2), ...``."""
    level = {3: 2, 7: 3}[n]
    table = basis_table(level)
    prod = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                c = cross(np.eye(n)[i - 1], np.eye(n)[j - 1])
                k = int(np.flatnonzero(c)[0])
                prod[i, j] = (k + 1, int(c[k]))
    found: list[tuple[int, ...]] = []

    def consistent(m):
        size = len(m)
        for (i, j), (k, s) in prod.items():
            if i <= size and j <= size and k <= size:
                si, sj, sk = np.sign(m[i - 1]), np.sign(m[j - 1]), np.sign(m[k - 1])
                t_sign, t_idx = table[abs(m[i - 1]), abs(m[j - 1])]
                if t_idx != abs(m[k - 1]) or si * sj * t_sign != sign * s * sk:
                    return False
        return True

    def extend(m):
        if len(m) == n:
            found.append(tuple(m))
            return
        used = {abs(x) for x in m}
        for t in range(1, n + 1):
            if t not in used:
                for s in (1, -1):
                    cand = m + [s * t]
                    if consistent(cand):
                        extend(cand)

    extend([])
    return found


def inertia_tensor(r) -> np.ndarray:
    """``|r|^2 I - r r^T`` for any dimension."""
    r = _vec(r, "r")
    if r.size < 1:
        raise DimensionError("inertia tensor needs at least one coordinate")
    return (r @ r) * np.eye(r.size) - np.outer(r, r)


def kinetic_energy(omega, r) -> float:
    """Rotational kinetic energy of a unit point mass at ``r``."""
    x = cross(omega, r)
    return 0.5 * float(x @ x)


def admissible_dimensions(max_n: int) -> set[int]:
    """Dimensions ``n <= max_n`` where the ``n(n-1)/2`` entries of ``V_n`` match
    0, ``n``, or ``n`` components plus ``2n`` orthogonality constraints."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    out = set()
    for n in range(1, max_n + 1):
        params = n * (n - 1) // 2
        if params in (0, n, 3 * n):
            out.add(n)
    return out


def jacobi_failures(n: int) -> list[tuple[int, int, int]]:
    """Basis triples where ``(a x b) x c + (b x c) x a + (c x a) x b != 0``."""
    E = np.eye(n)
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a, b, c = E[i], E[j], E[k]
                jac = cross(cross(a, b), c) + cross(cross(b, c), a) + cross(cross(c, a), b)
                if np.any(jac != 0):
                    out.append((i + 1, j + 1, k + 1))
    return out
