"""Signed-index matrix templates.

A template is an integer matrix whose entry ``s*k`` (``k >= 1``) stands for
``s * u[k-1]`` and whose zero entries are structural zeros.  Every closed-form
matrix in this package (the cross-product matrices and the
Hurwitz matrices) is stored this way, which makes exact checks of the
quadratic identities possible in integer arithmetic.
"""

from __future__ import annotations

import itertools

import numpy as np

#: Marker for an unknown entry in a reference template.
UNKNOWN = None


def as_template(rows) -> np.ndarray:
    return np.array(rows, dtype=np.int64)


def evaluate(template: np.ndarray, u) -> np.ndarray:
    """Substitute the vector ``u`` into ``template``."""
    u = np.asarray(u, dtype=np.float64)
    t = np.asarray(template)
    out = np.zeros(t.shape, dtype=np.float64)
    nz = t != 0
    out[nz] = np.sign(t[nz]) * u[np.abs(t[nz]) - 1]
    return out


def n_vars(template: np.ndarray) -> int:
    return int(np.abs(template).max(initial=0))


def coefficient_matrices(template: np.ndarray, nvars: int | None = None) -> np.ndarray:
    """Return ``E`` with ``template(u) == sum_k u[k] * E[k]`` (integer)."""
    t = np.asarray(template)
    if nvars is None:
        nvars = n_vars(t)
    return np.stack([(t == k).astype(np.int64) - (t == -k) for k in range(1, nvars + 1)])


def is_antisymmetric(template: np.ndarray) -> bool:
    t = np.asarray(template)
    return bool(np.array_equal(t, -t.T))


def _sym(Q):
    return Q + np.swapaxes(Q, 0, 1)


def has_scalar_gram(template: np.ndarray, nvars: int | None = None) -> bool:
    """``T(u)^T T(u) == |u|^2 I`` as a polynomial identity."""
    E = coefficient_matrices(template, nvars)
    m = E.shape[1]
    Q = _sym(np.einsum("kil,mij->kmlj", E, E))
    target = np.zeros_like(Q)
    for k in range(E.shape[0]):
        target[k, k] = 2 * np.eye(m, dtype=np.int64)
    return bool(np.array_equal(Q, target))


def has_cross_gram(template: np.ndarray) -> bool:
    """``V(r)^T V(r) == |r|^2 I - r r^T`` as a polynomial identity."""
    E = coefficient_matrices(template, template.shape[0])
    n = E.shape[1]
    Q = _sym(np.einsum("kil,mij->kmlj", E, E))
    eye = np.eye(n, dtype=np.int64)
    target = np.zeros_like(Q)
    for k in range(n):
        for l in range(n):
            outer = np.outer(eye[k], eye[l]) + np.outer(eye[l], eye[k])
            target[k, l] = -outer + (2 * eye if k == l else 0)
    return bool(np.array_equal(Q, target))


def repair_template(reference, check) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """Fill the ``UNKNOWN`` entries of a reference template.

    Every candidate ``0, +-1, ..., +-n`` (``n`` the largest variable index
    present) is tried at each unknown position and the assignment accepted
    by ``check`` is returned together with ``(row, col, value)`` records.
    Raises ``ValueError`` unless exactly one assignment passes.
    """
    holes = [(i, j) for i, row in enumerate(reference) for j, v in enumerate(row) if v is UNKNOWN]
    known = [[0 if v is UNKNOWN else v for v in row] for row in reference]
    base = as_template(known)
    if not holes:
        if not check(base):
            raise ValueError("template violates its invariants and has no unknown entries")
        return base, []
    n = n_vars(base)
    candidates = [0] + [s * k for k in range(1, n + 1) for s in (1, -1)]
    found = []
    for values in itertools.product(candidates, repeat=len(holes)):
        t = base.copy()
        for (i, j), v in zip(holes, values):
            t[i, j] = v
        if check(t):
            found.append((t, values))
    if len(found) != 1:
        raise ValueError(f"repair is not unique: {len(found)} assignments pass")
    t, values = found[0]
    return t, [(i, j, int(v)) for (i, j), v in zip(holes, values)]


def signed_permutation_matrix(perm) -> np.ndarray:
    """Matrix ``P`` with ``P @ e_k == sign * e_{|perm[k]|-1}`` (1-based signed entries)."""
    n = len(perm)
    P = np.zeros((n, n), dtype=np.int64)
    for k, p in enumerate(perm):
        P[abs(p) - 1, k] = 1 if p > 0 else -1
    return P


def _solve_gf2(rows: list[int], nbits: int) -> int | None:
    """Solve a GF(2) system; each row packs coefficients in bits 0..nbits-1
    and the right-hand side in bit ``nbits``.  Returns one solution or None."""
    pivots: dict[int, int] = {}
    for v in rows:
        for p, r in pivots.items():
            if v >> p & 1:
                v ^= r
        lhs = v & ((1 << nbits) - 1)
        if lhs == 0:
            if v >> nbits & 1:
                return None
            continue
        p = lhs.bit_length() - 1
        for q in pivots:
            if pivots[q] >> p & 1:
                pivots[q] ^= v
        pivots[p] = v
    sol = 0
    for p, r in pivots.items():
        if r >> nbits & 1:
            sol |= 1 << p
    return sol


def match_up_to_signs(source: np.ndarray, target: np.ndarray):
    """Find ``d_row, d_col, var_map`` with
    ``target(r) == diag(d_row) @ source(var_map(r)) @ diag(d_col)``.

    ``var_map`` is a dict ``target variable -> signed source variable``.
    Returns None when no such relabelling exists.
    """
    source = np.asarray(source)
    target = np.asarray(target)
    if source.shape != target.shape or not np.array_equal(source == 0, target == 0):
        return None
    m = source.shape[0]
    var = {}
    for s, t in zip(source.flat, target.flat):
        if s:
            if var.setdefault(abs(int(t)), abs(int(s))) != abs(int(s)):
                return None
    if len(set(var.values())) != len(var):
        return None
    tvars = sorted(var)
    slot = {v: 2 * m + i for i, v in enumerate(tvars)}
    nbits = 2 * m + len(tvars)
    rows = []
    for i in range(m):
        for j in range(m):
            s, t = int(source[i, j]), int(target[i, j])
            if s:
                rhs = int((s > 0) != (t > 0))
                rows.append((1 << i) | (1 << (m + j)) | (1 << slot[abs(t)]) | (rhs << nbits))
    sol = _solve_gf2(rows, nbits)
    if sol is None:
        return None
    sign = lambda b: -1 if sol >> b & 1 else 1
    d_row = np.array([sign(i) for i in range(m)])
    d_col = np.array([sign(m + j) for j in range(m)])
    var_map = {t: sign(slot[t]) * var[t] for t in tvars}
    return d_row, d_col, var_map
