"""Cayley-Dickson hypercomplex arithmetic.

Level ``k`` holds ``2**k`` real coefficients: reals (0), complexes (1),
quaternions (2), octonions (3), sedenions (4) and one level beyond (5).

Doubling convention, writing an element as a pair of half-level elements::

    (a, b)(c, d) = (a c - conj(d) b,  d a + b conj(c))

With it the level-2 table is the usual quaternion table
``e1 e2 = e3, e2 e3 = e1, e3 e1 = e2`` and every imaginary unit squares
to ``-1``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

MAX_LEVEL = 5


class LevelError(ValueError):
    """Operands or tables live at incompatible or unsupported levels."""


def _check_level(k: int) -> int:
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= MAX_LEVEL:
        raise LevelError(f"level must be an integer in [0, {MAX_LEVEL}], got {k!r}")
    return int(k)


class Hypercomplex:
    """Immutable element of the level-``k`` Cayley-Dickson algebra."""

    __slots__ = ("level", "coeffs")

    def __init__(self, coeffs, level: int | None = None):
        c = np.array(coeffs, dtype=np.float64).reshape(-1)
        n = c.size
        if level is None:
            if n == 0 or n & (n - 1):
                raise LevelError(f"coefficient count must be a power of two, got {n}")
            level = n.bit_length() - 1
        level = _check_level(level)
        if n != 1 << level:
            raise LevelError(f"level {level} needs {1 << level} coefficients, got {n}")
        c.setflags(write=False)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Hypercomplex is immutable")

    @classmethod
    def basis(cls, level: int, index: int) -> Hypercomplex:
        level = _check_level(level)
        if not 0 <= index < 1 << level:
            raise IndexError(f"basis index {index} out of range for level {level}")
        c = np.zeros(1 << level)
        c[index] = 1.0
        return cls(c, level)

    @classmethod
    def zero(cls, level: int) -> Hypercomplex:
        return cls(np.zeros(1 << _check_level(level)), level)

    @classmethod
    def real(cls, level: int, value: float = 1.0) -> Hypercomplex:
        c = np.zeros(1 << _check_level(level))
        c[0] = value
        return cls(c, level)

    @property
    def dim(self) -> int:
        return self.coeffs.size

    @property
    def re(self) -> float:
        return float(self.coeffs[0])

    @property
    def im(self) -> np.ndarray:
        return self.coeffs[1:]

    def _same(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        if other.level != self.level:
            raise LevelError(f"level mismatch: {self.level} vs {other.level}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return Hypercomplex(self.coeffs + other.coeffs, self.level)

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return Hypercomplex(self.coeffs - other.coeffs, self.level)

    def __neg__(self):
        return Hypercomplex(-self.coeffs, self.level)

    def __mul__(self, other):
        if isinstance(other, Hypercomplex):
            return cd_multiply(self, other)
        if np.isscalar(other):
            return Hypercomplex(self.coeffs * other, self.level)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return Hypercomplex(self.coeffs * other, self.level)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.level, self.coeffs.tobytes()))

    def __repr__(self):
        return f"Hypercomplex({self.coeffs.tolist()!r}, level={self.level})"

    def conjugate(self) -> Hypercomplex:
        return conjugate(self)

    def norm_sq(self) -> float:
        return norm_sq(self)


def _conj(x: np.ndarray) -> np.ndarray:
    out = -x
    out[..., 0] = x[..., 0]
    return out


def _cd(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # operates on trailing axis so batches go through in one call
    n = x.shape[-1]
    if n == 1:
        return x * y
    h = n // 2
    a, b = x[..., :h], x[..., h:]
    c, d = y[..., :h], y[..., h:]
    return np.concatenate([_cd(a, c) - _cd(_conj(d), b), _cd(d, a) + _cd(b, _conj(c))], axis=-1)


def cd_multiply(a: Hypercomplex, b: Hypercomplex) -> Hypercomplex:
    """Recursive Cayley-Dickson product."""
    if a.level != b.level:
        raise LevelError(f"level mismatch: {a.level} vs {b.level}")
    return Hypercomplex(_cd(a.coeffs, b.coeffs), a.level)


def multiply_arrays(x, y) -> np.ndarray:
    """Cayley-Dickson product of coefficient arrays, batched over leading axes."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape[-1] != y.shape[-1]:
        raise LevelError(f"coefficient length mismatch: {x.shape[-1]} vs {y.shape[-1]}")
    n = x.shape[-1]
    if n & (n - 1) or n > 1 << MAX_LEVEL:
        raise LevelError(f"unsupported coefficient length {n}")
    return _cd(x, y)


def conjugate(a: Hypercomplex) -> Hypercomplex:
    return Hypercomplex(_conj(a.coeffs), a.level)


def norm_sq(a: Hypercomplex) -> float:
    return float(a.coeffs @ a.coeffs)


class BasisProduct(NamedTuple):
    """``e_i e_j == sign * e_index``."""

    sign: int
    index: int


class BasisTable:
    """Signed-index multiplication table of the level-``k`` basis."""

    def __init__(self, level: int, sign: np.ndarray, index: np.ndarray):
        self.level = level
        self.sign = sign
        self.index = index
        sign.setflags(write=False)
        index.setflags(write=False)

    @property
    def dim(self) -> int:
        return 1 << self.level

    def __getitem__(self, ij) -> BasisProduct:
        i, j = ij
        return BasisProduct(int(self.sign[i, j]), int(self.index[i, j]))

    def signed(self) -> np.ndarray:
        """Grid of ``sign * (index + 1)``; the ``+1`` keeps ``e_0`` signed."""
        return self.sign * (self.index + 1)

    def structure_constants(self) -> np.ndarray:
        """``C[i, j, k]`` with ``e_i e_j = sum_k C[i, j, k] e_k``."""
        return _structure_constants(self.level)


@lru_cache(maxsize=None)
def _signed_table(level: int) -> tuple[np.ndarray, np.ndarray]:
    # integer sign arithmetic only, so the table is exact
    if level == 0:
        return np.ones((1, 1), dtype=np.int64), np.zeros((1, 1), dtype=np.int64)
    s, idx = _signed_table(level - 1)
    h = s.shape[0]
    # conj(e_j) = e_j for j = 0, -e_j otherwise
    cj = np.where(np.arange(h) == 0, 1, -1)
    sign = np.empty((2 * h, 2 * h), dtype=np.int64)
    index = np.empty((2 * h, 2 * h), dtype=np.int64)
    # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
    sign[:h, :h], index[:h, :h] = s, idx
    # (e_i, 0)(0, e_j) = (0, e_j e_i)
    sign[:h, h:], index[:h, h:] = s.T, idx.T + h
    # (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
    sign[h:, :h], index[h:, :h] = s * cj[None, :], idx + h
    # (0, e_i)(0, e_j) = (-conj(e_j) e_i, 0)
    sign[h:, h:], index[h:, h:] = -(s.T * cj[None, :]), idx.T
    return sign, index


@lru_cache(maxsize=None)
def _structure_constants(level: int) -> np.ndarray:
    s, idx = _signed_table(level)
    n = s.shape[0]
    C = np.zeros((n, n, n), dtype=np.float64)
    i, j = np.indices((n, n))
    C[i, j, idx] = s
    C.setflags(write=False)
    return C


def basis_table(k: int) -> BasisTable:
    k = _check_level(k)
    s, idx = _signed_table(k)
    return BasisTable(k, s.copy(), idx.copy())


def table_multiply(a: Hypercomplex, b: Hypercomplex, table: BasisTable) -> Hypercomplex:
    """Bilinear expansion of ``a b`` over a precomputed basis table."""
    if a.level != b.level:
        raise LevelError(f"level mismatch: {a.level} vs {b.level}")
    if table.level != a.level:
        raise LevelError(f"table is for level {table.level}, operands are level {a.level}")
    C = table.structure_constants()
    return Hypercomplex(np.einsum("i,j,ijk->k", a.coeffs, b.coeffs, C), a.level)


def associator(a: Hypercomplex, b: Hypercomplex, c: Hypercomplex) -> Hypercomplex:
    return (a * b) * c - a * (b * c)


def non_associative_triples(level: int = 3) -> list[tuple[int, int, int]]:
    """All imaginary basis triples ``(i, j, k)`` with ``(e_i e_j) e_k != e_i (e_j e_k)``."""
    t = basis_table(level)
    n = t.dim
    out = []
    for i in range(1, n):
        for j in range(1, n):
            for k in range(1, n):
                s1, ij = t[i, j]
                s2, left = t[ij, k]
                s3, jk = t[j, k]
                s4, right = t[i, jk]
                if left != right or s1 * s2 != s3 * s4:
                    out.append((i, j, k))
    return out


def zero_divisor_pairs(level: int = 4) -> list[tuple[int, int, int, int]]:
    """Basis quadruples with ``(e_i + e_j)(e_k - e_l) == 0`` exactly, ``i<j``, ``k<l``."""
    t = basis_table(level)
    n = t.dim
    sign, index = t.sign, t.index
    out = []
    for i in range(1, n):
        for j in range(i + 1, n):
            for k in range(1, n):
                for l in range(k + 1, n):
                    acc: dict[int, int] = {}
                    for p, sp in ((i, 1), (j, 1)):
                        for q, sq in ((k, 1), (l, -1)):
                            r = int(index[p, q])
                            acc[r] = acc.get(r, 0) + sp * sq * int(sign[p, q])
                    if not any(acc.values()):
                        out.append((i, j, k, l))
    return out
