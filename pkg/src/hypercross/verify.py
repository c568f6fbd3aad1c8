"""Randomised identity checks behind ``hypercross verify``.

Samples are drawn uniformly from [-1, 1] per coordinate with numpy's PCG64
generator.  Each suite gets its own stream seeded by ``(seed, crc32(name))``,
so selecting a subset of suites does not change their numbers.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import algebra, cross, hurwitz, rotation, spinor


@dataclass(frozen=True)
class VerifyReport:
    identity_name: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool

    @classmethod
    def make(cls, name, samples, residual, tol):
        residual = float(residual)
        return cls(name, int(samples), residual, float(tol), bool(residual <= tol))

    def as_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (
            f"{flag} {self.identity_name} samples={self.samples} "
            f"max_residual={self.max_residual:.3e} tol={self.tolerance:.1e}"
        )


def suite_rng(seed: int, suite: str) -> np.random.Generator:
    return np.random.default_rng([int(seed), zlib.crc32(suite.encode())])


def series_exp(A: np.ndarray, terms: int = 30, squarings: int | None = None) -> np.ndarray:
    """Matrix exponential from a ``terms``-term Taylor series with scaling and squaring.

    ``squarings`` defaults to the smallest ``s`` with ``|A| / 2**s <= 1/2``; a
    bare 30-term series is off by about ``|A|**30 / 30!`` (3e-9 at ``|A| = 2 pi``).
    """
    if squarings is None:
        norm = np.abs(A).sum(axis=1).max()
        squarings = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0 else 0
    B = A / 2.0**squarings
    out = np.eye(A.shape[0])
    term = np.eye(A.shape[0])
    for k in range(1, terms):
        term = term @ B / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def _tol(override, default):
    return default if override is None else override


def _unit(x):
    return x / np.linalg.norm(x)


def _algebra(rng, n, tol):
    out = []
    for k in (1, 2, 3):
        worst = 0.0
        for _ in range(n):
            a = algebra.Hypercomplex(rng.uniform(-1, 1, 1 << k))
            b = algebra.Hypercomplex(rng.uniform(-1, 1, 1 << k))
            lhs = (a * b).norm_sq()
            rhs = a.norm_sq() * b.norm_sq()
            worst = max(worst, abs(lhs - rhs) / rhs)
        out.append(VerifyReport.make(f"algebra.composition_k{k}", n, worst, _tol(tol, 1e-12)))
    left = right = conj = table = 0.0
    t3 = algebra.basis_table(3)
    for _ in range(n):
        a = algebra.Hypercomplex(rng.uniform(-1, 1, 8))
        b = algebra.Hypercomplex(rng.uniform(-1, 1, 8))
        left = max(left, np.abs((a * (a * b) - (a * a) * b).coeffs).max())
        right = max(right, np.abs(((b * a) * a - b * (a * a)).coeffs).max())
        conj = max(conj, np.abs(((a * b).conjugate() - b.conjugate() * a.conjugate()).coeffs).max())
        ab = a * b
        scale = max(np.abs(ab.coeffs).max(), 1e-300)
        table = max(table, np.abs(algebra.table_multiply(a, b, t3).coeffs - ab.coeffs).max() / scale)
    out.append(VerifyReport.make("algebra.alternative_left_k3", n, left, _tol(tol, 1e-12)))
    out.append(VerifyReport.make("algebra.alternative_right_k3", n, right, _tol(tol, 1e-12)))
    out.append(VerifyReport.make("algebra.conjugate_reverses_k3", n, conj, _tol(tol, 1e-12)))
    out.append(VerifyReport.make("algebra.table_matches_recursive_k3", n, table, _tol(tol, 1e-13)))
    sq = 0
    for k in range(algebra.MAX_LEVEL + 1):
        t = algebra.basis_table(k)
        for i in range(1, t.dim):
            sq += t[i, i] != (-1, 0)
    out.append(VerifyReport.make("algebra.imaginary_units_square_to_minus_one", 0, sq, 0.0))
    return out


def _cross(rng, n, tol):
    out = []
    for d in (3, 7):
        orth = anti = lag = inert = 0.0
        for _ in range(n):
            a, b = rng.uniform(-1, 1, (2, d))
            c = cross.cross(a, b)
            orth = max(orth, abs(c @ a), abs(c @ b))
            anti = max(anti, np.abs(c + cross.cross(b, a)).max())
            rhs = (a @ a) * (b @ b) - (a @ b) ** 2
            lag = max(lag, abs(c @ c - rhs) / ((a @ a) * (b @ b)))
            V = cross.cross_matrix(b)
            inert = max(inert, np.abs(cross.inertia_tensor(b) - V.T @ V).max())
        out.append(VerifyReport.make(f"cross.orthogonal_to_operands_n{d}", n, orth, _tol(tol, 1e-12)))
        out.append(VerifyReport.make(f"cross.antisymmetric_n{d}", n, anti, _tol(tol, 1e-12)))
        out.append(VerifyReport.make(f"cross.lagrange_identity_n{d}", n, lag, _tol(tol, 1e-12)))
        out.append(VerifyReport.make(f"cross.inertia_equals_VtV_n{d}", n, inert, _tol(tol, 1e-12)))
    return out


def _eq15(rng, n, tol):
    out = []
    for d in (3, 7):
        worst = 0.0
        for _ in range(n):
            r = _unit(rng.uniform(-1, 1, d))
            V = cross.cross_matrix(r)
            worst = max(worst, np.abs(V @ V @ V + (r @ r) * V).max())
        out.append(VerifyReport.make(f"eq15.cubic_identity_n{d}", n, worst, _tol(tol, 1e-10)))
    return out


def _eq16(rng, n, tol):
    out = []
    for d in (3, 7):
        worst = orth = 0.0
        for _ in range(n):
            axis = _unit(rng.uniform(-1, 1, d))
            theta = rng.uniform(-2 * np.pi, 2 * np.pi)
            R = rotation.rotation_matrix(axis, theta)
            worst = max(worst, np.abs(R - series_exp(theta * cross.cross_matrix(axis))).max())
            orth = max(orth, np.abs(R.T @ R - np.eye(d)).max())
        out.append(VerifyReport.make(f"eq16.closed_form_matches_series_n{d}", n, worst, _tol(tol, 1e-10)))
        out.append(VerifyReport.make(f"eq16.rotation_orthogonal_n{d}", n, orth, _tol(tol, 1e-10)))
    return out


def _hurwitz(rng, n, tol):
    out = []
    for m in (2, 4, 8):
        gram = square = 0.0
        d = hurwitz.diagonal_index(m)
        for _ in range(n):
            u = rng.uniform(-1, 1, m)
            H = hurwitz.hurwitz_matrix(u)
            s = u @ u
            gram = max(gram, np.abs(H.T @ H - s * np.eye(m)).max() / s)
            u[d] = 0.0
            P = hurwitz.hurwitz_matrix(u)
            s = u @ u
            square = max(square, np.abs(P @ P + s * np.eye(m)).max() / s)
        out.append(VerifyReport.make(f"hurwitz.orthogonal_m{m}", n, gram, _tol(tol, 1e-12)))
        out.append(VerifyReport.make(f"hurwitz.square_minus_identity_m{m}", n, square, _tol(tol, 1e-12)))
    for d in (3, 7):
        worst = 0.0
        for _ in range(n):
            r = rng.uniform(-1, 1, d)
            B = hurwitz.bordered_from_cross(r)
            worst = max(worst, np.abs(B.T @ B - (r @ r) * np.eye(d + 1)).max() / (r @ r))
        out.append(VerifyReport.make(f"hurwitz.bordered_orthogonal_n{d}", n, worst, _tol(tol, 1e-12)))
    return out


def _sums_of_squares(rng, n, tol):
    out = []
    for name, f in hurwitz.TRANSFORMS.items():
        worst = 0.0
        for _ in range(n):
            u = rng.uniform(-1, 1, hurwitz.TRANSFORM_INPUT_DIMS[name])
            z = f(u)
            s = u @ u
            worst = max(worst, abs(np.linalg.norm(z) - s) / s)
        out.append(VerifyReport.make(f"sums_of_squares.{name}", n, worst, _tol(tol, 1e-12)))
    return out


def _spinor(rng, n, tol):
    pauli = dirac = imag = 0.0
    for _ in range(n):
        u = rng.uniform(-1, 1, 4)
        pauli = max(pauli, np.abs(spinor.pauli_form(spinor.spinor_from_real(u)) - hurwitz.ks_transform(u)).max())
        u = rng.uniform(-1, 1, 8)
        v = spinor.spinor_from_real(u)
        raw = spinor.quadratic_forms(v, spinor.DIRAC_MATRICES)
        imag = max(imag, np.abs(raw.imag).max())
        dirac = max(dirac, np.abs(raw.real - hurwitz.hurwitz_r8_to_r5(u)).max())
    return [
        VerifyReport.make("spinor.pauli_matches_ks", n, pauli, _tol(tol, 1e-12)),
        VerifyReport.make("spinor.dirac_matches_r8r5", n, dirac, _tol(tol, 1e-12)),
        VerifyReport.make("spinor.dirac_forms_real", n, imag, _tol(tol, 1e-14)),
    ]


def _sedenion(rng, n, tol):
    i, j, k, l = algebra.zero_divisor_pairs(4)[0]
    a = algebra.Hypercomplex.basis(4, i) + algebra.Hypercomplex.basis(4, j)
    b = algebra.Hypercomplex.basis(4, k) - algebra.Hypercomplex.basis(4, l)
    return [VerifyReport.make("sedenion.zero_divisor_product", 1, np.abs((a * b).coeffs).max(), 0.0)]


SUITES: dict[str, Callable] = {
    "algebra": _algebra,
    "cross": _cross,
    "eq15": _eq15,
    "eq16": _eq16,
    "hurwitz": _hurwitz,
    "sedenion": _sedenion,
    "spinor": _spinor,
    "sums_of_squares": _sums_of_squares,
}


def run_suites(names=None, samples: int = 1000, seed: int = 0, tol: float | None = None) -> list[VerifyReport]:
    names = sorted(SUITES) if not names else list(names)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(sorted(SUITES))}")
    reports = []
    for name in names:
        reports.extend(SUITES[name](suite_rng(seed, name), samples, tol))
    return sorted(reports, key=lambda r: r.identity_name)


def bench(level: int, iters: int, seed: int = 0) -> dict:
    """Time recursive vs. table-driven multiplication on the same operands."""
    rng = np.random.default_rng(seed)
    dim = 1 << level
    pairs = [
        (algebra.Hypercomplex(rng.uniform(-1, 1, dim)), algebra.Hypercomplex(rng.uniform(-1, 1, dim)))
        for _ in range(iters)
    ]
    table = algebra.basis_table(level)
    table.structure_constants()

    t0 = time.perf_counter()
    rec = sum(float(algebra.cd_multiply(a, b).coeffs.sum()) for a, b in pairs)
    t1 = time.perf_counter()
    tab = sum(float(algebra.table_multiply(a, b, table).coeffs.sum()) for a, b in pairs)
    t2 = time.perf_counter()
    return {
        "level": level,
        "iters": iters,
        "recursive_seconds_per_multiply": (t1 - t0) / max(iters, 1),
        "table_seconds_per_multiply": (t2 - t1) / max(iters, 1),
        "recursive_checksum": rec,
        "table_checksum": tab,
    }
