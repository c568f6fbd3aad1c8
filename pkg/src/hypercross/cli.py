"""Command-line interface: ``hypercross <command> ...``.

Vectors are comma-separated decimals (``1,-2.5,3e-4``).  Exit status is 0 on
success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

import numpy as np

from . import algebra, cross, hurwitz, rotation, verify

SEED_ENV = "HYPERCROSS_SEED"


class UsageError(Exception):
    pass


def parse_vector(text: str, name: str = "vector") -> np.ndarray:
    parts = text.strip().split(",")
    out = []
    for pos, p in enumerate(parts, 1):
        try:
            out.append(float(p))
        except ValueError:
            raise UsageError(f"malformed {name} at component {pos}: {p.strip()!r}") from None
    return np.array(out)


def _fmt(x: float, precision: int) -> str:
    return f"{float(x) + 0.0:.{precision}g}"


def _fmt_vec(v, precision: int) -> str:
    return ",".join(_fmt(x, precision) for x in v)


def _fmt_mat(M, precision: int) -> str:
    return "\n".join(_fmt_vec(row, precision) for row in M)


def _jsonable(x):
    if isinstance(x, np.ndarray):
        return (x + 0.0).tolist()
    return x


def _need_dim(v: np.ndarray, dims, what: str) -> None:
    if v.size not in dims:
        allowed = ", ".join(str(d) for d in dims)
        raise UsageError(f"{what} must have {allowed} components, got {v.size}")


def cmd_mul(args):
    k = args.k
    if not 0 <= k <= algebra.MAX_LEVEL:
        raise UsageError(f"level must be in [0, {algebra.MAX_LEVEL}]")
    a, b = parse_vector(args.a, "a"), parse_vector(args.b, "b")
    for name, v in (("a", a), ("b", b)):
        _need_dim(v, (1 << k,), name)
    return algebra.cd_multiply(algebra.Hypercomplex(a, k), algebra.Hypercomplex(b, k)).coeffs


def _table_lines(args):
    if args.cross is not None:
        n = args.cross
        E = np.eye(n)
        lines = [f"# cross(e_i, e_j) = V(e_j) e_i = e_i x e_j, n={n}"]
        grid = []
        for i in range(n):
            row = []
            for j in range(n):
                c = cross.cross(E[i], E[j])
                nz = np.flatnonzero(c)
                row.append("0" if nz.size == 0 else f"{'+' if c[nz[0]] > 0 else '-'}e{nz[0] + 1}")
            grid.append(row)
        return lines, grid
    t = algebra.basis_table(args.k)
    lines = [f"# e_i e_j, level {args.k}; (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))"]
    grid = [[f"{'+' if t.sign[i, j] > 0 else '-'}e{t.index[i, j]}" for j in range(t.dim)] for i in range(t.dim)]
    return lines, grid


def cmd_table(args):
    if args.cross is None and not 0 <= args.k <= algebra.MAX_LEVEL:
        raise UsageError(f"level must be in [0, {algebra.MAX_LEVEL}]")
    lines, grid = _table_lines(args)
    if args.json:
        return {"convention": lines[0][2:], "table": grid}
    return "\n".join(lines + [" ".join(f"{c:>4}" for c in row) for row in grid])


def cmd_cross(args):
    a, b = parse_vector(args.a, "a"), parse_vector(args.b, "b")
    _need_dim(a, (args.n,), "a")
    _need_dim(b, (args.n,), "b")
    return cross.cross(a, b)


def cmd_crossmat(args):
    r = parse_vector(args.r, "r")
    _need_dim(r, (args.n,), "r")
    return cross.cross_matrix(r)


def cmd_inertia(args):
    return cross.inertia_tensor(parse_vector(args.r, "r"))


def cmd_hurwitz(args):
    u = parse_vector(args.u, "u")
    _need_dim(u, (args.m,), "u")
    return hurwitz.hurwitz_matrix(u)


def cmd_transform(args):
    u = parse_vector(args.u, "u")
    _need_dim(u, (hurwitz.TRANSFORM_INPUT_DIMS[args.kind],), "u")
    return hurwitz.TRANSFORMS[args.kind](u)


def cmd_rotate(args):
    v = parse_vector(args.v, "v")
    axis = parse_vector(args.axis, "axis")
    _need_dim(v, (args.n,), "v")
    _need_dim(axis, (args.n,), "axis")
    if not np.linalg.norm(axis) > 0:
        raise UsageError("axis must be nonzero")
    return rotation.rotate(v, axis, args.theta)


def cmd_dims(args):
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    dims = sorted(cross.admissible_dimensions(args.max))
    if args.json:
        return {"dimensions": dims}
    return " ".join(str(d) for d in dims)


def cmd_verify(args):
    try:
        reports = verify.run_suites(args.suite, samples=args.samples, seed=args.seed, tol=args.tol)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    ok = all(r.passed for r in reports)
    if args.json:
        text = json.dumps({"command": "verify", "seed": args.seed, "passed": ok, "reports": [r.as_dict() for r in reports]})
    else:
        text = "\n".join(r.line() for r in reports)
        text += f"\n{'PASS' if ok else 'FAIL'} {sum(r.passed for r in reports)}/{len(reports)} identities"
    return text, (0 if ok else 1)


def cmd_bench(args):
    if not 0 <= args.level <= algebra.MAX_LEVEL:
        raise UsageError(f"level must be in [0, {algebra.MAX_LEVEL}]")
    if args.iters < 1:
        raise UsageError("--iters must be >= 1")
    res = verify.bench(args.level, args.iters)
    if args.json:
        return res
    return "\n".join(f"{k}={v}" for k, v in res.items())


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--json", action="store_true", help="emit one JSON object")
    fmt.add_argument("--precision", type=int, default=12, help="significant digits (default 12)")

    p = argparse.ArgumentParser(prog="hypercross", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mul", parents=[fmt], help="hypercomplex product")
    s.add_argument("-k", type=int, required=True, help="Cayley-Dickson level")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("table", parents=[fmt], help="basis multiplication table")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("-k", type=int, help="Cayley-Dickson level")
    g.add_argument("--cross", type=int, choices=(3, 7), help="cross-product table instead")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("cross", parents=[fmt], help="cross product a x b")
    s.add_argument("-n", type=int, choices=(3, 7), required=True)
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_cross)

    s = sub.add_parser("crossmat", parents=[fmt], help="cross-product matrix V_n(r)")
    s.add_argument("-n", type=int, choices=(3, 7), required=True)
    s.add_argument("r")
    s.set_defaults(func=cmd_crossmat)

    s = sub.add_parser("inertia", parents=[fmt], help="inertia tensor |r|^2 I - r r^T")
    s.add_argument("r")
    s.set_defaults(func=cmd_inertia)

    s = sub.add_parser("hurwitz", parents=[fmt], help="Hurwitz matrix H_m(u)")
    s.add_argument("-m", type=int, choices=hurwitz.HURWITZ_SIZES, required=True)
    s.add_argument("u")
    s.set_defaults(func=cmd_hurwitz)

    s = sub.add_parser("transform", parents=[fmt], help="Hurwitz transformation")
    s.add_argument("--kind", choices=tuple(hurwitz.TRANSFORMS), required=True)
    s.add_argument("u")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("rotate", parents=[fmt], help="rotate v about axis by theta")
    s.add_argument("-n", type=int, choices=(3, 7), required=True)
    s.add_argument("--axis", required=True)
    s.add_argument("--theta", type=float, required=True, help="radians")
    s.add_argument("v")
    s.set_defaults(func=cmd_rotate)

    s = sub.add_parser("dims", parents=[fmt], help="dimensions admitting a cross product")
    s.add_argument("--max", type=int, required=True)
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("verify", parents=[fmt], help="run identity suites")
    s.add_argument("--suite", action="append", choices=sorted(verify.SUITES), help="repeatable; default all")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--tol", type=float, default=None, help="override every tolerance")
    s.add_argument("--seed", type=int, default=None, help=f"default ${SEED_ENV} or 0")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", parents=[fmt], help="recursive vs table multiply timing")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--iters", type=int, default=10000)
    s.set_defaults(func=cmd_bench)
    return p


_NEGATIVE_VECTOR = re.compile(r"^-[0-9.]")


def _protect_negative_vectors(argv):
    # argparse reads "-1,2" as an option; a leading space hides the dash and float() ignores it
    return [" " + a if _NEGATIVE_VECTOR.match(a) and "," in a else a for a in argv]


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_vectors(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "verify" and args.seed is None:
            args.seed = _default_seed()
        out = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"hypercross {args.command}: error: {e}", file=stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    if isinstance(out, np.ndarray):
        if args.json:
            out = json.dumps({"command": args.command, "result": _jsonable(out)})
        elif out.ndim == 2:
            out = _fmt_mat(out, args.precision)
        else:
            out = _fmt_vec(out, args.precision)
    elif isinstance(out, dict):
        out = json.dumps({"command": args.command, **out})
    print(out, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
