"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run through both backends, outputs are checked for
equality, and the best wall time of ``--repeat`` runs is reported.
"""

import argparse
import time

import numpy as np

from jensen import _kernels
from jensen.group import closure_from_generators, symmetric_group
from jensen.perm import parse_cycles
from jensen.solver import Variant, build_constraints


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def oracle_args(G, variant, moduli):
    n = G.order
    xs, ys = (a.ravel() for a in np.meshgrid(np.arange(n), np.arange(n), indexing="ij"))
    t, inv = G.table, G.inverse
    b = t[xs, inv[ys]] if variant is Variant.XY_INV else t[inv[ys], xs]
    return (t[xs, ys].tolist(), b.tolist(), xs.tolist(), moduli, n, G.identity_index)


def workloads():
    for n in (4, 5):
        G = symmetric_group(n)
        for v in (Variant.XY_INV, Variant.YINV_X):
            system = build_constraints(G, v)
            rows = system.rows.tolist()
            yield f"row_basis S{n} {v.name} ({len(rows)} rows)", "row_basis", (rows, G.order)
            yield f"smith S{n} {v.name} (basis {len(system.basis)}x{G.order})", "smith", (system.basis,)
    rng = np.random.default_rng(0)
    yield "smith random 12x12 in [-3, 3]", "smith", (rng.integers(-3, 4, size=(12, 12)).tolist(),)
    klein = closure_from_generators([parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)(2 4)")])
    yield "brute_force Klein four, Z/2+Z/4", "brute_force", oracle_args(klein, Variant.XY_INV, [2, 4])
    yield "brute_force S3, Z/6", "brute_force", oracle_args(symmetric_group(3), Variant.XY_INV, [6])
    yield "brute_force S3, Z/2+Z/2+Z/2", "brute_force", oracle_args(symmetric_group(3), Variant.YINV_X, [2, 2, 2])


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.array(a, dtype=object), np.array(b, dtype=object))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.compiled is None:
        raise SystemExit("compiled core is not available (not built, or JENSEN_PURE_PYTHON is set)")
    print(f"{'workload':52s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for label, name, wargs in workloads():
        tp, rp = best_of(lambda: getattr(_kernels.pure, name)(*wargs), args.repeat)
        try:
            tc, rc = best_of(lambda: getattr(_kernels.compiled, name)(*wargs), args.repeat)
        except OverflowError:
            print(f"{label:52s} {tp:10.4f} {'overflow':>11s} {'-':>8s}")
            continue
        if not same(rp, rc):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:52s} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
