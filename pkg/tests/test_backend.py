import importlib.util
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from jensen import _kernels
from jensen.coeff import CoeffGroup
from jensen.solver import Variant, brute_force_solutions, build_constraints, solve

PROBE = """
import json
from jensen import BACKEND
from jensen.coeff import CoeffGroup
from jensen.group import symmetric_group
from jensen.solver import Variant, build_constraints, solve
G = symmetric_group(4)
out = {"backend": BACKEND}
for v in (Variant.XY_INV, Variant.YINV_X):
    s = build_constraints(G, v)
    sol = solve(G, CoeffGroup((2, 4)), v, system=s)
    out[v.name] = {"diag": s.diagonal(), "keys": sorted(sol.element_keys())}
print(json.dumps(out))
"""


def probe(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("JENSEN_PURE_PYTHON", None)
    if pure:
        env["JENSEN_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", PROBE], capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout)


def test_pure_python_fallback_selected_and_agrees():
    pure = probe(True)
    assert pure["backend"] == "python"
    default = probe(False)
    built = importlib.util.find_spec("jensen._kernels._ckernels") is not None
    assert default["backend"] == ("compiled" if built else "python")
    for v in ("XY_INV", "YINV_X"):
        assert pure[v] == default[v]


@pytest.mark.skipif(_kernels.compiled is None, reason="compiled core not built")
def test_brute_force_kernel_parity(s3, klein4):
    for G, factors in ((s3, (2, 2)), (klein4, (2, 4)), (s3, (6,))):
        H = CoeffGroup(factors)
        for v in (Variant.XY_INV, Variant.YINV_X):
            a = [m.key() for m in brute_force_solutions(G, H, v)]
            t = G.table
            inv = G.inverse
            n = G.order
            xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
            xs, ys = xs.ravel(), ys.ravel()
            b_ = t[xs, inv[ys]] if v is Variant.XY_INV else t[inv[ys], xs]
            args = (t[xs, ys].tolist(), b_.tolist(), xs.tolist(), list(factors), n, G.identity_index)
            pure = np.asarray(_kernels.pure.brute_force(*args))
            comp = np.asarray(_kernels.compiled.brute_force(*args))
            assert np.array_equal(pure, comp)
            assert len(a) == len(pure)


def test_row_basis_wrapper_matches_pure(s4):
    rows = build_constraints(s4, Variant.YINV_X).rows.tolist()
    assert _kernels.row_basis(rows, 24) == _kernels.pure.row_basis(rows, 24)


def test_solution_count_with_larger_coefficients(s4):
    # exercises the compiled SNF on the reduced basis with the widest modulus
    sol = solve(s4, CoeffGroup((8, 16)), Variant.XY_INV)
    assert sol.order == 4
