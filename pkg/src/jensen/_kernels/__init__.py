"""Hot kernels: compiled core when built, pure-Python fallback otherwise.

Set ``JENSEN_PURE_PYTHON=1`` to force the fallback. Public entry points
route int64 overflow in the compiled core back to the exact Python path.
"""

from __future__ import annotations

import os

from . import _pykernels as pure

compiled = None
if not os.environ.get("JENSEN_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

BACKEND = "compiled" if compiled is not None else "python"

__all__ = ["BACKEND", "row_basis", "smith", "brute_force", "pure", "compiled"]


def row_basis(rows, ncols: int):
    if compiled is not None and len(rows):
        try:
            return [[int(v) for v in r] for r in compiled.row_basis(rows, ncols)]
        except OverflowError:
            pass
    return pure.row_basis(rows, ncols)


def smith(A):
    if compiled is not None and len(A) and len(A[0]):
        try:
            return compiled.smith(A)
        except OverflowError:
            pass
    return pure.smith(A)


def brute_force(a, b, c, moduli, nvars: int, identity_index: int):
    if compiled is not None:
        return compiled.brute_force(a, b, c, moduli, nvars, identity_index)
    return pure.brute_force(a, b, c, moduli, nvars, identity_index)
