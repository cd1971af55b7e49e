"""Exact Smith normal form with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

__all__ = ["SNFResult", "SNFError", "smith_normal_form", "lattice_basis"]


class SNFError(AssertionError):
    """An SNF result failed its own exactness check. Always a bug."""


def _obj(M, shape) -> np.ndarray:
    out = np.zeros(shape, dtype=object)
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            out[i, j] = int(v)
    return out


@dataclass(frozen=True)
class SNFResult:
    """``A = U @ S @ V`` with ``U``, ``V`` unimodular; all arrays hold Python ints."""

    S: np.ndarray
    U: np.ndarray
    V: np.ndarray
    V_inv: np.ndarray
    U_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.S.shape)
        return [int(self.S[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries other than 1."""
        return [d for d in self.diagonal if d > 1]


def smith_normal_form(A) -> SNFResult:
    """SNF of any integer matrix (list of rows or 2-D array).

    The factorization, both inverse pairs and the diagonal chain are
    checked exactly before returning.
    """
    rows = [[int(v) for v in row] for row in A]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    if m == 0 or n == 0:
        S = np.zeros((m, n), dtype=object)
        return SNFResult(S, _eye(m), _eye(n), _eye(n), _eye(m))
    S, U, U_inv, V, V_inv = _kernels.smith(rows)
    res = SNFResult(_obj(S, (m, n)), _obj(U, (m, m)), _obj(V, (n, n)), _obj(V_inv, (n, n)), _obj(U_inv, (m, m)))
    _verify(res, _obj(rows, (m, n)))
    return res


def _eye(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _verify(res: SNFResult, A: np.ndarray) -> None:
    m, n = A.shape
    if not np.array_equal(res.U.dot(res.S).dot(res.V), A):
        raise SNFError("U S V != A")
    if not np.array_equal(res.V.dot(res.V_inv), _eye(n)):
        raise SNFError("V V_inv != I")
    if not np.array_equal(res.U.dot(res.U_inv), _eye(m)):
        raise SNFError("U U_inv != I")
    off = res.S.copy()
    k = min(m, n)
    for i in range(k):
        off[i, i] = 0
    if np.any(off != 0):
        raise SNFError("S is not diagonal")
    diag = res.diagonal
    if any(d < 0 for d in diag):
        raise SNFError("negative diagonal entry")
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a != 0 and b % a):
            raise SNFError(f"divisibility chain broken at {a}, {b}")


def lattice_basis(rows, ncols: int) -> list[list[int]]:
    """Echelon basis of the integer row space of ``rows``."""
    if len(rows) == 0:
        return []
    return _kernels.row_basis(rows, ncols)
