"""Finite groups as Cayley tables.

Elements are addressed by index everywhere downstream. ``table[i, j]`` is
the index of ``elements[i] * elements[j]`` (right-to-left composition for
permutation groups). Index 0 is the identity for groups built by closure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .perm import Permutation, Transposition, identity, parse_cycles

__all__ = [
    "FiniteGroup",
    "AbelianStructure",
    "GroupSizeError",
    "closure_from_generators",
    "symmetric_group",
    "cyclic_group",
    "group_from_table",
    "commutator_subgroup",
    "abelianization",
    "abelian_decompose",
    "load_group_file",
    "parse_group_spec",
]

DEFAULT_CLOSURE_CAP = 100_000
_EXHAUSTIVE_ASSOC = 24


class GroupSizeError(ValueError):
    """Raised when a closure or enumeration exceeds its configured cap."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    identity_index: int
    inverse: np.ndarray
    elements: tuple | None = None
    generators: tuple[int, ...] = ()
    name: str = ""

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        """Index of ``g_i ** k`` for any integer ``k``."""
        if k < 0:
            i, k = int(self.inverse[i]), -k
        result = self.identity_index
        base = i
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def power_table(self, k: int) -> np.ndarray:
        """Vector of ``g ** k`` over all elements."""
        idx = np.arange(self.order)
        base = idx if k >= 0 else self.inverse.copy()
        k = abs(k)
        result = np.full(self.order, self.identity_index, dtype=self.table.dtype)
        while k:
            if k & 1:
                result = self.table[result, base]
            base = self.table[base, base]
            k >>= 1
        return result

    def element_order(self, i: int) -> int:
        k, j = 1, i
        while j != self.identity_index:
            j = int(self.table[j, i])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def label(self, i: int) -> str:
        if self.elements is not None:
            return str(self.elements[i])
        return f"g{i}"

    def is_permutation_group(self) -> bool:
        return self.elements is not None and all(isinstance(e, Permutation) for e in self.elements)

    def index_of(self, element) -> int:
        if self.elements is None:
            raise TypeError("group has no concrete elements")
        lookup = self.__dict__.get("_lookup")
        if lookup is None:
            lookup = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_lookup", lookup)
        return lookup[element]

    def check_axioms(self, samples: int = 1000, seed: int = 0) -> None:
        """Raise ValueError unless the table is a group table."""
        n = self.order
        t = self.table
        e = self.identity_index
        idx = np.arange(n)
        if not (np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)):
            raise ValueError("identity row/column is not the identity map")
        if not np.all(t[idx, self.inverse] == e):
            raise ValueError("inverse table is wrong")
        for row in t:
            if len(np.unique(row)) != n:
                raise ValueError("table row is not a permutation of the elements")
        if n <= _EXHAUSTIVE_ASSOC:
            a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, samples))
        if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
            raise ValueError("table is not associative")


@dataclass(frozen=True)
class AbelianStructure:
    """``G^ab`` (or an abelian group) as ``Z/d1 + ... + Z/dk`` with ``d1 | d2 | ...``.

    ``projection[g]`` holds the coordinates of element ``g`` in that basis.
    """

    invariant_factors: tuple[int, ...]
    projection: np.ndarray | None = None
    basis: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def _table_from_perms(perms: Sequence[Permutation]) -> np.ndarray:
    n = max(p.degree for p in perms)
    m = len(perms)
    if n**n >= 2**62:
        index = {p: i for i, p in enumerate(perms)}
        return np.array([[index[p * q] for q in perms] for p in perms], dtype=np.int64)
    arr = np.array([p._padded(n) for p in perms], dtype=np.int64)
    weights = n ** np.arange(n, dtype=np.int64)
    keys = arr @ weights
    order = np.argsort(keys)
    sorted_keys = keys[order]
    dtype = np.int32 if m < 2**31 else np.int64
    table = np.empty((m, m), dtype=dtype)
    for i in range(m):
        # row i: perms[i] o perms[j] is arr[i][arr[j]]
        prod_keys = arr[i][arr] @ weights
        table[i] = order[np.searchsorted(sorted_keys, prod_keys)]
    return table


def _finish(table: np.ndarray, elements=None, generators=(), name="", identity_index=None) -> FiniteGroup:
    n = table.shape[0]
    if identity_index is None:
        idx = np.arange(n)
        cands = [i for i in range(n) if np.array_equal(table[i], idx)]
        if len(cands) != 1:
            raise ValueError("table has no unique identity element")
        identity_index = cands[0]
    rows, cols = np.nonzero(table == identity_index)
    inv = np.full(n, -1, dtype=table.dtype)
    inv[rows] = cols
    if np.any(inv < 0):
        raise ValueError("some element has no inverse")
    g = FiniteGroup(table, identity_index, inv, None if elements is None else tuple(elements), tuple(generators), name)
    g.check_axioms()
    return g


def closure_from_generators(gens: Sequence[Permutation], cap: int = DEFAULT_CLOSURE_CAP, name: str = "") -> FiniteGroup:
    """Breadth-first closure of ``gens`` under right multiplication.

    Element 0 is the identity; the ordering is BFS discovery order.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = max(g.degree for g in gens)
    gens = [Permutation._from0(g._padded(n)) for g in gens]
    e = identity(n)
    index = {e: 0}
    elements = [e]
    queue = deque([e])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = p * g
            if q not in index:
                if len(elements) >= cap:
                    raise GroupSizeError(f"closure exceeds cap of {cap} elements")
                index[q] = len(elements)
                elements.append(q)
                queue.append(q)
    table = _table_from_perms(elements)
    gen_idx = tuple(index[g] for g in gens)
    return _finish(table, elements, gen_idx, name, identity_index=0)


def symmetric_group(n: int, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """S_n generated by the adjacent swaps (1 2), ..., (n-1 n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gens = [Transposition(i, i + 1, n) for i in range(1, n)] or [identity(1)]
    return closure_from_generators(gens, cap=cap, name=f"S{n}")


def cyclic_group(m: int) -> FiniteGroup:
    idx = np.arange(m)
    table = (idx[:, None] + idx[None, :]) % m
    return _finish(table.astype(np.int32), None, (1 % m,), f"C{m}", identity_index=0)


def group_from_table(table, name: str = "") -> FiniteGroup:
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValueError("Cayley table must be a nonempty square array")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise ValueError("Cayley table entries must lie in 0..order-1")
    return _finish(t.astype(np.int32), None, (), name)


def _subgroup_closure(G: FiniteGroup, seeds) -> set[int]:
    members = {G.identity_index}
    frontier = [G.identity_index]
    seeds = sorted(set(int(s) for s in seeds))
    while frontier:
        nxt = []
        for a in frontier:
            for s in seeds:
                b = int(G.table[a, s])
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return members


def commutator_subgroup(G: FiniteGroup) -> set[int]:
    """Indices of ``[G, G]``, generated by all ``x y x^-1 y^-1``."""
    t, inv = G.table, G.inverse
    idx = np.arange(G.order)
    x, y = np.meshgrid(idx, idx, indexing="ij")
    comms = t[t[x, y], t[inv[x], inv[y]]]
    return _subgroup_closure(G, np.unique(comms))


def _quotient(G: FiniteGroup, normal: set[int]) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Quotient table, element -> coset index map, coset representatives."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    members = sorted(normal)
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        k = len(reps)
        reps.append(g)
        coset_of[G.table[g, members]] = k
    r = np.array(reps)
    qt = coset_of[G.table[r[:, None], r[None, :]]]
    return qt.astype(np.int32), coset_of, reps


def abelian_decompose(A: FiniteGroup) -> AbelianStructure:
    """Invariant factors of an abelian group, with an explicit basis.

    An element of maximal order splits off as a direct summand; the
    quotient is decomposed recursively and its basis lifted back.
    """
    if not A.is_abelian():
        raise ValueError("abelian_decompose needs an abelian group")
    basis = _decompose_basis(A)
    factors = tuple(o for _, o in basis)
    elems = tuple(b for b, _ in basis)
    proj = np.zeros((A.order, len(basis)), dtype=np.int64)
    seen = np.zeros(A.order, dtype=bool)
    # enumerate sum_i c_i * b_i over the coordinate box
    from itertools import product

    for coords in product(*(range(o) for o in factors)):
        g = A.identity_index
        for b, c in zip(elems, coords):
            g = int(A.table[g, A.power(b, c)])
        if seen[g]:
            raise AssertionError("basis is not independent")
        seen[g] = True
        proj[g] = coords
    if not seen.all():
        raise AssertionError("basis does not span")
    return AbelianStructure(factors, proj, elems)


def _decompose_basis(A: FiniteGroup) -> list[tuple[int, int]]:
    """Basis ``[(element, order), ...]`` with orders ascending in a divisibility chain."""
    if A.order == 1:
        return []
    orders = [A.element_order(i) for i in range(A.order)]
    m = max(orders)
    a = orders.index(m)
    cyc = [A.identity_index]
    for _ in range(m - 1):
        cyc.append(int(A.table[cyc[-1], a]))
    log = {g: j for j, g in enumerate(cyc)}
    qt, coset_of, reps = _quotient(A, set(cyc))
    Q = FiniteGroup(qt, int(coset_of[A.identity_index]), _inverse_of(qt, int(coset_of[A.identity_index])))
    lifted = []
    for qb, k in _decompose_basis(Q):
        b = reps[qb]
        j = log[A.power(b, k)]
        # maximality of ord(a) forces k | j, so b - (j/k) a has order k
        assert j % k == 0
        b2 = int(A.table[b, A.power(a, -(j // k))])
        lifted.append((b2, k))
    return lifted + [(a, m)]


def _inverse_of(table: np.ndarray, e: int) -> np.ndarray:
    rows, cols = np.nonzero(table == e)
    inv = np.empty(table.shape[0], dtype=table.dtype)
    inv[rows] = cols
    return inv


def abelianization(G: FiniteGroup) -> AbelianStructure:
    """``G / [G, G]`` as invariant factors plus a projection ``G -> Z^k``."""
    K = commutator_subgroup(G)
    qt, coset_of, _ = _quotient(G, K)
    e = int(coset_of[G.identity_index])
    Q = FiniteGroup(qt, e, _inverse_of(qt, e))
    inner = abelian_decompose(Q)
    return AbelianStructure(inner.invariant_factors, inner.projection[coset_of], ())


def parse_group_spec(text: str, cap: int = DEFAULT_CLOSURE_CAP, name: str = "") -> FiniteGroup:
    """Parse the line-oriented group format (``gens:`` or ``table:`` header)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty group spec")
    head, rest = lines[0].lower(), lines[1:]
    if head.startswith("gens:"):
        inline = lines[0][5:].strip()
        entries = ([inline] if inline else []) + rest
        if not entries:
            raise ValueError("gens: section lists no permutations")
        return closure_from_generators([parse_cycles(s) for s in entries], cap=cap, name=name)
    if head.startswith("table:"):
        tokens = (lines[0][6:] + " " + " ".join(rest)).split()
        try:
            nums = [int(t) for t in tokens]
        except ValueError:
            raise ValueError("table: section must contain integers only") from None
        if not nums:
            raise ValueError("table: section is missing the order")
        order, body = nums[0], nums[1:]
        if order < 1 or len(body) != order * order:
            raise ValueError(f"table: expected {order}x{order} entries, got {len(body)}")
        return group_from_table(np.array(body).reshape(order, order), name=name)
    raise ValueError("group spec must start with 'gens:' or 'table:'")


def load_group_file(path: str | Path, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    p = Path(path)
    return parse_group_spec(p.read_text(), cap=cap, name=p.stem)
