"""Exact solution groups of the two Jensen equations on a finite group.

For ``f: G -> H`` with ``f(e) = 0`` the equations are

    XY_INV:  f(xy) + f(xy^-1) = 2 f(x)
    YINV_X:  f(xy) + f(y^-1 x) = 2 f(x)

Both are integer-linear in the unknowns ``f(g)``, so the solutions over
each cyclic factor ``Z/d`` of ``H`` form the kernel of one integer matrix
reduced mod ``d``. That kernel is read off a Smith normal form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd, prod

import numpy as np

from . import _kernels
from .coeff import CoeffElement, CoeffGroup, torsion_subgroup
from .group import FiniteGroup, GroupSizeError, abelianization
from .snf import SNFResult, lattice_basis, smith_normal_form

__all__ = [
    "Variant",
    "ConstraintSystem",
    "GroupMap",
    "SolutionGroup",
    "ComparisonReport",
    "SolverError",
    "build_constraints",
    "solve_mod",
    "solve",
    "hom_group",
    "compare",
    "brute_force_solutions",
    "equation_triples",
]

DEFAULT_COMPARE_CAP = 10**6
DEFAULT_ORACLE_CAP = 10**7


class SolverError(RuntimeError):
    """A computed generator failed pointwise verification."""


class Variant(enum.Enum):
    XY_INV = 1
    YINV_X = 2

    @classmethod
    def parse(cls, text) -> Variant:
        if isinstance(text, Variant):
            return text
        key = str(text).strip().upper()
        for v in cls:
            if key in (v.name, str(v.value)):
                return v
        raise ValueError(f"unknown variant {text!r}; use 1 or 2")


HOM = "HOM"


def equation_triples(G: FiniteGroup, variant: Variant) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Index arrays ``(a, b, c)`` over all pairs ``(x, y)`` so that the
    equation reads ``f(a) + f(b) = 2 f(c)``; pair ``(x, y)`` sits at ``x*N + y``."""
    n = G.order
    idx = np.arange(n)
    x, y = np.meshgrid(idx, idx, indexing="ij")
    t, inv = G.table, G.inverse
    a = t[x, y]
    if variant is Variant.XY_INV:
        b = t[x, inv[y]]
    else:
        b = t[inv[y], x]
    return a.ravel(), b.ravel(), x.ravel()


def _reduce(values: np.ndarray, factors) -> np.ndarray:
    out = values.copy()
    for j, d in enumerate(factors):
        if d:
            out[:, j] %= d
    return out


def _zero_mod(residual: np.ndarray, factors) -> bool:
    for j, d in enumerate(factors):
        col = residual[..., j]
        if d:
            col = col % d
        if np.any(col != 0):
            return False
    return True


class GroupMap:
    """A map ``f: G -> H``, stored as an ``(|G|, rank H)`` array of coordinates."""

    __slots__ = ("group", "coeff", "values")

    def __init__(self, group: FiniteGroup, coeff: CoeffGroup, values):
        arr = np.array(values, dtype=object if 0 in coeff.factors else np.int64)
        arr = arr.reshape(group.order, coeff.rank)
        self.group = group
        self.coeff = coeff
        self.values = _reduce(arr, coeff.factors)

    @classmethod
    def zero(cls, group: FiniteGroup, coeff: CoeffGroup) -> GroupMap:
        return cls(group, coeff, np.zeros((group.order, coeff.rank), dtype=np.int64))

    @classmethod
    def from_function(cls, group: FiniteGroup, coeff: CoeffGroup, fn) -> GroupMap:
        """``fn`` takes an element index and returns a CoeffElement."""
        return cls(group, coeff, [fn(i).coords for i in range(group.order)])

    def __getitem__(self, i: int) -> CoeffElement:
        return CoeffElement(self.coeff, [int(v) for v in self.values[i]])

    def __call__(self, element) -> CoeffElement:
        return self[self.group.index_of(element)]

    def key(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.values.ravel())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMap):
            return NotImplemented
        return self.group is other.group and self.coeff == other.coeff and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __add__(self, other: GroupMap) -> GroupMap:
        return GroupMap(self.group, self.coeff, self.values + other.values)

    def __mul__(self, n: int) -> GroupMap:
        return GroupMap(self.group, self.coeff, self.values * int(n))

    __rmul__ = __mul__

    def is_normalized(self) -> bool:
        return not np.any(self.values[self.group.identity_index] != 0)

    def satisfies(self, kind) -> bool:
        """Check ``f`` pointwise on all pairs against a variant or ``"HOM"``."""
        if not self.is_normalized():
            return False
        v = self.values
        if kind == HOM:
            t = self.group.table
            res = v[t] - v[:, None, :] - v[None, :, :]
        else:
            a, b, c = equation_triples(self.group, Variant.parse(kind))
            res = v[a] + v[b] - 2 * v[c]
        return _zero_mod(res, self.coeff.factors)

    def is_homomorphism(self) -> bool:
        return self.satisfies(HOM)

    def __repr__(self) -> str:
        return f"GroupMap({self.key()})"


@dataclass(frozen=True, eq=False)
class ConstraintSystem:
    """Deduplicated, sign-normalized integer rows over the unknowns ``f(g)``."""

    variant: Variant
    num_vars: int
    rows: np.ndarray
    identity_index: int
    raw_row_count: int

    @property
    def row_count(self) -> int:
        return self.rows.shape[0]

    @cached_property
    def basis(self) -> list[list[int]]:
        """A basis of the row lattice; same solutions mod any ``d``."""
        return lattice_basis(self.rows, self.num_vars)

    @cached_property
    def snf(self) -> SNFResult:
        return smith_normal_form(self.basis)

    def diagonal(self) -> list[int]:
        """SNF diagonal padded with zeros to ``num_vars`` entries."""
        d = self.snf.diagonal
        return d + [0] * (self.num_vars - len(d))


def build_constraints(G: FiniteGroup, variant) -> ConstraintSystem:
    """One row ``e_a + e_b - 2 e_c`` per pair plus the row ``e_identity``."""
    variant = Variant.parse(variant)
    n = G.order
    a, b, c = equation_triples(G, variant)
    p = len(a)
    rows = np.zeros((p, n), dtype=np.int64)
    r = np.arange(p)
    np.add.at(rows, (r, a), 1)
    np.add.at(rows, (r, b), 1)
    np.add.at(rows, (r, c), -2)
    norm = np.zeros((1, n), dtype=np.int64)
    norm[0, G.identity_index] = 1
    rows = np.vstack([norm, rows])
    rows = rows[np.any(rows != 0, axis=1)]
    lead = rows[np.arange(len(rows)), np.argmax(rows != 0, axis=1)]
    rows = rows * np.where(lead < 0, -1, 1)[:, None]
    rows = np.unique(rows, axis=0)[::-1]
    return ConstraintSystem(variant, n, np.ascontiguousarray(rows), G.identity_index, p + 1)


@dataclass(frozen=True, eq=False)
class SolutionGroup:
    """Direct sum of cyclic groups ``Z/factors[i]`` (0 means ``Z``), one per generator."""

    group: FiniteGroup
    coeff: CoeffGroup
    kind: object
    factors: tuple[int, ...]
    generators: tuple[GroupMap, ...]
    snf_diagonal: tuple[int, ...] = ()
    constraint_rows: int = 0

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.factors) if self.is_finite else None

    @property
    def count(self) -> int | str:
        return self.order if self.is_finite else f"infinite (rank {self.rank})"

    @property
    def invariant_factors(self) -> list[int]:
        """Factors rewritten as a chain ``d1 | d2 | ...`` (zeros last)."""
        return list(CoeffGroup(self.factors).normalized().factors)

    def contains(self, f: GroupMap) -> bool:
        return f.satisfies(self.kind)

    def elements(self, cap: int = DEFAULT_COMPARE_CAP) -> list[GroupMap]:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite solution group")
        if self.order > cap:
            raise GroupSizeError(f"solution group of order {self.order} exceeds enumeration cap {cap}")
        base = np.zeros((self.group.order, self.coeff.rank), dtype=self.generators[0].values.dtype if self.generators else np.int64)
        out = []
        for cs in product(*(range(d) for d in self.factors)):
            v = base.copy()
            for c, g in zip(cs, self.generators):
                if c:
                    v = v + c * g.values
            out.append(GroupMap(self.group, self.coeff, v))
        return out

    def element_keys(self, cap: int = DEFAULT_COMPARE_CAP) -> set[tuple[int, ...]]:
        return {f.key() for f in self.elements(cap)}


def _kind_name(kind) -> str:
    return kind.name if isinstance(kind, Variant) else str(kind)


def solve_mod(system: ConstraintSystem, d: int) -> tuple[tuple[int, ...], list[np.ndarray]]:
    """Solutions of ``A x = 0`` over ``Z/d`` (``d = 0``: over ``Z``).

    Returns ``(factors, generator vectors)``. With ``A = U S V`` the
    solutions are ``x = V^-1 y`` where ``s_i y_i = 0``; coordinate ``i``
    contributes a cyclic factor of order ``gcd(s_i, d)`` generated by
    ``(d / gcd) e_i``, or a free factor when ``d = 0`` and ``s_i = 0``.
    """
    if d < 0 or d == 1:
        if d == 1:
            return (), []
        raise ValueError("modulus must be 0 or >= 2")
    diag = system.diagonal()
    W = system.snf.V_inv
    factors, gens = [], []
    for i, s in enumerate(diag):
        if d == 0:
            if s == 0:
                factors.append(0)
                gens.append(np.array([int(v) for v in W[:, i]], dtype=object))
            continue
        g = gcd(s, d)
        if g > 1:
            factors.append(g)
            gens.append(np.array([(d // g) * int(v) % d for v in W[:, i]], dtype=np.int64))
    return tuple(factors), gens


def _variant_solutions(G: FiniteGroup, H: CoeffGroup, system: ConstraintSystem) -> SolutionGroup:
    factors, gens = [], []
    for j, d in enumerate(H.factors):
        fs, vecs = solve_mod(system, d)
        for f, vec in zip(fs, vecs):
            vals = np.zeros((G.order, H.rank), dtype=object if 0 in H.factors else np.int64)
            vals[:, j] = vec
            gm = GroupMap(G, H, vals)
            if not gm.satisfies(system.variant):
                raise SolverError(f"generator for factor Z/{d} violates {system.variant.name}")
            factors.append(f)
            gens.append(gm)
    return SolutionGroup(
        G, H, system.variant, tuple(factors), tuple(gens), tuple(system.diagonal()), system.row_count
    )


def solve(G: FiniteGroup, H: CoeffGroup, variant, system: ConstraintSystem | None = None) -> SolutionGroup:
    """The normalized solution group of ``variant`` as a direct sum over H's factors."""
    variant = Variant.parse(variant)
    if system is None:
        system = build_constraints(G, variant)
    elif system.variant is not variant:
        raise ValueError("constraint system built for a different variant")
    return _variant_solutions(G, H, system)


def hom_group(G: FiniteGroup, H: CoeffGroup) -> SolutionGroup:
    """``Hom(G, H) = Hom(G^ab, H) = sum_i H[m_i]`` for ``G^ab = sum_i Z/m_i``."""
    ab = abelianization(G)
    factors, gens = [], []
    dtype = object if 0 in H.factors else np.int64
    for i, m in enumerate(ab.invariant_factors):
        tors = torsion_subgroup(H, m)
        coord = ab.projection[:, i]
        for o, t in zip(tors.factors, tors.generators):
            vals = np.outer(coord, np.array(t.coords, dtype=dtype))
            gm = GroupMap(G, H, vals)
            if not gm.is_homomorphism():
                raise SolverError("lifted homomorphism is not additive")
            factors.append(o)
            gens.append(gm)
    return SolutionGroup(G, H, HOM, tuple(factors), tuple(gens))


@dataclass
class ComparisonReport:
    a_kind: str
    b_kind: str
    a_order: int | None
    b_order: int | None
    a_rank: int
    b_rank: int
    contained: bool
    orders_equal: bool
    enumerated: bool
    sets_equal: bool | None
    verdict: str
    a_invariant_factors: list[int] = field(default_factory=list)
    b_invariant_factors: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def compare(A: SolutionGroup, B: SolutionGroup, cap: int = DEFAULT_COMPARE_CAP) -> ComparisonReport:
    """Compare ``B`` against ``A`` (typically ``B = Hom``).

    Verdicts: EQUAL and HOM_STRICTLY_SMALLER after exhaustive enumeration;
    ORDERS_ONLY_EQUAL / ORDERS_ONLY_DIFFER when enumeration is out of reach;
    DIFFERENT when enumerated sets are incomparable.
    """
    if A.group is not B.group or A.coeff != B.coeff:
        raise ValueError("solution groups live over different (G, H)")
    contained = all(A.contains(g) for g in B.generators)
    size_a = (A.order, A.rank) if A.is_finite else (prod(d for d in A.factors if d), A.rank)
    size_b = (B.order, B.rank) if B.is_finite else (prod(d for d in B.factors if d), B.rank)
    orders_equal = size_a == size_b
    enumerated = A.is_finite and B.is_finite and A.order <= cap and B.order <= cap
    sets_equal = None
    if enumerated:
        ka, kb = A.element_keys(cap), B.element_keys(cap)
        sets_equal = ka == kb
        if sets_equal:
            verdict = "EQUAL"
        elif kb < ka:
            verdict = "HOM_STRICTLY_SMALLER"
        else:
            verdict = "DIFFERENT"
    else:
        verdict = "ORDERS_ONLY_EQUAL" if orders_equal else "ORDERS_ONLY_DIFFER"
    return ComparisonReport(
        _kind_name(A.kind),
        _kind_name(B.kind),
        A.order,
        B.order,
        A.rank,
        B.rank,
        contained,
        orders_equal,
        enumerated,
        sets_equal,
        verdict,
        A.invariant_factors,
        B.invariant_factors,
    )


def brute_force_solutions(G: FiniteGroup, H: CoeffGroup, variant, cap: int = DEFAULT_ORACLE_CAP) -> list[GroupMap]:
    """Every normalized map satisfying the equation, by exhaustive search.

    Independent of the constraint builder and SNF path: the pair list is
    derived directly from the Cayley table here.
    """
    variant = Variant.parse(variant)
    if not H.is_finite:
        raise ValueError("brute force needs a finite coefficient group")
    n = G.order
    count = H.order ** (n - 1)
    if count > cap:
        raise GroupSizeError(f"|H|^(|G|-1) = {count} exceeds oracle cap {cap}")
    a, b, c = [], [], []
    for x in range(n):
        for y in range(n):
            yi = int(G.inverse[y])
            a.append(int(G.table[x, y]))
            b.append(int(G.table[x, yi]) if variant is Variant.XY_INV else int(G.table[yi, x]))
            c.append(x)
    sols = _kernels.brute_force(a, b, c, list(H.factors), n, G.identity_index)
    maps = [GroupMap(G, H, s) for s in sols]
    return sorted(maps, key=GroupMap.key)


def solve_report(G: FiniteGroup, H: CoeffGroup, variant, cap: int = DEFAULT_COMPARE_CAP) -> dict:
    """Machine-readable summary of one variant against Hom(G, H)."""
    sol = solve(G, H, variant)
    hom = hom_group(G, H)
    cmp = compare(sol, hom, cap)
    return {
        "variant": _kind_name(sol.kind),
        "group_order": G.order,
        "constraint_rows": sol.constraint_rows,
        "snf_diagonal": list(sol.snf_diagonal),
        "solution_invariant_factors": sol.invariant_factors,
        "solution_order": sol.count,
        "hom_invariant_factors": hom.invariant_factors,
        "hom_order": hom.count,
        "hom_contained": cmp.contained,
        "verdict": cmp.verdict,
    }
