"""Executable identity checks for candidate solutions, and the closed form on S_n.

Each check evaluates an integer combination of values ``f(word)`` over many
instances (triples ``x, y, z`` and, where relevant, an exponent ``n``) and
records the instances where the combination is nonzero in H.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coeff import CoeffElement, CoeffGroup, torsion_subgroup
from .group import FiniteGroup, symmetric_group
from .perm import Permutation, parity
from .solver import (
    DEFAULT_COMPARE_CAP,
    ComparisonReport,
    GroupMap,
    SolutionGroup,
    Variant,
    compare,
    hom_group,
    solve,
)

__all__ = [
    "IdentityReport",
    "check_prop_2_1",
    "check_prop_3_1",
    "check_order_two",
    "check_rearrangement",
    "check_last_transposition",
    "check_transposition_pairs",
    "closed_form_eval",
    "closed_form_map",
    "verify_theorems",
    "TheoremReport",
    "EXPONENTS",
]

EXHAUSTIVE_LIMIT = 24
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0
EXPONENTS = tuple(range(-3, 6))
MAX_WITNESSES = 20


@dataclass
class IdentityReport:
    identity_id: str
    checked: int
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0
    exhaustive: bool = True
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self, group: FiniteGroup | None = None) -> dict:
        wit = []
        for w in self.failures:
            entry = dict(w)
            if group is not None:
                for key in ("x", "y", "z"):
                    if key in w:
                        entry[key + "_label"] = group.label(w[key])
            wit.append(entry)
        return {
            "identity": self.identity_id,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "failures": wit,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
        }


def _triples(G: FiniteGroup, exhaustive: bool | None, samples: int, seed: int):
    n = G.order
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_LIMIT
    if exhaustive:
        idx = np.arange(n)
        x, y, z = (a.ravel() for a in np.meshgrid(idx, idx, idx, indexing="ij"))
        return x, y, z, True
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, n, size=(3, samples))
    return x, y, z, False


def _bad(res: np.ndarray, factors) -> np.ndarray:
    """Instances whose residual vector is nonzero in H."""
    bad = np.zeros(res.shape[0], dtype=bool)
    for j, d in enumerate(factors):
        col = res[:, j]
        if d:
            col = col % d
        bad |= col != 0
    return bad


def _report(identity_id, bad, witness_cols, exhaustive=True, seed=None) -> IdentityReport:
    hits = np.flatnonzero(bad)
    wit = [{k: int(col[i]) for k, col in witness_cols.items()} for i in hits[:MAX_WITNESSES]]
    return IdentityReport(identity_id, int(bad.size), wit, int(hits.size), exhaustive, None if exhaustive else seed)


class _Ctx:
    def __init__(self, f: GroupMap, exhaustive, samples, seed):
        self.f = f
        self.G = f.group
        self.t = f.group.table
        self.v = f.values
        self.factors = f.coeff.factors
        self.x, self.y, self.z, self.exhaustive = _triples(self.G, exhaustive, samples, seed)
        self.seed = seed

    def m(self, a, b):
        return self.t[a, b]

    def check(self, identity_id, terms) -> IdentityReport:
        """``terms``: list of (coefficient, element-index array)."""
        res = sum(c * self.v[idx] for c, idx in terms)
        bad = _bad(res, self.factors)
        return _report(identity_id, bad, {"x": self.x, "y": self.y, "z": self.z}, self.exhaustive, self.seed)

    def triple_words(self):
        x, y, z, m = self.x, self.y, self.z, self.m
        return {
            "x": x, "y": y, "z": z,
            "xy": m(x, y), "xz": m(x, z), "yz": m(y, z),
            "xyz": m(m(x, y), z), "xzy": m(m(x, z), y), "yxz": m(m(y, x), z),
        }

    def power_family(self, identity_id, make_terms) -> IdentityReport:
        """Run ``make_terms(n)`` for every exponent in EXPONENTS and merge."""
        merged = IdentityReport(identity_id, 0, exhaustive=self.exhaustive, seed=None if self.exhaustive else self.seed)
        for n in EXPONENTS:
            res = sum(c * self.v[idx] for c, idx in make_terms(n))
            bad = _bad(res, self.factors)
            part = _report(identity_id, bad, {"x": self.x, "y": self.y, "z": self.z})
            merged.checked += part.checked
            merged.failure_count += part.failure_count
            room = MAX_WITNESSES - len(merged.failures)
            merged.failures += [dict(w, n=n) for w in part.failures[:room]]
        return merged

    def element_power_family(self, identity_id) -> IdentityReport:
        # f(x^n) = n f(x) over every element x
        elems = np.arange(self.G.order)
        bads, xs, ns = [], [], []
        for n in EXPONENTS:
            res = self.v[self.G.power_table(n)] - n * self.v[elems]
            bads.append(_bad(res, self.factors))
            xs.append(elems)
            ns.append(np.full(elems.shape, n))
        return _report(identity_id, np.concatenate(bads), {"x": np.concatenate(xs), "n": np.concatenate(ns)})


def _shared_triple_identities(ctx: _Ctx, names: dict[str, str]) -> list[IdentityReport]:
    w = ctx.triple_words()
    out = [
        # f(xyz) + f(xzy) = 2f(xy) + 2f(xz) - 2f(x)
        ctx.check(names["swap_tail"], [(1, w["xyz"]), (1, w["xzy"]), (-2, w["xy"]), (-2, w["xz"]), (2, w["x"])]),
        # f(xyz) + f(yxz) = 2f(xz) + 2f(yz) - 2f(z)
        ctx.check(names["swap_head"], [(1, w["xyz"]), (1, w["yxz"]), (-2, w["xz"]), (-2, w["yz"]), (2, w["z"])]),
        # 2f(xyz) = 2f(xy) + 2f(xz) + 2f(yz) - 2f(x) - 2f(y) - 2f(z)
        ctx.check(
            names["doubled"],
            [(2, w["xyz"]), (-2, w["xy"]), (-2, w["xz"]), (-2, w["yz"]), (2, w["x"]), (2, w["y"]), (2, w["z"])],
        ),
        # f(xyz) - f(xzy) = 2f(yz) - 2f(y) - 2f(z)
        ctx.check(names["difference"], [(1, w["xyz"]), (-1, w["xzy"]), (-2, w["yz"]), (2, w["y"]), (2, w["z"])]),
    ]
    return out


def check_prop_2_1(f: GroupMap, exhaustive: bool | None = None, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list[IdentityReport]:
    """Identities satisfied by every solution of ``f(xy) + f(xy^-1) = 2f(x)``."""
    ctx = _Ctx(f, exhaustive, samples, seed)
    out = _shared_triple_identities(
        ctx, {"swap_tail": "P2_2", "swap_head": "P2_3", "doubled": "P2_4", "difference": "P2_5"}
    )
    G = ctx.G

    def xynz(n):
        # f(x y^n z) = n f(xyz) - (n-1) f(xz)
        yn = G.power_table(n)[ctx.y]
        return [
            (1, ctx.m(ctx.m(ctx.x, yn), ctx.z)),
            (-n, ctx.m(ctx.m(ctx.x, ctx.y), ctx.z)),
            (n - 1, ctx.m(ctx.x, ctx.z)),
        ]

    out.append(ctx.power_family("P2_1", xynz))
    out.append(ctx.element_power_family("P2_8"))
    return out


def check_prop_3_1(f: GroupMap, exhaustive: bool | None = None, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list[IdentityReport]:
    """Identities satisfied by every solution of ``f(xy) + f(y^-1 x) = 2f(x)``."""
    ctx = _Ctx(f, exhaustive, samples, seed)
    out = [ctx.element_power_family("P3_1")]
    out += _shared_triple_identities(
        ctx, {"swap_tail": "P3_2", "swap_head": "P3_3", "difference": "P3_4", "doubled": "P3_5"}
    )
    y2 = ctx.m(ctx.y, ctx.y)
    # f(x y^2 z) = f(xz) + 2f(y)
    out.append(ctx.check("P3_6", [(1, ctx.m(ctx.m(ctx.x, y2), ctx.z)), (-1, ctx.m(ctx.x, ctx.z)), (-2, ctx.y)]))
    out.sort(key=lambda r: r.identity_id)
    return out


def check_order_two(f: GroupMap) -> IdentityReport:
    """``2 f(x) = 0`` for every x (forced on symmetric groups)."""
    elems = np.arange(f.group.order)
    bad = _bad(2 * f.values, f.coeff.factors)
    return _report("L2_4", bad, {"x": elems})


def check_rearrangement(f: GroupMap, exhaustive: bool | None = None, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> IdentityReport:
    """``f(xyz) = f(xzy) = f(yxz)``."""
    ctx = _Ctx(f, exhaustive, samples, seed)
    w = ctx.triple_words()
    bad = _bad(ctx.v[w["xyz"]] - ctx.v[w["xzy"]], ctx.factors) | _bad(ctx.v[w["xyz"]] - ctx.v[w["yxz"]], ctx.factors)
    return _report("C2_1", bad, {"x": ctx.x, "y": ctx.y, "z": ctx.z}, ctx.exhaustive, seed)


def _transpositions(G: FiniteGroup) -> list[int]:
    if not G.is_permutation_group():
        raise TypeError("this check needs a permutation group")
    return [i for i, p in enumerate(G.elements) if len(p.cycles()) == 1 and len(p.cycles()[0]) == 2]


def check_last_transposition(f: GroupMap, variant) -> IdentityReport:
    """Even ``x``: ``f(x) = 0``. Odd ``x``: ``f(x) = -f(t)`` (XY_INV) or ``f(t)``
    (YINV_X) for every transposition ``t``.

    Any transposition can end a decomposition of an odd ``x`` (``x = (xt) t``),
    so checking all of them tests independence from the decomposition.
    """
    variant = Variant.parse(variant)
    G = f.group
    ts = np.array(_transpositions(G), dtype=np.int64)
    par = np.array([parity(p) for p in G.elements])
    sign = -1 if variant is Variant.XY_INV else 1
    v = f.values
    even = np.flatnonzero(par == 0)
    odd = np.flatnonzero(par == 1)
    bad_even = _bad(v[even], f.coeff.factors)
    if len(ts) and len(odd):
        ox, tt = (a.ravel() for a in np.meshgrid(odd, ts, indexing="ij"))
        bad_odd = _bad(v[ox] - sign * v[tt], f.coeff.factors)
    else:
        ox = tt = np.zeros(0, dtype=np.int64)
        bad_odd = np.zeros(0, dtype=bool)
    name = "L2_5" if variant is Variant.XY_INV else "L3_4"
    return _report(
        name,
        np.concatenate([bad_even, bad_odd]),
        {"x": np.concatenate([even, ox]), "y": np.concatenate([np.full(even.shape, G.identity_index), tt])},
    )


def check_transposition_pairs(f: GroupMap) -> IdentityReport:
    """``f(st) = f(s) + f(t) = 0`` for all pairs of distinct transpositions."""
    G = f.group
    ts = np.array(_transpositions(G), dtype=np.int64)
    if len(ts) < 2:
        return IdentityReport("L2_1", 0)
    s, t = (a.ravel() for a in np.meshgrid(ts, ts, indexing="ij"))
    keep = s != t
    s, t = s[keep], t[keep]
    v = f.values
    bad = _bad(v[G.table[s, t]], f.coeff.factors) | _bad(v[s] + v[t], f.coeff.factors)
    return _report("L2_1", bad, {"x": s, "y": t})


def closed_form_eval(h: CoeffElement, x: Permutation) -> CoeffElement:
    """The S_n solution determined by its common transposition value ``h``:
    0 on even permutations, ``h`` on odd ones. Requires ``2h = 0``."""
    if not (2 * h).is_zero():
        raise ValueError(f"closed form needs 2h = 0, got h = {h.coords}")
    return h if parity(x) else h.group.zero()


def closed_form_map(G: FiniteGroup, h: CoeffElement) -> GroupMap:
    if not G.is_permutation_group():
        raise TypeError("closed form is defined on permutation groups")
    return GroupMap.from_function(G, h.group, lambda i: closed_form_eval(h, G.elements[i]))


@dataclass
class TheoremReport:
    n: int
    coeff: str
    variant1: ComparisonReport
    variant2: ComparisonReport
    closed_form_ok: bool
    expected_order: int

    @property
    def all_equal(self) -> bool:
        return (
            self.variant1.verdict == "EQUAL"
            and self.variant2.verdict == "EQUAL"
            and self.closed_form_ok
            and self.variant1.a_order == self.expected_order
            and self.variant2.a_order == self.expected_order
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "coeff": self.coeff,
            "expected_order": self.expected_order,
            "variant1": self.variant1.to_dict(),
            "variant2": self.variant2.to_dict(),
            "closed_form_ok": self.closed_form_ok,
            "verdict": "EQUAL" if self.all_equal else "NOT_EQUAL",
        }


def _matches_closed_form(sol: SolutionGroup, H: CoeffGroup, cap: int) -> bool:
    """Every solution is ``closed_form_map(G, h)`` for some ``h`` in H[2], and conversely."""
    G = sol.group
    if not G.is_permutation_group():
        return False
    expected = {closed_form_map(G, h).key() for h in torsion_subgroup(H, 2).elements()}
    return sol.element_keys(cap) == expected


def verify_theorems(n: int, H: CoeffGroup, max_n: int = 5, cap: int = DEFAULT_COMPARE_CAP, G: FiniteGroup | None = None) -> TheoremReport:
    """Solve both equations on S_n, compare each with Hom(S_n, H), and check
    every solution against the closed form."""
    if not 1 <= n <= max_n:
        raise ValueError(f"n must lie in 1..{max_n}")
    G = G or symmetric_group(n)
    hom = hom_group(G, H)
    s1 = solve(G, H, Variant.XY_INV)
    s2 = solve(G, H, Variant.YINV_X)
    c1, c2 = compare(s1, hom, cap), compare(s2, hom, cap)
    ok = True
    if s1.is_finite and s2.is_finite and max(s1.order, s2.order) <= cap:
        ok = _matches_closed_form(s1, H, cap) and _matches_closed_form(s2, H, cap)
    expected = 1 if n == 1 else torsion_subgroup(H, 2).order
    return TheoremReport(n, str(H), c1, c2, ok, expected)
