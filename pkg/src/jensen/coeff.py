"""Finitely generated abelian coefficient groups ``H = Z/d1 + ... + Z/dk``.

A factor ``d >= 2`` is the cyclic group of order ``d``; ``d = 0`` is ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod
from typing import Iterator, Sequence

__all__ = ["CoeffGroup", "CoeffElement", "Subgroup", "torsion_subgroup", "parse_coeff"]


@dataclass(frozen=True)
class CoeffGroup:
    factors: tuple[int, ...]

    def __init__(self, factors: Sequence[int] = ()):
        fs = tuple(int(d) for d in factors)
        for d in fs:
            if d < 0:
                raise ValueError(f"invalid factor {d}: use 0 for Z or an integer >= 2")
        # trivial factors carry no information
        object.__setattr__(self, "factors", tuple(d for d in fs if d != 1))

    @classmethod
    def from_group(cls, A) -> CoeffGroup:
        """H from a finite abelian group given by its Cayley table."""
        from .group import abelian_decompose

        return cls(abelian_decompose(A).invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def is_finite(self) -> bool:
        return 0 not in self.factors

    @property
    def order(self) -> int | None:
        """``|H|``, or None when H is infinite."""
        return prod(self.factors) if self.is_finite else None

    def zero(self) -> CoeffElement:
        return CoeffElement(self, (0,) * self.rank)

    def basis(self) -> list[CoeffElement]:
        return [self.unit(i) for i in range(self.rank)]

    def unit(self, i: int) -> CoeffElement:
        coords = [0] * self.rank
        coords[i] = 1
        return CoeffElement(self, coords)

    def __call__(self, *coords: int) -> CoeffElement:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return CoeffElement(self, coords)

    def elements(self) -> Iterator[CoeffElement]:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        for coords in product(*(range(d) for d in self.factors)):
            yield CoeffElement(self, coords)

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        return tuple(c % d if d else c for c, d in zip(coords, self.factors))

    def normalized(self) -> CoeffGroup:
        """Same group with factors rewritten as a divisibility chain."""
        from .snf import smith_normal_form

        finite = [d for d in self.factors if d]
        if not finite:
            return self
        k = len(finite)
        snf = smith_normal_form([[finite[i] if i == j else 0 for j in range(k)] for i in range(k)])
        chain = [d for d in snf.diagonal if d != 1]
        return CoeffGroup(chain + [0] * (self.rank - len(finite)))

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.factors)


class CoeffElement:
    """An element of a :class:`CoeffGroup`, stored in reduced coordinates."""

    __slots__ = ("group", "coords")

    def __init__(self, group: CoeffGroup, coords: Sequence[int]):
        coords = tuple(int(c) for c in coords)
        if len(coords) != group.rank:
            raise ValueError(f"expected {group.rank} coordinates, got {len(coords)}")
        self.group = group
        self.coords = group.reduce(coords)

    def _check(self, other: CoeffElement) -> None:
        if not isinstance(other, CoeffElement) or other.group != self.group:
            raise ValueError("elements belong to different coefficient groups")

    def __add__(self, other: CoeffElement) -> CoeffElement:
        self._check(other)
        return CoeffElement(self.group, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: CoeffElement) -> CoeffElement:
        self._check(other)
        return CoeffElement(self.group, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> CoeffElement:
        return CoeffElement(self.group, [-a for a in self.coords])

    def __mul__(self, n: int) -> CoeffElement:
        if not isinstance(n, int):
            return NotImplemented
        return CoeffElement(self.group, [n * a for a in self.coords])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        """Additive order; 0 means infinite."""
        out = 1
        for c, d in zip(self.coords, self.group.factors):
            if c == 0:
                continue
            if d == 0:
                return 0
            out = lcm(out, d // gcd(c, d))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffElement):
            return NotImplemented
        return self.group == other.group and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.group, self.coords))

    def __repr__(self) -> str:
        return f"CoeffElement({self.coords}, {self.group})"


def add(a: CoeffElement, b: CoeffElement) -> CoeffElement:
    return a + b


def neg(a: CoeffElement) -> CoeffElement:
    return -a


def scalar_mul(n: int, a: CoeffElement) -> CoeffElement:
    return n * a


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of H given by independent cyclic generators."""

    group: CoeffGroup
    factors: tuple[int, ...]
    generators: tuple[CoeffElement, ...]

    @property
    def order(self) -> int:
        return prod(self.factors)

    def elements(self) -> list[CoeffElement]:
        out = []
        for cs in product(*(range(d) for d in self.factors)):
            h = self.group.zero()
            for c, g in zip(cs, self.generators):
                h = h + c * g
            out.append(h)
        return out


def torsion_subgroup(H: CoeffGroup, m: int) -> Subgroup:
    """``H[m] = {h : m h = 0}``, one cyclic factor per finite factor of H."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    factors, gens = [], []
    for i, d in enumerate(H.factors):
        if d == 0:
            continue
        g = gcd(m, d)
        if g > 1:
            factors.append(g)
            gens.append((d // g) * H.unit(i))
    return Subgroup(H, tuple(factors), tuple(gens))


def parse_coeff(text: str) -> CoeffGroup:
    """``"2,4"`` -> Z/2 + Z/4; ``"0"`` -> Z; ``""`` or ``"1"`` -> trivial."""
    text = text.strip()
    if not text:
        return CoeffGroup(())
    try:
        fs = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise ValueError(f"malformed coefficient spec {text!r}") from None
    return CoeffGroup(fs)
