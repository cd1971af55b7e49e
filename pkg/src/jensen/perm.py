"""Permutations of {1..n} in one-line form.

Products are read right to left: ``p * q`` is the map ``i -> p(q(i))``.
All external input and output is 1-based; internally images are stored
0-based. Permutations of different degree are compared and composed by
embedding into the larger degree (extra points are fixed).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "Transposition",
    "identity",
    "compose",
    "inverse",
    "parity",
    "transposition_decomposition",
    "square_root_of_transposition_pair",
    "even_square_decomposition",
    "parse_cycles",
    "symmetric_group_elements",
]


class Permutation:
    """A bijection of {1..n}, immutable and hashable."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(v) - 1 for v in images)
        n = len(img)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(img) != list(range(n)):
            raise ValueError(f"not a bijection of 1..{n}: {[v + 1 for v in img]}")
        self._img = img
        self._hash = None

    @classmethod
    def _from0(cls, img: Sequence[int]) -> Permutation:
        p = object.__new__(Permutation)
        p._img = tuple(img)
        p._hash = None
        return p

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int | None = None) -> Permutation:
        """Build from 1-based cycles, composed right to left."""
        cycles = [tuple(int(c) for c in cyc) for cyc in cycles]
        top = max((max(c) for c in cycles if c), default=1)
        n = max(top, degree or 1)
        result = identity(n)
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            if any(c < 1 for c in cyc):
                raise ValueError(f"points must be >= 1: {cyc}")
            img = list(range(n))
            for i, c in enumerate(cyc):
                img[c - 1] = cyc[(i + 1) % len(cyc)] - 1
            result = result * Permutation._from0(img)
        return result

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """One-line notation, 1-based."""
        return tuple(v + 1 for v in self._img)

    @property
    def images0(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self._img):
            return self._img[i - 1] + 1
        return i

    def _padded(self, n: int) -> tuple[int, ...]:
        return self._img + tuple(range(len(self._img), n))

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(self.degree, other.degree)
        p, q = self._padded(n), other._padded(n)
        return Permutation._from0([p[q[i]] for i in range(n)])

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self._img)
        for i, v in enumerate(self._img):
            inv[v] = i
        return Permutation._from0(inv)

    def _trimmed(self) -> tuple[int, ...]:
        img = self._img
        k = len(img)
        while k > 1 and img[k - 1] == k - 1:
            k -= 1
        return img[:k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._trimmed())
        return self._hash

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._img[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


class Transposition(Permutation):
    """The swap ``(a b)``; degree defaults to ``max(a, b)``."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int, degree: int | None = None):
        a, b = int(a), int(b)
        if a == b or a < 1 or b < 1:
            raise ValueError(f"invalid transposition ({a} {b})")
        n = max(a, b, degree or 0)
        img = list(range(n))
        img[a - 1], img[b - 1] = b - 1, a - 1
        self._img = tuple(img)
        self._hash = None
        self.a, self.b = a, b

    @property
    def points(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    def __repr__(self) -> str:
        return f"Transposition({self.a}, {self.b})"


def identity(n: int) -> Permutation:
    return Permutation._from0(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``(p q)(i) = p(q(i))``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def transposition_decomposition(p: Permutation) -> list[Transposition]:
    """Cycle ``(c1 c2 ... cm)`` becomes ``(c1 c2)(c2 c3)...(c_{m-1} cm)``.

    Composing the list right to left gives back ``p``.
    """
    out = []
    for cyc in p.cycles():
        out.extend(Transposition(cyc[i], cyc[i + 1], p.degree) for i in range(len(cyc) - 1))
    return out


def parity(p: Permutation) -> int:
    """0 for even, 1 for odd."""
    return sum(len(c) - 1 for c in p.cycles()) % 2


def _product(perms: Sequence[Permutation], degree: int) -> Permutation:
    result = identity(degree)
    for q in perms:
        result = result * q
    return result


def square_root_of_transposition_pair(sigma: Transposition, tau: Transposition) -> Permutation:
    """A permutation whose square is ``sigma * tau``.

    Equal swaps give the identity. Swaps sharing one point give
    ``(sigma tau)^2``, since a 3-cycle satisfies ``c^4 = c``. Disjoint swaps
    ``(a b), (c d)`` give ``(a c)(c b)(b d)``, a 4-cycle squaring to
    ``(a b)(c d)``.
    """
    n = max(sigma.degree, tau.degree)
    shared = sigma.points & tau.points
    if len(shared) == 2:
        return identity(n)
    if len(shared) == 1:
        st = sigma * tau
        return st * st
    a, b, c, d = sigma.a, sigma.b, tau.a, tau.b
    return Transposition(a, c, n) * Transposition(c, b, n) * Transposition(b, d, n)


def even_square_decomposition(p: Permutation) -> list[Permutation]:
    """Write an even ``p`` as ``t1^2 t2^2 ... tk^2``; returns ``[t1, ..., tk]``."""
    ts = transposition_decomposition(p)
    if len(ts) % 2:
        raise ValueError(f"{p} is odd; only even permutations are products of squares this way")
    return [square_root_of_transposition_pair(ts[i], ts[i + 1]) for i in range(0, len(ts), 2)]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(1 2)(3 4)"``, ``"()"`` or ``"id"``.

    Whitespace and commas separate points; cycles compose right to left.
    """
    s = text.strip()
    if s.lower() in ("id", "e", ""):
        return identity(degree or 1)
    compact = re.sub(r"\s+", " ", s)
    if _CYCLE_RE.sub("", compact).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(compact):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            pts = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        if pts:
            cycles.append(pts)
    return Permutation.from_cycles(cycles, degree)


def symmetric_group_elements(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    from itertools import permutations

    for img in permutations(range(n)):
        yield Permutation._from0(img)
