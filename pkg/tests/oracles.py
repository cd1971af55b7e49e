"""Reference oracles that avoid the Cayley table, the kernels and the SNF path.

Maps are dicts keyed by Permutation objects and every equation is checked by
direct composition, so agreement with the solver is a genuine second route.
"""

import itertools

from jensen.solver import Variant


def naive_solutions(G, H, variant):
    """Maps as dicts over Permutation objects, checked by direct composition."""
    elems = list(G.elements)
    e = next(p for p in elems if p.is_identity())
    others = [p for p in elems if p != e]
    out = set()
    for vals in itertools.product(list(H.elements()), repeat=len(others)):
        f = dict(zip(others, vals))
        f[e] = H.zero()
        ok = True
        for x in elems:
            for y in elems:
                yi = y.inverse()
                other = x * yi if variant is Variant.XY_INV else yi * x
                if not (f[x * y] + f[other] - 2 * f[x]).is_zero():
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(tuple(c for p in elems for c in f[p].coords))
    return out


def naive_homs(G, H):
    elems = list(G.elements)
    out = set()
    for vals in itertools.product(list(H.elements()), repeat=len(elems)):
        f = dict(zip(elems, vals))
        if all(f[x * y] == f[x] + f[y] for x in elems for y in elems):
            out.add(tuple(c for p in elems for c in f[p].coords))
    return out
