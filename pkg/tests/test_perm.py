import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jensen.perm import (
    Permutation,
    Transposition,
    compose,
    even_square_decomposition,
    identity,
    inverse,
    parity,
    parse_cycles,
    square_root_of_transposition_pair,
    symmetric_group_elements,
    transposition_decomposition,
)


def perms(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
    )


def compose_all(ps, n):
    out = identity(n)
    for p in ps:
        out = out * p
    return out


def brute_parity(p):
    # count inversions in one-line form
    img = p.images
    return sum(1 for i, j in itertools.combinations(range(len(img)), 2) if img[i] > img[j]) % 2


def test_compose_convention():
    # right to left: apply (2 3) first
    assert compose(parse_cycles("(1 2)"), parse_cycles("(2 3)")) == parse_cycles("(1 2 3)")
    assert compose(identity(3), parse_cycles("(1 2)")) == parse_cycles("(1 2)")
    p = parse_cycles("(1 2 4)")
    assert p(1) == 2 and p(4) == 1 and p(3) == 3


def test_adjacent_product_fourth_power():
    st_ = parse_cycles("(1 2)") * parse_cycles("(2 3)")
    assert st_ ** 4 == st_
    assert st_.order() == 3


def test_six_relations_on_sample_triple():
    a, b, c = 1, 2, 3
    sigma, tau, delta = Transposition(a, b), Transposition(b, c), Transposition(a, c)
    assert sigma * delta * tau == delta == tau * delta * sigma
    assert tau * sigma * delta == sigma == delta * sigma * tau
    assert delta * tau * sigma == tau == sigma * tau * delta


@pytest.mark.parametrize("n", [4, 5])
def test_six_relations_exhaustive(n):
    for a, b, c in itertools.permutations(range(1, n + 1), 3):
        sigma, tau, delta = Transposition(a, b, n), Transposition(b, c, n), Transposition(a, c, n)
        assert sigma * delta * tau == delta and tau * delta * sigma == delta
        assert tau * sigma * delta == sigma and delta * sigma * tau == sigma
        assert delta * tau * sigma == tau and sigma * tau * delta == tau
        st_ = sigma * tau
        assert st_ ** 4 == st_


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    assert inverse(parse_cycles("(1 2)")) == parse_cycles("(1 2)")
    p = parse_cycles("(1 2 3)")
    q = inverse(p)
    assert q * p == identity(3) and p * q == identity(3)
    assert q == parse_cycles("(1 3 2)")


def test_decomposition_examples():
    assert transposition_decomposition(identity(3)) == []
    assert transposition_decomposition(parse_cycles("(1 2 3)")) == [Transposition(1, 2), Transposition(2, 3)]
    assert transposition_decomposition(parse_cycles("(1 2)(3 4)")) == [Transposition(1, 2), Transposition(3, 4)]


@pytest.mark.parametrize("n", range(1, 6))
def test_decomposition_round_trip_exhaustive(n):
    for p in symmetric_group_elements(n):
        ts = transposition_decomposition(p)
        assert compose_all(ts, n) == p
        assert len(ts) % 2 == parity(p) == brute_parity(p)


def test_decomposition_round_trip_random_large():
    rng = random.Random(7)
    for n in (6, 7, 8):
        for _ in range(50):
            img = list(range(1, n + 1))
            rng.shuffle(img)
            p = Permutation(img)
            assert compose_all(transposition_decomposition(p), n) == p


def test_parity_examples():
    assert parity(identity(4)) == 0
    assert parity(Transposition(2, 5)) == 1
    assert parity(parse_cycles("(1 2 3)")) == 0


@given(perms(7), perms(7))
def test_parity_is_multiplicative(p, q):
    assert parity(p * q) == (parity(p) + parity(q)) % 2


@given(perms(8))
def test_inverse_property(p):
    assert p * p.inverse() == identity(p.degree)
    assert p.inverse() * p == identity(p.degree)


@given(perms(6), perms(6), perms(6))
def test_associativity(p, q, r):
    assert (p * q) * r == p * (q * r)


def test_square_root_examples():
    s = Transposition(1, 2)
    assert square_root_of_transposition_pair(s, s) == identity(2)
    r = square_root_of_transposition_pair(Transposition(1, 2), Transposition(2, 3))
    assert r == parse_cycles("(1 3 2)")
    assert r * r == parse_cycles("(1 2 3)")
    r = square_root_of_transposition_pair(Transposition(1, 2), Transposition(3, 4))
    assert r == parse_cycles("(1 3 2 4)")
    assert r == parse_cycles("(1 3)(3 2)(2 4)")
    assert r * r == parse_cycles("(1 2)(3 4)")


def test_square_root_all_pairs_s5():
    swaps = [Transposition(a, b, 5) for a, b in itertools.combinations(range(1, 6), 2)]
    for s, t in itertools.product(swaps, repeat=2):
        r = square_root_of_transposition_pair(s, t)
        assert r * r == s * t


def test_even_square_decomposition_examples():
    assert even_square_decomposition(identity(3)) == []
    (t,) = even_square_decomposition(parse_cycles("(1 2 3)"))
    assert t * t == parse_cycles("(1 2 3)")
    assert even_square_decomposition(parse_cycles("(1 2)(3 4)")) == [parse_cycles("(1 3 2 4)")]
    with pytest.raises(ValueError):
        even_square_decomposition(parse_cycles("(1 2)"))


@pytest.mark.parametrize("n", [4, 5])
def test_even_square_decomposition_round_trip(n):
    for p in symmetric_group_elements(n):
        if parity(p):
            continue
        ts = even_square_decomposition(p)
        assert len(ts) == len(transposition_decomposition(p)) // 2
        assert compose_all([t * t for t in ts], n) == p


def test_parser_formats():
    assert parse_cycles("()") == identity(1)
    assert parse_cycles("id") == identity(1)
    assert parse_cycles(" ( 1  2 ) ( 3 4 )") == parse_cycles("(1 2)(3 4)")
    assert parse_cycles("(1,2,3)") == parse_cycles("(1 2 3)")
    # overlapping cycles compose right to left
    assert parse_cycles("(1 2)(2 3)") == parse_cycles("(1 2 3)")
    assert parse_cycles("(1 2)", degree=4).degree == 4
    assert str(parse_cycles("(3 1 2)")) == "(1 2 3)"
    assert str(identity(3)) == "()"


@pytest.mark.parametrize("bad", ["(1 1)", "(1 2", "1 2", "(a b)", "(0 1)"])
def test_parser_rejects(bad):
    with pytest.raises(ValueError):
        parse_cycles(bad)


def test_degree_embedding():
    small, big = parse_cycles("(1 2)"), parse_cycles("(1 2)", degree=5)
    assert small == big and hash(small) == hash(big)
    assert (small * parse_cycles("(4 5)")).degree == 5


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Transposition(2, 2)
