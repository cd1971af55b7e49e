import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jensen.coeff import CoeffGroup, add, neg, parse_coeff, scalar_mul, torsion_subgroup

SMALL = [(2,), (3,), (4,), (6,), (2, 4), (2, 3), (2, 2, 2), (3, 9), (4, 6)]


def test_arithmetic_examples():
    H = CoeffGroup((2, 4))
    x = H(1, 3)
    assert add(x, neg(x)).is_zero()
    assert scalar_mul(2, H(1, 1)) == H(0, 2)
    Z6 = CoeffGroup((6,))
    assert scalar_mul(4, Z6(5)) == Z6(2)
    Z = CoeffGroup((0,))
    assert scalar_mul(-3, Z(5)) == Z(-15)


def test_group_properties():
    H = parse_coeff("2,4")
    assert H.order == 8 and H.is_finite and H.rank == 2
    assert str(H) == "Z/2 + Z/4"
    Z = parse_coeff("0")
    assert Z.order is None and Z.rank == 1 and str(Z) == "Z"
    assert parse_coeff("1").order == 1 and str(parse_coeff("")) == "0"
    assert len(list(H.elements())) == 8
    with pytest.raises(ValueError):
        parse_coeff("2,x")
    with pytest.raises(ValueError):
        CoeffGroup((-2,))


def test_element_order():
    H = CoeffGroup((2, 4))
    assert H(1, 2).order() == 2
    assert H(0, 1).order() == 4
    assert H.zero().order() == 1
    assert CoeffGroup((0,))(3).order() == 0


def test_normalized_chain():
    assert CoeffGroup((2, 3)).normalized().factors == (6,)
    assert CoeffGroup((4, 6)).normalized().factors == (2, 12)
    assert CoeffGroup((0, 2)).normalized().factors == (2, 0)


def test_mismatched_groups():
    with pytest.raises(ValueError):
        CoeffGroup((2,))(1) + CoeffGroup((3,))(1)


def test_torsion_examples():
    assert torsion_subgroup(CoeffGroup((3,)), 2).order == 1
    T = torsion_subgroup(CoeffGroup((2, 4)), 2)
    H = T.group
    assert T.order == 4
    assert set(T.generators) == {H(1, 0), H(0, 2)}
    assert torsion_subgroup(CoeffGroup((0,)), 2).order == 1


@pytest.mark.parametrize("factors", SMALL + [(0, 2), (0, 4, 6)])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 6])
def test_torsion_by_enumeration(factors, m):
    H = CoeffGroup(factors)
    T = torsion_subgroup(H, m)
    got = set(T.elements())
    assert len(got) == T.order
    # oracle: scan a box large enough to hold every torsion element
    box = [d if d else 1 for d in factors]
    expect = set()
    for cs in itertools.product(*(range(b) for b in box)):
        h = H(*cs)
        if (m * h).is_zero():
            expect.add(h)
    assert got == expect


elements = st.sampled_from(SMALL).flatmap(
    lambda fs: st.tuples(*[st.tuples(*[st.integers(-50, 50) for _ in fs])] * 3).map(
        lambda t: tuple(CoeffGroup(fs)(*c) for c in t)
    )
)


@given(elements, st.integers(-20, 20), st.integers(-20, 20))
def test_abelian_group_laws(triple, m, n):
    a, b, c = triple
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + a.group.zero() == a
    assert a - a == a.group.zero()
    assert (m + n) * a == m * a + n * a
    assert m * (a + b) == m * a + m * b
    assert (m * n) * a == m * (n * a)


@pytest.mark.parametrize("factors", SMALL + [(0, 3)])
def test_generators_have_factor_order(factors):
    H = CoeffGroup(factors)
    for i, d in enumerate(H.factors):
        if d:
            assert scalar_mul(d, H.unit(i)).is_zero()
            assert not any(scalar_mul(k, H.unit(i)).is_zero() for k in range(1, d))


def test_from_abelian_table():
    from conftest import DATA
    from jensen.group import closure_from_generators, load_group_file, symmetric_group
    from jensen.perm import parse_cycles

    assert CoeffGroup.from_group(load_group_file(DATA / "z2xz4.grp")).factors == (2, 4)
    c6 = closure_from_generators([parse_cycles("(1 2 3)(4 5)")])
    assert CoeffGroup.from_group(c6).factors == (6,)
    with pytest.raises(ValueError):
        CoeffGroup.from_group(symmetric_group(3))
