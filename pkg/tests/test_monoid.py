from itertools import product

import pytest
from hypothesis import given, strategies as st

import oracles
from degentri.errors import InputError, LawViolation
from degentri.monoid import (are_isomorphic, canonical_form, cyclic_group, eckmann_hilton_check, enumerate_cmonoids,
                             enumerate_homs, identity_hom, invertible_elements, multiplicative_monoid,
                             permute_table, product_monoid, trivial_monoid, validate_hom, validate_monoid,
                             validate_two_op_set)

# counts of isomorphism classes; orders 1-3 from the raw oracle, 4 from the unit-0 oracle
KNOWN_COUNTS = {1: 1, 2: 2, 3: 5, 4: 19}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_raw_search(n):
    got = {(m.op, m.unit) for m in enumerate_cmonoids(n)}
    assert got == oracles.cmonoid_classes(n)
    assert len(got) == KNOWN_COUNTS[n]


def test_order_four_matches_unit_zero_search():
    got = {canonical_form(m.op, m.unit) for m in enumerate_cmonoids(4)}
    assert got == oracles.cmonoid_classes_unit0(4)
    assert len(got) == KNOWN_COUNTS[4]


def test_order_five_count():
    assert len(enumerate_cmonoids(5)) == 78


def test_enumeration_is_deterministic_and_pairwise_distinct():
    a, b = enumerate_cmonoids(3), enumerate_cmonoids(3)
    assert [m.raw() for m in a] == [m.raw() for m in b]
    for x, y in product(a, repeat=2):
        assert are_isomorphic(x, y) == (x is y or x == y)


@pytest.mark.parametrize("order", [0, 6])
def test_enumeration_range(order):
    with pytest.raises(InputError):
        enumerate_cmonoids(order)


def test_validate_rejects_each_law():
    with pytest.raises(LawViolation, match="unit"):
        validate_monoid(2, [[0, 1], [1, 1]], 1)
    with pytest.raises(LawViolation, match="commutativity"):
        validate_monoid(3, [[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0)
    with pytest.raises(LawViolation, match="associativity"):
        validate_monoid(3, [[0, 1, 2], [1, 2, 0], [2, 0, 0]], 0)
    with pytest.raises(InputError):
        validate_monoid(2, [[0, 1]], 0)
    with pytest.raises(InputError):
        validate_monoid(2, [[0, 1], [1, 2]], 0)


def test_invertibles():
    assert invertible_elements(cyclic_group(4)) == frozenset(range(4))
    assert invertible_elements(multiplicative_monoid(4)) == frozenset({1, 3})
    assert trivial_monoid().invertibles() == (0,)
    m = multiplicative_monoid(4)
    with pytest.raises(LawViolation):
        m.inv(2)
    assert m.power(3, -3) == 3 and m.power(2, 2) == 0


@given(st.integers(1, 6), st.data())
def test_relabelling_gives_isomorphic_monoid(n, data):
    m = cyclic_group(n)
    perm = data.draw(st.permutations(list(range(n))))
    t, u = permute_table(m.op, m.unit, perm)
    assert are_isomorphic(m, validate_monoid(n, t, u))


@given(st.integers(1, 4), st.integers(1, 4))
def test_product_is_commutative_monoid(a, b):
    p = product_monoid(cyclic_group(a), cyclic_group(b))
    assert oracles.is_cmonoid([list(r) for r in p.op], p.unit)
    assert p.order == a * b


@pytest.mark.parametrize("a,b", [(2, 4), (3, 3), (4, 2), (2, 3)])
def test_homs_match_oracle(a, b):
    A, B = cyclic_group(a), cyclic_group(b)
    got = [h.map for h in enumerate_homs(A, B)]
    assert got == oracles.homs(oracles.Mon(A.op, A.unit), oracles.Mon(B.op, B.unit))


def test_hom_validation_and_composition():
    Z4 = cyclic_group(4)
    double = validate_hom(Z4, Z4, [0, 2, 0, 2])
    assert double.compose(double).map == (0, 0, 0, 0)
    assert identity_hom(Z4).compose(double) == double
    with pytest.raises(LawViolation):
        validate_hom(Z4, Z4, [0, 1, 1, 1])
    with pytest.raises(LawViolation):
        validate_hom(Z4, Z4, [1, 1, 1, 1])


# -- Eckmann-Hilton ----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_two_op_set_collapses(n):
    found = 0
    for s, c, e in oracles.two_op_sets(n):
        found += 1
        m = eckmann_hilton_check(validate_two_op_set(n, s, c, e))
        assert [list(r) for r in m.op] == s == c
        assert oracles.is_cmonoid(s, e)
    assert found > 0


def test_interchange_failure_is_rejected():
    z2 = [[0, 1], [1, 0]]
    mul = [[0, 1], [1, 1]]
    with pytest.raises(LawViolation):
        validate_two_op_set(2, z2, mul, 0)
    with pytest.raises(LawViolation, match="unit"):
        validate_two_op_set(2, z2, [[1, 0], [0, 1]], 0)
