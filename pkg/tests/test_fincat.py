from itertools import product

import pytest
from hypothesis import given, strategies as st

from degentri.errors import InputError, LawViolation
from degentri.fincat import (compose_functors, discrete_category, horizontal_compose, identity_functor,
                             identity_nat_transform, make_category, one_object_category, pair_mor,
                             product_category, validate_functor, validate_nat_transform, vertical_compose)
from degentri.monoid import cyclic_group
from degentri.monoidal.instances import pointed_base


def arrow_category():
    # 0 --f--> 1
    return make_category(2, [(0, 0), (1, 1), (0, 1)], [0, 1], [(0, 0, 0), (1, 1, 1), (2, 0, 2), (1, 2, 2)])


def all_functors(c, d):
    out = []
    for obj in product(d.objects, repeat=c.n_objects):
        for mor in product(d.morphisms, repeat=c.n_morphisms):
            try:
                out.append(validate_functor(c, d, obj, mor))
            except LawViolation:
                pass
    return out


def test_arrow_category():
    c = arrow_category()
    assert c.hom(0, 1) == [2] and c.hom(1, 0) == []
    assert not c.is_iso(2) and c.is_iso(0)
    assert c.chain(1, 2, 0) == 2


def test_missing_composite_rejected():
    with pytest.raises(LawViolation, match="composite missing"):
        make_category(2, [(0, 0), (1, 1), (0, 1)], [0, 1], [(0, 0, 0), (1, 1, 1), (2, 0, 2)])


def test_bad_identity_and_associativity():
    with pytest.raises(LawViolation, match="identity"):
        make_category(1, [(0, 0), (0, 0)], [0], [(0, 0, 0), (0, 1, 0), (1, 0, 1), (1, 1, 1)])
    # x*x = x for both non-identity elements but x*y inconsistent
    with pytest.raises(LawViolation, match="associativity"):
        one_object_category([[0, 1, 2], [1, 1, 1], [2, 2, 1]], 0)
    with pytest.raises(InputError):
        make_category(1, [(0, 3)], [0], [])


def test_functor_count_into_z2_matches_search():
    # functors from the arrow category to one-object Z/2: f can go anywhere
    d = one_object_category(cyclic_group(2).op, 0)
    assert len(all_functors(arrow_category(), d)) == 2
    # endofunctors of one-object Z/3 are its three group endomorphisms
    z3 = one_object_category(cyclic_group(3).op, 0)
    assert len(all_functors(z3, z3)) == 3


def test_functor_laws_rejected():
    c, d = arrow_category(), discrete_category(2)
    with pytest.raises(LawViolation, match="endpoints"):
        validate_functor(c, d, [0, 1], [0, 1, 0])
    z2 = one_object_category(cyclic_group(2).op, 0)
    with pytest.raises(LawViolation, match="identities"):
        validate_functor(z2, z2, [0], [1, 1])


@given(st.integers(2, 4), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_functor_composition_associative_and_unital(n, a, b, c):
    C = pointed_base(n)
    funcs = [validate_functor(C, C, [(k * x) % n for x in range(n)],
                              [((k * (f // n)) % n) * n + (k * (f % n)) % n for f in C.morphisms]) for k in (a, b, c)]
    F, G, H = funcs
    assert compose_functors(H, compose_functors(G, F)) == compose_functors(compose_functors(H, G), F)
    assert compose_functors(identity_functor(C), F) == F == compose_functors(F, identity_functor(C))


def test_product_category_structure():
    a = arrow_category()
    p = product_category(a, a)
    assert p.n_objects == 4 and p.n_morphisms == 9
    f = 2
    ff = pair_mor(a, f, f)
    assert p.src[ff] == 0 and p.tgt[ff] == 3
    assert p.compose(pair_mor(a, 1, 1), ff) == ff


@given(st.integers(2, 4), st.data())
def test_naturality_and_interchange(n, data):
    # endomorphisms of the pointed base are natural transformations between identity functors
    C = pointed_base(n)
    I = identity_functor(C)
    phase = lambda: [x * n + data.draw(st.integers(0, n - 1)) for x in range(n)]
    comps = [phase() for _ in range(4)]
    a1, a2, b1, b2 = (validate_nat_transform(I, I, c) for c in comps)
    left = horizontal_compose(vertical_compose(b2, b1), vertical_compose(a2, a1))
    right = vertical_compose(horizontal_compose(b2, a2), horizontal_compose(b1, a1))
    assert left.components == right.components
    assert vertical_compose(identity_nat_transform(I), a1).components == a1.components


def test_non_natural_family_rejected():
    a = arrow_category()
    z2 = one_object_category(cyclic_group(2).op, 0)
    F = validate_functor(a, z2, [0, 0], [0, 0, 1])
    G = validate_functor(a, z2, [0, 0], [0, 0, 0])
    with pytest.raises(LawViolation, match="naturality"):
        validate_nat_transform(F, G, [0, 0])
    assert validate_nat_transform(F, G, [1, 0]).components == (1, 0)


def test_raw_round_trip():
    for c in (arrow_category(), pointed_base(3), discrete_category(3)):
        r = c.raw()
        assert make_category(r["objects"], r["morphisms"], r["identities"], r["composition"]) == c
