import pytest
from hypothesis import given, strategies as st

import sweeps
from degentri.errors import InputError, LawViolation
from degentri.monoid import cyclic_group
from degentri.monoidal.category import (compose_monoidal_functors, enumerate_monoidal_transformations,
                                        identity_monoidal_functor, identity_monoidal_transformation, remake,
                                        validate_monoidal_functor, validate_monoidal_transformation)
from degentri.monoidal.expr import Coh, Gen, InputError as ExprInputError, Tensor
from degentri.monoidal.instances import (discrete_monoidal, pointed_functor, pointed_monoidal, shipped_monoidal,
                                         z3_cocycle, z3_pointed)

SHIPPED = shipped_monoidal()
IDS = [c.name for c in SHIPPED]
@pytest.mark.parametrize("c", SHIPPED, ids=IDS)
def test_mac_lane_property_short_words(c):
    # words of length 4 and 5 are swept by the acceptance run
    ok, where, checked = sweeps.coherence_sweep(c, max_len=3)
    assert ok, where
    assert checked > 0


def test_no_coherence_iso_between_different_words():
    with pytest.raises(ExprInputError):
        Coh(Tensor(Gen("A"), Gen("B")), Tensor(Gen("B"), Gen("A")))


@pytest.mark.parametrize("c", SHIPPED, ids=IDS)
def test_validator_accepts_and_rejects_every_single_mutation(c):
    assert remake(c).raw() == c.raw()
    for what, where, change in sweeps.single_mutations(c):
        with pytest.raises(LawViolation):
            remake(c, **change)


def test_mutations_exist_for_non_discrete_categories():
    counts = {c.name: sum(1 for _ in sweeps.single_mutations(c)) for c in SHIPPED}
    assert counts["z3pointed"] == 2 * 27 + 2 * 3 * 2
    assert counts["Z"] == 3
    assert counts["discZ4"] == 0


def test_pentagon_failure_is_named():
    c = z3_cocycle()
    a = [[list(r) for r in p] for p in c.assoc]
    # 1 + 1 + 1 = 0, so the component lives in End(0) = {0, 1, 2}
    a[1][1][1] = (a[1][1][1] + 1) % 3
    with pytest.raises(LawViolation, match="pentagon"):
        remake(c, assoc=a)


def test_shape_errors_are_input_errors():
    c = z3_pointed()
    with pytest.raises(InputError):
        remake(c, lunit=[0])


def test_cocycle_category_is_not_strict():
    assert not z3_cocycle().is_strict() and z3_pointed().is_strict()
    # a normalized 3-cocycle gives a valid associator; a normalized non-cocycle breaks only the pentagon
    pointed_monoidal(3, lambda a, b, c: 2 * a * b * c)
    with pytest.raises(LawViolation, match="pentagon"):
        pointed_monoidal(3, lambda a, b, c: a * a * b * c)


# -- functors and transformations --------------------------------------------------


@given(st.sampled_from([1, 2]), st.sampled_from([0, 1, 2]), st.sampled_from([1, 2]), st.sampled_from([0, 1, 2]))
def test_pointed_functor_composition(k1, j1, k2, j2):
    c = z3_pointed()
    F, G = pointed_functor(c, c, k1, j1), pointed_functor(c, c, k2, j2)
    GF = compose_monoidal_functors(G, F)
    again = validate_monoidal_functor(c, c, GF.underlying.obj, GF.underlying.mor, GF.phi2, GF.phi0)
    assert again.underlying.obj == tuple((k1 * k2 * a) % 3 for a in range(3))
    I = identity_monoidal_functor(c)
    assert compose_monoidal_functors(I, F).underlying == F.underlying


def test_functor_into_cocycle_needs_constraint():
    # the identity on objects from the strict category into the cocycle one has no constraint with unit phase 0
    with pytest.raises(LawViolation):
        validate_monoidal_functor(z3_pointed(), z3_cocycle(), [0, 1, 2], list(range(9)),
                                  [[z3_cocycle().id((x + y) % 3) for y in range(3)] for x in range(3)], 0)


def test_monoidal_transformations_of_identity():
    c = z3_pointed()
    I = identity_monoidal_functor(c)
    ts = enumerate_monoidal_transformations(I, I)
    # a monoidal natural automorphism of the identity is a character a -> phase, i.e. a hom Z/3 -> Z/3
    assert sorted(t.components for t in ts) == sorted(tuple(a * 3 + (k * a) % 3 for a in range(3)) for k in range(3))
    assert identity_monoidal_transformation(I).components in {t.components for t in ts}
    with pytest.raises(LawViolation):
        validate_monoidal_transformation(I, I, [1, 3, 6])


def test_discrete_monoidal_tables():
    c = discrete_monoidal(cyclic_group(4))
    assert c.t(3, 2) == 1 and c.unit_obj == 0 and c.is_strict()
