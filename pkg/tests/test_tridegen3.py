import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

import oracles
from degentri.errors import InputError, LawViolation
from degentri.monoid import cyclic_group, enumerate_cmonoids, identity_hom, multiplicative_monoid
from degentri.tridegen3 import (axiom_oracle_td3, build_hom_bicategory, check_xi3_triequivalence, classify,
                                compose_td3_functors, compose_td3_transformations, derivation_sweep, derive_M,
                                functor_axioms, identity_td3_functor, make_td3, make_td3_functor,
                                make_td3_transformation, modification_solutions, overwrite, perturbations,
                                random_functor, random_td3, same_shape, td3_from_raw, transformation_axioms,
                                transformation_exists, unique_td3_modification, unit_td3,
                                unit_td3_transformation, witness_non_associative, witness_non_bicategory,
                                witness_non_category, witness_xi4_unfaithful, xi3, z2_structure)

MONOIDS = [M for k in (1, 2, 3, 4) for M in enumerate_cmonoids(k)]


def raw(M):
    return oracles.Mon([list(r) for r in M.op], M.unit)


# -- classification ---------------------------------------------------------------------


@pytest.mark.parametrize("M", [M for k in (1, 2, 3) for M in enumerate_cmonoids(k)], ids=lambda M: str(M.op))
def test_every_invertible_tuple_classifies(M):
    O = raw(M)
    seen = 0
    for t, rep in classify([M]):
        seen += 1
        assert rep.passed
        lam = oracles.td3_lambda(O, t.d, t.m, t.pi)
        assert t.lam == t.rho == lam
        assert all(oracles.td3_axioms(O, t.d, t.m, t.pi, t.lam, t.rho))
    assert seen == len(O.units()) ** 8


def test_wrong_lambda_is_caught():
    M = cyclic_group(3)
    t = make_td3(M, 1, 1, 0, 0, 0, 0, 1, 0)
    bad = overwrite(t, lam=M.mul(t.lam, 1))
    rep = axiom_oracle_td3(bad)
    assert rep.failures() == ["second axiom"]
    assert axiom_oracle_td3(overwrite(t, rho=M.mul(t.rho, 2))).failures() == ["third axiom"]


def test_non_invertible_rejected():
    M = multiplicative_monoid(4)
    with pytest.raises(LawViolation, match="invertible"):
        make_td3(M, 2, 1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(InputError):
        td3_from_raw(M, {"d": 1})


# -- derivations --------------------------------------------------------------------------


@given(st.integers(0, 10 ** 6))
def test_derived_functor_data_solves_its_equations(seed):
    rng = random.Random(seed)
    S, T = random_td3(rng, MONOIDS), random_td3(rng, MONOIDS)
    F = random_functor(rng, S, T)
    omega, delta = oracles.functor_equations(F)
    assert omega == [F.omega] and delta == [F.delta]
    assert functor_axioms(F).passed


@given(st.integers(0, 10 ** 6))
def test_derived_M_and_the_third_axiom(seed):
    rng = random.Random(seed)
    S, T = random_td3(rng, MONOIDS), random_td3(rng, MONOIDS)
    F = random_functor(rng, S, T)
    inv = T.base.invertibles()
    G = same_shape(F, rng.choice(inv), rng.choice(inv), rng.choice(inv))
    Pi = rng.choice(inv)
    M, third = oracles.transformation_equations(F, G, Pi)
    assert derive_M(F, G, Pi) == M
    O = raw(T.base)
    assert third == (O.pow(F.gamma, 2) == O.pow(G.gamma, 2))
    assert transformation_exists(F, G) == third


def test_third_axiom_is_not_redundant():
    # a concrete pair where the second axiom holds with the derived M but the third fails
    Z3 = cyclic_group(3)
    T = unit_td3(Z3)
    F = make_td3_functor(T, T, identity_hom(Z3), 0, 0, 0, 0)
    G = same_shape(F, 0, 0, 1)
    with pytest.raises(LawViolation, match="third"):
        make_td3_transformation(F, G, 0, 0)
    from degentri.tridegen3 import TD3Transformation
    rep = transformation_axioms(TD3Transformation(F, G, 0, 0, derive_M(F, G, 0)))
    assert rep.failures() == ["third transformation axiom"]


def test_sweep_tally_is_reproducible():
    a, b = derivation_sweep(200, 4, 7), derivation_sweep(200, 4, 7)
    assert a == b and a["first_functor"] == a["second_functor"] == a["second_transformation"] == 200
    assert a["third_iff_gamma"] == 200


# -- composition, units and the hom-bicategory ------------------------------------------------


def test_functor_composite_satisfies_axioms():
    rng = random.Random(1)
    for _ in range(200):
        X, Y, Z = (random_td3(rng, MONOIDS[:8]) for _ in range(3))
        F, G = random_functor(rng, X, Y), random_functor(rng, Y, Z)
        GF = compose_td3_functors(G, F)
        assert functor_axioms(GF).passed
        assert GF.hom.map == tuple(G.hom.map[F.hom.map[x]] for x in range(X.base.order))


def test_hom_bicategory_laws_z2():
    T = z2_structure(d=1)
    h = build_hom_bicategory(T, T)
    rep = h.law_report()
    assert rep["triples"] == rep["associative"] > 0
    # units hold only up to the unique 2-cell
    assert rep["unit_checks"] > rep["strict_units"]


def test_modifications_are_unique():
    T = make_td3(cyclic_group(3), 1, 2, 1, 1, 1, 1, 2, 1)
    F = identity_td3_functor(T)
    cells = [make_td3_transformation(F, F, p, a) for p, a in product((0, 1, 2), repeat=2)]
    for a, b in product(cells, repeat=2):
        assert modification_solutions(a, b) == [0]
        assert unique_td3_modification(a, b).m == 0
    mod = unique_td3_modification(cells[0], cells[0])
    assert [p.sigma for p in perturbations(mod, mod)] == [0, 1, 2]


def test_vertical_composition_is_componentwise():
    T = z2_structure(d=1)
    F = identity_td3_functor(T)
    a = make_td3_transformation(F, F, 1, 0)
    b = make_td3_transformation(F, F, 1, 1)
    ba = compose_td3_transformations(b, a)
    assert (ba.Pi, ba.alpha) == (0, 1)


# -- negative results and ξ₃ ---------------------------------------------------------------


def test_non_category_witness():
    w = witness_non_category()
    assert w.found
    p = w.payload
    assert p["F"]["chi"] != p["I∘F"]["chi"] or p["F"]["gamma"] != p["I∘F"]["gamma"]
    # recompute I∘F from the payload
    T = z2_structure(d=1)
    F = make_td3_functor(T, T, p["F"]["hom"], p["F"]["m"], p["F"]["chi"], p["F"]["iota"], p["F"]["gamma"])
    assert compose_td3_functors(identity_td3_functor(T), F).raw() == p["I∘F"]


def test_non_bicategory_witness():
    w = witness_non_bicategory()
    assert w.found and w.payload["alpha"] != w.payload["alpha∘unit"]
    T = z2_structure(d=1, m=0)
    F = identity_td3_functor(T)
    u = unit_td3_transformation(F)
    # unit: Π = 1, α_T = d⁻¹m = 1 in Z/2 with d = 1, m = 0
    assert (u.Pi, u.alpha) == (0, 1)


def test_xi4_witness():
    w = witness_xi4_unfaithful()
    assert w.found and w.payload["sigma"][0] != w.payload["sigma"][1]


def test_non_associativity_needs_order_three():
    assert not witness_non_associative(2).found
    w = witness_non_associative(3)
    assert w.found and w.payload["base"] == "Z/3"
    assert w.payload["(HG)F"] != w.payload["H(GF)"]


def test_xi3_full_catalog():
    r = check_xi3_triequivalence(3)
    assert r.passed
    monoids = [M for k in (1, 2, 3) for M in enumerate_cmonoids(k)]
    homs = sum(len(oracles.homs(raw(A), raw(B))) for A, B in product(monoids, repeat=2))
    assert r.counts["monoids"] == len(monoids) == 8
    assert r.counts["homs"] == homs == 110
    assert xi3(unit_td3(monoids[3])) == monoids[3]
