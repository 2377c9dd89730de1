from dataclasses import replace
import pytest

import oracles
from degentri.errors import InputError, LawViolation
from degentri.monoidal.category import compose_monoidal_functors, identity_monoidal_functor
from degentri.monoidal.instances import pointed_functor, shipped_braided, z3_pointed_braided, z_braided
from degentri.monoidal.structures import BraidedFunctor, check_symmetry, validate_braided_functor
from degentri.tridegen2.comparison import (canonical_Pi_M, compose_restricted, count_iconic_2cells, functor_F,
                                           functor_F_functor, functor_U, iconic_candidates, identity_restricted,
                                           lift_transformation, restricted_failure, roundtrip_FU, roundtrip_UF,
                                           same_dd, validate_restricted)
from degentri.tridegen2.data import dd_report, validate_dd
from degentri.tridegen2.higher import functor_report, validate_dd2_functor
from degentri.tridegen2.multiplication import braided_of_dd, build_multiplication, derive_braiding

BRAIDED = shipped_braided()
DD = [functor_F(b) for b in BRAIDED]
IDS = [b.name for b in BRAIDED]


def braided_functors():
    """Shipped braided functors, grouped as composable pairs on each carrier."""
    out = []
    for b in BRAIDED:
        out.append((validate_braided_functor(b, b, identity_monoidal_functor(b.cat)),) * 2)
    z = z3_pointed_braided()
    double = validate_braided_functor(z, z, pointed_functor(z.cat, z.cat, 2, 1))
    out.append((double, double))
    return out


@pytest.mark.parametrize("dd", DD, ids=IDS)
def test_images_are_valid_structures(dd):
    rep = dd_report(dd)
    assert rep.passed, rep.failures()
    assert any(n.startswith("tricategory axiom") for n, _, _ in rep.checks)


def test_pi_mutations_break_an_axiom():
    dd = DD[3]
    C = dd.cat
    others = [f for f in C.base.hom(C.src(dd.pi), C.tgt(dd.pi)) if f != dd.pi]
    assert others
    for f in others:
        rep = dd_report(replace(dd, pi=f))
        assert not rep.passed
        assert all(n.startswith("tricategory axiom") for n, _ in rep.failures())
    with pytest.raises(LawViolation):
        validate_dd(replace(dd, pi=others[0]))


@pytest.mark.parametrize("dd,b", list(zip(DD, BRAIDED)), ids=IDS)
def test_braiding_pipeline(dd, b):
    mult = build_multiplication(dd)
    br = derive_braiding(dd.cat, mult)
    assert oracles.braiding_natural(dd.cat, br.c)
    assert oracles.hexagon_failures(dd.cat, br.c) == []
    # the braiding comes back exactly
    assert br.c == b.braiding.c
    assert check_symmetry(br, dd.cat)[0] == (b.name != "z3pointed")


def test_z3_braiding_is_not_symmetric():
    br = braided_of_dd(DD[3]).braiding
    c = DD[3].cat
    assert c.comp(br.c[1][1], br.c[1][1]) != c.id(c.t(1, 1))


@pytest.mark.parametrize("b", BRAIDED, ids=IDS)
def test_uf_identity_elementwise(b):
    y = functor_U(functor_F(b))
    assert y.cat.base == b.cat.base
    assert y.cat.tensor_obj == b.cat.tensor_obj and y.cat.tensor_mor == b.cat.tensor_mor
    assert y.cat.assoc == b.cat.assoc and y.cat.lunit == b.cat.lunit and y.cat.runit == b.cat.runit
    assert y.braiding.c == b.braiding.c
    assert roundtrip_UF(b)


@pytest.mark.parametrize("g,f", braided_functors())
def test_u_is_strict_on_composition(g, f):
    Fg, Ff = functor_F_functor(g), functor_F_functor(f)
    composite = functor_U(compose_restricted(Fg, Ff)).functor
    direct = compose_monoidal_functors(functor_U(Fg).functor, functor_U(Ff).functor)
    assert composite.underlying.obj == direct.underlying.obj
    assert composite.underlying.mor == direct.underlying.mor
    assert composite.phi2 == direct.phi2 and composite.phi0 == direct.phi0
    assert roundtrip_UF(f) and roundtrip_UF(g)


def test_lifted_functors_validate():
    for g, f in braided_functors():
        validate_dd2_functor(functor_F_functor(f))
        assert functor_report(functor_F_functor(g)).passed


def test_counterexample_z2():
    count, sols = count_iconic_2cells()
    assert count == 2
    z = z_braided()
    C = z.cat
    for s in sols:
        assert C.base.is_identity(C.comp(s.Pi, s.M))
    images = {functor_U(s).components for s in sols}
    assert len(images) == 1
    # the two solutions differ in Pi and M only
    assert len({(s.Pi, s.M) for s in sols}) == 2
    assert len({tuple(sorted(s.components.items())) for s in sols}) == 1


def test_candidate_space_is_exhaustive():
    z = z_braided()
    F = functor_F_functor(BraidedFunctor(z, z, identity_monoidal_functor(z.cat)))
    cands = list(iconic_candidates(F, F))
    # one component in End(U) = Z/2, and Pi, M each in Z/2
    assert len(cands) == 8
    assert canonical_Pi_M(F, F) in {(s.Pi, s.M) for s in count_iconic_2cells()[1]}


@pytest.mark.parametrize("dd", DD, ids=IDS)
def test_restricted_members_round_trip(dd):
    validate_restricted(dd)
    assert roundtrip_FU(dd)
    I = identity_restricted(dd)
    assert restricted_failure(I) is None and roundtrip_FU(I)


def test_restricted_functor_images_round_trip():
    for g, f in braided_functors():
        for bf in (f, g):
            x = functor_F_functor(bf)
            assert restricted_failure(x) is None
            assert roundtrip_FU(x)


def test_restricted_iconic_cells_round_trip():
    z = z3_pointed_braided()
    bf = validate_braided_functor(z, z, identity_monoidal_functor(z.cat))
    F = functor_F_functor(bf)
    from degentri.monoidal.category import enumerate_monoidal_transformations
    for theta in enumerate_monoidal_transformations(bf.functor, bf.functor):
        ic = lift_transformation(theta, F, F)
        assert restricted_failure(ic) is None
        assert roundtrip_FU(ic)
        assert functor_U(ic).components == theta.components


def test_restricted_failure_names_the_datum():
    dd = DD[3]
    C = dd.cat
    other = next(f for f in C.base.hom(C.src(dd.pi), C.tgt(dd.pi)) if f != dd.pi)
    assert restricted_failure(replace(dd, pi=other)) == "cell pi is not canonical"
    with pytest.raises(LawViolation):
        validate_restricted(replace(dd, pi=other))
    with pytest.raises(InputError):
        restricted_failure(42)


def test_functor_F_is_deterministic():
    for b in BRAIDED:
        assert same_dd(functor_F(b), functor_F(b))
    assert not same_dd(DD[0], DD[3])


def test_composite_requires_matching_structures():
    a, b = identity_restricted(DD[0]), identity_restricted(DD[3])
    with pytest.raises(InputError):
        compose_restricted(a, b)
