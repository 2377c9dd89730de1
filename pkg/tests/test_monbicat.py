from dataclasses import replace
from itertools import product

import pytest

from degentri.errors import InputError, LawViolation
from degentri.monbicat.audit import _audit_one, audit_diagrams, diagram_groups
from degentri.monbicat.bicategory import bicategory_report
from degentri.monbicat.carriers import (discrete_carrier, loop_carrier, monoidal_bicategory_report, pi_mutations,
                                        validate_monoidal_bicategory, with_pi, z3_suspension)
from degentri.monbicat.cells import (compose_mb_transformations, enumerate_mb_modifications,
                                     enumerate_mb_transformations, identity_mb_modification,
                                     identity_mb_transformation, mb_modification_report, mb_transformation_report,
                                     perturbation_square, underlying_matches, validate_mb_transformation)
from degentri.monbicat.hom import (box_checks, constraint_reports, forgetful_failures, hom_bicategory_monbicat,
                                   hom_functor, shipped_catalog, unit_functor)
from degentri.monbicat.library import CompositeSpec
from degentri.monoid import cyclic_group
from degentri.tridegen2.comparison import enumerate_iconic
from degentri.tridegen2.engine import DiagramSpec
from degentri.tridegen2.notation import parse_obj
from degentri.tridegen2.higher import DD2Modification, DD2Perturbation, perturbation_report

CATALOG = shipped_catalog()
NAMES = [e.carrier.name for e in CATALOG]


def entry(name):
    return next(e for e in CATALOG if e.carrier.name == name)


@pytest.mark.parametrize("e", CATALOG, ids=NAMES)
def test_carriers_are_monoidal_bicategories(e):
    rep = monoidal_bicategory_report(e.carrier)
    assert rep.passed, rep.failures()
    validate_monoidal_bicategory(e.carrier)


def test_pi_mutations_are_rejected():
    muts = pi_mutations(z3_suspension())
    assert muts
    for d in muts:
        assert not monoidal_bicategory_report(d).passed
        with pytest.raises(LawViolation):
            validate_monoidal_bicategory(d)
    Z = z3_suspension()
    C = Z.cat
    off = next(f for f in range(C.base.n_morphisms) if C.src(f) != C.src(Z.structure.pi))
    with pytest.raises(InputError):
        with_pi(Z, off)


@pytest.mark.parametrize("e", CATALOG, ids=NAMES)
def test_identity_transformation_valid(e):
    for F in e.functors:
        t = identity_mb_transformation(F)
        assert mb_transformation_report(t).passed
        assert mb_modification_report(identity_mb_modification(t)).passed


def _group_order(e):
    c = e.carrier.cat
    return c.base.n_morphisms if c.base.n_objects == 1 else 1


@pytest.mark.parametrize("e", [e for e in CATALOG if "z3" not in e.carrier.name],
                         ids=[n for n in NAMES if "z3" not in n])
def test_transformation_counts_match_hand_count(e):
    # discrete carriers: the only component is the unit, families forced by naturality on objects;
    # loop carriers: one transformation per 2-cell of the group, and none towards a non-identity endomorphism
    F = e.functors[0]
    assert len(enumerate_mb_transformations(F, F)) == _group_order(e)
    for G in e.functors[1:]:
        assert enumerate_mb_transformations(F, G) == []


def test_z3_transformation_count():
    e = entry("Sigma z3pointed")
    F, G = e.functors
    ts = enumerate_mb_transformations(F, F)
    assert len(ts) == 9
    assert len({t.key() for t in ts}) == 9
    assert enumerate_mb_transformations(F, G) == []


def test_wrong_pi_or_m_rejected():
    F = entry("Sigma z3pointed").functors[0]
    C = F.target.cat
    for t in enumerate_mb_transformations(F, F):
        for field in ("Pi", "M"):
            cell = getattr(t, field)
            for other in C.base.hom(C.src(cell), C.tgt(cell)):
                if other != cell:
                    bad = replace(t, **{field: other})
                    assert not mb_transformation_report(bad).passed
                    with pytest.raises(LawViolation):
                        validate_mb_transformation(bad)


def test_composites_validate_and_are_strict():
    for e in CATALOG:
        F = e.functors[0]
        ts = enumerate_mb_transformations(F, F)
        for b, a in product(ts, repeat=2):
            c = compose_mb_transformations(b, a)
            assert mb_transformation_report(c).passed
            assert underlying_matches(c, b, a)
            assert c.obj == F.target.cat.t(b.obj, a.obj)


def test_identity_is_a_unit_for_composition():
    F = entry("Sigma end3").functors[0]
    one = identity_mb_transformation(F)
    for t in enumerate_mb_transformations(F, F):
        assert compose_mb_transformations(one, t).key()[0] == t.obj
        assert compose_mb_transformations(t, one).obj == t.obj


def test_modification_counts():
    F = entry("Sigma end2").functors[0]
    ts = enumerate_mb_transformations(F, F)
    total = sum(len(enumerate_mb_modifications(s, t)) for s, t in product(ts, repeat=2))
    # the unit axiom pins the 2-cell to the difference of the two M cells
    C = F.target.cat
    assert total == len(ts) ** 2
    for s, t in product(ts, repeat=2):
        (m,) = enumerate_mb_modifications(s, t)
        assert m.comp == C.comp(t.M, C.inv(s.M))


@pytest.mark.parametrize("e", CATALOG, ids=NAMES)
def test_hom_bicategories(e):
    h = hom_bicategory_monbicat(e.functors)
    assert bicategory_report(h.bicat).passed
    assert all(r.passed for _, r in constraint_reports(h))
    assert forgetful_failures(h) == []
    box_checks(h)


def test_hom_functor_rejects_nonhom():
    X = discrete_carrier(cyclic_group(3))
    with pytest.raises(LawViolation):
        hom_functor(X, [0, 2, 2])
    F = hom_functor(X, [0, 2, 1])
    assert list(F.functor.underlying.obj) == [0, 2, 1]


def test_unit_functor_is_identity_on_tables():
    X = loop_carrier(cyclic_group(3))
    F = unit_functor(X)
    assert list(F.functor.underlying.mor) == list(range(X.cat.base.n_morphisms))


def test_perturbation_axiom_matches_square():
    Z = z3_suspension()
    dd = Z.structure
    C = dd.cat
    F = unit_functor(Z)
    t = next(iter(enumerate_iconic(F, F))).as_transformation()
    mods = [DD2Modification(t, t, o, f) for o in range(C.base.n_objects) for f in range(C.base.n_morphisms)]
    seen = set()
    for m, n in product(mods, repeat=2):
        for s in C.base.hom(m.obj, n.obj):
            p = DD2Perturbation(m, n, s)
            try:
                sq = perturbation_square(p)
            except InputError:
                continue
            assert perturbation_report(p).passed == sq
            seen.add(sq)
    assert seen == {True, False}


def test_audit_passes():
    rep = audit_diagrams()
    assert rep.passed, rep.failures()
    assert len(rep.checks) == sum(len(g.diagrams) for g in diagram_groups())


def test_audit_catches_broken_nodes():
    for g in diagram_groups():
        v = g.vocabulary()
        ctx = v.context()
        caught = 0
        for d in g.diagrams:
            if isinstance(d, DiagramSpec):
                # endpoints only need to agree up to coherence, so break an edge instead
                broken = replace(d, left=(d.left[0], replace(d.left[1], core="nosuchcell")) + d.left[2:])
            else:
                assert isinstance(d, CompositeSpec)
                if parse_obj(d.src, ctx) == parse_obj(d.tgt, ctx):
                    continue
                broken = replace(d, tgt=d.src)
            ok, detail, _ = _audit_one(broken, v)
            assert not ok and detail, d.name
            caught += 1
        assert caught, g.name
