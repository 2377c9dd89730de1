"""One test per acceptance criterion; each prints a PASS or FAIL line with its evidence.

The lines are also collected and printed again at the end of the run.
"""

import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

import oracles
import sweeps
from degentri.errors import LawViolation
from degentri.monbicat.audit import audit_diagrams
from degentri.monbicat.carriers import discrete_carrier, loop_carrier, monoidal_bicategory_report
from degentri.monbicat.cells import (compose_mb_transformations, enumerate_mb_transformations,
                                     mb_transformation_report, underlying_matches)
from degentri.monbicat.hom import assemble_monbicat, shipped_catalog
from degentri.monoid import cyclic_group, eckmann_hilton_check, enumerate_cmonoids, product_monoid, validate_two_op_set
from degentri.monoidal.category import compose_monoidal_functors, identity_monoidal_functor, remake
from degentri.monoidal.instances import discrete_monoidal, pointed_functor, shipped_braided, shipped_monoidal
from degentri.monoidal.structures import (DualPair, check_symmetry, unit_dual_pair, unit_endo_product,
                                          validate_braided_functor, validate_braiding, validate_dual_pair)
from degentri.tridegen2.comparison import (compose_restricted, count_iconic_2cells, functor_F, functor_F_functor,
                                           functor_U, identity_restricted, restricted_failure, roundtrip_FU,
                                           roundtrip_UF, validate_restricted)
from degentri.tridegen2.multiplication import build_multiplication, derive_braiding
from degentri.tridegen3 import (TD3Transformation, axiom_oracle_td3, check_xi3_triequivalence, classify,
                                compose_td3_functors, derivation_sweep, derive_M, functor_axioms,
                                identity_td3_functor, make_td3_functor, random_functor, random_td3, same_shape,
                                transformation_axioms, unit_td3_transformation, witness_non_bicategory,
                                witness_non_category, witness_xi4_unfaithful, z2_structure)

LINES = {}


@contextmanager
def criterion(n, title):
    """Record ``criterion n`` as FAIL unless the block finishes; the block fills ``info`` with evidence."""
    info = {}
    LINES[n] = f"criterion {n:2d} FAIL  {title}"
    try:
        yield info
    except BaseException as e:
        LINES[n] = f"criterion {n:2d} FAIL  {title}: {type(e).__name__}: {str(e)[:120]}"
        print(LINES[n])
        raise
    LINES[n] = f"criterion {n:2d} PASS  {title}: " + ", ".join(f"{k} {v}" for k, v in info.items())
    print(LINES[n])


def test_criterion_01_classification():
    with criterion(1, "classification soundness over orders <= 3") as info:
        tuples = 0
        monoids = [M for k in (1, 2, 3) for M in enumerate_cmonoids(k)]
        for M in monoids:
            O = oracles.raw_monoid(M)
            for t, rep in classify([M]):
                tuples += 1
                assert rep.passed and axiom_oracle_td3(t).passed
                lam = oracles.td3_lambda(O, t.d, t.m, t.pi)
                assert t.lam == t.rho == lam
                assert O.mul(lam, O.pow(t.pi, 1)) == O.mul(O.pow(t.d, 2), O.pow(t.m, 4))
                assert all(oracles.td3_axioms(O, t.d, t.m, t.pi, t.lam, t.rho))
            assert sum(1 for _ in classify([M])) == len(O.units()) ** 8
        info.update(monoids=len(monoids), tuples=tuples)


def _derivation_instances(count=1000, seed=0):
    rng = random.Random(seed)
    monoids = [M for k in (1, 2, 3, 4) for M in enumerate_cmonoids(k)]
    for _ in range(count):
        S, T = random_td3(rng, monoids), random_td3(rng, monoids)
        F = random_functor(rng, S, T)
        inv = T.base.invertibles()
        G = same_shape(F, rng.choice(inv), rng.choice(inv), rng.choice(inv))
        yield F, G, rng.choice(inv), rng.choice(inv)


def test_criterion_02_derivations():
    title = "derived omega, delta, M on 1000 random instances over orders <= 4"
    try:
        functors = transformations = third = third_iff = 0
        for F, G, Pi, alpha in _derivation_instances():
            omega, delta = oracles.functor_equations(F)
            assert omega == [F.omega] and delta == [F.delta]
            assert functor_axioms(F).passed
            functors += 1
            M, holds = oracles.transformation_equations(F, G, Pi)
            assert derive_M(F, G, Pi) == M
            rep = dict(transformation_axioms(TD3Transformation(F, G, Pi, alpha, M)).checks)
            assert rep["second transformation axiom"]
            transformations += 1
            assert rep["third transformation axiom"] == holds
            O = oracles.raw_monoid(F.target.base)
            third += holds
            third_iff += holds == (O.pow(F.gamma, 2) == O.pow(G.gamma, 2))
        tally = derivation_sweep(1000, 4, 0)
        assert tally["third_always"] == third and tally["third_iff_gamma"] == third_iff
    except BaseException as e:
        LINES[2] = f"criterion  2 FAIL  {title}: {type(e).__name__}: {str(e)[:120]}"
        print(LINES[2])
        raise
    assert functors == transformations == 1000 and third_iff == 1000
    # the third transformation axiom is not redundant, see the strict xfail below
    verdict = "PASS" if third == 1000 else "FAIL"
    LINES[2] = (f"criterion  2 {verdict}  {title}: defining equations {functors}/1000, "
                f"functor axioms {functors}/1000, second transformation axiom {transformations}/1000, "
                f"redundant third transformation axiom {third}/1000 "
                f"(holds exactly when gamma_F^2 = gamma_G^2: {third_iff}/1000)")
    print(LINES[2])


@pytest.mark.xfail(strict=True, reason="the third transformation axiom holds only when gamma_F^2 = gamma_G^2")
def test_criterion_02_third_transformation_axiom_is_redundant():
    tally = derivation_sweep(1000, 4, 0)
    assert tally["third_always"] == tally["instances"]


def test_criterion_03_negative_witnesses():
    with criterion(3, "negative witnesses on Z/2 instances") as info:
        w = witness_non_category()
        assert w.found
        T = z2_structure(d=1)
        p = w.payload
        F = make_td3_functor(T, T, p["F"]["hom"], p["F"]["m"], p["F"]["chi"], p["F"]["iota"], p["F"]["gamma"])
        IF = compose_td3_functors(identity_td3_functor(T), F)
        assert IF.raw() == p["I∘F"] != F.raw()
        w2 = witness_non_bicategory()
        assert w2.found and w2.payload["alpha"] != w2.payload["alpha∘unit"]
        u = unit_td3_transformation(identity_td3_functor(z2_structure(d=1, m=0)))
        assert (u.Pi, u.alpha) == (0, 1)
        w3 = witness_xi4_unfaithful()
        assert w3.found and w3.payload["sigma"][0] != w3.payload["sigma"][1]
        info.update(non_category="I∘F != F", non_bicategory="unit not strict",
                    xi4=f"perturbations {w3.payload['sigma']} share an image")


def test_criterion_04_xi3():
    with criterion(4, "xi3 surjective on objects and 1-cells, unique 3-cells, orders <= 3") as info:
        r = check_xi3_triequivalence(3)
        assert r.object_surjective and r.one_cell_surjective and r.unique_three_cells and r.composition_preserved
        monoids = [M for k in (1, 2, 3) for M in enumerate_cmonoids(k)]
        homs = sum(len(oracles.homs(oracles.raw_monoid(A), oracles.raw_monoid(B)))
                   for A, B in product(monoids, repeat=2))
        assert r.counts["monoids"] == 8 and r.counts["homs"] == homs == 110
        info.update(**r.counts)


def test_criterion_05_coherence():
    with criterion(5, "Mac Lane property for words <= 5 and single mutations rejected") as info:
        start = time.perf_counter()
        cats = shipped_monoidal()
        routes = mutations = 0
        for c in cats:
            ok, where, checked = sweeps.coherence_sweep(c, max_len=5)
            assert ok, (c.name, where)
            routes += checked
            assert remake(c).raw() == c.raw()
            for _, _, change in sweeps.single_mutations(c):
                with pytest.raises(LawViolation):
                    remake(c, **change)
                mutations += 1
        elapsed = time.perf_counter() - start
        assert elapsed < 60, elapsed
        info.update(categories=len(cats), route_pairs=routes, mutations_rejected=mutations,
                    under_one_minute=elapsed < 60)


def test_criterion_06_dual_pairs():
    with criterion(6, "unit dual pair everywhere, group duals in discrete carriers") as info:
        cats = shipped_monoidal()
        for c in cats:
            validate_dual_pair(unit_dual_pair(c), c)
        carriers = [cyclic_group(n) for n in (2, 3, 4, 5)] + [product_monoid(cyclic_group(2), cyclic_group(2))]
        accepted = rejected = 0
        for m in carriers:
            c = discrete_monoidal(m)
            for x, y in product(m.elements, repeat=2):
                pair = DualPair(x, y, c.id(c.t(y, x)), c.id(c.t(x, y)))
                if y == m.inv(x):
                    validate_dual_pair(pair, c)
                    accepted += 1
                else:
                    with pytest.raises(LawViolation):
                        validate_dual_pair(pair, c)
                    rejected += 1
        info.update(categories=len(cats), accepted=accepted, rejected=rejected)


def test_criterion_07_braiding_pipeline():
    with criterion(7, "braiding derived from every shipped doubly degenerate structure") as info:
        names = []
        for b in shipped_braided():
            dd = functor_F(b)
            mult = build_multiplication(dd)
            br = derive_braiding(dd.cat, mult)
            validate_braiding(br, dd.cat)
            assert oracles.braiding_natural(dd.cat, br.c)
            assert oracles.hexagon_failures(dd.cat, br.c) == []
            symmetric = check_symmetry(br, dd.cat)[0]
            assert symmetric == (b.name != "z3pointed")
            names.append(f"{b.name}{'' if symmetric else ' (not symmetric)'}")
        info.update(instances="; ".join(names))


def _braided_pairs():
    out = []
    for b in shipped_braided():
        i = validate_braided_functor(b, b, identity_monoidal_functor(b.cat))
        out.append((i, i))
        if b.name == "z3pointed":
            d = validate_braided_functor(b, b, pointed_functor(b.cat, b.cat, 2, 1))
            out += [(d, d), (d, i), (i, d)]
    return out


def test_criterion_08_uf_identity():
    with criterion(8, "U(F(X)) = X elementwise and U strict on composition") as info:
        checked = []
        for b in shipped_braided():
            y = functor_U(functor_F(b))
            assert y.cat.base == b.cat.base
            assert (y.cat.tensor_obj, y.cat.tensor_mor) == (b.cat.tensor_obj, b.cat.tensor_mor)
            assert (y.cat.assoc, y.cat.lunit, y.cat.runit) == (b.cat.assoc, b.cat.lunit, b.cat.runit)
            assert y.braiding.c == b.braiding.c and roundtrip_UF(b)
            checked.append(b.name)
        assert {"discZ4", "Z", "z3pointed"} <= set(checked)
        pairs = _braided_pairs()
        for g, f in pairs:
            comp = functor_U(compose_restricted(functor_F_functor(g), functor_F_functor(f))).functor
            direct = compose_monoidal_functors(functor_U(functor_F_functor(g)).functor,
                                               functor_U(functor_F_functor(f)).functor)
            assert comp.underlying.obj == direct.underlying.obj and comp.underlying.mor == direct.underlying.mor
            assert comp.phi2 == direct.phi2 and comp.phi0 == direct.phi0
        info.update(categories=", ".join(checked), composable_pairs=len(pairs))


def test_criterion_09_z2_counterexample():
    with criterion(9, "Z/2 counterexample: locally full, not locally faithful") as info:
        count, sols = count_iconic_2cells()
        assert count == 2
        C = sols[0].source.target.cat
        for s in sols:
            assert C.base.is_identity(C.comp(s.Pi, s.M))
        images = {functor_U(s).components for s in sols}
        assert len(images) == 1
        info.update(iconic_2cells=count, images=len(images), Pi_plus_M="0 for both")


def test_criterion_10_restricted():
    with criterion(10, "functor_F images lie in the restricted image and both round trips are identities") as info:
        members = 0
        for b in shipped_braided():
            dd = functor_F(b)
            validate_restricted(dd)
            I = identity_restricted(dd)
            assert restricted_failure(I) is None
            assert roundtrip_FU(dd) and roundtrip_FU(I) and roundtrip_UF(b)
            members += 2
        for g, f in _braided_pairs():
            for bf in (g, f):
                x = functor_F_functor(bf)
                assert restricted_failure(x) is None and roundtrip_FU(x) and roundtrip_UF(bf)
                members += 1
        info.update(members=members)


def test_criterion_11_monbicat_suite():
    with criterion(11, "monoidal bicategory instance suite") as info:
        start = time.perf_counter()
        for m in (cyclic_group(2), cyclic_group(3), cyclic_group(4)):
            for X in (discrete_carrier(m), loop_carrier(m)):
                assert monoidal_bicategory_report(X).passed, X.name
        audit = audit_diagrams()
        assert audit.passed, audit.failures()
        composites = 0
        for e in shipped_catalog():
            F = e.functors[0]
            ts = enumerate_mb_transformations(F, F)
            for b, a in product(ts, repeat=2):
                c = compose_mb_transformations(b, a)
                assert mb_transformation_report(c).passed and underlying_matches(c, b, a)
                composites += 1
        suite = assemble_monbicat()
        assert suite.passed, suite.failures()
        elapsed = time.perf_counter() - start
        assert elapsed < 120, elapsed
        info.update(diagrams_audited=len(audit.checks), composites=composites,
                    suite_checks=f"{sum(ok for _, ok, _ in suite.checks)}/{len(suite.checks)}",
                    under_two_minutes=elapsed < 120)


def test_criterion_12_eckmann_hilton():
    with criterion(12, "Eckmann-Hilton on two-operation sets and on End(I)") as info:
        sets = 0
        for n in (1, 2, 3):
            for s, c, e in oracles.two_op_sets(n):
                m = eckmann_hilton_check(validate_two_op_set(n, s, c, e))
                assert [list(r) for r in m.op] == s == c
                assert all(m.op[x][y] == m.op[y][x] for x in range(n) for y in range(n))
                sets += 1
        cats = shipped_monoidal()
        for c in cats:
            ends = c.end(c.unit_obj)
            for b, a in product(ends, repeat=2):
                assert unit_endo_product(b, a, c) == c.comp(b, a) == c.comp(a, b)
        info.update(two_op_sets=sets, categories=len(cats))
