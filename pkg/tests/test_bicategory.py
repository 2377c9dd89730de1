from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from degentri.errors import InputError
from degentri.monbicat.bicategory import (Assoc, Atom, Bindings, Canon, Comp, Gen, Horiz, Id1, Ident, Inverse, LUnit,
                                          PastingEvaluator, RUnit, Vert, bicategory_report, eval_pasting,
                                          pentagon_routes, suspension, then, validate_bicategory)
from degentri.monbicat.hom import hom_bicategory_monbicat, shipped_catalog
from degentri.monoidal.instances import z3_cocycle

SIGMA = suspension(z3_cocycle(), "Sigma z3cocycle")
END3 = hom_bicategory_monbicat(next(e for e in shipped_catalog() if e.carrier.name == "Sigma end3").functors).bicat


def test_suspension_is_a_bicategory():
    assert bicategory_report(SIGMA).passed
    validate_bicategory(SIGMA)
    assert bicategory_report(END3).passed


def test_shifted_associator_is_caught():
    a = [[list(r) for r in m] for m in SIGMA.assoc[(0, 0, 0, 0)]]
    C = SIGMA.hom[(0, 0)]
    x = a[1][1][1]
    a[1][1][1] = next(f for f in C.hom(C.src[x], C.tgt[x]) if f != x)
    bad = replace(SIGMA, assoc={(0, 0, 0, 0): a})
    assert not bicategory_report(bad).passed


def bracketings(names):
    """Random bracketings of ``names`` with identity 1-cells sprinkled in."""
    if len(names) == 1:
        leaf = st.just(Atom(names[0]))
        return st.one_of(leaf, leaf.map(lambda e: Comp(Id1(0), e)), leaf.map(lambda e: Comp(e, Id1(0))))
    return st.integers(1, len(names) - 1).flatmap(
        lambda k: st.tuples(bracketings(names[:k]), bracketings(names[k:])).map(lambda p: Comp(*p)))


def cells_and_words(B):
    n = B.hom[(0, 0)].n_objects
    return st.integers(1, 4).flatmap(lambda k: st.tuples(
        st.lists(st.integers(0, n - 1), min_size=k, max_size=k),
        *[bracketings([f"x{i}" for i in range(k)])] * 3))


@pytest.mark.parametrize("B", [SIGMA, END3], ids=["sigma", "end3"])
def test_coherence_cells_compose(B):
    @given(cells_and_words(B))
    def prop(data):
        objs, s, t, u = data
        ev = PastingEvaluator(B, Bindings({f"x{i}": (0, 0, o) for i, o in enumerate(objs)}))
        st_, tu, su = ev.canon(s, t), ev.canon(t, u), ev.canon(s, u)
        assert B.vcompose(tu, st_) == su
        assert ev.canon(s, s) == B.id2(ev.cell1(s))
        # the route through an explicit composite pasting agrees
        assert eval_pasting(then(Canon(s, t), Canon(t, u)), B, ev.bind) == su
    prop()


@pytest.mark.parametrize("B", [SIGMA, END3], ids=["sigma", "end3"])
def test_pentagon_routes(B):
    n = B.hom[(0, 0)].n_objects

    @given(st.lists(st.integers(0, n - 1), min_size=4, max_size=4))
    def prop(objs):
        bind = Bindings({k: (0, 0, o) for k, o in zip("khgf", objs)})
        left, right = pentagon_routes(Atom("k"), Atom("h"), Atom("g"), Atom("f"))
        assert eval_pasting(left, B, bind) == eval_pasting(right, B, bind)
    prop()


@pytest.mark.parametrize("B", [SIGMA, END3], ids=["sigma", "end3"])
def test_interchange(B):
    C = B.hom[(0, 0)]
    m = C.n_morphisms

    @given(st.lists(st.integers(0, m - 1), min_size=4, max_size=4))
    def prop(ms):
        b2, b1, a2, a1 = ms
        if C.src[b2] != C.tgt[b1] or C.src[a2] != C.tgt[a1]:
            return
        bind = Bindings(cells2={"b1": b1, "b2": b2, "a1": a1, "a2": a2})
        c1 = {n: (0, 0, v) for n, v in (("p", C.src[b1]), ("q", C.tgt[b1]), ("r", C.tgt[b2]),
                                         ("s", C.src[a1]), ("t", C.tgt[a1]), ("w", C.tgt[a2]))}
        bind.cells1 = c1
        gb1, gb2 = Gen("b1", Atom("p"), Atom("q")), Gen("b2", Atom("q"), Atom("r"))
        ga1, ga2 = Gen("a1", Atom("s"), Atom("t")), Gen("a2", Atom("t"), Atom("w"))
        lhs = Horiz(Vert(gb2, gb1), Vert(ga2, ga1))
        rhs = Vert(Horiz(gb2, ga2), Horiz(gb1, ga1))
        assert eval_pasting(lhs, B, bind) == eval_pasting(rhs, B, bind)
    prop()


def test_unitors_and_inverses():
    B = SIGMA
    bind = Bindings({"f": (0, 0, 1)})
    f = Atom("f")
    x = eval_pasting(then(LUnit(f), Inverse(LUnit(f))), B, bind)
    assert x == B.id2(B.compose1(B.identity1(0), (0, 0, 1)))
    assert eval_pasting(RUnit(f), B, bind) == B.runit_at((0, 0, 1))
    assert eval_pasting(Assoc(f, f, f), B, bind) == B.assoc_at((0, 0, 1), (0, 0, 1), (0, 0, 1))
    assert eval_pasting(Canon(Comp(Id1(0), f), f), B, bind) == B.lunit_at((0, 0, 1))


def test_evaluation_errors():
    B = SIGMA
    with pytest.raises(InputError):
        eval_pasting(Ident(Atom("nobody")), B)
    bind = Bindings({"f": (0, 0, 0), "g": (0, 0, 1)}, {"c": B.hom[(0, 0)].identity[0]})
    with pytest.raises(InputError):
        eval_pasting(Gen("c", Atom("f"), Atom("g")), B, bind)
    with pytest.raises(InputError):
        eval_pasting(Vert(Ident(Atom("g")), Ident(Atom("f"))), B, bind)
    with pytest.raises(InputError):
        eval_pasting(Canon(Comp(Atom("f"), Atom("g")), Atom("f")), B, bind)
