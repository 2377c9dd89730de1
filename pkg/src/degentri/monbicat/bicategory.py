"""Finite bicategories and the evaluation of 2-cell pastings.

A 1-cell is a triple ``(a, b, i)``: object ``i`` of the hom category
``hom[(a, b)]``.  A 2-cell is ``(a, b, f)`` with ``f`` a morphism of that
category.  Horizontal composition ``g ∘ f`` takes ``g: b -> c`` after
``f: a -> b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from ..errors import InputError, LawViolation
from ..fincat import FinCategory
from ..monoidal.category import FinMonoidalCategory
from ..tridegen2.data import CheckReport, _Checker

Cell1 = tuple[int, int, int]
Cell2 = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class FinBicategory:
    n_objects: int
    hom: Mapping[tuple[int, int], FinCategory]
    # comp1[(a, b, c)][g][f] and comp2[(a, b, c)][beta][alpha] compose hom(b, c) x hom(a, b) -> hom(a, c)
    comp1: Mapping[tuple[int, int, int], Sequence[Sequence[int]]]
    comp2: Mapping[tuple[int, int, int], Sequence[Sequence[int]]]
    ident: Sequence[int]
    # assoc[(a, b, c, d)][h][g][f]: (h g) f => h (g f);  lunit[(a, b)][f]: 1 f => f;  runit[(a, b)][f]: f 1 => f
    assoc: Mapping[tuple[int, int, int, int], Sequence[Sequence[Sequence[int]]]]
    lunit: Mapping[tuple[int, int], Sequence[int]]
    runit: Mapping[tuple[int, int], Sequence[int]]
    name: str = ""

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    def cells1(self, a: int, b: int) -> list[Cell1]:
        return [(a, b, i) for i in self.hom[(a, b)].objects]

    def identity1(self, a: int) -> Cell1:
        return (a, a, self.ident[a])

    def compose1(self, g: Cell1, f: Cell1) -> Cell1:
        b, c, gi = g
        a, b2, fi = f
        if b != b2:
            raise InputError(f"1-cells {g} and {f} do not compose")
        return (a, c, self.comp1[(a, b, c)][gi][fi])

    def hcompose(self, beta: Cell2, alpha: Cell2) -> Cell2:
        b, c, bm = beta
        a, b2, am = alpha
        if b != b2:
            raise InputError("2-cells do not compose horizontally")
        return (a, c, self.comp2[(a, b, c)][bm][am])

    def vcompose(self, second: Cell2, first: Cell2) -> Cell2:
        a, b, s = second
        a2, b2, f = first
        if (a, b) != (a2, b2):
            raise InputError("2-cells live in different hom categories")
        return (a, b, self.hom[(a, b)].compose(s, f))

    def id2(self, f: Cell1) -> Cell2:
        a, b, i = f
        return (a, b, self.hom[(a, b)].identity[i])

    def inv2(self, x: Cell2) -> Cell2:
        a, b, m = x
        i = self.hom[(a, b)].inv(m)
        return (a, b, i)

    def src2(self, x: Cell2) -> Cell1:
        a, b, m = x
        return (a, b, self.hom[(a, b)].src[m])

    def tgt2(self, x: Cell2) -> Cell1:
        a, b, m = x
        return (a, b, self.hom[(a, b)].tgt[m])

    def assoc_at(self, h: Cell1, g: Cell1, f: Cell1) -> Cell2:
        a, b, fi = f
        b2, c, gi = g
        c2, d, hi = h
        if b != b2 or c != c2:
            raise InputError("1-cells do not compose")
        return (a, d, self.assoc[(a, b, c, d)][hi][gi][fi])

    def lunit_at(self, f: Cell1) -> Cell2:
        a, b, i = f
        return (a, b, self.lunit[(a, b)][i])

    def runit_at(self, f: Cell1) -> Cell2:
        a, b, i = f
        return (a, b, self.runit[(a, b)][i])


def suspension(C: FinMonoidalCategory, name: str = "") -> FinBicategory:
    """One object; 1-cells are objects of ``C``, composition is ``⊗`` and the constraints are those of ``C``."""
    key = (0, 0)
    return FinBicategory(
        1, {key: C.base}, {(0, 0, 0): C.tensor_obj}, {(0, 0, 0): C.tensor_mor}, (C.unit_obj,),
        {(0, 0, 0, 0): C.assoc}, {key: C.lunit}, {key: C.runit}, name or f"suspension({C.name})")


# -- validation ---------------------------------------------------------------------------


def _check_composition(B: FinBicategory, a: int, b: int, c: int) -> None:
    Hab, Hbc, Hac = B.hom[(a, b)], B.hom[(b, c)], B.hom[(a, c)]
    c1, c2 = B.comp1[(a, b, c)], B.comp2[(a, b, c)]
    for g in Hbc.objects:
        for f in Hab.objects:
            if not 0 <= c1[g][f] < Hac.n_objects:
                raise LawViolation("composite 1-cell out of range", (a, b, c, g, f))
    for bm in Hbc.morphisms:
        for am in Hab.morphisms:
            x = c2[bm][am]
            if Hac.src[x] != c1[Hbc.src[bm]][Hab.src[am]] or Hac.tgt[x] != c1[Hbc.tgt[bm]][Hab.tgt[am]]:
                raise LawViolation("horizontal composite has wrong boundary", (a, b, c, bm, am))
    for g in Hbc.objects:
        for f in Hab.objects:
            if c2[Hbc.identity[g]][Hab.identity[f]] != Hac.identity[c1[g][f]]:
                raise LawViolation("horizontal composition does not preserve identities", (a, b, c, g, f))
    for b1, b2 in product(Hbc.morphisms, repeat=2):
        bb = Hbc.comp[b2][b1]
        if bb < 0:
            continue
        for a1, a2 in product(Hab.morphisms, repeat=2):
            aa = Hab.comp[a2][a1]
            if aa < 0:
                continue
            if c2[bb][aa] != Hac.comp[c2[b2][a2]][c2[b1][a1]]:
                raise LawViolation("interchange", (a, b, c, (b2, b1), (a2, a1)))


def _check_constraints(B: FinBicategory, a: int, b: int, c: int, d: int) -> None:
    for h, g, f in product(B.cells1(c, d), B.cells1(b, c), B.cells1(a, b)):
        x = B.assoc_at(h, g, f)
        if B.src2(x) != B.compose1(B.compose1(h, g), f) or B.tgt2(x) != B.compose1(h, B.compose1(g, f)):
            raise LawViolation("associator has wrong boundary", (h, g, f))
        if not B.hom[(a, d)].is_iso(x[2]):
            raise LawViolation("associator not invertible", (h, g, f))
    # naturality in each variable
    H = lambda p, q: B.hom[(p, q)]
    for hm, gm, fm in product(H(c, d).morphisms, H(b, c).morphisms, H(a, b).morphisms):
        hh, gg, ff = (c, d, hm), (b, c, gm), (a, b, fm)
        left = B.vcompose(B.assoc_at(B.tgt2(hh), B.tgt2(gg), B.tgt2(ff)), B.hcompose(B.hcompose(hh, gg), ff))
        right = B.vcompose(B.hcompose(hh, B.hcompose(gg, ff)), B.assoc_at(B.src2(hh), B.src2(gg), B.src2(ff)))
        if left != right:
            raise LawViolation("naturality of the associator", (hm, gm, fm))


def _check_units(B: FinBicategory, a: int, b: int) -> None:
    H = B.hom[(a, b)]
    for f in B.cells1(a, b):
        lf, rf = B.lunit_at(f), B.runit_at(f)
        if B.src2(lf) != B.compose1(B.identity1(b), f) or B.tgt2(lf) != f:
            raise LawViolation("left unitor has wrong boundary", f)
        if B.src2(rf) != B.compose1(f, B.identity1(a)) or B.tgt2(rf) != f:
            raise LawViolation("right unitor has wrong boundary", f)
        if not (H.is_iso(lf[2]) and H.is_iso(rf[2])):
            raise LawViolation("unitor not invertible", f)
    for m in H.morphisms:
        x = (a, b, m)
        s, t = B.src2(x), B.tgt2(x)
        if B.vcompose(B.lunit_at(t), B.hcompose(B.id2(B.identity1(b)), x)) != B.vcompose(x, B.lunit_at(s)):
            raise LawViolation("naturality of the left unitor", m)
        if B.vcompose(B.runit_at(t), B.hcompose(x, B.id2(B.identity1(a)))) != B.vcompose(x, B.runit_at(s)):
            raise LawViolation("naturality of the right unitor", m)


def _check_pentagon(B: FinBicategory, a: int, b: int, c: int, d: int, e: int) -> None:
    for k, h, g, f in product(B.cells1(d, e), B.cells1(c, d), B.cells1(b, c), B.cells1(a, b)):
        one = lambda x: B.id2(x)
        left = B.vcompose(B.assoc_at(k, h, B.compose1(g, f)), B.assoc_at(B.compose1(k, h), g, f))
        right = B.vcompose(B.hcompose(one(k), B.assoc_at(h, g, f)),
                           B.vcompose(B.assoc_at(k, B.compose1(h, g), f), B.hcompose(B.assoc_at(k, h, g), one(f))))
        if left != right:
            raise LawViolation("pentagon", (k, h, g, f))


def _check_triangle(B: FinBicategory, a: int, b: int, c: int) -> None:
    for g, f in product(B.cells1(b, c), B.cells1(a, b)):
        left = B.vcompose(B.hcompose(B.id2(g), B.lunit_at(f)), B.assoc_at(g, B.identity1(b), f))
        right = B.hcompose(B.runit_at(g), B.id2(f))
        if left != right:
            raise LawViolation("triangle", (g, f))


def bicategory_report(B: FinBicategory, stop_early: bool = False) -> CheckReport:
    rep = CheckReport()
    chk = _Checker(rep)
    obs = list(B.objects)

    def steps():
        def shape():
            for a, b in product(obs, repeat=2):
                if (a, b) not in B.hom:
                    raise InputError(f"missing hom category ({a}, {b})")
            for a in obs:
                if not 0 <= B.ident[a] < B.hom[(a, a)].n_objects:
                    raise InputError(f"identity 1-cell of object {a} out of range")
        yield "shape", shape
        yield "horizontal composition is a functor", lambda: [_check_composition(B, *t) for t in product(obs, repeat=3)]
        yield "associator", lambda: [_check_constraints(B, *t) for t in product(obs, repeat=4)]
        yield "unitors", lambda: [_check_units(B, *t) for t in product(obs, repeat=2)]
        yield "pentagon", lambda: [_check_pentagon(B, *t) for t in product(obs, repeat=5)]
        yield "triangle", lambda: [_check_triangle(B, *t) for t in product(obs, repeat=3)]

    for name, fn in steps():
        if not chk.run(name, lambda fn=fn: (fn(), None)[1]) and stop_early:
            break
    return rep


def validate_bicategory(B: FinBicategory) -> FinBicategory:
    rep = bicategory_report(B, stop_early=True)
    if not rep.passed:
        name, detail = rep.failures()[0]
        raise LawViolation(name, None, detail)
    return B


# -- pastings --------------------------------------------------------------------------------
#
# 1-cell expressions: Atom(name), Id1(object), Comp(g, f).
# 2-cell pastings: Gen(name, src, tgt), Ident(e), Vert(second, first), Horiz(beta, alpha),
# Assoc(h, g, f), LUnit(f), RUnit(f), Inverse(p) and Canon(src, tgt) for unmarked constraint steps.


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Id1:
    obj: int


@dataclass(frozen=True)
class Comp:
    g: "Expr1"
    f: "Expr1"


Expr1 = Atom | Id1 | Comp


@dataclass(frozen=True)
class Gen:
    name: str
    src: Expr1
    tgt: Expr1


@dataclass(frozen=True)
class Ident:
    e: Expr1


@dataclass(frozen=True)
class Vert:
    second: "Pasting"
    first: "Pasting"


@dataclass(frozen=True)
class Horiz:
    beta: "Pasting"
    alpha: "Pasting"


@dataclass(frozen=True)
class Assoc:
    h: Expr1
    g: Expr1
    f: Expr1


@dataclass(frozen=True)
class LUnit:
    f: Expr1


@dataclass(frozen=True)
class RUnit:
    f: Expr1


@dataclass(frozen=True)
class Inverse:
    p: "Pasting"


@dataclass(frozen=True)
class Canon:
    """The coherence 2-cell between two 1-cell expressions with the same normal form."""
    src: Expr1
    tgt: Expr1


Pasting = Gen | Ident | Vert | Horiz | Assoc | LUnit | RUnit | Inverse | Canon


def then(*ps: Pasting) -> Pasting:
    """Diagrammatic vertical composite."""
    out = ps[0]
    for p in ps[1:]:
        out = Vert(p, out)
    return out


@dataclass
class Bindings:
    cells1: Mapping[str, Cell1] = field(default_factory=dict)
    cells2: Mapping[str, int] = field(default_factory=dict)


class PastingEvaluator:
    def __init__(self, B: FinBicategory, bindings: Bindings):
        self.B = B
        self.bind = bindings

    def cell1(self, e: Expr1) -> Cell1:
        if isinstance(e, Atom):
            try:
                return self.bind.cells1[e.name]
            except KeyError:
                raise InputError(f"unbound 1-cell {e.name}") from None
        if isinstance(e, Id1):
            return self.B.identity1(e.obj)
        if isinstance(e, Comp):
            return self.B.compose1(self.cell1(e.g), self.cell1(e.f))
        raise InputError(f"not a 1-cell expression: {e!r}")

    def ends(self, e: Expr1) -> tuple[int, int]:
        a, b, _ = self.cell1(e)
        return a, b

    def normal(self, e: Expr1) -> tuple[list[Cell1], int, Cell2]:
        """Right-associated atom list, its source object and the 2-cell from ``e`` to it."""
        B = self.B
        if isinstance(e, Comp):
            lg, _, cg = self.normal(e.g)
            lf, a, cf = self.normal(e.f)
            first = B.hcompose(cg, cf)
            b = self.ends(e.f)[1]
            return lg + lf, a, B.vcompose(self._merge(lg, lf, b, a), first)
        c = self.cell1(e)
        if isinstance(e, Id1):
            return [], c[0], B.id2(c)
        return [c], c[0], B.id2(c)

    def word(self, cells: list[Cell1], a: int) -> Cell1:
        if not cells:
            return self.B.identity1(a)
        out = cells[-1]
        for c in reversed(cells[:-1]):
            out = self.B.compose1(c, out)
        return out

    def _merge(self, lg: list[Cell1], lf: list[Cell1], b: int, a: int) -> Cell2:
        # word(lg) ∘ word(lf) => word(lg + lf); lg starts at b, lf at a
        B = self.B
        F = self.word(lf, a)
        if not lg:
            return B.lunit_at(F)
        if not lf:
            return B.runit_at(self.word(lg, b))
        if len(lg) == 1:
            return B.id2(B.compose1(lg[0], F))
        g1, rest = lg[0], lg[1:]
        R = self.word(rest, b)
        step = B.assoc_at(g1, R, F)
        return B.vcompose(B.hcompose(B.id2(g1), self._merge(rest, lf, b, a)), step)

    def canon(self, s: Expr1, t: Expr1) -> Cell2:
        ls, a, cs = self.normal(s)
        lt, a2, ct = self.normal(t)
        if ls != lt or a != a2:
            raise InputError("no coherence 2-cell: the normal forms differ")
        return self.B.vcompose(self.B.inv2(ct), cs)

    def eval(self, p: Pasting) -> tuple[Cell2, Cell1, Cell1]:
        """``(2-cell, source, target)``; raises on boundary mismatch."""
        B = self.B
        if isinstance(p, Gen):
            s, t = self.cell1(p.src), self.cell1(p.tgt)
            try:
                m = self.bind.cells2[p.name]
            except KeyError:
                raise InputError(f"unbound 2-cell {p.name}") from None
            x = (s[0], s[1], m)
            if B.src2(x) != s or B.tgt2(x) != t:
                raise InputError(f"2-cell {p.name} does not have its declared boundary")
            return x, s, t
        if isinstance(p, Ident):
            c = self.cell1(p.e)
            return B.id2(c), c, c
        if isinstance(p, Vert):
            x1, s1, t1 = self.eval(p.first)
            x2, s2, t2 = self.eval(p.second)
            if t1 != s2:
                raise InputError("vertical composite: boundary mismatch")
            return B.vcompose(x2, x1), s1, t2
        if isinstance(p, Horiz):
            xb, sb, tb = self.eval(p.beta)
            xa, sa, ta = self.eval(p.alpha)
            if sa[1] != sb[0]:
                raise InputError("horizontal composite: object mismatch")
            return B.hcompose(xb, xa), B.compose1(sb, sa), B.compose1(tb, ta)
        if isinstance(p, Assoc):
            h, g, f = self.cell1(p.h), self.cell1(p.g), self.cell1(p.f)
            x = B.assoc_at(h, g, f)
            return x, B.src2(x), B.tgt2(x)
        if isinstance(p, LUnit):
            x = B.lunit_at(self.cell1(p.f))
            return x, B.src2(x), B.tgt2(x)
        if isinstance(p, RUnit):
            x = B.runit_at(self.cell1(p.f))
            return x, B.src2(x), B.tgt2(x)
        if isinstance(p, Inverse):
            x, s, t = self.eval(p.p)
            y = B.inv2(x)
            if y[2] < 0:
                raise InputError("inverse of a non-invertible 2-cell")
            return y, t, s
        if isinstance(p, Canon):
            s, t = self.cell1(p.src), self.cell1(p.tgt)
            return self.canon(p.src, p.tgt), s, t
        raise InputError(f"not a pasting: {p!r}")


def eval_pasting(p: Pasting, B: FinBicategory, bindings: Bindings | None = None) -> Cell2:
    return PastingEvaluator(B, bindings or Bindings()).eval(p)[0]


def pentagon_routes(k: Expr1, h: Expr1, g: Expr1, f: Expr1) -> tuple[Pasting, Pasting]:
    """The two associator routes ``((k h) g) f => k (h (g f))``."""
    left = then(Assoc(Comp(k, h), g, f), Assoc(k, h, Comp(g, f)))
    right = then(Horiz(Assoc(k, h, g), Ident(f)), Assoc(k, Comp(h, g), f), Horiz(Ident(k), Assoc(h, g, f)))
    return left, right
