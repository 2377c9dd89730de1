"""Materialized hom-bicategories of monoidal bicategories and the catalog audit.

For one-object carriers ``X`` and ``Y`` and a finite list of functors
``X -> Y``, the 1-cells of the materialized bicategory are all valid
monoidal transformations and its 2-cells all valid monoidal modifications.
Composition, identities and the constraints ``a``, ``l``, ``r`` are looked
up in those sets, so any composite outside them is a law failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from typing import Sequence

from ..errors import InputError, LawViolation
from ..fincat import validate_category
from ..monoid import FiniteCommutativeMonoid, cyclic_group
from ..monoidal.category import validate_monoidal_functor
from ..monoidal.instances import pointed_functor
from ..tridegen2.comparison import identity_restricted, lift_functor
from ..tridegen2.data import CheckReport, _Checker
from ..tridegen2.higher import DD2Functor, validate_dd2_functor
from .bicategory import FinBicategory, bicategory_report
from .carriers import (MonoidalBicategoryData, discrete_carrier, loop_carrier, monoidal_bicategory_report,
                       z3_suspension)
from .cells import (MonoidalModificationData3, MonoidalTransformationData3, box_compose_transformations,
                    box_interchange, box_unit_comparison, compose_mb_transformations, enumerate_mb_modifications,
                    enumerate_mb_transformations, identity_mb_transformation,
                    mb_modification_report, mb_transformation_report, underlying_matches, vcompose_modifications,
                    whisker)


def unit_functor(X: MonoidalBicategoryData) -> DD2Functor:
    """The identity functor of a carrier, with unit blocks and canonical cells."""
    return identity_restricted(X.structure)


@dataclass(frozen=True, eq=False)
class MonBicatHom:
    bicat: FinBicategory
    functors: tuple[DD2Functor, ...]
    cells1: dict            # (i, j) -> list of transformations F_i => F_j
    cells2: dict            # (i, j) -> list of modifications, the morphisms of hom[(i, j)]

    def transformation(self, c: tuple[int, int, int]) -> MonoidalTransformationData3:
        i, j, k = c
        return self.cells1[(i, j)][k]

    def modification(self, c: tuple[int, int, int]) -> MonoidalModificationData3:
        i, j, k = c
        return self.cells2[(i, j)][k]


class _Index:
    def __init__(self, ts: Sequence[MonoidalTransformationData3], ms: Sequence[MonoidalModificationData3]):
        self.t = {t.key(): n for n, t in enumerate(ts)}
        self.m = {(self.t[m.source.key()], self.t[m.target.key()], m.comp): n for n, m in enumerate(ms)}

    def of_t(self, t: MonoidalTransformationData3, what: str) -> int:
        try:
            return self.t[t.key()]
        except KeyError:
            raise LawViolation(f"{what} is not a valid monoidal transformation", t.raw()) from None

    def of_m(self, s: int, t: int, comp: int, what: str) -> int:
        try:
            return self.m[(s, t, comp)]
        except KeyError:
            raise LawViolation(f"{what} is not a valid monoidal modification", (s, t, comp)) from None


def hom_bicategory_monbicat(functors: Sequence[DD2Functor], name: str = "",
                            limit: int = 200_000) -> MonBicatHom:
    """MonBicat(X, Y) restricted to ``functors``: transformations and modifications enumerated exhaustively."""
    fs = tuple(functors)
    if not fs:
        raise InputError("at least one functor is needed")
    C = fs[0].target.cat
    n = len(fs)
    pairs = list(product(range(n), repeat=2))
    cells1 = {p: enumerate_mb_transformations(fs[p[0]], fs[p[1]], limit) for p in pairs}
    cells2 = {}
    for p in pairs:
        ms = []
        for s, t in product(cells1[p], repeat=2):
            ms += enumerate_mb_modifications(s, t)
        cells2[p] = ms
    index = {p: _Index(cells1[p], cells2[p]) for p in pairs}

    hom = {}
    for p in pairs:
        ix, ms, ts = index[p], cells2[p], cells1[p]
        src = [ix.t[m.source.key()] for m in ms]
        tgt = [ix.t[m.target.key()] for m in ms]
        ident = [ix.of_m(k, k, C.id(t.obj), "identity modification") for k, t in enumerate(ts)]
        table = [[-1] * len(ms) for _ in ms]
        for g, f in product(range(len(ms)), repeat=2):
            if tgt[f] == src[g]:
                table[g][f] = ix.of_m(src[f], tgt[g], vcompose_modifications(ms[g], ms[f]).comp,
                                      "vertical composite")
        hom[p] = validate_category(len(ts), src, tgt, ident, table)

    comp1, comp2, assoc, lunit, runit = {}, {}, {}, {}, {}
    idents = [index[(i, i)].of_t(identity_mb_transformation(fs[i]), "identity transformation") for i in range(n)]
    for i, j, k in product(range(n), repeat=3):
        rows = []
        for b in cells1[(j, k)]:
            row = []
            for a in cells1[(i, j)]:
                row.append(index[(i, k)].of_t(compose_mb_transformations(b, a), "composite transformation"))
            rows.append(row)
        comp1[(i, j, k)] = rows
        ixk = index[(i, k)]
        comp2[(i, j, k)] = [[ixk.of_m(rows[index[(j, k)].t[nb.source.key()]][index[(i, j)].t[ma.source.key()]],
                                      rows[index[(j, k)].t[nb.target.key()]][index[(i, j)].t[ma.target.key()]],
                                      C.tm(nb.comp, ma.comp), "horizontal composite")
                             for ma in cells2[(i, j)]] for nb in cells2[(j, k)]]
    for i, j, k, l in product(range(n), repeat=4):
        ixl = index[(i, l)]
        assoc[(i, j, k, l)] = [[[ixl.of_m(comp1[(i, j, l)][comp1[(j, k, l)][h][g]][f],
                                          comp1[(i, k, l)][h][comp1[(i, j, k)][g][f]],
                                          C.a(ch.obj, cg.obj, cf.obj), "associator")
                                 for f, cf in enumerate(cells1[(i, j)])]
                                for g, cg in enumerate(cells1[(j, k)])]
                               for h, ch in enumerate(cells1[(k, l)])]
    for i, j in pairs:
        ix = index[(i, j)]
        lunit[(i, j)] = [ix.of_m(comp1[(i, j, j)][idents[j]][f], f, C.l(a.obj), "left unitor")
                         for f, a in enumerate(cells1[(i, j)])]
        runit[(i, j)] = [ix.of_m(comp1[(i, i, j)][f][idents[i]], f, C.r(a.obj), "right unitor")
                         for f, a in enumerate(cells1[(i, j)])]
    B = FinBicategory(n, hom, comp1, comp2, idents, assoc, lunit, runit, name)
    return MonBicatHom(B, fs, cells1, cells2)


def forgetful_failures(h: MonBicatHom) -> list[tuple]:
    """Composable pairs whose composite's component or family differs from the plain composite."""
    out = []
    n = len(h.functors)
    for i, j, k in product(range(n), repeat=3):
        for b in h.cells1[(j, k)]:
            for a in h.cells1[(i, j)]:
                if not underlying_matches(compose_mb_transformations(b, a, check=False), b, a):
                    out.append((i, j, k, b.key(), a.key()))
    return out


def constraint_reports(h: MonBicatHom) -> list[tuple[str, CheckReport]]:
    """Each associator and unitor component re-validated as a monoidal modification."""
    B, out = h.bicat, []
    for (i, j, k, l), t in B.assoc.items():
        for row in t:
            for col in row:
                for m in col:
                    out.append((f"associator {(i, j, k, l)}", mb_modification_report(h.cells2[(i, l)][m])))
    for name, table in (("left unitor", B.lunit), ("right unitor", B.runit)):
        for p, col in table.items():
            for m in col:
                out.append((f"{name} {p}", mb_modification_report(h.cells2[p][m])))
    return out


def box_checks(h: MonBicatHom, sample: int = 3) -> None:
    """Box products on the endo-hom of the first functor: validity, functoriality and the unit comparison."""
    F = h.functors[0]
    ts = h.cells1[(0, 0)][:sample]
    for beta, alpha in product(ts, repeat=2):
        box_compose_transformations(beta, alpha)
        cmp = box_unit_comparison(beta, F)
        _require(mb_modification_report(cmp, True), "box with an identity against the whiskered transformation")
        _require(mb_transformation_report(whisker(beta, F), True), "whiskered transformation")
    for beta2, alpha2, beta, alpha in islice(product(ts, repeat=4), sample ** 2):
        _require(mb_modification_report(box_interchange(beta2, alpha2, beta, alpha), True), "box interchange")
    keys = {t.key() for t in ts}
    ms = [m for m in h.cells2[(0, 0)] if m.source.key() in keys and m.target.key() in keys]
    boxes = {(b.key(), a.key()): box_compose_transformations(b, a) for b, a in product(ts, repeat=2)}
    H = F.target.cat

    def box(d: MonoidalModificationData3, g: MonoidalModificationData3) -> MonoidalModificationData3:
        m = MonoidalModificationData3(boxes[(d.source.key(), g.source.key())],
                                      boxes[(d.target.key(), g.target.key())],
                                      H.tm(d.target.target.functor.mor(g.comp), d.comp))
        _require(mb_modification_report(m, True), "box of modifications")
        return m

    for d, g in islice(product(ms, repeat=2), sample ** 2):
        box(d, g)
        ids = box(_identity(d.source), _identity(g.source))
        if ids.comp != H.id(ids.source.obj):
            raise LawViolation("box of identity modifications is not an identity")
    for (d2, g2), (d, g) in product(product(ms, repeat=2), repeat=2):
        if d.target.key() != d2.source.key() or g.target.key() != g2.source.key():
            continue
        lhs = vcompose_modifications(box(d2, g2), box(d, g))
        rhs = box(vcompose_modifications(d2, d), vcompose_modifications(g2, g))
        if lhs.comp != rhs.comp:
            raise LawViolation("box does not preserve vertical composition of modifications")


def _identity(t: MonoidalTransformationData3) -> MonoidalModificationData3:
    return MonoidalModificationData3(t, t, t.source.target.cat.id(t.obj))


def _require(rep: CheckReport, what: str) -> None:
    if not rep.passed:
        name, detail = rep.failures()[0]
        raise LawViolation(f"{what}: {name}", None, detail)


# -- the shipped catalog ----------------------------------------------------------------------------


def hom_functor(X: MonoidalBicategoryData, images: Sequence[int], name: str = "") -> DD2Functor:
    """The strict endofunctor of a commutative-monoid carrier induced by a monoid endomorphism."""
    c = X.cat
    n = c.base.n_objects
    if n == 1:
        obj, mor = [0], list(images)
    else:
        obj, mor = list(images), [c.id(images[x]) for x in range(n)]
    phi2 = [[c.id(c.t(obj[x], obj[y])) for y in range(n)] for x in range(n)]
    F = validate_monoidal_functor(c, c, obj, mor, phi2, c.id(c.unit_obj))
    return lift_functor(F, X.structure, X.structure, name)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    carrier: MonoidalBicategoryData
    functors: tuple[DD2Functor, ...]


def _negation(m: FiniteCommutativeMonoid) -> list[int]:
    return [next(y for y in m.elements if m.op[x][y] == m.unit) for x in m.elements]


def shipped_catalog() -> list[CatalogEntry]:
    out = []
    for X, extra in ((discrete_carrier(cyclic_group(2)), ()), (discrete_carrier(cyclic_group(4)), ("neg",)),
                     (loop_carrier(cyclic_group(2)), ()), (loop_carrier(cyclic_group(3)), ("neg",))):
        fs = [unit_functor(X)]
        if extra:
            m = cyclic_group(4 if X.cat.base.n_objects > 1 else 3)
            fs.append(hom_functor(X, _negation(m), "neg"))
        out.append(CatalogEntry(X, tuple(fs)))
    Z = z3_suspension()
    out.append(CatalogEntry(Z, (unit_functor(Z), lift_functor(pointed_functor(Z.cat, Z.cat, 2, 1), Z.structure,
                                                              Z.structure, "double"))))
    return out


def assemble_monbicat(catalog: Sequence[CatalogEntry] | None = None, stop_early: bool = False) -> CheckReport:
    """Every structure the catalog's hom-bicategories need, checked instance by instance."""
    catalog = shipped_catalog() if catalog is None else catalog
    rep = CheckReport()
    chk = _Checker(rep)
    for e in catalog:
        X, nm = e.carrier, e.carrier.name
        steps = [
            ("monoidal bicategory", lambda: _require(monoidal_bicategory_report(X, True), "carrier")),
            ("functors valid", lambda: [validate_dd2_functor(f) for f in e.functors]),
        ]
        for label, fn in steps:
            if not chk.run(f"{nm}: {label}", fn) and stop_early:
                return rep
        holder = {}

        def build():
            holder["h"] = hom_bicategory_monbicat(e.functors, f"MonBicat({nm}, {nm})")
        if not chk.run(f"{nm}: composites and constraints stay in the enumerated cells", build):
            if stop_early:
                return rep
            continue
        h = holder["h"]
        more = [
            ("hom-bicategory laws", lambda: _require(bicategory_report(h.bicat, True), "hom-bicategory")),
            ("a, l, r are monoidal modifications",
             lambda: [_require(r, n) for n, r in constraint_reports(h)]),
            ("forgetful map strict", lambda: _no_failures(forgetful_failures(h))),
            ("box products", lambda: box_checks(h)),
        ]
        for label, fn in more:
            if not chk.run(f"{nm}: {label}", fn) and stop_early:
                return rep
    return rep


def _no_failures(fails: list) -> None:
    if fails:
        raise LawViolation("forgetful map does not preserve a composite", fails[0])
