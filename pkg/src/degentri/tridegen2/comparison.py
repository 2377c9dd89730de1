"""The comparison functors between braided categories and doubly degenerate data.

``functor_F`` reads a braided category as a doubly degenerate structure:
``box`` is ``⊗`` with the middle-four interchange as its constraint, every
dual pair is the unit pair and every other cell is the unmarked iso its
type determines once ``box`` is read as ``⊗``.  The same recipe lifts
braided functors and monoidal transformations (the latter to iconic
2-cells, whose 1-cell component is the unit).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import Mapping

from ..errors import InputError, LawViolation
from ..monoidal.category import (MonoidalFunctorData, MonoidalTransformationData, compose_monoidal_functors,
                                 validate_monoidal_transformation)
from ..monoidal.expr import Apply, Coh, Evaluator, FunCoh, Gen, Model, ObjExpr, Unit
from ..monoidal.structures import BraidedCategory, BraidedFunctor, unit_dual_pair
from .data import (DoublyDegenData, IndexedDualPairBlock, MonoidObjectData, canonical_tables, flatten_box,
                   tensor_as_box, _dd_vocab)
from .higher import (DD2Functor, DD2Transformation, functor_model, mate_table, transformation_report, vocabulary)
from .notation import parse_obj
from .multiplication import braided_functor_of_multiplicative, braided_of_dd, multiplicative_of_dd_functor
from .vocab import dd_cells, dd_families, functor_cells, functor_families, transformation_cells, \
    transformation_families

DD_NAMES = ("A", "A*", "L", "L*", "R", "R*", "I")


def functor_F(bx: BraidedCategory) -> DoublyDegenData:
    return canonical_dd(bx.cat, tensor_as_box(bx.cat, bx.braiding), f"F({bx.name})")


def canonical_dd(B, box: MonoidalFunctorData, name: str = "") -> DoublyDegenData:
    """Unit dual pairs, ``I = U`` and coherence isos everywhere, around the given box."""
    u = B.unit_obj
    named = {k: Unit("B") for k in DD_NAMES}
    cells, fams = canonical_tables(B, _dd_vocab(), dd_cells(), dd_families(), named)
    p = unit_dual_pair(B)
    block = lambda k: IndexedDualPairBlock(p, fams[f"fam{k}"], fams[f"fam{k}*"])
    return DoublyDegenData(B, box, MonoidObjectData(u, B.l(u), B.id(u), B.id(u)), block("A"), block("L"),
                           block("R"), cells["pi"], cells["mu"], cells["lam"], cells["rho"], name)


# -- canonical data for functors and transformations ---------------------------------------------


def _unit_names(extra_b=()) -> dict[str, ObjExpr]:
    named = {k: Unit("B") for k in DD_NAMES + tuple(extra_b)}
    named.update({f"S:{k}": Unit("S") for k in DD_NAMES})
    return named


class _Canon:
    """Evaluates the unmarked iso between two flattened words."""

    def __init__(self, source: DoublyDegenData, target: DoublyDegenData, functors: Mapping[str, MonoidalFunctorData],
                 extra_b=()):
        self.ctx = vocabulary().context()
        self.named = _unit_names(extra_b)
        self.via = tuple(functors)
        self.model = Model({"B": target.cat, "S": source.cat},
                           functors={k: functor_model(f) for k, f in functors.items()})

    def flat(self, text: str) -> ObjExpr:
        return flatten_box(parse_obj(text, self.ctx), self.named)

    def iso(self, src: ObjExpr | str, tgt: ObjExpr | str, binds: Mapping[str, int] | None = None) -> int:
        s = self.flat(src) if isinstance(src, str) else src
        t = self.flat(tgt) if isinstance(tgt, str) else tgt
        try:
            route = Coh(s, t)
        except InputError:
            route = FunCoh(s, t, self.via)
        model = self.model.with_objects(**binds) if binds else self.model
        return Evaluator(model).mor(route)


def _block(canon: _Canon, ft, index_objs) -> dict[tuple, int]:
    keys = [f"S:{v}" for v, _ in ft.indices]
    return {ix: canon.iso(ft.src, ft.tgt, dict(zip(keys, ix))) for ix in product(index_objs, repeat=len(keys))}


def lift_functor(F: MonoidalFunctorData, source: DoublyDegenData, target: DoublyDegenData,
                 name: str = "") -> DD2Functor:
    """``F`` with unit dual pairs and canonical cells, between unit-object structures."""
    canon = _Canon(source, target, {"F": F}, ("chiF", "chiF*", "iotaF", "iotaF*"))
    cells = {c.name: canon.iso(c.src, c.tgt) for c in functor_cells("F")}
    fams = {ft.name: _block(canon, ft, source.cat.objects) for ft in functor_families("F", "S")}
    p = unit_dual_pair(target.cat)
    return DD2Functor(source, target, F, IndexedDualPairBlock(p, fams["famchiF"], fams["famchiF*"]),
                      IndexedDualPairBlock(p, fams["famiotaF"], fams["famiotaF*"]),
                      cells["omegaF"], cells["gammaF"], cells["deltaF"], name)


def functor_F_functor(bf: BraidedFunctor) -> DD2Functor:
    return lift_functor(bf.functor, functor_F(bf.source), functor_F(bf.target),
                        f"F({bf.source.name} -> {bf.target.name})")


# -- iconic 2-cells --------------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IconicTwoCell:
    """A transformation with unit 1-cell component: one component per source object, plus Pi and M."""
    source: DD2Functor
    target: DD2Functor
    components: Mapping[tuple, int]
    Pi: int
    M: int

    def as_transformation(self) -> DD2Transformation:
        T = self.source.target.cat
        t = DD2Transformation(self.source, self.target, T.unit_obj, dict(self.components), self.Pi, self.M,
                              unit_dual_pair(T), None)
        return replace(t, fam_dual=mate_table(t))

    def raw(self) -> dict:
        return {"components": {str(k[0]): v for k, v in sorted(self.components.items())}, "Pi": self.Pi,
                "M": self.M}


def _transformation_canon(F: DD2Functor, G: DD2Functor) -> _Canon:
    return _Canon(F.source, F.target, {"F": F.functor, "G": G.functor}, ("chiF", "chiF*", "iotaF", "iotaF*",
                  "chiG", "chiG*", "iotaG", "iotaG*", "alpha", "alpha*"))


def _family_type():
    return transformation_families("alpha", "F", "G", "S")[0]


def _component_ends(canon: _Canon, x: int):
    ft = _family_type()
    b = {"S:X": x}
    s, t = canon.flat(ft.src), canon.flat(ft.tgt)
    FX, GX = Apply("F", [Gen("S:X", "S")], "B"), Apply("G", [Gen("S:X", "S")], "B")
    return canon.iso(s, FX, b), canon.iso(GX, t, b)


def lift_transformation(theta: MonoidalTransformationData, F: DD2Functor, G: DD2Functor) -> IconicTwoCell:
    """The iconic 2-cell with components ``theta`` conjugated by unmarked isos, and canonical Pi, M."""
    if theta.source != F.functor or theta.target != G.functor:
        raise InputError("transformation does not join the two functors")
    canon = _transformation_canon(F, G)
    T = F.target.cat
    comps = {}
    for x in F.source.cat.objects:
        pre, post = _component_ends(canon, x)
        comps[(x,)] = T.then(pre, theta.components[x], post)
    cells = {c.name: canon.iso(c.src, c.tgt) for c in transformation_cells("alpha", "F", "G")}
    return IconicTwoCell(F, G, comps, cells["Pialpha"], cells["Malpha"])


def canonical_Pi_M(F: DD2Functor, G: DD2Functor) -> tuple[int, int]:
    canon = _transformation_canon(F, G)
    cells = {c.name: canon.iso(c.src, c.tgt) for c in transformation_cells("alpha", "F", "G")}
    return cells["Pialpha"], cells["Malpha"]


def validate_iconic(ic: IconicTwoCell) -> IconicTwoCell:
    rep = transformation_report(ic.as_transformation(), stop_early=True)
    if not rep.passed:
        name, detail = rep.failures()[0]
        raise LawViolation(name, None, detail)
    return ic


def monoidal_transformation_of_iconic(ic: IconicTwoCell) -> MonoidalTransformationData:
    F, G = ic.source, ic.target
    canon = _transformation_canon(F, G)
    T = F.target.cat
    comps = []
    for x in F.source.cat.objects:
        pre, post = _component_ends(canon, x)
        comps.append(T.then(T.inv(pre), ic.components[(x,)], T.inv(post)))
    return validate_monoidal_transformation(F.functor, G.functor, comps)


def iconic_candidates(F: DD2Functor, G: DD2Functor):
    """Every choice of components, Pi and M with the right endpoints."""
    canon = _transformation_canon(F, G)
    T = F.target.cat
    ft = _family_type()
    homs = []
    xs = list(F.source.cat.objects)
    for x in xs:
        b = {"S:X": x}
        ev = Evaluator(canon.model.with_objects(**b))
        homs.append(T.base.hom(ev.obj(canon.flat(ft.src)), ev.obj(canon.flat(ft.tgt))))
    ev = Evaluator(canon.model)
    cell_homs = []
    for c in transformation_cells("alpha", "F", "G")[:2]:
        cell_homs.append([f for f in T.base.hom(ev.obj(canon.flat(c.src)), ev.obj(canon.flat(c.tgt)))
                          if T.base.is_iso(f)])
    for comps in product(*homs):
        for Pi, M in product(*cell_homs):
            yield IconicTwoCell(F, G, {(x,): c for x, c in zip(xs, comps)}, Pi, M)


def enumerate_iconic(F: DD2Functor, G: DD2Functor) -> list[IconicTwoCell]:
    out = []
    for ic in iconic_candidates(F, G):
        if transformation_report(ic.as_transformation(), stop_early=True).passed:
            out.append(ic)
    return out


def count_iconic_2cells(F1: DD2Functor | None = None, F2: DD2Functor | None = None):
    """``(count, solutions)`` for iconic 2-cells ``F1 => F2``; defaults to the identity on the image of Z."""
    if F1 is None:
        from ..monoidal.instances import z_braided
        from ..monoidal.category import identity_monoidal_functor
        z = z_braided()
        F1 = functor_F_functor(BraidedFunctor(z, z, identity_monoidal_functor(z.cat)))
    F2 = F1 if F2 is None else F2
    sols = enumerate_iconic(F1, F2)
    return len(sols), sols


# -- U -----------------------------------------------------------------------------------------------


def functor_U(x):
    """Braided category, braided functor or monoidal transformation underlying ``x``."""
    if isinstance(x, DoublyDegenData):
        return braided_of_dd(x)
    if isinstance(x, DD2Functor):
        return braided_functor_of_multiplicative(multiplicative_of_dd_functor(x))
    if isinstance(x, IconicTwoCell):
        return monoidal_transformation_of_iconic(x)
    raise InputError(f"functor_U does not apply to {type(x).__name__}")


def functor_F_any(y, source: DD2Functor | None = None, target: DD2Functor | None = None):
    """``functor_F`` on all three levels; 2-cells need the lifted functors."""
    if isinstance(y, BraidedCategory):
        return functor_F(y)
    if isinstance(y, BraidedFunctor):
        return functor_F_functor(y)
    if isinstance(y, MonoidalTransformationData):
        if source is None or target is None:
            raise InputError("lifting a transformation needs the lifted source and target functors")
        return lift_transformation(y, source, target)
    raise InputError(f"functor_F does not apply to {type(y).__name__}")


# -- the restricted sub-2-category ---------------------------------------------------------------------


def _same_block(a: IndexedDualPairBlock, b: IndexedDualPairBlock) -> bool:
    return a.pair == b.pair and dict(a.fam) == dict(b.fam) and dict(a.fam_dual) == dict(b.fam_dual)


def same_dd(a: DoublyDegenData, b: DoublyDegenData) -> bool:
    return (a.cat == b.cat and a.box == b.box and a.monoid == b.monoid and _same_block(a.A, b.A)
            and _same_block(a.L, b.L) and _same_block(a.R, b.R)
            and (a.pi, a.mu, a.lam, a.rho) == (b.pi, b.mu, b.lam, b.rho))


def same_dd2_functor(f: DD2Functor, g: DD2Functor) -> bool:
    return (same_dd(f.source, g.source) and same_dd(f.target, g.target) and f.functor == g.functor
            and _same_block(f.chi, g.chi) and _same_block(f.iota, g.iota)
            and (f.omega, f.gamma, f.delta) == (g.omega, g.gamma, g.delta))


def same_iconic(a: IconicTwoCell, b: IconicTwoCell) -> bool:
    return (same_dd2_functor(a.source, b.source) and same_dd2_functor(a.target, b.target)
            and dict(a.components) == dict(b.components) and (a.Pi, a.M) == (b.Pi, b.M))


def restricted_failure(x) -> str | None:
    """The first datum of ``x`` that is not the canonical choice, or ``None`` for members."""
    if isinstance(x, DoublyDegenData):
        B = x.cat
        n, m = B.base.n_objects, B.base.n_morphisms
        if any(x.box_obj(a, b) != B.t(a, b) for a in range(n) for b in range(n)):
            return "box differs from the tensor on objects"
        if any(x.box_mor(f, g) != B.tm(f, g) for f in range(m) for g in range(m)):
            return "box differs from the tensor on morphisms"
        if x.box.phi0 != B.inv(B.l(B.unit_obj)):
            return "box unit constraint is not canonical"
        u = B.unit_obj
        if x.monoid != MonoidObjectData(u, B.l(u), B.id(u), B.id(u)):
            return "monoid I is not the unit with identity iso"
        canon = canonical_dd(x.cat, x.box)
        for k in ("A", "L", "R"):
            if getattr(x, k).pair != getattr(canon, k).pair:
                return f"dual pair {k} is not the unit pair"
            if not _same_block(getattr(x, k), getattr(canon, k)):
                return f"family of block {k} is not canonical"
        for k in ("pi", "mu", "lam", "rho"):
            if getattr(x, k) != getattr(canon, k):
                return f"cell {k} is not canonical"
        return None
    if isinstance(x, DD2Functor):
        for side in (x.source, x.target):
            why = restricted_failure(side)
            if why is not None:
                return f"{'source' if side is x.source else 'target'}: {why}"
        canon = lift_functor(x.functor, x.source, x.target)
        for k in ("chi", "iota"):
            if getattr(x, k).pair != getattr(canon, k).pair:
                return f"dual pair {k} is not the unit pair"
            if not _same_block(getattr(x, k), getattr(canon, k)):
                return f"family of block {k} is not canonical"
        for k in ("omega", "gamma", "delta"):
            if getattr(x, k) != getattr(canon, k):
                return f"cell {k} is not canonical"
        return None
    if isinstance(x, (IconicTwoCell, DD2Transformation)):
        for side in (x.source, x.target):
            why = restricted_failure(side)
            if why is not None:
                return why
        T = x.source.target.cat
        if isinstance(x, DD2Transformation):
            if x.obj != T.unit_obj:
                return "1-cell component is not the unit"
            if x.pair is not None and x.pair != unit_dual_pair(T):
                return "dual pair alpha is not the unit pair"
        if (x.Pi, x.M) != canonical_Pi_M(x.source, x.target):
            return "Pi or M is not canonical"
        return None
    raise InputError(f"no restricted check for {type(x).__name__}")


def validate_restricted(x):
    why = restricted_failure(x)
    if why is not None:
        raise LawViolation("restricted membership", None, why)
    return x


def compose_restricted(g: DD2Functor, f: DD2Functor) -> DD2Functor:
    """Composite of restricted functors: canonical data on the composite monoidal functor."""
    validate_restricted(f)
    validate_restricted(g)
    if not same_dd(f.target, g.source):
        raise InputError("functors are not composable")
    return lift_functor(compose_monoidal_functors(g.functor, f.functor), f.source, g.target,
                        f"{g.name} o {f.name}".strip(" o"))


def identity_restricted(dd: DoublyDegenData) -> DD2Functor:
    from ..monoidal.category import identity_monoidal_functor
    return lift_functor(identity_monoidal_functor(dd.cat), dd, dd, f"id({dd.name})")


# -- roundtrips ----------------------------------------------------------------------------------------


def roundtrip_UF(y, source=None, target=None) -> bool:
    """``U(F(y)) == y`` for a braided category, braided functor or monoidal transformation."""
    image = functor_U(functor_F_any(y, source, target))
    if isinstance(y, BraidedCategory):
        return image.cat == y.cat and image.braiding == y.braiding
    if isinstance(y, BraidedFunctor):
        return (image.functor == y.functor and image.source.braiding == y.source.braiding
                and image.target.braiding == y.target.braiding)
    return image == y


def roundtrip_FU(x) -> bool:
    """``F(U(x)) == x`` for restricted members."""
    if isinstance(x, DoublyDegenData):
        return same_dd(functor_F(functor_U(x)), x)
    if isinstance(x, DD2Functor):
        bf = functor_U(x)
        back = lift_functor(bf.functor, functor_F(bf.source), functor_F(bf.target), x.name)
        return same_dd2_functor(back, x)
    if isinstance(x, IconicTwoCell):
        return same_iconic(lift_transformation(functor_U(x), x.source, x.target), x)
    raise InputError(f"no roundtrip for {type(x).__name__}")


def local_fullness_witness(bf1: BraidedFunctor, bf2: BraidedFunctor):
    """First monoidal transformation ``bf1 => bf2`` that no iconic lift hits, or ``None``; also the count."""
    from ..monoidal.category import enumerate_monoidal_transformations
    F1, F2 = functor_F_functor(bf1), functor_F_functor(bf2)
    thetas = enumerate_monoidal_transformations(bf1.functor, bf2.functor)
    for th in thetas:
        ic = lift_transformation(th, F1, F2)
        if not transformation_report(ic.as_transformation(), stop_early=True).passed:
            return th, len(thetas)
        if functor_U(ic) != th:
            return th, len(thetas)
    return None, len(thetas)
