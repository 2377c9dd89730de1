"""Functors, transformations, modifications and perturbations of doubly degenerate data.

The diagrams are written for fixed names: functors ``F`` and ``G`` from a
source structure (sort ``S``) to a target (sort ``B``), transformations
``alpha, beta: F => G``, modifications ``m, n: alpha => beta`` and a
perturbation ``sigma: m => n``.  Each validator binds its data to those
names and evaluates every diagram for every index tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from ..errors import InputError, LawViolation
from ..monoidal.category import MonoidalFunctorData
from ..monoidal.expr import Evaluator, FunctorModel, Model
from ..monoidal.structures import DualPair, validate_dual_pair
from .data import (CheckReport, DoublyDegenData, IndexedDualPairBlock, _Checker, check_cell_types, dd_model_parts,
                   family_invertible, family_naturality, resolved)
from .engine import DiagramSpec, check_diagram
from .library import (FUNCTOR_AXIOMS, FUNCTOR_BLOCKS, FUNCTOR_MATES, MATE_ALPHA, MODIFICATION_AXIOMS,
                      PERTURBATION_AXIOM, TRANSFORMATION_AXIOMS, TRANSFORMATION_BLOCKS)
from .vocab import Vocabulary, functor_families, higher_vocabulary, transformation_families


@dataclass(frozen=True, eq=False)
class DD2Functor:
    """A monoidal functor of the carriers with the blocks ``chi``, ``iota`` and the cells ``omega``, ``gamma``, ``delta``."""
    source: DoublyDegenData
    target: DoublyDegenData
    functor: MonoidalFunctorData
    chi: IndexedDualPairBlock       # family keyed by source object pairs
    iota: IndexedDualPairBlock      # family keyed by ()
    omega: int
    gamma: int
    delta: int
    name: str = ""


@dataclass(frozen=True, eq=False)
class DD2Transformation:
    """``alpha: F => G``.  With ``pair`` and ``fam_dual`` left out it is a lax transformation."""
    source: DD2Functor
    target: DD2Functor
    obj: int
    fam: Mapping[tuple, int]        # keyed by (source object,)
    Pi: int
    M: int
    pair: DualPair | None = None
    fam_dual: Mapping[tuple, int] | None = None

    @property
    def is_lax(self) -> bool:
        return self.pair is None

    def forget_dual(self) -> "DD2Transformation":
        return replace(self, pair=None, fam_dual=None)


@dataclass(frozen=True, eq=False)
class DD2Modification:
    source: DD2Transformation
    target: DD2Transformation
    obj: int
    iso: int


@dataclass(frozen=True, eq=False)
class DD2Perturbation:
    source: DD2Modification
    target: DD2Modification
    sigma: int


# -- models -------------------------------------------------------------------------------------

_VOCAB: Vocabulary | None = None
_RESOLVED: dict = {}


def vocabulary() -> Vocabulary:
    global _VOCAB
    if _VOCAB is None:
        _VOCAB = higher_vocabulary()
    return _VOCAB


def functor_model(F: MonoidalFunctorData) -> FunctorModel:
    return FunctorModel(obj=lambda x: F.obj(x[0]), mor=lambda f: F.mor(f[0]),
                        phi2=lambda a, b: F.phi2[a[0]][b[0]], phi0=lambda: F.phi0)


class _Parts:
    def __init__(self, source: DoublyDegenData, target: DoublyDegenData):
        self.source, self.target = source, target
        self.objects, self.morphisms, self.families, self.functors = {}, {}, {}, {}
        for dd, sort in ((target, "B"), (source, "S")):
            o, m, f, fn = dd_model_parts(dd, sort)
            self.objects.update(o)
            self.morphisms.update(m)
            self.families.update(f)
            self.functors.update(fn)

    def pair(self, name: str, p: DualPair) -> None:
        self.objects[name], self.objects[name + "*"] = p.x, p.x_dual
        self.morphisms["eps" + name], self.morphisms["eta" + name] = p.eps, p.eta

    def table(self, name: str, t: Mapping[tuple, int]) -> None:
        def look(ix: tuple, t=t) -> int:
            try:
                return t[ix]
            except KeyError:
                raise InputError(f"family {name} has no component at {ix}") from None
        self.families[name] = look

    def functor(self, N: str, fd: DD2Functor) -> None:
        if fd.source is not self.source and fd.source.cat != self.source.cat:
            raise InputError("functors do not share a source")
        self.functors[N] = functor_model(fd.functor)
        self.pair("chi" + N, fd.chi.pair)
        self.pair("iota" + N, fd.iota.pair)
        self.table(f"famchi{N}", fd.chi.fam)
        self.table(f"famchi{N}*", fd.chi.fam_dual)
        self.table(f"famiota{N}", fd.iota.fam)
        self.table(f"famiota{N}*", fd.iota.fam_dual)
        self.morphisms.update({f"omega{N}": fd.omega, f"gamma{N}": fd.gamma, f"delta{N}": fd.delta})

    def transformation(self, a: str, t: DD2Transformation) -> None:
        self.objects[a] = t.obj
        if t.pair is not None:
            if t.pair.x != t.obj:
                raise InputError("dual pair does not start at the component object")
            self.pair(a, t.pair)
        self.table(f"fam{a}", t.fam)
        if t.fam_dual is not None:
            self.table(f"fam{a}*", t.fam_dual)
        self.morphisms.update({f"Pi{a}": t.Pi, f"M{a}": t.M})

    def model(self) -> Model:
        return Model({"B": self.target.cat, "S": self.source.cat}, self.objects, self.morphisms, self.families,
                     self.functors)


def _domains(spec: DiagramSpec, source: DoublyDegenData, target: DoublyDegenData) -> dict[str, list[int]]:
    return {n: list((source if n.startswith("S:") else target).cat.objects) for n in spec.indices}


def _diagram_steps(specs: Iterable[DiagramSpec], model: Model, source, target):
    for spec in specs:
        rd = resolved(spec, vocabulary(), _RESOLVED)
        yield spec.name, (lambda rd, dom: lambda: check_diagram(rd, model, dom))(rd, _domains(spec, source, target))


def _run(steps, stop_early: bool) -> CheckReport:
    rep = CheckReport()
    chk = _Checker(rep)
    for name, fn in steps:
        if not chk.run(name, fn) and stop_early:
            break
    return rep


def _raise_first(rep: CheckReport) -> None:
    if not rep.passed:
        name, detail = rep.failures()[0]
        raise LawViolation(name, None, detail)


def _family_steps(model: Model, sort: str, fams, cats):
    v = vocabulary()
    for ft in fams:
        yield f"naturality of {ft.name}", (lambda ft: lambda: family_naturality(model, v, sort, ft, {}, cats))(ft)
        yield f"{ft.name} invertible", (lambda ft: lambda: family_invertible(model, v, sort, ft, cats))(ft)


def _pair_step(name: str, p: DualPair, dd: DoublyDegenData):
    def run():
        validate_dual_pair(p, dd.cat)
        if not (dd.cat.base.is_iso(p.eps) and dd.cat.base.is_iso(p.eta)):
            raise LawViolation(f"dual pair {name} is not invertible")
    return f"dual pair {name}", run


# -- functors -----------------------------------------------------------------------------------


def functor_report(fd: DD2Functor, stop_early: bool = False) -> CheckReport:
    parts = _Parts(fd.source, fd.target)
    parts.functor("F", fd)
    model = parts.model()
    cats = {"B": fd.target.cat, "S": fd.source.cat}

    def steps():
        def endpoints():
            if fd.functor.source != fd.source.cat or fd.functor.target != fd.target.cat:
                raise LawViolation("monoidal functor does not join the carriers")
        yield "functor endpoints", endpoints
        yield "cell types", lambda: check_cell_types(
            model, vocabulary(), "B", ["omegaF", "gammaF", "deltaF", "epschiF", "etachiF", "epsiotaF", "etaiotaF"],
            ["omegaF", "gammaF", "deltaF"])
        yield _pair_step("chi", fd.chi.pair, fd.target)
        yield _pair_step("iota", fd.iota.pair, fd.target)
        yield from _family_steps(model, "B", functor_families("F", "S"), cats)
        yield from _diagram_steps(FUNCTOR_BLOCKS + FUNCTOR_MATES + FUNCTOR_AXIOMS, model, fd.source, fd.target)

    return _run(steps(), stop_early)


def validate_dd2_functor(fd: DD2Functor) -> DD2Functor:
    _raise_first(functor_report(fd, stop_early=True))
    return fd


# -- transformations ------------------------------------------------------------------------------


def _transformation_parts(t: DD2Transformation, a: str = "alpha") -> _Parts:
    F, G = t.source, t.target
    if F.target.cat != G.target.cat or F.source.cat != G.source.cat:
        raise InputError("the two functors do not share source and target")
    parts = _Parts(F.source, F.target)
    parts.functor("F", F)
    parts.functor("G", G)
    parts.transformation(a, t)
    return parts


def transformation_report(t: DD2Transformation, lax: bool | None = None, stop_early: bool = False) -> CheckReport:
    """Weak unless ``lax`` (or the data carries no dual pair); the lax check ignores the dual pair."""
    lax = t.is_lax if lax is None else lax
    if not lax and t.is_lax:
        rep = CheckReport()
        rep.checks.append(("dual pair alpha", False, "a weak transformation needs a dual pair"))
        return rep
    parts = _transformation_parts(t if not lax else t.forget_dual())
    model = parts.model()
    dd_s, dd_t = t.source.source, t.source.target
    cats = {"B": dd_t.cat, "S": dd_s.cat}
    fams = transformation_families("alpha", "F", "G", "S")

    def steps():
        cells = ["Pialpha", "Malpha"] + ([] if lax else ["epsalpha", "etaalpha"])
        yield "cell types", lambda: check_cell_types(model, vocabulary(), "B", cells, ["Pialpha", "Malpha"])
        if not lax:
            yield _pair_step("alpha", t.pair, dd_t)
        yield from _family_steps(model, "B", fams if not lax else fams[:1], cats)
        mates = () if lax else (MATE_ALPHA,)
        yield from _diagram_steps(TRANSFORMATION_BLOCKS + mates + TRANSFORMATION_AXIOMS, model, dd_s, dd_t)

    return _run(steps(), stop_early)


def validate_dd2_transformation(t: DD2Transformation, lax: bool | None = None) -> DD2Transformation:
    _raise_first(transformation_report(t, lax, stop_early=True))
    return t


def mate_table(t: DD2Transformation) -> dict[tuple, int]:
    """The dual-side family forced by the mate axiom, from ``fam`` and the dual pair."""
    if t.pair is None:
        raise InputError("a mate needs the dual pair")
    parts = _transformation_parts(replace(t, fam_dual=None))
    rd = resolved(MATE_ALPHA, vocabulary(), _RESOLVED)
    out = {}
    for x in t.source.source.cat.objects:
        ev = Evaluator(parts.model().with_objects(**{"S:X": x}))
        out[(x,)] = ev.mor(rd.left.expr)
    return out


# -- modifications and perturbations ----------------------------------------------------------------


def _modification_parts(md: DD2Modification, name: str = "m") -> _Parts:
    a, b = md.source, md.target
    if a.source is not b.source and not _same_functor(a.source, b.source):
        raise InputError("modification between transformations with different sources")
    if a.target is not b.target and not _same_functor(a.target, b.target):
        raise InputError("modification between transformations with different targets")
    parts = _transformation_parts(a, "alpha")
    parts.transformation("beta", b)
    parts.objects[name] = md.obj
    parts.morphisms["iso" + name] = md.iso
    return parts


def _same_functor(f: DD2Functor, g: DD2Functor) -> bool:
    return (f.functor == g.functor and f.chi == g.chi and f.iota == g.iota
            and (f.omega, f.gamma, f.delta) == (g.omega, g.gamma, g.delta))


def modification_report(md: DD2Modification, stop_early: bool = False) -> CheckReport:
    parts = _modification_parts(md)
    model = parts.model()
    dd_s, dd_t = md.source.source.source, md.source.source.target

    def steps():
        yield "cell types", lambda: check_cell_types(model, vocabulary(), "B", ["isom"], ["isom"])
        yield from _diagram_steps(MODIFICATION_AXIOMS, model, dd_s, dd_t)

    return _run(steps(), stop_early)


def validate_dd2_modification(md: DD2Modification) -> DD2Modification:
    _raise_first(modification_report(md, stop_early=True))
    return md


def perturbation_report(p: DD2Perturbation, stop_early: bool = False) -> CheckReport:
    m, n = p.source, p.target
    parts = _modification_parts(m, "m")
    parts.objects["n"] = n.obj
    parts.morphisms["ison"] = n.iso
    parts.morphisms["sigma"] = p.sigma
    model = parts.model()
    dd_s, dd_t = m.source.source.source, m.source.source.target

    def steps():
        yield "cell types", lambda: check_cell_types(model, vocabulary(), "B", ["sigma"])
        yield from _diagram_steps((PERTURBATION_AXIOM,), model, dd_s, dd_t)

    return _run(steps(), stop_early)


def validate_dd2_perturbation(p: DD2Perturbation) -> DD2Perturbation:
    _raise_first(perturbation_report(p, stop_early=True))
    return p
