"""Monoidal transformations and modifications between functors of one-object carriers.

A functor of carriers is a :class:`DD2Functor`.  A monoidal transformation
``alpha: F => G`` has an object ``obj`` of the target hom category (its
component 1-cell), a naturality family ``fam[(x,)]: alpha F(x) -> G(x)
alpha`` and the two cells ``Pi`` and ``M``.  A monoidal modification is a
single 2-cell ``comp: alpha -> beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from ..errors import InputError, LawViolation
from ..monoidal.expr import Coh, Evaluator, FunCoh, Model, Unit
from ..tridegen2.comparison import compose_restricted, restricted_failure
from ..tridegen2.data import CheckReport, DoublyDegenData, _table, check_cell_types, dd_model_parts, \
    family_invertible, family_naturality, resolved
from ..tridegen2.engine import PLAIN, Edge, Resolver, check_diagram
from ..tridegen2.higher import (DD2Functor, DD2Perturbation, _raise_first, _run, _same_functor, functor_model,
                                perturbation_report)
from ..tridegen2.notation import parse_obj, qualify
from ..tridegen2.vocab import Vocabulary, substitute
from . import library as L
from .library import CompositeSpec

MonBicatFunctor = DD2Functor
PerturbationData3 = DD2Perturbation


@dataclass(frozen=True, eq=False)
class MonoidalTransformationData3:
    source: DD2Functor
    target: DD2Functor
    obj: int
    fam: Mapping[tuple, int]        # keyed by (source object,)
    Pi: int
    M: int
    name: str = ""

    def key(self) -> tuple:
        return (self.obj, tuple(sorted(self.fam.items())), self.Pi, self.M)

    def raw(self) -> dict:
        return {"obj": self.obj, "fam": [[list(k), v] for k, v in sorted(self.fam.items())],
                "Pi": self.Pi, "M": self.M}


@dataclass(frozen=True, eq=False)
class MonoidalModificationData3:
    source: MonoidalTransformationData3
    target: MonoidalTransformationData3
    comp: int


# -- models -------------------------------------------------------------------------------------


class _Binder:
    """Binds carriers, functors and transformations to the names of a vocabulary."""

    def __init__(self, home: str, carriers: Mapping[str, DoublyDegenData]):
        self.home = home
        self.cats = {s: dd.cat for s, dd in carriers.items()}
        self.objects, self.morphisms, self.families, self.functors = {}, {}, {}, {}
        for s, dd in carriers.items():
            o, m, f, fn = dd_model_parts(dd, s, home)
            self.objects.update(o)
            self.morphisms.update(m)
            self.families.update(f)
            self.functors.update(fn)

    def _q(self, name: str, sort: str) -> str:
        return qualify(name, sort, self.home)

    def functor(self, N: str, fd: DD2Functor, sort: str) -> "_Binder":
        q = lambda n: self._q(n, sort)
        self.functors[N] = functor_model(fd.functor)
        for part, block in (("chi", fd.chi), ("iota", fd.iota)):
            p = block.pair
            self.objects[q(part + N)], self.objects[q(part + N + "*")] = p.x, p.x_dual
            self.morphisms[q(f"eps{part}{N}")], self.morphisms[q(f"eta{part}{N}")] = p.eps, p.eta
            self.families[q(f"fam{part}{N}")] = _table(block.fam, f"fam{part}{N}")
            self.families[q(f"fam{part}{N}*")] = _table(block.fam_dual, f"fam{part}{N}*")
        for c, v in (("omega", fd.omega), ("gamma", fd.gamma), ("delta", fd.delta)):
            self.morphisms[q(c + N)] = v
        return self

    def transformation(self, a: str, t: MonoidalTransformationData3, sort: str) -> "_Binder":
        q = lambda n: self._q(n, sort)
        self.objects[q(a)] = t.obj
        self.families[q("fam" + a)] = _table(t.fam, "fam" + a)
        self.morphisms[q("Pi" + a)], self.morphisms[q("M" + a)] = t.Pi, t.M
        return self

    def model(self) -> Model:
        return Model(dict(self.cats), self.objects, self.morphisms, self.families, self.functors)


_VOCABS: dict[str, Vocabulary] = {}
_RESOLVED: dict = {}


def _vocab(kind: str) -> Vocabulary:
    v = _VOCABS.get(kind)
    if v is None:
        v = {"transformation": L.transformation_vocabulary, "composition": L.composition_vocabulary,
             "box": L.box_vocabulary, "interchange": _interchange_vocabulary}[kind]()
        _VOCABS[kind] = v
    return v


def _domains(indices: Iterable[str], cats: Mapping[str, object], home: str) -> dict[str, list[int]]:
    return {n: list(cats[n.split(":")[0] if ":" in n else home].objects) for n in indices}


def _side(spec: CompositeSpec, kind: str):
    key = (kind, spec.name)
    hit = _RESOLVED.get(key)
    if hit is None:
        v = _vocab(kind)
        hit = Resolver(v.context(), v.rules(), v.via()).resolve_side(spec.side)
        if not hit.ok:
            raise InputError(f"pasting {spec.name} does not resolve: "
                             + "; ".join(e.error for e in hit.edges if e.error))
        _RESOLVED[key] = hit
    return hit


def _eval_side(spec: CompositeSpec, kind: str, model: Model, binds: Mapping[str, int] | None = None) -> int:
    ev = Evaluator(model.with_objects(**binds) if binds else model)
    return ev.mor(_side(spec, kind).expr)


def _check_functors(F: DD2Functor, G: DD2Functor) -> None:
    if F.source.cat != G.source.cat or F.target.cat != G.target.cat:
        raise InputError("the two functors do not share source and target carriers")


def _transformation_binder(F: DD2Functor, G: DD2Functor) -> _Binder:
    _check_functors(F, G)
    return _Binder("B", {"B": F.target, "S": F.source}).functor("F", F, "B").functor("G", G, "B")


def _diagram_steps(specs, model: Model, cats):
    v = _vocab("transformation")
    for spec in specs:
        rd = resolved(spec, v, _RESOLVED)
        yield spec.name, (lambda rd, dom: lambda: check_diagram(rd, model, dom))(rd, _domains(spec.indices, cats, "B"))


# -- validation ---------------------------------------------------------------------------------


def mb_transformation_report(t: MonoidalTransformationData3, stop_early: bool = False) -> CheckReport:
    try:
        model = _transformation_binder(t.source, t.target).transformation("alpha", t, "B").model()
    except InputError as e:
        rep = CheckReport()
        rep.checks.append(("functors share carriers", False, str(e)))
        return rep
    cats = model.cats
    v = _vocab("transformation")
    ft = L.mt_families("alpha", "F", "G", "S")[0]

    def steps():
        yield "cell types", lambda: check_cell_types(model, v, "B", ["Pialpha", "Malpha"], ["Pialpha", "Malpha"])
        yield "naturality of famalpha", lambda: family_naturality(model, v, "B", ft, {}, cats)
        yield "famalpha invertible", lambda: family_invertible(model, v, "B", ft, cats)
        yield from _diagram_steps(L.MT_BLOCKS + L.MT_AXIOMS, model, cats)

    return _run(steps(), stop_early)


def validate_mb_transformation(t: MonoidalTransformationData3) -> MonoidalTransformationData3:
    _raise_first(mb_transformation_report(t, stop_early=True))
    return t


def _same_transformation(a: MonoidalTransformationData3, b: MonoidalTransformationData3) -> bool:
    return (_same_functor(a.source, b.source) and _same_functor(a.target, b.target)) and a.key() == b.key()


def mb_modification_report(m: MonoidalModificationData3, stop_early: bool = False) -> CheckReport:
    a, b = m.source, m.target
    rep = CheckReport()
    if not (_same_functor(a.source, b.source) and _same_functor(a.target, b.target)):
        rep.checks.append(("transformations share functors", False,
                           "a modification joins transformations between the same functors"))
        return rep
    model = (_transformation_binder(a.source, a.target).transformation("alpha", a, "B")
             .transformation("beta", b, "B"))
    model.morphisms["m"] = m.comp
    model = model.model()
    v = _vocab("transformation")

    def steps():
        yield "cell types", lambda: check_cell_types(model, v, "B", ["m"])
        yield from _diagram_steps(L.MM_AXIOMS, model, model.cats)

    return _run(steps(), stop_early)


def validate_mb_modification(m: MonoidalModificationData3) -> MonoidalModificationData3:
    _raise_first(mb_modification_report(m, stop_early=True))
    return m


def validate_perturbation(p: PerturbationData3) -> PerturbationData3:
    _raise_first(perturbation_report(p, stop_early=True))
    return p


def perturbation_square(p: PerturbationData3) -> bool:
    """The perturbation axiom read as a square of plain composites in the target category."""
    dd = p.source.source.source.target
    C = dd.cat
    m, n = p.source, p.target
    alpha, beta = m.source.obj, m.target.obj
    u = C.id(C.unit_obj)
    left = C.then(m.iso, C.tm(C.id(beta), dd.box_mor(p.sigma, u)))
    right = C.then(C.tm(dd.box_mor(u, p.sigma), C.id(alpha)), n.iso)
    return left == right


# -- identities and composition -------------------------------------------------------------------


def _canonical(model: Model, via: Iterable[str], src, tgt) -> int:
    try:
        route = Coh(src, tgt)
    except InputError:
        route = FunCoh(src, tgt, via)
    return Evaluator(model).mor(route)


def identity_mb_transformation(F: DD2Functor) -> MonoidalTransformationData3:
    """Component the identity 1-cell; family, ``Pi_u`` and ``M_u`` the unique coherence isos."""
    v = _vocab("transformation")
    ctx = v.context()
    model = _transformation_binder(F, F).model()
    model.objects["alpha"] = F.target.cat.unit_obj
    u = {"alpha": Unit("B")}
    via = v.via()

    def iso(src: str, tgt: str, binds=None) -> int:
        m = model.with_objects(**binds) if binds else model
        s, t = parse_obj(src, ctx), parse_obj(tgt, ctx)
        return _canonical(m, via, substitute(s, u), substitute(t, u))

    fam = {(x,): iso("alpha F(X)", "F(X) alpha", {"S:X": x}) for x in F.source.cat.objects}
    return MonoidalTransformationData3(F, F, F.target.cat.unit_obj, fam,
                                       iso("chiF [alpha.alpha]", "alpha chiF"), iso("alpha iotaF", "iotaF"),
                                       f"1({F.name})" if F.name else "")


def composite_family(beta: MonoidalTransformationData3, alpha: MonoidalTransformationData3) -> dict[tuple, int]:
    """The naturality family of ``beta alpha`` written out with the constraints of the target category."""
    C = alpha.source.target.cat
    F, G, H = alpha.source, alpha.target, beta.target
    a, b = alpha.obj, beta.obj
    out = {}
    for x in F.source.cat.objects:
        Fx, Gx, Hx = F.functor.obj(x), G.functor.obj(x), H.functor.obj(x)
        out[(x,)] = C.then(C.a(b, a, Fx), C.tm(C.id(b), alpha.fam[(x,)]), C.inv(C.a(b, Gx, a)),
                           C.tm(beta.fam[(x,)], C.id(a)), C.a(Hx, b, a))
    return out


def compose_mb_transformations(beta: MonoidalTransformationData3, alpha: MonoidalTransformationData3,
                               check: bool = True) -> MonoidalTransformationData3:
    """``beta alpha``: component ``beta alpha``; family, ``Pi`` and ``M`` by the shipped pastings."""
    if not _same_functor(alpha.target, beta.source):
        raise InputError("transformations are not composable")
    F, G, H = alpha.source, alpha.target, beta.target
    _check_functors(F, H)
    binder = (_Binder("B", {"B": F.target, "S": F.source}).functor("F", F, "B").functor("G", G, "B")
              .functor("H", H, "B").transformation("alpha", alpha, "B").transformation("beta", beta, "B"))
    model = binder.model()
    fam = {(x,): _eval_side(L.COMPOSITE_FAMILY, "composition", model, {"S:X": x}) for x in F.source.cat.objects}
    out = MonoidalTransformationData3(F, H, F.target.cat.t(beta.obj, alpha.obj), fam,
                                      _eval_side(L.COMPOSITE_PI, "composition", model),
                                      _eval_side(L.COMPOSITE_M, "composition", model),
                                      f"{beta.name} {alpha.name}".strip())
    if check:
        rep = mb_transformation_report(out, stop_early=True)
        if not rep.passed:
            name, detail = rep.failures()[0]
            raise LawViolation(f"composite transformation fails {name}", None, detail)
    return out


def identity_mb_modification(t: MonoidalTransformationData3) -> MonoidalModificationData3:
    return MonoidalModificationData3(t, t, t.source.target.cat.id(t.obj))


def vcompose_modifications(n: MonoidalModificationData3, m: MonoidalModificationData3) -> MonoidalModificationData3:
    """``n`` after ``m`` in the hom category of transformations."""
    if not _same_transformation(m.target, n.source):
        raise InputError("modifications are not composable")
    return MonoidalModificationData3(m.source, n.target, m.source.source.target.cat.comp(n.comp, m.comp))


def hcompose_modifications(n: MonoidalModificationData3, m: MonoidalModificationData3) -> MonoidalModificationData3:
    """``n * m`` between the composite transformations, for ``n`` over ``beta`` after ``m`` over ``alpha``."""
    C = m.source.source.target.cat
    return MonoidalModificationData3(compose_mb_transformations(n.source, m.source),
                                     compose_mb_transformations(n.target, m.target), C.tm(n.comp, m.comp))


# -- the monoidal product of transformations ---------------------------------------------------------


def _require_restricted(*fs: DD2Functor) -> None:
    for f in fs:
        why = restricted_failure(f)
        if why is not None:
            raise InputError(f"the box product needs restricted functors: {why}")


_UNIT_NAMES = {"B:chiF": "B", "B:chiK": "B", "chiG": "T", "chiH": "T",
               "B:iotaF": "B", "B:iotaK": "B", "iotaG": "T", "iotaH": "T"}


def _box_conjugate(model: Model, side_src: str, lifted_src: str, side_tgt: str, lifted_tgt: str, value: int) -> int:
    """Re-express a box pasting between the boundaries of the lifted composite functors, whose blocks are units."""
    v = _vocab("box")
    ctx, via = v.context(), v.via()
    units = {k: Unit(s) for k, s in _UNIT_NAMES.items()}
    word = lambda text: substitute(parse_obj(text, ctx), units)
    C = model.cat("T")
    pre = _canonical(model, via, parse_obj(lifted_src, ctx), word(side_src))
    post = _canonical(model, via, word(side_tgt), parse_obj(lifted_tgt, ctx))
    return C.then(pre, value, post)


def box_compose_transformations(beta: MonoidalTransformationData3, alpha: MonoidalTransformationData3,
                                check: bool = True) -> MonoidalTransformationData3:
    """``beta ⊠ alpha: G F => H K`` with component ``H(alpha) beta``, for restricted functors."""
    F, K, G, H = alpha.source, alpha.target, beta.source, beta.target
    _require_restricted(F, K, G, H)
    if F.target.cat != G.source.cat:
        raise InputError("transformations are not composable along a carrier")
    model = (_Binder("T", {"T": G.target, "B": F.target, "S": F.source})
             .functor("F", F, "B").functor("K", K, "B").functor("G", G, "T").functor("H", H, "T")
             .transformation("alpha", alpha, "B").transformation("beta", beta, "T").model())
    GF, HK = compose_restricted(G, F), compose_restricted(H, K)
    c = "(H(alpha) beta)"
    fam = {(x,): _eval_side(L.BOX_FAMILY, "box", model, {"S:X": x}) for x in F.source.cat.objects}
    Pi = _box_conjugate(model, L.BOX_PI.src, f"U [{c}.{c}]", L.BOX_PI.tgt, f"{c} U",
                        _eval_side(L.BOX_PI, "box", model))
    M = _box_conjugate(model, L.BOX_M.src, f"{c} U", L.BOX_M.tgt, "U", _eval_side(L.BOX_M, "box", model))
    T = G.target.cat
    out = MonoidalTransformationData3(GF, HK, T.t(H.functor.obj(alpha.obj), beta.obj), fam, Pi, M,
                                      f"{beta.name} # {alpha.name}".strip(" #"))
    if check:
        rep = mb_transformation_report(out, stop_early=True)
        if not rep.passed:
            name, detail = rep.failures()[0]
            raise LawViolation(f"box product fails {name}", None, detail)
    return out


def box_compose_modifications(delta: MonoidalModificationData3, gamma: MonoidalModificationData3,
                              check: bool = True) -> MonoidalModificationData3:
    """``(delta ⊠ gamma) = H'(gamma) * delta`` between the box products of the boundaries."""
    H2 = delta.target.target
    T = H2.target.cat
    out = MonoidalModificationData3(box_compose_transformations(delta.source, gamma.source, check),
                                    box_compose_transformations(delta.target, gamma.target, check),
                                    T.tm(H2.functor.mor(gamma.comp), delta.comp))
    if check:
        validate_mb_modification(out)
    return out


def whisker(beta: MonoidalTransformationData3, F: DD2Functor) -> MonoidalTransformationData3:
    """``beta * F: G F => H F`` for restricted functors: the family of ``beta`` read at ``F(x)``."""
    G, H = beta.source, beta.target
    _require_restricted(F, G, H)
    fam = {(x,): beta.fam[(F.functor.obj(x),)] for x in F.source.cat.objects}
    return MonoidalTransformationData3(compose_restricted(G, F), compose_restricted(H, F), beta.obj, fam,
                                       beta.Pi, beta.M, f"{beta.name} * {F.name}".strip(" *"))


def box_unit_comparison(beta: MonoidalTransformationData3, F: DD2Functor) -> MonoidalModificationData3:
    """The unit iso ``H(U) beta -> beta`` from ``beta ⊠ 1_F`` to ``beta * F``."""
    boxed = box_compose_transformations(beta, identity_mb_transformation(F))
    w = whisker(beta, F)
    H = beta.target
    T = H.target.cat
    comp = T.comp(T.l(beta.obj), T.tm(T.inv(H.functor.phi0), T.id(beta.obj)))
    return MonoidalModificationData3(boxed, w, comp)


def _interchange_vocabulary() -> Vocabulary:
    sorts = ("T", "B", "S")
    v = Vocabulary(home="T", boxes={s: ("box" if s == "T" else f"box{s}") for s in sorts})
    from ..tridegen2.vocab import dd_cells, dd_families, functor_cells, functor_families
    for s in sorts:
        v.add_cells(s, dd_cells()).add_families(s, dd_families())
    for N, src, tgt in (("F", "S", "B"), ("K", "S", "B"), ("K2", "S", "B"),
                        ("G", "B", "T"), ("H", "B", "T"), ("H2", "B", "T")):
        v.functors[N] = (src, tgt)
        v.add_cells(tgt, functor_cells(N)).add_families(tgt, functor_families(N, src))
    for a, s, t, sort, src in (("alpha", "F", "K", "B", "S"), ("alpha2", "K", "K2", "B", "S"),
                               ("beta", "G", "H", "T", "B"), ("beta2", "H", "H2", "T", "B")):
        v.add_cells(sort, L.mt_cells(a, s, t)).add_families(sort, L.mt_families(a, s, t, src))
    return v


BOX_INTERCHANGE = CompositeSpec(
    "box interchange comparison",
    ("(H2(alpha2) beta2) (H(alpha) beta)", PLAIN, "H2(alpha2) beta2 H(alpha) beta", Edge("H2(alpha2) fambeta2{alpha} beta"),
     "H2(alpha2) H2(alpha) beta2 beta", PLAIN, "H2(alpha2 alpha) (beta2 beta)"),
    "(H2(alpha2) beta2) (H(alpha) beta)", "H2(alpha2 alpha) (beta2 beta)")


def box_interchange(beta2, alpha2, beta, alpha) -> MonoidalModificationData3:
    """``(beta2 ⊠ alpha2)(beta ⊠ alpha) -> (beta2 beta) ⊠ (alpha2 alpha)``, by naturality of ``beta2``."""
    F, K, K2, G, H, H2 = alpha.source, alpha.target, alpha2.target, beta.source, beta.target, beta2.target
    model = (_Binder("T", {"T": G.target, "B": F.target, "S": F.source})
             .functor("F", F, "B").functor("K", K, "B").functor("K2", K2, "B")
             .functor("G", G, "T").functor("H", H, "T").functor("H2", H2, "T")
             .transformation("alpha", alpha, "B").transformation("alpha2", alpha2, "B")
             .transformation("beta", beta, "T").transformation("beta2", beta2, "T").model())
    lhs = compose_mb_transformations(box_compose_transformations(beta2, alpha2),
                                     box_compose_transformations(beta, alpha))
    rhs = box_compose_transformations(compose_mb_transformations(beta2, beta),
                                      compose_mb_transformations(alpha2, alpha))
    return MonoidalModificationData3(lhs, rhs, _eval_side(BOX_INTERCHANGE, "interchange", model))


# -- enumeration ------------------------------------------------------------------------------------


def mb_transformation_candidates(F: DD2Functor, G: DD2Functor, limit: int = 200_000):
    _check_functors(F, G)
    C = F.target.cat
    B = C.base
    isos = lambda x, y: [f for f in B.hom(x, y) if B.is_iso(f)]
    xs = list(F.source.cat.objects)
    for a in C.objects:
        pis = isos(C.t(G.chi.pair.x, F.target.box_obj(a, a)), C.t(a, F.chi.pair.x))
        ms = isos(C.t(a, F.iota.pair.x), G.iota.pair.x)
        fams = [isos(C.t(a, F.functor.obj(x)), C.t(G.functor.obj(x), a)) for x in xs]
        if not pis or not ms or any(not f for f in fams):
            continue
        size = len(pis) * len(ms)
        for f in fams:
            size *= len(f)
        if size > limit:
            raise InputError(f"{size} candidate transformations exceed the limit {limit}")
        for choice in product(*fams):
            fam = {(x,): f for x, f in zip(xs, choice)}
            for Pi in pis:
                for M in ms:
                    yield MonoidalTransformationData3(F, G, a, fam, Pi, M)


def enumerate_mb_transformations(F: DD2Functor, G: DD2Functor, limit: int = 200_000
                                 ) -> list[MonoidalTransformationData3]:
    return [t for t in mb_transformation_candidates(F, G, limit) if mb_transformation_report(t, True).passed]


def enumerate_mb_modifications(a: MonoidalTransformationData3, b: MonoidalTransformationData3
                               ) -> list[MonoidalModificationData3]:
    B = a.source.target.cat.base
    out = []
    for f in B.hom(a.obj, b.obj):
        m = MonoidalModificationData3(a, b, f)
        if mb_modification_report(m, True).passed:
            out.append(m)
    return out


def underlying_matches(composite: MonoidalTransformationData3, beta, alpha) -> bool:
    """The forgetful map: the composite's component and family are the plain composite's."""
    C = alpha.source.target.cat
    return composite.obj == C.t(beta.obj, alpha.obj) and dict(composite.fam) == composite_family(beta, alpha)

