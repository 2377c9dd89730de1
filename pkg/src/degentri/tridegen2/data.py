"""Doubly degenerate tricategories as finite data, and their validation.

A structure lives on a monoidal category ``B`` with a second monoidal
functor ``box: B x B -> B``.  Its blocks are the dual pairs ``A``, ``L``,
``R`` with their families, a monoid object ``I`` with ``I ≅ U``, and the
invertible cells ``pi``, ``mu``, ``lam``, ``rho``.  Families are stored as
tables keyed by index tuples of objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from ..errors import InputError, LawViolation
from ..fincat import pair_mor, pair_obj
from ..monoidal.category import FinMonoidalCategory, MonoidalFunctorData, product_monoidal, validate_monoidal_functor
from ..monoidal.expr import (Apply, Coh, Evaluator, Fam, FunctorModel, Gen, MGen, Model, ObjExpr, Tensor,
                             seq)
from ..monoidal.structures import DualPair, validate_dual_pair
from .engine import Resolver, check_diagram
from .library import DD_AXIOMS, DD_BLOCKS, DD_MATES
from .notation import Context, parse_mor, parse_obj, qualify
from .vocab import CellType, FamilyType, Vocabulary, dd_cells, dd_families, dd_vocabulary

DD_OBJECTS = ("A", "A*", "L", "L*", "R", "R*", "I")
DD_CELLS = ("pi", "mu", "lam", "rho")


@dataclass(frozen=True)
class MonoidObjectData:
    """``mult: I I -> I``, ``unit: U -> I`` and the comparison ``iso: I -> U``."""
    obj: int
    mult: int
    unit: int
    iso: int


@dataclass(frozen=True)
class IndexedDualPairBlock:
    """A dual pair with its family and the family of its dual, as tables."""
    pair: DualPair
    fam: Mapping[tuple, int]
    fam_dual: Mapping[tuple, int]


@dataclass(frozen=True, eq=False)
class DoublyDegenData:
    cat: FinMonoidalCategory
    box: MonoidalFunctorData
    monoid: MonoidObjectData
    A: IndexedDualPairBlock
    L: IndexedDualPairBlock
    R: IndexedDualPairBlock
    pi: int
    mu: int
    lam: int
    rho: int
    name: str = ""

    def objects(self) -> dict[str, int]:
        return {"A": self.A.pair.x, "A*": self.A.pair.x_dual, "L": self.L.pair.x, "L*": self.L.pair.x_dual,
                "R": self.R.pair.x, "R*": self.R.pair.x_dual, "I": self.monoid.obj}

    def cells(self) -> dict[str, int]:
        out = {"pi": self.pi, "mu": self.mu, "lam": self.lam, "rho": self.rho, "mult": self.monoid.mult,
               "unitI": self.monoid.unit, "isoI": self.monoid.iso}
        for k, b in (("A", self.A), ("L", self.L), ("R", self.R)):
            out[f"eps{k}"], out[f"eta{k}"] = b.pair.eps, b.pair.eta
        return out

    def family_tables(self) -> dict[str, Mapping[tuple, int]]:
        return {"famA": self.A.fam, "famA*": self.A.fam_dual, "famL": self.L.fam, "famL*": self.L.fam_dual,
                "famR": self.R.fam, "famR*": self.R.fam_dual}

    def box_obj(self, x: int, y: int) -> int:
        return self.box.obj(pair_obj(self.cat.base, x, y))

    def box_mor(self, f: int, g: int) -> int:
        return self.box.mor(pair_mor(self.cat.base, f, g))

    def is_unit_object(self) -> bool:
        """All block objects and ``I`` equal the unit."""
        u = self.cat.unit_obj
        return all(v == u for v in self.objects().values())

    def raw(self) -> dict:
        return {"name": self.name, "objects": self.objects(), "cells": self.cells()}


# -- the box functor as a model -----------------------------------------------------------


def box_model(B: FinMonoidalCategory, box: MonoidalFunctorData) -> FunctorModel:
    d = B.base
    return FunctorModel(
        obj=lambda xy: box.obj(pair_obj(d, *xy)),
        mor=lambda fg: box.mor(pair_mor(d, *fg)),
        phi2=lambda a, b: box.phi2[pair_obj(d, *a)][pair_obj(d, *b)],
        phi0=lambda: box.phi0)


def _table(t: Mapping[tuple, int], name: str):
    def look(ix: tuple) -> int:
        try:
            return t[ix]
        except KeyError:
            raise InputError(f"family {name} has no component at {ix}") from None
    return look


def dd_model_parts(dd: DoublyDegenData, sort: str = "B", home: str = "B"):
    """Objects, morphisms, families and functors contributed by ``dd`` in ``sort``."""
    q = lambda n: qualify(n, sort, home)
    objs = {q(k): v for k, v in dd.objects().items()}
    mors = {q(k): v for k, v in dd.cells().items()}
    fams = {q(k): _table(t, q(k)) for k, t in dd.family_tables().items()}
    box = "box" if sort == home else f"box{sort}"
    return objs, mors, fams, {box: box_model(dd.cat, dd.box)}


def dd_model(dd: DoublyDegenData) -> Model:
    objs, mors, fams, funs = dd_model_parts(dd)
    return Model({"B": dd.cat}, objs, mors, fams, funs)


# -- the box of a braided category ---------------------------------------------------------


def interchange(B: FinMonoidalCategory, braid, x: int, y: int, x2: int, y2: int) -> int:
    """``(x y)(x2 y2) -> (x x2)(y y2)`` using the braiding on the middle pair."""
    yy = B.t(y, y2)
    return B.then(
        B.a(x, y, B.t(x2, y2)),
        B.tm(B.id(x), B.inv(B.a(y, x2, y2))),
        B.tm(B.id(x), B.tm(braid[y, x2], B.id(y2))),
        B.tm(B.id(x), B.a(x2, y, y2)),
        B.inv(B.a(x, x2, yy)))


def tensor_as_box(B: FinMonoidalCategory, braid) -> MonoidalFunctorData:
    """``⊗: B x B -> B`` as a monoidal functor; its constraint is the middle-four interchange."""
    P = product_monoidal(B, B)
    n = B.base.n_objects
    d = B.base
    obj = [B.t(p // n, p % n) for p in P.objects]
    m = d.n_morphisms
    mor = [B.tm(f // m, f % m) for f in P.morphisms]
    phi2 = [[interchange(B, braid, p // n, p % n, q // n, q % n) for q in P.objects] for p in P.objects]
    u = B.unit_obj
    return validate_monoidal_functor(P, B, obj, mor, phi2, B.inv(B.l(u)))


# -- validation -------------------------------------------------------------------------------


@dataclass
class CheckReport:
    """Named checks in order; each is ``(name, ok, detail)``."""
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def first_failure(self) -> str | None:
        f = self.failures()
        return f[0][0] if f else None

    def raw(self) -> dict:
        return {"passed": self.passed,
                "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks]}


class _Checker:
    def __init__(self, report: CheckReport):
        self.report = report

    def run(self, name: str, fn) -> bool:
        try:
            detail = fn()
        except LawViolation as e:
            self.report.checks.append((name, False, str(e)))
            return False
        except InputError as e:
            self.report.checks.append((name, False, f"malformed: {e}"))
            return False
        self.report.checks.append((name, True, "" if detail is None else str(detail)))
        return True


_DD_VOCAB = None
_DD_RESOLVED: dict = {}


def _dd_vocab() -> Vocabulary:
    global _DD_VOCAB
    if _DD_VOCAB is None:
        _DD_VOCAB = dd_vocabulary()
    return _DD_VOCAB


def resolved(spec, vocab: Vocabulary, cache: dict):
    hit = cache.get(spec.name)
    if hit is None:
        hit = Resolver(vocab.context(), vocab.rules(), vocab.via()).resolve(spec)
        cache[spec.name] = hit
    return hit


def check_cell_types(model: Model, vocab: Vocabulary, sort: str, names: Iterable[str], invertible: Iterable[str] = ()):
    """Each named cell has the endpoints its type demands; listed ones are invertible."""
    ctx = vocab.context().at(sort)
    c = model.cat(sort)
    inv = set(invertible)
    for n in names:
        e = parse_mor(n, ctx)
        v = Evaluator(model).mor(e)
        if n in inv and not c.base.is_iso(v):
            raise LawViolation(f"{n} is not invertible", v)


def family_naturality(model: Model, vocab: Vocabulary, sort: str, ft: FamilyType, domains: Mapping[str, list[int]],
                      cat_of: Mapping[str, FinMonoidalCategory]) -> int:
    """Naturality of the family in each index, over all morphism tuples."""
    home = vocab.home
    name = qualify(ft.name, sort, home)
    sig = vocab.families[name]
    sorts = sig.index_sorts
    vars_ = [qualify(v, s, home) for (v, _), s in zip(ft.indices, sorts)]
    if not vars_:
        return 0
    ctx = vocab.context().at(sort)
    cells = dict(ctx.cells)
    for (v, _), s in zip(ft.indices, sorts):
        qv = qualify(v, s, home)
        cells[v] = (lambda qv: lambda c, tok: MGen("f_" + qv, Gen(qv, c.sort), Gen(qv + "'", c.sort)))(qv)
    ctx = Context(sort, home, ctx.functors, ctx.boxes, cells, ctx.families)
    src_m, tgt_m = parse_mor(ft.src, ctx), parse_mor(ft.tgt, ctx)
    primed = [Gen(v + "'", s) for v, s in zip(vars_, sorts)]
    plain = [Gen(v, s) for v, s in zip(vars_, sorts)]
    left = seq(Fam(sig, *plain), tgt_m)
    right = seq(src_m, Fam(sig, *primed))
    count = 0
    mors = [list(cat_of[s].morphisms) for s in sorts]
    for fs in product(*mors):
        binds = {}
        m_binds = {}
        for v, s, f in zip(vars_, sorts, fs):
            C = cat_of[s]
            binds[v], binds[v + "'"] = C.src(f), C.tgt(f)
            m_binds["f_" + v] = f
        mm = Model(model.cats, {**model.objects, **binds}, {**model.morphisms, **m_binds}, model.families,
                   model.functors)
        ev = Evaluator(mm)
        if ev.mor(left) != ev.mor(right):
            raise LawViolation(f"naturality of {name}", dict(zip(vars_, fs)))
        count += 1
    return count


def family_invertible(model: Model, vocab: Vocabulary, sort: str, ft: FamilyType,
                      cat_of: Mapping[str, FinMonoidalCategory]) -> int:
    home = vocab.home
    sig = vocab.families[qualify(ft.name, sort, home)]
    count = 0
    for ix in product(*(list(cat_of[s].objects) for s in sig.index_sorts)):
        ev = Evaluator(model.with_objects(**{f"?{i}": x for i, x in enumerate(ix)}))
        e = Fam(sig, *[Gen(f"?{i}", s) for i, s in enumerate(sig.index_sorts)])
        v = ev.mor(e)
        if not model.cat(sort).base.is_iso(v):
            raise LawViolation(f"{sig.name} component not invertible", ix)
        count += 1
    return count


def dd_report(dd: DoublyDegenData, stop_early: bool = False) -> CheckReport:
    rep = CheckReport()
    chk = _Checker(rep)
    B = dd.cat
    vocab = _dd_vocab()
    model = dd_model(dd)
    cats = {"B": B}

    def steps():
        yield "cell types", lambda: check_cell_types(
            model, vocab, "B", [c.name for c in dd_cells()], DD_CELLS + ("isoI", "epsA", "etaA", "epsL", "etaL",
                                                                       "epsR", "etaR"))
        yield "monoid object", lambda: check_monoid(B, dd.monoid)
        for k, b in (("A", dd.A), ("L", dd.L), ("R", dd.R)):
            yield f"dual pair {k}", (lambda b: lambda: validate_dual_pair(b.pair, B) and None)(b)
        for ft in dd_families():
            yield f"naturality of {ft.name}", (lambda ft: lambda: family_naturality(model, vocab, "B", ft, {}, cats))(ft)
            yield f"{ft.name} invertible", (lambda ft: lambda: family_invertible(model, vocab, "B", ft, cats))(ft)
        for spec in DD_BLOCKS + DD_MATES + DD_AXIOMS:
            rd = resolved(spec, vocab, _DD_RESOLVED)
            dom = {n: list(B.objects) for n in spec.indices}
            yield spec.name, (lambda rd, dom: lambda: check_diagram(rd, model, dom))(rd, dom)

    for name, fn in steps():
        if not chk.run(name, fn) and stop_early:
            break
    return rep


def validate_dd(dd: DoublyDegenData) -> DoublyDegenData:
    rep = dd_report(dd, stop_early=True)
    if not rep.passed:
        name, detail = rep.failures()[0]
        raise LawViolation(name, None, detail)
    return dd


def check_monoid(B: FinMonoidalCategory, m: MonoidObjectData) -> None:
    i, u = m.obj, B.unit_obj
    if B.src(m.mult) != B.t(i, i) or B.tgt(m.mult) != i:
        raise LawViolation("monoid multiplication has wrong endpoints")
    if B.src(m.unit) != u or B.tgt(m.unit) != i:
        raise LawViolation("monoid unit has wrong endpoints")
    if B.src(m.iso) != i or B.tgt(m.iso) != u or not B.base.is_iso(m.iso):
        raise LawViolation("comparison I -> U is not an isomorphism")
    left = B.then(B.tm(m.mult, B.id(i)), m.mult)
    right = B.then(B.a(i, i, i), B.tm(B.id(i), m.mult), m.mult)
    if left != right:
        raise LawViolation("monoid associativity")
    if B.then(B.tm(m.unit, B.id(i)), m.mult) != B.l(i):
        raise LawViolation("monoid left unit")
    if B.then(B.tm(B.id(i), m.unit), m.mult) != B.r(i):
        raise LawViolation("monoid right unit")
    if B.then(m.mult, m.iso) != B.then(B.tm(m.iso, m.iso), B.l(u)):
        raise LawViolation("comparison does not preserve multiplication")
    if B.then(m.unit, m.iso) != B.id(u):
        raise LawViolation("comparison does not preserve the unit")


# -- building from canonical isos ------------------------------------------------------------


def flatten_box(e: ObjExpr, named: Mapping[str, ObjExpr]) -> ObjExpr:
    """Read every box functor as ``⊗`` and replace named generators."""
    if isinstance(e, Gen):
        return named.get(e.name, e)
    if isinstance(e, Tensor):
        return Tensor(flatten_box(e.left, named), flatten_box(e.right, named))
    if isinstance(e, Apply):
        args = [flatten_box(a, named) for a in e.args]
        if e.fname.startswith("box"):
            return Tensor(*args)
        return Apply(e.fname, args, e.sort)
    return e


def canonical_tables(B: FinMonoidalCategory, vocab: Vocabulary, cells: Iterable[CellType],
                     fams: Iterable[FamilyType], named: Mapping[str, ObjExpr], index_bind=None):
    """Cells and family tables given by coherence once ``box`` is read as ``⊗``."""
    ctx = vocab.context()
    model = Model({"B": B})
    ev = Evaluator(model)
    out_cells = {}
    for ct in cells:
        s, t = flatten_box(parse_obj(ct.src, ctx), named), flatten_box(parse_obj(ct.tgt, ctx), named)
        out_cells[ct.name] = ev.mor(Coh(s, t))
    out_fams = {}
    for ft in fams:
        s = flatten_box(parse_obj(ft.src, ctx), named)
        t = flatten_box(parse_obj(ft.tgt, ctx), named)
        route = Coh(s, t)
        vars_ = [v for v, _ in ft.indices]
        table = {}
        for ix in product(B.objects, repeat=len(vars_)):
            table[ix] = Evaluator(model.with_objects(**dict(zip(vars_, ix)))).mor(route)
        out_fams[ft.name] = table
    return out_cells, out_fams
