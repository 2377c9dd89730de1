"""Typed generators for doubly degenerate structures, in bracket notation.

Each structure contributes named cells (with source and target words) and
named families (with index variables).  A :class:`Vocabulary` turns these
into a parsing :class:`Context` plus the family rules the resolver may use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..errors import InputError
from ..monoidal.expr import Apply, FamilySig, Gen, MGen, ObjExpr, Tensor
from .engine import FamilyRule
from .notation import Context, parse_obj, qualify


@dataclass(frozen=True)
class CellType:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class FamilyType:
    name: str
    indices: tuple[tuple[str, str], ...]   # (variable, sort) pairs; sort "" means the home sort
    src: str
    tgt: str


def dd_cells() -> list[CellType]:
    out = [
        CellType("pi", "[U.A] A [A.U]", "A A"),
        CellType("mu", "[U.L] A [R*.U]", "U"),
        CellType("lam", "[L.U]", "L A"),
        CellType("rho", "[U.R*]", "A R*"),
        CellType("mult", "I I", "I"),
        CellType("unitI", "U", "I"),
        CellType("isoI", "I", "U"),
    ]
    for x in ("A", "L", "R"):
        out += [CellType(f"eps{x}", f"{x} {x}*", "U"), CellType(f"eta{x}", "U", f"{x}* {x}")]
    return out


def dd_families() -> list[FamilyType]:
    xyz = (("X", ""), ("Y", ""), ("Z", ""))
    return [
        FamilyType("famA", xyz, "A [[X.Y].Z]", "[X.[Y.Z]] A"),
        FamilyType("famA*", xyz, "A* [X.[Y.Z]]", "[[X.Y].Z] A*"),
        FamilyType("famL", (("X", ""),), "L [I.X]", "X L"),
        FamilyType("famL*", (("X", ""),), "L* X", "[I.X] L*"),
        FamilyType("famR", (("X", ""),), "R [X.I]", "X R"),
        FamilyType("famR*", (("X", ""),), "R* X", "[X.I] R*"),
    ]


def functor_cells(F: str) -> list[CellType]:
    chi, iota = f"chi{F}", f"iota{F}"
    return [
        CellType(f"omega{F}", f"{F}(A) {chi} [{chi}.U]", f"{chi} [U.{chi}] A"),
        CellType(f"gamma{F}", f"{F}(L) {chi} [{iota}.U]", "L"),
        CellType(f"delta{F}", f"{F}(R*)", f"{chi} [U.{iota}] R*"),
        CellType(f"eps{chi}", f"{chi} {chi}*", "U"), CellType(f"eta{chi}", "U", f"{chi}* {chi}"),
        CellType(f"eps{iota}", f"{iota} {iota}*", "U"), CellType(f"eta{iota}", "U", f"{iota}* {iota}"),
    ]


def functor_families(F: str, source: str) -> list[FamilyType]:
    chi, iota = f"chi{F}", f"iota{F}"
    xy = (("X", source), ("Y", source))
    return [
        FamilyType(f"fam{chi}", xy, f"{chi} [{F}(X).{F}(Y)]", f"{F}([X.Y]) {chi}"),
        FamilyType(f"fam{chi}*", xy, f"{chi}* {F}([X.Y])", f"[{F}(X).{F}(Y)] {chi}*"),
        FamilyType(f"fam{iota}", (), f"{iota} I", f"{F}(I) {iota}"),
        FamilyType(f"fam{iota}*", (), f"{iota}* {F}(I)", f"I {iota}*"),
    ]


def transformation_cells(a: str, F: str, G: str) -> list[CellType]:
    return [
        CellType(f"Pi{a}", f"[chi{G}.U] A* [U.{a}] A [{a}.U]", f"{a} [U.chi{F}] A"),
        CellType(f"M{a}", f"{a} [U.iota{F}] R*", f"[iota{G}.U] L*"),
        CellType(f"eps{a}", f"{a} {a}*", "U"), CellType(f"eta{a}", "U", f"{a}* {a}"),
    ]


def transformation_families(a: str, F: str, G: str, source: str) -> list[FamilyType]:
    x = (("X", source),)
    return [
        FamilyType(f"fam{a}", x, f"{a} [U.{F}(X)]", f"[{G}(X).U] {a}"),
        FamilyType(f"fam{a}*", x, f"{a}* [{G}(X).U]", f"[U.{F}(X)] {a}*"),
    ]


def modification_cells(m: str, a: str, b: str) -> list[CellType]:
    return [CellType(f"iso{m}", f"[U.{m}] {a}", f"{b} [{m}.U]")]


# -- substitution -----------------------------------------------------------------


def substitute(e: ObjExpr, env: Mapping[str, ObjExpr]) -> ObjExpr:
    if isinstance(e, Gen):
        return env.get(e.name, e)
    if isinstance(e, Tensor):
        return Tensor(substitute(e.left, env), substitute(e.right, env))
    if isinstance(e, Apply):
        return Apply(e.fname, [substitute(a, env) for a in e.args], e.sort)
    return e


@dataclass
class Vocabulary:
    """Cells and families declared per sort, plus functor and box names."""
    home: str = "B"
    boxes: dict[str, str] = field(default_factory=lambda: {"B": "box"})
    functors: dict[str, tuple[str, str]] = field(default_factory=dict)
    cells: dict[str, dict[str, CellType]] = field(default_factory=dict)      # name -> sort -> type
    families: dict[str, FamilySig] = field(default_factory=dict)              # qualified name -> sig

    def base_context(self) -> Context:
        return Context(self.home, self.home, self.functors, self.boxes, {}, self.families)

    def add_cells(self, sort: str, cells: Iterable[CellType]) -> "Vocabulary":
        for c in cells:
            self.cells.setdefault(c.name, {})[sort] = c
        return self

    def add_families(self, sort: str, fams: Iterable[FamilyType]) -> "Vocabulary":
        for f in fams:
            sorts = tuple(s or sort for _, s in f.indices)
            self.families[qualify(f.name, sort, self.home)] = self._sig(sort, f, sorts)
        return self

    def _sig(self, sort: str, f: FamilyType, sorts: tuple[str, ...]) -> FamilySig:
        ctx = self.base_context().at(sort)
        src, tgt = parse_obj(f.src, ctx), parse_obj(f.tgt, ctx)
        keys = [qualify(v, s, self.home) for (v, _), s in zip(f.indices, sorts)]

        def bind(*ix: ObjExpr, pat=src) -> ObjExpr:
            return substitute(pat, dict(zip(keys, ix)))

        return FamilySig(qualify(f.name, sort, self.home), sorts, lambda *ix: bind(*ix, pat=src),
                         lambda *ix: bind(*ix, pat=tgt))

    def context(self) -> Context:
        ctx = self.base_context()
        cells = {}
        for name, by_sort in self.cells.items():
            cells[name] = self._factory(name, by_sort)
        ctx.cells = cells
        return ctx

    def _factory(self, name: str, by_sort: dict[str, CellType]):
        def make(ctx: Context, tok: str):
            ct = by_sort.get(ctx.sort)
            if ct is None:
                raise InputError(f"cell {name} is not declared in sort {ctx.sort}")
            base = self.base_context().at(ctx.sort)
            return MGen(qualify(name, ctx.sort, self.home), parse_obj(ct.src, base), parse_obj(ct.tgt, base))
        return make

    def rules(self) -> list[FamilyRule]:
        return [FamilyRule(sig) for sig in self.families.values()]

    def via(self) -> tuple[str, ...]:
        return tuple(self.boxes.values()) + tuple(self.functors)


def dd_vocabulary(sorts: Iterable[str] = ("B",), home: str = "B") -> Vocabulary:
    v = Vocabulary(home=home, boxes={s: ("box" if s == home else f"box{s}") for s in sorts})
    for s in sorts:
        v.add_cells(s, dd_cells()).add_families(s, dd_families())
    return v


def functor_vocabulary(functors: Iterable[str], source: str = "S", target: str = "B") -> Vocabulary:
    v = dd_vocabulary((target, source), home=target)
    for F in functors:
        v.functors[F] = (source, target)
        v.add_cells(target, functor_cells(F)).add_families(target, functor_families(F, source))
    return v


def higher_vocabulary(source: str = "S", target: str = "B") -> Vocabulary:
    """Functors F, G; transformations alpha, beta: F => G; modifications m, n: alpha => beta; sigma: m => n."""
    v = functor_vocabulary(("F", "G"), source, target)
    for a in ("alpha", "beta"):
        v.add_cells(target, transformation_cells(a, "F", "G"))
        v.add_families(target, transformation_families(a, "F", "G", source))
    v.add_cells(target, modification_cells("m", "alpha", "beta") + modification_cells("n", "alpha", "beta"))
    v.add_cells(target, [CellType("sigma", "m", "n")])
    return v
