"""Turning transcribed pasting diagrams into morphism expressions.

A side of a diagram is a list ``[node, edge, node, edge, ..., node]``.
Nodes are object words in bracket notation.  An edge is either unmarked
(``Edge()``) or carries a core cell such as ``Edge("[U.pi]", "pi")``.

Resolution of an edge from node ``N`` to node ``N'``:

* the core, if any, is placed on a contiguous run of factors of the
  current word whose normal form matches the core's source (a core whose
  source normalizes to the unit may be inserted anywhere); a core may be
  a ``;``-separated sequence, applied in order;
* any number (at most ``depth``) of family components are inserted where
  a pattern matches a run of factors exactly;
* whatever remains is bridged by the unmarked constraint iso, which must
  exist.

Nodes starting with ``~`` are bookkeeping nodes that split one displayed
arrow into resolvable pieces; they carry no label of their own.

Every edge records how it was resolved so the transcription can be audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from ..errors import InputError, LawViolation
from ..monoidal.expr import (Apply, Coh, Evaluator, Fam, FamilySig, FunCoh, Gen, Id, Inv, Model, MorphismExpr, ObjExpr,
                             Path, Tens, Tensor, Unit, normal_form, seq, show_obj)
from .notation import Context, parse_mor, parse_obj


@dataclass(frozen=True)
class Edge:
    core: str = ""
    label: str = ""


def cell(core: str, label: str | None = None) -> Edge:
    return Edge(core, label if label is not None else core)


PLAIN = Edge()


@dataclass(frozen=True)
class DiagramSpec:
    """Two sides with shared endpoints; ``indices`` are free object names."""
    name: str
    left: tuple
    right: tuple
    indices: tuple[str, ...] = ()
    index_sort: Mapping[str, str] = field(default_factory=dict)
    note: str = ""


# -- family rules ---------------------------------------------------------------------


def factors(e: ObjExpr) -> list[ObjExpr]:
    if isinstance(e, Tensor):
        return factors(e.left) + factors(e.right)
    return [e]


def word(fs: Sequence[ObjExpr], sort: str) -> ObjExpr:
    fs = list(fs)
    if not fs:
        return Unit(sort)
    acc = fs[-1]
    for f in reversed(fs[:-1]):
        acc = Tensor(f, acc)
    return acc


def _unify(pat: ObjExpr, e: ObjExpr, env: dict) -> bool:
    if isinstance(pat, Gen) and pat.name.startswith("?"):
        if pat.sort != e.sort:
            return False
        bound = env.get(pat.name)
        if bound is None:
            env[pat.name] = e
            return True
        return bound == e
    if type(pat) is not type(e) or pat.sort != e.sort:
        return False
    if isinstance(pat, Tensor):
        return _unify(pat.left, e.left, env) and _unify(pat.right, e.right, env)
    if isinstance(pat, Apply):
        return (pat.fname == e.fname and len(pat.args) == len(e.args)
                and all(_unify(p, a, env) for p, a in zip(pat.args, e.args)))
    return pat == e


@dataclass(frozen=True)
class FamilyRule:
    """A family usable forwards and backwards by pattern matching."""
    sig: FamilySig

    def _holes(self) -> list[Gen]:
        return [Gen(f"?{i}", s) for i, s in enumerate(self.sig.index_sorts)]

    def moves(self, fs: list[ObjExpr]):
        holes = self._holes()
        for inverse in (False, True):
            pat = self.sig.tgt_fn(*holes) if inverse else self.sig.src_fn(*holes)
            pf = factors(pat)
            k = len(pf)
            for i in range(len(fs) - k + 1):
                env: dict = {}
                if all(_unify(p, f, env) for p, f in zip(pf, fs[i:i + k])):
                    if len(env) != len(holes):
                        continue
                    m: MorphismExpr = Fam(self.sig, *[env[h.name] for h in holes])
                    if inverse:
                        m = Inv(m)
                    yield i, i + k, m, ("inverse " if inverse else "") + self.sig.name


# -- resolution ---------------------------------------------------------------------


@dataclass
class ResolvedEdge:
    src: str
    tgt: str
    label: str
    steps: list[str]
    expr: MorphismExpr | None = None
    error: str = ""


@dataclass
class ResolvedSide:
    edges: list[ResolvedEdge]
    expr: MorphismExpr | None

    @property
    def ok(self) -> bool:
        return self.expr is not None


@dataclass
class ResolvedDiagram:
    spec: DiagramSpec
    left: ResolvedSide
    right: ResolvedSide
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def labels(self, side: str) -> list[str]:
        s = self.left if side == "left" else self.right
        return [e.label for e in s.edges if e.label]


def _whisker(pre: list[ObjExpr], m: MorphismExpr, post: list[ObjExpr], sort: str) -> MorphismExpr:
    out = m
    if post:
        out = Tens(out, Id(word(post, sort)))
    if pre:
        out = Tens(Id(word(pre, sort)), out)
    return out


class Resolver:
    def __init__(self, ctx: Context, rules: Iterable[FamilyRule], via: Iterable[str], depth: int = 3):
        self.ctx = ctx
        self.rules = list(rules)
        self.via = tuple(via)
        self.depth = depth

    def nf(self, e: ObjExpr) -> ObjExpr:
        return normal_form(e, self.via)[0]

    def _core_moves(self, fs: list[ObjExpr], core: MorphismExpr):
        target = self.nf(core.src)
        sort = core.src.sort
        for i in range(len(fs)):
            for j in range(i + 1, len(fs) + 1):
                if self.nf(word(fs[i:j], sort)) == target:
                    yield i, j, core
        if isinstance(target, Unit):
            for i in range(len(fs) + 1):
                yield i, i, core

    def resolve_edge(self, src: ObjExpr, tgt: ObjExpr, cores: Sequence[MorphismExpr] | MorphismExpr | None
                     ) -> tuple[MorphismExpr, list[str]]:
        if cores is None:
            cores = []
        elif isinstance(cores, MorphismExpr):
            cores = [cores]
        cores = list(cores)
        sort = src.sort
        goal = self.nf(tgt)
        start = factors(src)
        # breadth-first over (word, cores used); each state keeps its path
        frontier = [(start, 0, [], [], 0)]
        seen = set()
        for _ in range(self.depth + len(cores) + 1):
            nxt = []
            for fs, used, parts, notes, nfam in frontier:
                cur = word(fs, sort)
                if used == len(cores) and self.nf(cur) == goal:
                    return self._finish(src, parts, cur, tgt), notes
                key = (tuple(fs), used)
                if key in seen:
                    continue
                seen.add(key)
                if used < len(cores):
                    core = cores[used]
                    for i, j, m in self._core_moves(fs, core):
                        piece = word(fs[i:j], sort)
                        step = seq(FunCoh(piece, m.src, self.via), m) if piece != m.src else m
                        new = fs[:i] + factors(m.tgt) + fs[j:]
                        nxt.append((new, used + 1, parts + [(fs, _whisker(fs[:i], step, fs[j:], sort))],
                                    notes + ["core"], nfam))
                if nfam >= self.depth:
                    continue
                for rule in self.rules:
                    for i, j, m, name in rule.moves(fs):
                        new = fs[:i] + factors(m.tgt) + fs[j:]
                        nxt.append((new, used, parts + [(fs, _whisker(fs[:i], m, fs[j:], sort))],
                                    notes + [f"family {name}"], nfam + 1))
            frontier = nxt
            if not frontier:
                break
        raise InputError(f"cannot resolve edge {show_obj(src)} -> {show_obj(tgt)}")

    def _bridge(self, a: ObjExpr, b: ObjExpr) -> MorphismExpr:
        try:
            return Coh(a, b)
        except InputError:
            return FunCoh(a, b, self.via)

    def _finish(self, src: ObjExpr, parts, cur: ObjExpr, tgt: ObjExpr) -> MorphismExpr:
        p = Path(src, self.via)
        for fs, m in parts:
            p.step(m)
        return p.build(tgt)

    def resolve_side(self, side: Sequence) -> ResolvedSide:
        nodes = side[0::2]
        edges = side[1::2]
        if len(nodes) != len(edges) + 1:
            raise InputError("a side must alternate nodes and edges")
        out: list[ResolvedEdge] = []
        exprs: list[MorphismExpr] = []
        ok = True
        for a, e, b in zip(nodes, edges, nodes[1:]):
            re_ = ResolvedEdge(a, b, e.label, [])
            try:
                sa, sb = parse_obj(a.lstrip("~"), self.ctx), parse_obj(b.lstrip("~"), self.ctx)
                cores = [parse_mor(c, self.ctx) for c in e.core.split(";") if c.strip()]
                m, notes = self.resolve_edge(sa, sb, cores)
                re_.expr, re_.steps = m, notes
                exprs.append(m)
            except InputError as err:
                re_.error = str(err)
                ok = False
            out.append(re_)
        if not ok:
            return ResolvedSide(out, None)
        if not exprs:
            return ResolvedSide(out, Id(parse_obj(nodes[0].lstrip("~"), self.ctx)))
        return ResolvedSide(out, seq(*exprs))

    def resolve(self, spec: DiagramSpec) -> ResolvedDiagram:
        left = self.resolve_side(spec.left)
        right = self.resolve_side(spec.right)
        problems = []
        for name, s in (("left", left), ("right", right)):
            for e in s.edges:
                if e.error:
                    problems.append(f"{name} side, edge {e.src} -> {e.tgt}: {e.error}")
        # association is ignored in the notation, so endpoints need only agree up to unmarked isos
        ls, rs = parse_obj(spec.left[0], self.ctx), parse_obj(spec.right[0], self.ctx)
        lt, rt = parse_obj(spec.left[-1], self.ctx), parse_obj(spec.right[-1], self.ctx)
        try:
            pre, post = self._bridge(ls, rs), self._bridge(rt, lt)
        except InputError:
            problems.append("the two sides have different endpoints")
        else:
            if right.expr is not None:
                right.expr = seq(pre, right.expr, post)
        return ResolvedDiagram(spec, left, right, problems)


# -- checking -----------------------------------------------------------------------------


def check_diagram(rd: ResolvedDiagram, model: Model, domains: Mapping[str, Sequence[int]],
                  law: str | None = None) -> int:
    """Evaluate both sides for every binding of the indices; return the count."""
    if not rd.ok:
        raise InputError(f"diagram {rd.spec.name} does not resolve: " + "; ".join(rd.problems))
    names = rd.spec.indices
    count = 0
    for vals in product(*(domains[n] for n in names)):
        m = model.with_objects(**dict(zip(names, vals))) if names else model
        ev = Evaluator(m)
        lv, rv = ev.mor(rd.left.expr), ev.mor(rd.right.expr)
        if lv != rv:
            raise LawViolation(law or rd.spec.name, dict(zip(names, vals)) or None,
                               f"sides evaluate to {lv} and {rv}")
        count += 1
    return count
