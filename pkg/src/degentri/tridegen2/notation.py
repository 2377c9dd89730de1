"""A parser for the bracket notation used in the diagram transcriptions.

Juxtaposition is ``⊗``; ``[x . y]`` and ``(x . y)`` are ``⊠``; ``F(x)`` applies a functor;
a trailing ``*`` names the dual object (``A*`` for the dot-dual of ``A``);
``U`` is the unit of the ambient sort.  In morphism mode, object terms
stand for identities and declared names stand for generator cells;
``inv(f)`` inverts and ``fam{X, Y}`` is a component of a declared family.

Names parsed inside a functor whose source sort differs from the ambient
one are qualified as ``sort:name`` so source and target generators never
collide in one model.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Mapping

from ..errors import InputError
from ..monoidal.expr import Apply, Fam, FamilySig, Fun, Gen, Id, Inv, MorphismExpr, ObjExpr, Tens, Tensor, Unit

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*\*?)|(.))")

MorphFactory = Callable[["Context", str], MorphismExpr]


@dataclass
class Context:
    """How names resolve.

    ``functors`` maps a functor name to ``(source sort, target sort)``;
    ``boxes`` maps a sort to the name of its ``⊠`` functor; ``cells`` maps
    a morphism name to a factory called with the sort it is parsed in.
    """
    sort: str = "B"
    home: str = "B"
    functors: Mapping[str, tuple[str, str]] = field(default_factory=dict)
    boxes: Mapping[str, str] = field(default_factory=lambda: {"B": "box"})
    cells: Mapping[str, MorphFactory] = field(default_factory=dict)
    families: Mapping[str, FamilySig] = field(default_factory=dict)

    def at(self, sort: str) -> "Context":
        return Context(sort, self.home, self.functors, self.boxes, self.cells, self.families)

    def family(self, name: str) -> FamilySig | None:
        return self.families.get(qualify(name, self.sort, self.home))

    def gen(self, name: str) -> ObjExpr:
        if name == "U":
            return Unit(self.sort)
        return Gen(qualify(name, self.sort, self.home), self.sort)

    def box(self) -> str:
        try:
            return self.boxes[self.sort]
        except KeyError:
            raise InputError(f"no box functor declared for sort {self.sort}") from None


def qualify(name: str, sort: str, home: str = "B") -> str:
    return name if sort == home else f"{sort}:{name}"


def _tokens(text: str) -> list[str]:
    out = []
    for m in _TOKEN.finditer(text):
        tok = m.group(1) or m.group(2)
        if tok and not tok.isspace():
            out.append(tok)
    return out


class _Parser:
    def __init__(self, text: str, ctx: Context, morphisms: bool):
        self.toks = _tokens(text.replace("·", "."))
        self.i = 0
        self.text = text
        self.morphisms = morphisms
        self.ctx = ctx

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise InputError(f"bad notation {self.text!r}: expected {want or 'a term'} at token {self.i}")
        self.i += 1
        return tok

    def run(self):
        e = self.expr(self.ctx)
        if self.peek() is not None:
            raise InputError(f"bad notation {self.text!r}: trailing {self.peek()!r}")
        return e

    def expr(self, ctx: Context):
        terms = [self.term(ctx)]
        while self.peek() not in (None, ")", "]", ".", ",", "}"):
            terms.append(self.term(ctx))
        acc = terms[-1]
        for t in reversed(terms[:-1]):
            acc = Tens(t, acc) if self.morphisms else Tensor(t, acc)
        return acc

    def term(self, ctx: Context):
        tok = self.take()
        if tok in "([":
            a = self.expr(ctx)
            close = ")" if tok == "(" else "]"
            if tok == "(" and self.peek() == ")":
                self.take(")")
                return a
            self.take(".")
            b = self.expr(ctx)
            self.take(close)
            box = ctx.box()
            if self.morphisms:
                return Fun(box, [self._as_mor(a), self._as_mor(b)], ctx.sort)
            return Apply(box, [a, b], ctx.sort)
        if not re.match(r"[A-Za-z_]", tok):
            raise InputError(f"bad notation {self.text!r}: unexpected {tok!r}")
        if tok == "inv" and self.morphisms and self.peek() == "(":
            self.take("(")
            e = self.expr(ctx)
            self.take(")")
            return Inv(self._as_mor(e))
        if tok in ctx.functors and self.peek() == "(":
            src, tgt = ctx.functors[tok]
            if tgt != ctx.sort:
                raise InputError(f"functor {tok} lands in {tgt}, used in {ctx.sort}")
            self.take("(")
            inner = self.expr(ctx.at(src))
            self.take(")")
            if self.morphisms:
                return Fun(tok, [self._as_mor(inner)], tgt)
            return Apply(tok, [inner], tgt)
        if self.morphisms and self.peek() == "{" and ctx.family(tok) is not None:
            sig = ctx.family(tok)
            self.take("{")
            args = []
            self.morphisms = False
            for k, s in enumerate(sig.index_sorts):
                if k:
                    self.take(",")
                args.append(self.expr(ctx.at(s)))
            self.morphisms = True
            self.take("}")
            return Fam(sig, *args)
        if self.morphisms and tok in ctx.cells:
            return ctx.cells[tok](ctx, tok)
        return Id(ctx.gen(tok)) if self.morphisms else ctx.gen(tok)

    @staticmethod
    def _as_mor(e) -> MorphismExpr:
        return Id(e) if isinstance(e, ObjExpr) else e


def parse_obj(text: str, ctx: Context | None = None) -> ObjExpr:
    return _Parser(text, ctx or Context(), False).run()


def parse_mor(text: str, ctx: Context | None = None) -> MorphismExpr:
    e = _Parser(text, ctx or Context(), True).run()
    return Id(e) if isinstance(e, ObjExpr) else e
