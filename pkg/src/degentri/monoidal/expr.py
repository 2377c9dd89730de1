"""Object and morphism expressions over finite monoidal categories.

Expressions are symbolic trees; a :class:`Model` supplies the tables that
interpret generators, natural-iso families and functors.  Every morphism
node knows its source and target expressions, so ill-typed trees are
rejected when they are built.

Two kinds of unmarked isomorphism are synthesized:

* :class:`Coh`: the Mac Lane coherence iso built from associators and
  unitors only.  Functor applications are opaque leaves.
* :class:`FunCoh`: the same, plus the tensor and unit constraints of the
  named strong monoidal functors, so that ``F(a) ⊗ F(b)`` and ``F(a ⊗ b)``
  become comparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from ..errors import InputError, LawViolation
from .category import FinMonoidalCategory

DEFAULT_SORT = "B"


# -- object expressions ---------------------------------------------------------


class ObjExpr:
    __slots__ = ("sort", "_key", "_hash")

    def _init(self, sort: str, key: tuple) -> None:
        object.__setattr__(self, "sort", sort)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("expressions are immutable")

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, ObjExpr) and self._hash == other._hash and self._key == other._key)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return show_obj(self)

    def __matmul__(self, other: "ObjExpr") -> "Tensor":
        return Tensor(self, other)


class Gen(ObjExpr):
    __slots__ = ("name",)

    def __init__(self, name: str, sort: str = DEFAULT_SORT):
        object.__setattr__(self, "name", name)
        self._init(sort, ("gen", name, sort))


class Lit(ObjExpr):
    """A literal object index of the category for ``sort``."""
    __slots__ = ("index",)

    def __init__(self, index: int, sort: str = DEFAULT_SORT):
        object.__setattr__(self, "index", int(index))
        self._init(sort, ("lit", int(index), sort))


class Unit(ObjExpr):
    __slots__ = ()

    def __init__(self, sort: str = DEFAULT_SORT):
        self._init(sort, ("unit", sort))


class Tensor(ObjExpr):
    __slots__ = ("left", "right")

    def __init__(self, left: ObjExpr, right: ObjExpr):
        if left.sort != right.sort:
            raise InputError(f"cannot tensor {left!r} ({left.sort}) with {right!r} ({right.sort})")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        self._init(left.sort, ("tensor", left, right))


class Apply(ObjExpr):
    """A functor applied to objects; opaque for plain coherence."""
    __slots__ = ("fname", "args")

    def __init__(self, fname: str, args: Sequence[ObjExpr], sort: str = DEFAULT_SORT):
        args = tuple(args)
        object.__setattr__(self, "fname", fname)
        object.__setattr__(self, "args", args)
        self._init(sort, ("apply", fname, args, sort))

    @property
    def arg_sorts(self) -> tuple[str, ...]:
        return tuple(a.sort for a in self.args)


LEAF_TYPES = (Gen, Lit, Apply)


def tensor_all(parts: Sequence[ObjExpr], sort: str = DEFAULT_SORT) -> ObjExpr:
    """Right-nested tensor of ``parts``; the unit for an empty list."""
    parts = list(parts)
    if not parts:
        return Unit(sort)
    acc = parts[-1]
    for p in reversed(parts[:-1]):
        acc = Tensor(p, acc)
    return acc


def show_obj(e: ObjExpr) -> str:
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Lit):
        return f"#{e.index}"
    if isinstance(e, Unit):
        return "U"
    if isinstance(e, Tensor):
        return f"({show_obj(e.left)} {show_obj(e.right)})"
    if isinstance(e, Apply):
        inner = " . ".join(show_obj(a) for a in e.args)
        return f"[{inner}]" if e.fname == "box" else f"{e.fname}({inner})"
    raise TypeError(e)


def leaves(e: ObjExpr) -> list[ObjExpr]:
    """Non-unit leaves in left-to-right order."""
    if isinstance(e, Unit):
        return []
    if isinstance(e, Tensor):
        return leaves(e.left) + leaves(e.right)
    return [e]


# -- morphism expressions -------------------------------------------------------


class MorphismExpr:
    """Base class.  ``src`` and ``tgt`` are fixed at construction."""
    src: ObjExpr
    tgt: ObjExpr
    label: str = ""

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.src!r} -> {self.tgt!r}>"

    def then(self, other: "MorphismExpr") -> "MorphismExpr":
        return compose(other, self)


def _check_same(a: ObjExpr, b: ObjExpr, where: str) -> None:
    if a != b:
        raise InputError(f"type mismatch in {where}: {a!r} vs {b!r}")


class MGen(MorphismExpr):
    def __init__(self, name: str, src: ObjExpr, tgt: ObjExpr):
        self.name, self.src, self.tgt = name, src, tgt


class Id(MorphismExpr):
    def __init__(self, obj: ObjExpr):
        self.obj = obj
        self.src = self.tgt = obj


class Comp(MorphismExpr):
    """``g`` after ``f``."""

    def __init__(self, g: MorphismExpr, f: MorphismExpr):
        _check_same(f.tgt, g.src, "composition")
        self.g, self.f = g, f
        self.src, self.tgt = f.src, g.tgt


class Tens(MorphismExpr):
    def __init__(self, f: MorphismExpr, g: MorphismExpr):
        self.f, self.g = f, g
        self.src = Tensor(f.src, g.src)
        self.tgt = Tensor(f.tgt, g.tgt)


class Assoc(MorphismExpr):
    def __init__(self, x: ObjExpr, y: ObjExpr, z: ObjExpr):
        self.x, self.y, self.z = x, y, z
        self.src = Tensor(Tensor(x, y), z)
        self.tgt = Tensor(x, Tensor(y, z))


class LUnit(MorphismExpr):
    def __init__(self, x: ObjExpr):
        self.x = x
        self.src, self.tgt = Tensor(Unit(x.sort), x), x


class RUnit(MorphismExpr):
    def __init__(self, x: ObjExpr):
        self.x = x
        self.src, self.tgt = Tensor(x, Unit(x.sort)), x


class Inv(MorphismExpr):
    def __init__(self, e: MorphismExpr):
        self.e = e
        self.src, self.tgt = e.tgt, e.src


@dataclass(frozen=True)
class FamilySig:
    """Typing of a natural-iso family: endpoints as functions of its indices."""
    name: str
    index_sorts: tuple[str, ...]
    src_fn: Callable[..., ObjExpr] = field(compare=False)
    tgt_fn: Callable[..., ObjExpr] = field(compare=False)


class Fam(MorphismExpr):
    def __init__(self, sig: FamilySig, *indices: ObjExpr):
        if len(indices) != len(sig.index_sorts):
            raise InputError(f"family {sig.name} takes {len(sig.index_sorts)} indices")
        for i, s in zip(indices, sig.index_sorts):
            if i.sort != s:
                raise InputError(f"family {sig.name}: index {i!r} has sort {i.sort}, expected {s}")
        self.sig, self.indices = sig, tuple(indices)
        self.src, self.tgt = sig.src_fn(*indices), sig.tgt_fn(*indices)


class Fun(MorphismExpr):
    """A functor applied to morphisms."""

    def __init__(self, fname: str, args: Sequence[MorphismExpr], sort: str = DEFAULT_SORT):
        self.fname, self.args, self.sort = fname, tuple(args), sort
        self.src = Apply(fname, [a.src for a in self.args], sort)
        self.tgt = Apply(fname, [a.tgt for a in self.args], sort)


class Phi2(MorphismExpr):
    """Tensor constraint ``F(a) ⊗ F(b) -> F(a ⊗ b)`` (argumentwise tensor)."""

    def __init__(self, fname: str, a: Sequence[ObjExpr], b: Sequence[ObjExpr], sort: str = DEFAULT_SORT):
        a, b = tuple(a), tuple(b)
        if len(a) != len(b):
            raise InputError("tensor constraint arity mismatch")
        self.fname, self.a, self.b, self.sort = fname, a, b, sort
        self.src = Tensor(Apply(fname, a, sort), Apply(fname, b, sort))
        self.tgt = Apply(fname, [Tensor(x, y) for x, y in zip(a, b)], sort)


class Phi0(MorphismExpr):
    """Unit constraint ``U -> F(U, ..., U)``."""

    def __init__(self, fname: str, arg_sorts: Sequence[str], sort: str = DEFAULT_SORT):
        self.fname, self.arg_sorts, self.sort = fname, tuple(arg_sorts), sort
        self.src = Unit(sort)
        self.tgt = Apply(fname, [Unit(s) for s in self.arg_sorts], sort)


class Coh(MorphismExpr):
    """Unmarked canonical coherence iso built from a, l, r."""

    def __init__(self, src: ObjExpr, tgt: ObjExpr):
        self.src, self.tgt = src, tgt
        self.route = coherence_route(src, tgt)


class FunCoh(MorphismExpr):
    """Unmarked iso built from a, l, r and the constraints of functors in ``via``."""

    def __init__(self, src: ObjExpr, tgt: ObjExpr, via: Iterable[str] = ("box",)):
        self.src, self.tgt, self.via = src, tgt, frozenset(via)
        self.route = coherence_route(src, tgt, self.via)


def compose(*fs: MorphismExpr) -> MorphismExpr:
    """Right-to-left composite, dropping syntactic identities."""
    parts = [f for f in fs if not isinstance(f, Id)]
    if not parts:
        return fs[-1]
    acc = parts[-1]
    for g in reversed(parts[:-1]):
        acc = Comp(g, acc)
    return acc


def seq(*fs: MorphismExpr) -> MorphismExpr:
    """Diagrammatic composite: first argument first."""
    return compose(*reversed(fs))


def is_trivial(e: MorphismExpr) -> bool:
    return isinstance(e, Id)


# -- coherence synthesis ----------------------------------------------------------


def _whisker_tensor(f: MorphismExpr, g: MorphismExpr) -> MorphismExpr:
    if isinstance(f, Id) and isinstance(g, Id):
        return Id(Tensor(f.obj, g.obj))
    return Tens(f, g)


def _merge_words(a: ObjExpr, b: ObjExpr) -> tuple[ObjExpr, MorphismExpr]:
    """Route ``a ⊗ b -> nf`` for two right-nested unit-free words."""
    if isinstance(a, Unit):
        return b, LUnit(b)
    if isinstance(b, Unit):
        return a, RUnit(a)
    if not isinstance(a, Tensor):
        return Tensor(a, b), Id(Tensor(a, b))
    x, rest = a.left, a.right
    tail, r = _merge_words(rest, b)
    return Tensor(x, tail), seq(Assoc(x, rest, b), _whisker_tensor(Id(x), r))


def _maclane(e: ObjExpr, leaf: Callable[[ObjExpr], tuple[ObjExpr, MorphismExpr]]) -> tuple[ObjExpr, MorphismExpr]:
    if isinstance(e, Unit):
        return e, Id(e)
    if isinstance(e, Tensor):
        na, ra = _maclane(e.left, leaf)
        nb, rb = _maclane(e.right, leaf)
        n, r = _merge_words(na, nb)
        return n, seq(_whisker_tensor(ra, rb), r)
    return leaf(e)


def _plain_leaf(e: ObjExpr) -> tuple[ObjExpr, MorphismExpr]:
    return e, Id(e)


def _word_list(w: ObjExpr) -> list[ObjExpr]:
    out = []
    while isinstance(w, Tensor):
        out.append(w.left)
        w = w.right
    if not isinstance(w, Unit):
        out.append(w)
    return out


def _at_pair(word: list[ObjExpr], i: int, step: MorphismExpr, sort: str) -> MorphismExpr:
    """Apply ``step: w_i ⊗ w_{i+1} -> u`` inside the right-nested word."""
    rest = word[i + 2:]
    if rest:
        tail = tensor_all(rest, sort)
        core = seq(Inv(Assoc(word[i], word[i + 1], tail)), Tens(step, Id(tail)))
    else:
        core = step
    for x in reversed(word[:i]):
        core = Tens(Id(x), core)
    return core


def _functor_nf(e: ObjExpr, via: frozenset) -> tuple[ObjExpr, MorphismExpr]:
    def leaf(x: ObjExpr) -> tuple[ObjExpr, MorphismExpr]:
        if isinstance(x, Apply) and x.fname in via:
            outs = [_functor_nf(a, via) for a in x.args]
            new = Apply(x.fname, [n for n, _ in outs], x.sort)
            route: MorphismExpr = Id(x)
            if any(not isinstance(r, Id) for _, r in outs):
                route = Fun(x.fname, [r for _, r in outs], x.sort)
            if all(isinstance(a, Unit) for a in new.args):
                return Unit(x.sort), seq(route, Inv(Phi0(x.fname, new.arg_sorts, x.sort)))
            return new, route
        return x, Id(x)

    n, route = _maclane(e, leaf)
    word = _word_list(n)
    for i in range(len(word) - 1):
        p, q = word[i], word[i + 1]
        if isinstance(p, Apply) and isinstance(q, Apply) and p.fname == q.fname and p.fname in via:
            step = Phi2(p.fname, p.args, q.args, p.sort)
            moved = _at_pair(word, i, step, n.sort)
            n2, r2 = _functor_nf(moved.tgt, via)
            return n2, seq(route, moved, r2)
    return n, route


_ROUTES: dict = {}


def normal_form(e: ObjExpr, via: Iterable[str] = ()) -> tuple[ObjExpr, MorphismExpr]:
    via = frozenset(via)
    key = (e, via)
    hit = _ROUTES.get(key)
    if hit is None:
        hit = _maclane(e, _plain_leaf) if not via else _functor_nf(e, via)
        _ROUTES[key] = hit
    return hit


def coherence_route(src: ObjExpr, tgt: ObjExpr, via: Iterable[str] = ()) -> MorphismExpr:
    """Symbolic coherence iso ``src -> tgt``; raises if none exists."""
    if src.sort != tgt.sort:
        raise InputError(f"no coherence iso between sorts {src.sort} and {tgt.sort}")
    ns, rs = normal_form(src, via)
    nt, rt = normal_form(tgt, via)
    if ns != nt:
        raise InputError(f"no canonical iso: {src!r} and {tgt!r} normalize to {ns!r} and {nt!r}")
    return seq(rs, Inv(rt)) if not isinstance(rt, Id) else rs


def left_normal_form(e: ObjExpr) -> tuple[ObjExpr, MorphismExpr]:
    """Alternative route to the left-nested unit-free word (for cross-checks)."""
    if isinstance(e, Unit):
        return e, Id(e)
    if isinstance(e, Tensor):
        na, ra = left_normal_form(e.left)
        nb, rb = left_normal_form(e.right)
        first = _whisker_tensor(ra, rb)
        if isinstance(nb, Unit):
            return na, seq(first, RUnit(na))
        if isinstance(na, Unit):
            return nb, seq(first, LUnit(nb))

        def pull(a: ObjExpr, word: ObjExpr) -> tuple[ObjExpr, MorphismExpr]:
            # a ⊗ (((b1 b2) ...) bk)  ->  ((a b1) ...) bk
            if not isinstance(word, Tensor):
                return Tensor(a, word), Id(Tensor(a, word))
            inner, r = pull(a, word.left)
            return Tensor(inner, word.right), seq(Inv(Assoc(a, word.left, word.right)),
                                                  _whisker_tensor(r, Id(word.right)))

        n, r = pull(na, nb)
        return n, seq(first, r)
    return e, Id(e)


# -- models and evaluation ---------------------------------------------------------


class FunctorModel:
    """Tables interpreting a functor of several variables."""

    def __init__(self, obj: Callable[[tuple], int], mor: Callable[[tuple], int],
                 phi2: Callable[[tuple, tuple], int] | None = None, phi0: Callable[[], int] | None = None):
        self.obj, self.mor, self.phi2, self.phi0 = obj, mor, phi2, phi0


@dataclass
class Model:
    cats: Mapping[str, FinMonoidalCategory]
    objects: Mapping[str, int] = field(default_factory=dict)
    morphisms: Mapping[str, int] = field(default_factory=dict)
    families: Mapping[str, Callable[[tuple], int]] = field(default_factory=dict)
    functors: Mapping[str, FunctorModel] = field(default_factory=dict)

    def with_objects(self, **binds: int) -> "Model":
        objs = dict(self.objects)
        objs.update(binds)
        return Model(self.cats, objs, self.morphisms, self.families, self.functors)

    def cat(self, sort: str) -> FinMonoidalCategory:
        try:
            return self.cats[sort]
        except KeyError:
            raise InputError(f"no category bound for sort {sort}") from None


def eval_obj(e: ObjExpr, model: Model, memo: dict | None = None) -> int:
    memo = {} if memo is None else memo
    hit = memo.get(e)
    if hit is not None:
        return hit
    if isinstance(e, Gen):
        try:
            v = model.objects[e.name]
        except KeyError:
            raise InputError(f"unbound generator object {e.name}") from None
    elif isinstance(e, Lit):
        v = e.index
    elif isinstance(e, Unit):
        v = model.cat(e.sort).unit_obj
    elif isinstance(e, Tensor):
        v = model.cat(e.sort).t(eval_obj(e.left, model, memo), eval_obj(e.right, model, memo))
    elif isinstance(e, Apply):
        fm = model.functors.get(e.fname)
        if fm is None:
            raise InputError(f"no functor bound for {e.fname}")
        v = fm.obj(tuple(eval_obj(a, model, memo) for a in e.args))
    else:
        raise TypeError(e)
    memo[e] = v
    return v


class Evaluator:
    """Evaluates morphism expressions against one model, with endpoint checks."""

    def __init__(self, model: Model, check: bool = True):
        self.model = model
        self.check = check
        self.memo: dict = {}
        # morphism expressions compare by identity; shared sub-routes are evaluated once
        self.mor_memo: dict[int, tuple[MorphismExpr, int]] = {}

    def obj(self, e: ObjExpr) -> int:
        return eval_obj(e, self.model, self.memo)

    def mor(self, e: MorphismExpr) -> int:
        hit = self.mor_memo.get(id(e))
        if hit is not None and hit[0] is e:
            return hit[1]
        v = self._mor(e)
        if self.check:
            c = self.model.cat(e.src.sort)
            s, t = self.obj(e.src), self.obj(e.tgt)
            if c.src(v) != s or c.tgt(v) != t:
                raise LawViolation("evaluated morphism has the wrong endpoints", repr(e),
                                   f"expected {s}->{t}, got {c.src(v)}->{c.tgt(v)}")
        self.mor_memo[id(e)] = (e, v)
        return v

    def _mor(self, e: MorphismExpr) -> int:
        m = self.model
        if isinstance(e, Id):
            return m.cat(e.src.sort).id(self.obj(e.obj))
        if isinstance(e, Comp):
            c = m.cat(e.src.sort)
            return c.comp(self.mor(e.g), self.mor(e.f))
        if isinstance(e, Tens):
            return m.cat(e.src.sort).tm(self.mor(e.f), self.mor(e.g))
        if isinstance(e, Assoc):
            return m.cat(e.src.sort).a(self.obj(e.x), self.obj(e.y), self.obj(e.z))
        if isinstance(e, LUnit):
            return m.cat(e.src.sort).l(self.obj(e.x))
        if isinstance(e, RUnit):
            return m.cat(e.src.sort).r(self.obj(e.x))
        if isinstance(e, Inv):
            c = m.cat(e.src.sort)
            f = self.mor(e.e)
            if not c.base.is_iso(f):
                raise LawViolation("inverse of a non-invertible morphism", repr(e.e))
            return c.inv(f)
        if isinstance(e, (Coh, FunCoh)):
            return self.mor(e.route)
        if isinstance(e, MGen):
            try:
                return m.morphisms[e.name]
            except KeyError:
                raise InputError(f"unbound generator morphism {e.name}") from None
        if isinstance(e, Fam):
            fam = m.families.get(e.sig.name)
            if fam is None:
                raise InputError(f"no table bound for family {e.sig.name}")
            return fam(tuple(self.obj(i) for i in e.indices))
        if isinstance(e, Fun):
            fm = self._functor(e.fname)
            return fm.mor(tuple(self.mor(a) for a in e.args))
        if isinstance(e, Phi2):
            fm = self._functor(e.fname)
            if fm.phi2 is None:
                raise InputError(f"functor {e.fname} has no tensor constraint")
            return fm.phi2(tuple(self.obj(x) for x in e.a), tuple(self.obj(x) for x in e.b))
        if isinstance(e, Phi0):
            fm = self._functor(e.fname)
            if fm.phi0 is None:
                raise InputError(f"functor {e.fname} has no unit constraint")
            return fm.phi0()
        raise TypeError(e)

    def _functor(self, name: str) -> FunctorModel:
        fm = self.model.functors.get(name)
        if fm is None:
            raise InputError(f"no functor bound for {name}")
        return fm


def eval_morphism_expr(e: MorphismExpr, model: Model) -> int:
    return Evaluator(model).mor(e)


def single_sort_model(c: FinMonoidalCategory, objects: Mapping[str, int] | None = None,
                      morphisms: Mapping[str, int] | None = None, families=None, functors=None) -> Model:
    return Model({DEFAULT_SORT: c}, dict(objects or {}), dict(morphisms or {}), dict(families or {}),
                 dict(functors or {}))


def canonical_coherence_iso(src: ObjExpr, tgt: ObjExpr, c: FinMonoidalCategory,
                            bindings: Mapping[str, int] | None = None) -> int:
    """Evaluate the unique a/l/r-built iso ``src -> tgt`` in ``c``."""
    return eval_morphism_expr(Coh(src, tgt), single_sort_model(c, bindings))


# -- paths with automatic coherence --------------------------------------------------


class Path:
    """A composite built step by step, bridging gaps with unmarked isos.

    ``via`` lists the functors whose constraints may be used for bridging.
    Every bridge is recorded with its annotation so transcriptions can be
    audited.
    """

    def __init__(self, start: ObjExpr, via: Iterable[str] = ("box",)):
        self.start = start
        self.current = start
        self.via = tuple(via)
        self.parts: list[MorphismExpr] = []
        self.notes: list[tuple[str, str]] = []

    def _bridge(self, target: ObjExpr) -> None:
        if target == self.current:
            return
        try:
            m: MorphismExpr = Coh(self.current, target)
            note = "coherence"
        except InputError:
            m = FunCoh(self.current, target, self.via)
            note = "constraint"
        self.parts.append(m)
        self.notes.append((note, f"{self.current!r} -> {target!r}"))
        self.current = target

    def step(self, m: MorphismExpr, note: str = "") -> "Path":
        self._bridge(m.src)
        self.parts.append(m)
        self.notes.append((note or type(m).__name__, f"{m.src!r} -> {m.tgt!r}"))
        self.current = m.tgt
        return self

    def to(self, node: ObjExpr) -> "Path":
        """Pass through a displayed node (bridging if needed)."""
        self._bridge(node)
        return self

    def build(self, end: ObjExpr | None = None) -> MorphismExpr:
        if end is not None:
            self._bridge(end)
        if not self.parts:
            return Id(self.start)
        return seq(*self.parts)
