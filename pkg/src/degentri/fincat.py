"""Finite categories, functors and natural transformations.

Morphisms are indexed globally; each carries its source and target, and
composition is a partial table over composable pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError, LawViolation


@dataclass(frozen=True, eq=False)
class FinCategory:
    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    identity: tuple[int, ...]
    # comp[g][f] is g after f, or -1 when tgt(f) != src(g)
    comp: tuple[tuple[int, ...], ...]
    object_names: tuple[str, ...] | None = None
    morphism_names: tuple[str, ...] | None = None
    inverse: tuple[int, ...] = field(default=(), repr=False)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(len(self.src))

    def compose(self, g: int, f: int) -> int:
        h = self.comp[g][f]
        if h < 0:
            raise InputError(f"morphisms {g} and {f} are not composable")
        return h

    def chain(self, *fs: int) -> int:
        """Compose right to left: ``chain(h, g, f)`` is h after g after f."""
        acc = fs[-1]
        for g in reversed(fs[:-1]):
            acc = self.compose(g, acc)
        return acc

    def hom(self, a: int, b: int) -> list[int]:
        return [f for f in self.morphisms if self.src[f] == a and self.tgt[f] == b]

    def inv(self, f: int) -> int:
        g = self.inverse[f]
        if g < 0:
            raise LawViolation("not an isomorphism", f)
        return g

    def is_iso(self, f: int) -> bool:
        return self.inverse[f] >= 0

    def is_identity(self, f: int) -> bool:
        return self.identity[self.src[f]] == f

    def obj_name(self, a: int) -> str:
        return self.object_names[a] if self.object_names else str(a)

    def mor_name(self, f: int) -> str:
        return self.morphism_names[f] if self.morphism_names else str(f)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.n_objects, self.src, self.tgt, self.identity, self.comp) == (
            other.n_objects, other.src, other.tgt, other.identity, other.comp)

    def __hash__(self) -> int:
        return hash((self.n_objects, self.src, self.tgt, self.identity))

    def raw(self) -> dict:
        triples = [[g, f, self.comp[g][f]] for g in self.morphisms for f in self.morphisms if self.comp[g][f] >= 0]
        out = {"objects": self.n_objects, "morphisms": [[s, t] for s, t in zip(self.src, self.tgt)],
               "identities": list(self.identity), "composition": triples}
        if self.object_names:
            out["object_names"] = list(self.object_names)
        if self.morphism_names:
            out["morphism_names"] = list(self.morphism_names)
        return out


def make_category(n_objects: int, morphisms: Sequence[Sequence[int]], identities: Sequence[int],
                  composition, object_names=None, morphism_names=None) -> FinCategory:
    """Validate and build a finite category from ``(g, f, g∘f)`` triples."""
    m = len(morphisms)
    src = tuple(int(s) for s, _ in morphisms)
    tgt = tuple(int(t) for _, t in morphisms)
    for f in range(m):
        if not (0 <= src[f] < n_objects and 0 <= tgt[f] < n_objects):
            raise InputError(f"morphism {f} has an endpoint outside the object range")
    if len(identities) != n_objects:
        raise InputError("one identity per object is required")
    ident = tuple(int(i) for i in identities)
    table = [[-1] * m for _ in range(m)]
    for g, f, h in composition:
        if not (0 <= int(g) < m and 0 <= int(f) < m):
            raise InputError(f"composition triple {(g, f, h)} out of range")
        table[int(g)][int(f)] = int(h)
    return validate_category(n_objects, src, tgt, ident, table, object_names, morphism_names)


def validate_category(n_objects, src, tgt, ident, table, object_names=None, morphism_names=None) -> FinCategory:
    m = len(src)
    for a in range(n_objects):
        i = ident[a]
        if not 0 <= i < m or src[i] != a or tgt[i] != a:
            raise LawViolation("identity has wrong endpoints", a)
    for g in range(m):
        for f in range(m):
            h = table[g][f]
            if tgt[f] == src[g]:
                if not 0 <= h < m:
                    raise LawViolation("composite missing", (g, f))
                if src[h] != src[f] or tgt[h] != tgt[g]:
                    raise LawViolation("composite has wrong endpoints", (g, f))
            elif h != -1:
                raise LawViolation("composite defined on non-composable pair", (g, f))
    for f in range(m):
        if table[f][ident[src[f]]] != f or table[ident[tgt[f]]][f] != f:
            raise LawViolation("identity law", f)
    by_src: list[list[int]] = [[] for _ in range(n_objects)]
    for f in range(m):
        by_src[src[f]].append(f)
    for f in range(m):
        for g in by_src[tgt[f]]:
            gf = table[g][f]
            for h in by_src[tgt[g]]:
                if table[h][gf] != table[table[h][g]][f]:
                    raise LawViolation("associativity", (h, g, f))
    inverse = []
    for f in range(m):
        inv = -1
        for g in by_src[tgt[f]]:
            if tgt[g] == src[f] and table[g][f] == ident[src[f]] and table[f][g] == ident[tgt[f]]:
                inv = g
                break
        inverse.append(inv)
    return FinCategory(n_objects, tuple(src), tuple(tgt), tuple(ident), tuple(tuple(r) for r in table),
                       tuple(object_names) if object_names else None,
                       tuple(morphism_names) if morphism_names else None, tuple(inverse))


def discrete_category(n: int, names=None) -> FinCategory:
    return validate_category(n, list(range(n)), list(range(n)), list(range(n)),
                             [[f if f == g else -1 for f in range(n)] for g in range(n)], names)


def one_object_category(op: Sequence[Sequence[int]], unit: int, names=None) -> FinCategory:
    """The monoid with table ``op`` viewed as a category with one object."""
    m = len(op)
    return validate_category(1, [0] * m, [0] * m, [unit], [[op[g][f] for f in range(m)] for g in range(m)],
                             None, names)


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    """Objects and morphisms are pairs, encoded as ``x * |D| + y``."""
    no, nm = d.n_objects, d.n_morphisms
    m = c.n_morphisms * nm
    src = [c.src[f // nm] * no + d.src[f % nm] for f in range(m)]
    tgt = [c.tgt[f // nm] * no + d.tgt[f % nm] for f in range(m)]
    ident = [c.identity[a // no] * nm + d.identity[a % no] for a in range(c.n_objects * no)]
    table = [[-1] * m for _ in range(m)]
    for g in range(m):
        g1, g2 = divmod(g, nm)
        row_c, row_d = c.comp[g1], d.comp[g2]
        for f in range(m):
            f1, f2 = divmod(f, nm)
            h1, h2 = row_c[f1], row_d[f2]
            if h1 >= 0 and h2 >= 0:
                table[g][f] = h1 * nm + h2
    inverse = []
    for f in range(m):
        f1, f2 = divmod(f, nm)
        i1, i2 = c.inverse[f1], d.inverse[f2]
        inverse.append(i1 * nm + i2 if i1 >= 0 and i2 >= 0 else -1)
    return FinCategory(c.n_objects * no, tuple(src), tuple(tgt), tuple(ident), tuple(tuple(r) for r in table),
                       None, None, tuple(inverse))


def pair_obj(d: FinCategory, x: int, y: int) -> int:
    return x * d.n_objects + y


def pair_mor(d: FinCategory, f: int, g: int) -> int:
    return f * d.n_morphisms + g


# -- functors ----------------------------------------------------------------


@dataclass(frozen=True)
class FinFunctor:
    source: FinCategory
    target: FinCategory
    obj: tuple[int, ...]
    mor: tuple[int, ...]

    def __call__(self, f: int) -> int:
        return self.mor[f]


def validate_functor(source: FinCategory, target: FinCategory, obj: Sequence[int], mor: Sequence[int]) -> FinFunctor:
    if len(obj) != source.n_objects or len(mor) != source.n_morphisms:
        raise InputError("functor tables have the wrong length")
    obj, mor = tuple(int(x) for x in obj), tuple(int(x) for x in mor)
    for f in source.morphisms:
        g = mor[f]
        if not 0 <= g < target.n_morphisms:
            raise InputError(f"morphism image {g} out of range")
        if target.src[g] != obj[source.src[f]] or target.tgt[g] != obj[source.tgt[f]]:
            raise LawViolation("functor preserves endpoints", f)
    for a in source.objects:
        if mor[source.identity[a]] != target.identity[obj[a]]:
            raise LawViolation("functor preserves identities", a)
    for g in source.morphisms:
        for f in source.morphisms:
            h = source.comp[g][f]
            if h >= 0 and mor[h] != target.comp[mor[g]][mor[f]]:
                raise LawViolation("functor preserves composition", (g, f))
    return FinFunctor(source, target, obj, mor)


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(c, c, tuple(c.objects), tuple(c.morphisms))


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    """``g`` after ``f``."""
    if f.target != g.source:
        raise InputError("functors are not composable")
    return FinFunctor(f.source, g.target, tuple(g.obj[x] for x in f.obj), tuple(g.mor[x] for x in f.mor))


def product_functor(f: FinFunctor, g: FinFunctor, dom: FinCategory | None = None,
                    cod: FinCategory | None = None) -> FinFunctor:
    dom = dom or product_category(f.source, g.source)
    cod = cod or product_category(f.target, g.target)
    obj = tuple(pair_obj(g.target, f.obj[a // g.source.n_objects], g.obj[a % g.source.n_objects])
                for a in dom.objects)
    mor = tuple(pair_mor(g.target, f.mor[h // g.source.n_morphisms], g.mor[h % g.source.n_morphisms])
                for h in dom.morphisms)
    return FinFunctor(dom, cod, obj, mor)


# -- natural transformations --------------------------------------------------


@dataclass(frozen=True)
class FinNatTransform:
    source: FinFunctor
    target: FinFunctor
    components: tuple[int, ...]

    def __getitem__(self, a: int) -> int:
        return self.components[a]


def validate_nat_transform(source: FinFunctor, target: FinFunctor, components: Sequence[int]) -> FinNatTransform:
    c, d = source.source, source.target
    if target.source != c or target.target != d:
        raise InputError("functors are not parallel")
    comps = tuple(int(x) for x in components)
    if len(comps) != c.n_objects:
        raise InputError("one component per object is required")
    for a in c.objects:
        t = comps[a]
        if d.src[t] != source.obj[a] or d.tgt[t] != target.obj[a]:
            raise LawViolation("component has wrong endpoints", a)
    for f in c.morphisms:
        left = d.comp[target.mor[f]][comps[c.src[f]]]
        right = d.comp[comps[c.tgt[f]]][source.mor[f]]
        if left != right:
            raise LawViolation("naturality", f)
    return FinNatTransform(source, target, comps)


def identity_nat_transform(f: FinFunctor) -> FinNatTransform:
    return FinNatTransform(f, f, tuple(f.target.identity[f.obj[a]] for a in f.source.objects))


def vertical_compose(beta: FinNatTransform, alpha: FinNatTransform) -> FinNatTransform:
    """``beta`` after ``alpha``."""
    if alpha.target != beta.source:
        raise InputError("transformations are not vertically composable")
    d = alpha.source.target
    return FinNatTransform(alpha.source, beta.target,
                           tuple(d.comp[b][a] for a, b in zip(alpha.components, beta.components)))


def horizontal_compose(beta: FinNatTransform, alpha: FinNatTransform) -> FinNatTransform:
    """For ``alpha: F => G`` on C -> D and ``beta: H => K`` on D -> E."""
    if alpha.source.target != beta.source.source:
        raise InputError("transformations are not horizontally composable")
    e = beta.source.target
    H, K = beta.source, beta.target
    comps = []
    for a in alpha.source.source.objects:
        # K(alpha_a) after beta_{F a}
        comps.append(e.comp[K.mor[alpha.components[a]]][beta.components[alpha.source.obj[a]]])
    return FinNatTransform(compose_functors(H, alpha.source), compose_functors(K, alpha.target), tuple(comps))
