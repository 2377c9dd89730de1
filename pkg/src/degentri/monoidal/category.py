"""Finite monoidal categories, monoidal functors and monoidal transformations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..errors import InputError, LawViolation
from ..fincat import (FinCategory, FinFunctor, FinNatTransform, identity_functor, pair_mor, pair_obj,
                      product_category, validate_functor, validate_nat_transform)


@dataclass(frozen=True, eq=False)
class FinMonoidalCategory:
    base: FinCategory
    tensor_obj: tuple[tuple[int, ...], ...]
    tensor_mor: tuple[tuple[int, ...], ...]
    unit_obj: int
    assoc: tuple[tuple[tuple[int, ...], ...], ...]
    lunit: tuple[int, ...]
    runit: tuple[int, ...]
    name: str = ""

    # thin accessors used by the expression evaluator
    def t(self, x: int, y: int) -> int:
        return self.tensor_obj[x][y]

    def tm(self, f: int, g: int) -> int:
        return self.tensor_mor[f][g]

    def a(self, x: int, y: int, z: int) -> int:
        return self.assoc[x][y][z]

    def l(self, x: int) -> int:
        return self.lunit[x]

    def r(self, x: int) -> int:
        return self.runit[x]

    def id(self, x: int) -> int:
        return self.base.identity[x]

    def comp(self, g: int, f: int) -> int:
        return self.base.compose(g, f)

    def chain(self, *fs: int) -> int:
        return self.base.chain(*fs)

    def then(self, *fs: int) -> int:
        """Diagrammatic composite: ``then(f, g, h)`` is h after g after f."""
        return self.base.chain(*reversed(fs))

    def inv(self, f: int) -> int:
        return self.base.inv(f)

    def src(self, f: int) -> int:
        return self.base.src[f]

    def tgt(self, f: int) -> int:
        return self.base.tgt[f]

    @property
    def objects(self) -> range:
        return self.base.objects

    @property
    def morphisms(self) -> range:
        return self.base.morphisms

    def end(self, x: int) -> list[int]:
        return self.base.hom(x, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinMonoidalCategory):
            return NotImplemented
        return (self.base, self.tensor_obj, self.tensor_mor, self.unit_obj, self.assoc, self.lunit,
                self.runit) == (other.base, other.tensor_obj, other.tensor_mor, other.unit_obj, other.assoc,
                                other.lunit, other.runit)

    def __hash__(self) -> int:
        return hash((self.base, self.unit_obj, self.lunit, self.runit))

    def is_strict(self) -> bool:
        b = self.base
        return (all(b.is_identity(f) for plane in self.assoc for row in plane for f in row)
                and all(b.is_identity(f) for f in self.lunit) and all(b.is_identity(f) for f in self.runit))

    def raw(self) -> dict:
        return {"category": self.base.raw(), "tensor_obj": [list(r) for r in self.tensor_obj],
                "tensor_mor": [list(r) for r in self.tensor_mor], "unit": self.unit_obj,
                "associator": [[list(r) for r in p] for p in self.assoc], "left_unitor": list(self.lunit),
                "right_unitor": list(self.runit)}


def validate_monoidal(base: FinCategory, tensor_obj, tensor_mor, unit_obj: int, assoc, lunit, runit,
                      name: str = "") -> FinMonoidalCategory:
    """Check every monoidal-category axiom exhaustively.

    Order of checks: shapes, functoriality of the tensor, endpoints and
    invertibility of the constraints, naturality, pentagon, triangle.
    """
    n, m = base.n_objects, base.n_morphisms
    to = tuple(tuple(int(v) for v in r) for r in tensor_obj)
    tm = tuple(tuple(int(v) for v in r) for r in tensor_mor)
    if len(to) != n or any(len(r) != n for r in to) or len(tm) != m or any(len(r) != m for r in tm):
        raise InputError("tensor tables have the wrong shape")
    a = tuple(tuple(tuple(int(v) for v in r) for r in p) for p in assoc)
    if len(a) != n or any(len(p) != n or any(len(r) != n for r in p) for p in a):
        raise InputError("associator table has the wrong shape")
    lu, ru = tuple(int(v) for v in lunit), tuple(int(v) for v in runit)
    if len(lu) != n or len(ru) != n or not 0 <= unit_obj < n:
        raise InputError("unitor tables have the wrong shape")
    src, tgt, comp, ident = base.src, base.tgt, base.comp, base.identity

    for f, g in product(range(m), repeat=2):
        h = tm[f][g]
        if not 0 <= h < m or src[h] != to[src[f]][src[g]] or tgt[h] != to[tgt[f]][tgt[g]]:
            raise LawViolation("tensor of morphisms has wrong endpoints", (f, g))
    for x, y in product(range(n), repeat=2):
        if tm[ident[x]][ident[y]] != ident[to[x][y]]:
            raise LawViolation("tensor preserves identities", (x, y))
    by_src = [[f for f in range(m) if src[f] == x] for x in range(n)]
    for f in range(m):
        for f2 in by_src[tgt[f]]:
            ff = comp[f2][f]
            for g in range(m):
                for g2 in by_src[tgt[g]]:
                    if tm[ff][comp[g2][g]] != comp[tm[f2][g2]][tm[f][g]]:
                        raise LawViolation("interchange law for the tensor", (f2, f, g2, g))

    u = unit_obj
    for x, y, z in product(range(n), repeat=3):
        c = a[x][y][z]
        if src[c] != to[to[x][y]][z] or tgt[c] != to[x][to[y][z]]:
            raise LawViolation("associator has wrong endpoints", (x, y, z))
        if base.inverse[c] < 0:
            raise LawViolation("associator not invertible", (x, y, z))
    for x in range(n):
        if src[lu[x]] != to[u][x] or tgt[lu[x]] != x or base.inverse[lu[x]] < 0:
            raise LawViolation("left unitor malformed", x)
        if src[ru[x]] != to[x][u] or tgt[ru[x]] != x or base.inverse[ru[x]] < 0:
            raise LawViolation("right unitor malformed", x)

    for f, g, h in product(range(m), repeat=3):
        left = comp[a[tgt[f]][tgt[g]][tgt[h]]][tm[tm[f][g]][h]]
        right = comp[tm[f][tm[g][h]]][a[src[f]][src[g]][src[h]]]
        if left != right:
            raise LawViolation("naturality of the associator", (f, g, h))
    iu = ident[u]
    for f in range(m):
        if comp[lu[tgt[f]]][tm[iu][f]] != comp[f][lu[src[f]]]:
            raise LawViolation("naturality of the left unitor", f)
        if comp[ru[tgt[f]]][tm[f][iu]] != comp[f][ru[src[f]]]:
            raise LawViolation("naturality of the right unitor", f)

    for w, x, y, z in product(range(n), repeat=4):
        left = comp[a[w][x][to[y][z]]][a[to[w][x]][y][z]]
        right = comp[tm[ident[w]][a[x][y][z]]][comp[a[w][to[x][y]][z]][tm[a[w][x][y]][ident[z]]]]
        if left != right:
            raise LawViolation("pentagon", (w, x, y, z))
    for x, y in product(range(n), repeat=2):
        if comp[tm[ident[x]][lu[y]]][a[x][u][y]] != tm[ru[x]][ident[y]]:
            raise LawViolation("triangle", (x, y))
    return FinMonoidalCategory(base, to, tm, unit_obj, a, lu, ru, name)


def remake(c: FinMonoidalCategory, **changes) -> FinMonoidalCategory:
    """Re-validate a copy of ``c`` with some tables replaced."""
    fields = dict(base=c.base, tensor_obj=c.tensor_obj, tensor_mor=c.tensor_mor, unit_obj=c.unit_obj,
                  assoc=c.assoc, lunit=c.lunit, runit=c.runit, name=c.name)
    fields.update(changes)
    return validate_monoidal(**fields)


def strict_tables(base: FinCategory, tensor_obj, unit_obj: int):
    """Identity associator and unitors, for strict structures."""
    n = base.n_objects
    ident = base.identity
    assoc = [[[ident[tensor_obj[tensor_obj[x][y]][z]] for z in range(n)] for y in range(n)] for x in range(n)]
    return assoc, [ident[x] for x in range(n)], [ident[x] for x in range(n)]


def product_monoidal(c: FinMonoidalCategory, d: FinMonoidalCategory) -> FinMonoidalCategory:
    """Componentwise monoidal structure on ``C x D``."""
    base = product_category(c.base, d.base)
    po = lambda x, y: pair_obj(d.base, x, y)
    pm = lambda f, g: pair_mor(d.base, f, g)
    nd, md = d.base.n_objects, d.base.n_morphisms
    n, m = base.n_objects, base.n_morphisms
    to = [[po(c.t(p // nd, q // nd), d.t(p % nd, q % nd)) for q in range(n)] for p in range(n)]
    tm = [[pm(c.tm(f // md, g // md), d.tm(f % md, g % md)) for g in range(m)] for f in range(m)]
    assoc = [[[pm(c.a(x // nd, y // nd, z // nd), d.a(x % nd, y % nd, z % nd)) for z in range(n)]
              for y in range(n)] for x in range(n)]
    lu = [pm(c.l(x // nd), d.l(x % nd)) for x in range(n)]
    ru = [pm(c.r(x // nd), d.r(x % nd)) for x in range(n)]
    return FinMonoidalCategory(base, tuple(tuple(r) for r in to), tuple(tuple(r) for r in tm),
                               po(c.unit_obj, d.unit_obj),
                               tuple(tuple(tuple(r) for r in p) for p in assoc), tuple(lu), tuple(ru),
                               f"{c.name}x{d.name}")


# -- monoidal functors ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MonoidalFunctorData:
    source: FinMonoidalCategory
    target: FinMonoidalCategory
    underlying: FinFunctor
    phi2: tuple[tuple[int, ...], ...]  # phi2[x][y]: F x ⊗ F y -> F(x ⊗ y)
    phi0: int                          # U' -> F U

    def obj(self, x: int) -> int:
        return self.underlying.obj[x]

    def mor(self, f: int) -> int:
        return self.underlying.mor[f]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonoidalFunctorData):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.underlying.obj == other.underlying.obj and self.underlying.mor == other.underlying.mor
                and self.phi2 == other.phi2 and self.phi0 == other.phi0)

    def __hash__(self) -> int:
        return hash((self.underlying.obj, self.underlying.mor, self.phi0))


def validate_monoidal_functor(source: FinMonoidalCategory, target: FinMonoidalCategory, obj: Sequence[int],
                              mor: Sequence[int], phi2, phi0: int) -> MonoidalFunctorData:
    F = validate_functor(source.base, target.base, obj, mor)
    n = source.base.n_objects
    p2 = tuple(tuple(int(v) for v in r) for r in phi2)
    if len(p2) != n or any(len(r) != n for r in p2):
        raise InputError("tensor constraint table has the wrong shape")
    T = target
    for x, y in product(range(n), repeat=2):
        c = p2[x][y]
        if T.src(c) != T.t(F.obj[x], F.obj[y]) or T.tgt(c) != F.obj[source.t(x, y)]:
            raise LawViolation("tensor constraint has wrong endpoints", (x, y))
        if not T.base.is_iso(c):
            raise LawViolation("tensor constraint not invertible", (x, y))
    if T.src(phi0) != T.unit_obj or T.tgt(phi0) != F.obj[source.unit_obj] or not T.base.is_iso(phi0):
        raise LawViolation("unit constraint malformed")
    S = source
    for f, g in product(S.morphisms, repeat=2):
        left = T.comp(F.mor[S.tm(f, g)], p2[S.src(f)][S.src(g)])
        right = T.comp(p2[S.tgt(f)][S.tgt(g)], T.tm(F.mor[f], F.mor[g]))
        if left != right:
            raise LawViolation("naturality of the tensor constraint", (f, g))
    for x, y, z in product(range(n), repeat=3):
        Fx, Fy, Fz = F.obj[x], F.obj[y], F.obj[z]
        left = T.then(T.tm(p2[x][y], T.id(Fz)), p2[S.t(x, y)][z], F.mor[S.a(x, y, z)])
        right = T.then(T.a(Fx, Fy, Fz), T.tm(T.id(Fx), p2[y][z]), p2[x][S.t(y, z)])
        if left != right:
            raise LawViolation("monoidal functor associativity", (x, y, z))
    u = S.unit_obj
    for x in range(n):
        Fx = F.obj[x]
        left = T.then(T.tm(phi0, T.id(Fx)), p2[u][x], F.mor[S.l(x)])
        if left != T.l(Fx):
            raise LawViolation("monoidal functor left unit", x)
        right = T.then(T.tm(T.id(Fx), phi0), p2[x][u], F.mor[S.r(x)])
        if right != T.r(Fx):
            raise LawViolation("monoidal functor right unit", x)
    return MonoidalFunctorData(source, target, F, p2, int(phi0))


def identity_monoidal_functor(c: FinMonoidalCategory) -> MonoidalFunctorData:
    n = c.base.n_objects
    return MonoidalFunctorData(c, c, identity_functor(c.base),
                               tuple(tuple(c.id(c.t(x, y)) for y in range(n)) for x in range(n)), c.id(c.unit_obj))


def compose_monoidal_functors(g: MonoidalFunctorData, f: MonoidalFunctorData) -> MonoidalFunctorData:
    """``g`` after ``f`` with the usual composite constraints."""
    if f.target != g.source:
        raise InputError("monoidal functors are not composable")
    S, V = f.source, g.target
    n = S.base.n_objects
    obj = tuple(g.obj(f.obj(x)) for x in S.objects)
    mor = tuple(g.mor(f.mor(h)) for h in S.morphisms)
    p2 = tuple(tuple(V.then(g.phi2[f.obj(x)][f.obj(y)], g.mor(f.phi2[x][y])) for y in range(n)) for x in range(n))
    p0 = V.then(g.phi0, g.mor(f.phi0))
    return MonoidalFunctorData(S, V, FinFunctor(S.base, V.base, obj, mor), p2, p0)


@dataclass(frozen=True, eq=False)
class MonoidalTransformationData:
    source: MonoidalFunctorData
    target: MonoidalFunctorData
    underlying: FinNatTransform

    @property
    def components(self) -> tuple[int, ...]:
        return self.underlying.components

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonoidalTransformationData):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)


def validate_monoidal_transformation(source: MonoidalFunctorData, target: MonoidalFunctorData,
                                     components: Sequence[int]) -> MonoidalTransformationData:
    nat = validate_nat_transform(source.underlying, target.underlying, components)
    S, T = source.source, source.target
    th = nat.components
    for x, y in product(S.objects, repeat=2):
        left = T.then(source.phi2[x][y], th[S.t(x, y)])
        right = T.then(T.tm(th[x], th[y]), target.phi2[x][y])
        if left != right:
            raise LawViolation("monoidality of transformation", (x, y))
    if T.then(source.phi0, th[S.unit_obj]) != target.phi0:
        raise LawViolation("unit monoidality of transformation")
    return MonoidalTransformationData(source, target, nat)


def identity_monoidal_transformation(f: MonoidalFunctorData) -> MonoidalTransformationData:
    T = f.target
    return MonoidalTransformationData(f, f, FinNatTransform(f.underlying, f.underlying,
                                                            tuple(T.id(f.obj(x)) for x in f.source.objects)))


def enumerate_monoidal_transformations(source: MonoidalFunctorData,
                                       target: MonoidalFunctorData) -> list[MonoidalTransformationData]:
    """Every monoidal transformation ``source => target``, by exhaustive search."""
    S, T = source.source, source.target
    choices = [T.base.hom(source.obj(x), target.obj(x)) for x in S.objects]
    out = []
    for comps in product(*choices):
        try:
            out.append(validate_monoidal_transformation(source, target, comps))
        except LawViolation:
            continue
    return out
