"""Dual pairs, braidings and the product on endomorphisms of the unit."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import InputError, LawViolation
from .category import FinMonoidalCategory, MonoidalFunctorData
from .expr import (Assoc, Gen, Id, Inv, LUnit, MGen, RUnit, Tens, Tensor, Unit, eval_morphism_expr, seq,
                   single_sort_model)


# -- dual pairs ----------------------------------------------------------------------


@dataclass(frozen=True)
class DualPair:
    """Objects ``x`` and ``x_dual`` with ``eps: x ⊗ x_dual -> U`` and ``eta: U -> x_dual ⊗ x``."""
    x: int
    x_dual: int
    eps: int
    eta: int


X, XD = Gen("X"), Gen("X*")


def zigzag_exprs(sort: str = "B", x=X, xd=XD, eps_name: str = "eps", eta_name: str = "eta"):
    """The two zigzag composites as expressions over generator slots.

    First:  X -> XU -> X(X*X) -> (XX*)X -> UX -> X
    Second: X* -> UX* -> (X*X)X* -> X*(XX*) -> X*U -> X*
    """
    u = Unit(sort)
    eps = MGen(eps_name, Tensor(x, xd), u)
    eta = MGen(eta_name, u, Tensor(xd, x))
    first = seq(Inv(RUnit(x)), Tens(Id(x), eta), Inv(Assoc(x, xd, x)), Tens(eps, Id(x)), LUnit(x))
    second = seq(Inv(LUnit(xd)), Tens(eta, Id(xd)), Assoc(xd, x, xd), Tens(Id(xd), eps), RUnit(xd))
    return first, second


_ZIGZAGS = zigzag_exprs()


def validate_dual_pair(p: DualPair, c: FinMonoidalCategory) -> DualPair:
    if not (0 <= p.x < c.base.n_objects and 0 <= p.x_dual < c.base.n_objects):
        raise InputError("dual pair objects out of range")
    u = c.unit_obj
    if c.src(p.eps) != c.t(p.x, p.x_dual) or c.tgt(p.eps) != u:
        raise LawViolation("epsilon has wrong endpoints")
    if c.src(p.eta) != u or c.tgt(p.eta) != c.t(p.x_dual, p.x):
        raise LawViolation("eta has wrong endpoints")
    model = single_sort_model(c, {"X": p.x, "X*": p.x_dual}, {"eps": p.eps, "eta": p.eta})
    first, second = _ZIGZAGS
    v1 = eval_morphism_expr(first, model)
    if v1 != c.id(p.x):
        raise LawViolation("first zigzag", (p.x, p.x_dual), f"composite is morphism {v1}, not the identity")
    v2 = eval_morphism_expr(second, model)
    if v2 != c.id(p.x_dual):
        raise LawViolation("second zigzag", (p.x, p.x_dual), f"composite is morphism {v2}, not the identity")
    return p


def unit_dual_pair(c: FinMonoidalCategory) -> DualPair:
    """The pair (U, U, l, l^-1)."""
    u = c.unit_obj
    return DualPair(u, u, c.l(u), c.inv(c.l(u)))


def is_invertible_pair(p: DualPair, c: FinMonoidalCategory) -> bool:
    return c.base.is_iso(p.eps) and c.base.is_iso(p.eta)


def solve_eta(c: FinMonoidalCategory, x: int, x_dual: int, eps: int) -> int:
    """The unique ``eta`` completing ``(x, x_dual, eps)`` to a dual pair."""
    found = []
    for eta in c.base.hom(c.unit_obj, c.t(x_dual, x)):
        try:
            validate_dual_pair(DualPair(x, x_dual, eps, eta), c)
        except LawViolation:
            continue
        found.append(eta)
    if len(found) != 1:
        raise LawViolation("no unique unit for the given counit", (x, x_dual, eps), f"{len(found)} candidates")
    return found[0]


# -- braidings ----------------------------------------------------------------------


@dataclass(frozen=True)
class BraidingData:
    c: tuple[tuple[int, ...], ...]

    def __getitem__(self, xy: tuple[int, int]) -> int:
        return self.c[xy[0]][xy[1]]


def validate_braiding(b: BraidingData, cat: FinMonoidalCategory) -> BraidingData:
    n = cat.base.n_objects
    if len(b.c) != n or any(len(r) != n for r in b.c):
        raise InputError("braiding table has the wrong shape")
    C = cat
    for x, y in product(range(n), repeat=2):
        f = b.c[x][y]
        if C.src(f) != C.t(x, y) or C.tgt(f) != C.t(y, x):
            raise LawViolation("braiding component has wrong endpoints", (x, y))
        if not C.base.is_iso(f):
            raise LawViolation("braiding component not invertible", (x, y))
    for f, g in product(C.morphisms, repeat=2):
        left = C.comp(b.c[C.tgt(f)][C.tgt(g)], C.tm(f, g))
        right = C.comp(C.tm(g, f), b.c[C.src(f)][C.src(g)])
        if left != right:
            raise LawViolation("naturality of the braiding", (f, g))
    for x, y, z in product(range(n), repeat=3):
        # c_{x, yz}
        left = C.then(C.a(x, y, z), b.c[x][C.t(y, z)], C.a(y, z, x))
        right = C.then(C.tm(b.c[x][y], C.id(z)), C.a(y, x, z), C.tm(C.id(y), b.c[x][z]))
        if left != right:
            raise LawViolation("first hexagon", (x, y, z))
        # c_{xy, z}
        left = C.then(C.inv(C.a(x, y, z)), b.c[C.t(x, y)][z], C.inv(C.a(z, x, y)))
        right = C.then(C.tm(C.id(x), b.c[y][z]), C.inv(C.a(x, z, y)), C.tm(b.c[x][z], C.id(y)))
        if left != right:
            raise LawViolation("second hexagon", (x, y, z))
    return b


def check_symmetry(b: BraidingData, cat: FinMonoidalCategory) -> tuple[bool, tuple[int, int] | None]:
    """``(True, None)`` if symmetric, else ``(False, first failing pair)``."""
    for x, y in product(cat.objects, repeat=2):
        if cat.comp(b.c[y][x], b.c[x][y]) != cat.id(cat.t(x, y)):
            return False, (x, y)
    return True, None


def identity_braiding(cat: FinMonoidalCategory) -> BraidingData:
    """Identity components; only meaningful when ``x ⊗ y = y ⊗ x`` strictly."""
    n = cat.base.n_objects
    return BraidingData(tuple(tuple(cat.id(cat.t(x, y)) for y in range(n)) for x in range(n)))


@dataclass(frozen=True, eq=False)
class BraidedCategory:
    cat: FinMonoidalCategory
    braiding: BraidingData
    name: str = ""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BraidedCategory):
            return NotImplemented
        return self.cat == other.cat and self.braiding == other.braiding

    def __hash__(self) -> int:
        return hash(self.cat)


def braided(cat: FinMonoidalCategory, braiding: BraidingData, name: str = "") -> BraidedCategory:
    return BraidedCategory(cat, validate_braiding(braiding, cat), name or cat.name)


@dataclass(frozen=True, eq=False)
class BraidedFunctor:
    source: BraidedCategory
    target: BraidedCategory
    functor: MonoidalFunctorData

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BraidedFunctor):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.functor == other.functor

    def __hash__(self) -> int:
        return hash(self.functor)


def braided_compatibility_witness(F: MonoidalFunctorData, bs: BraidingData, bt: BraidingData):
    """First pair where ``F(c) ∘ φ₂ = φ₂ ∘ c'`` fails, or ``None``."""
    S, T = F.source, F.target
    for x, y in product(S.objects, repeat=2):
        left = T.comp(F.mor(bs.c[x][y]), F.phi2[x][y])
        right = T.comp(F.phi2[y][x], bt.c[F.obj(x)][F.obj(y)])
        if left != right:
            return (x, y)
    return None


def validate_braided_functor(source: BraidedCategory, target: BraidedCategory,
                             F: MonoidalFunctorData) -> BraidedFunctor:
    if F.source != source.cat or F.target != target.cat:
        raise InputError("functor does not match the braided categories")
    w = braided_compatibility_witness(F, source.braiding, target.braiding)
    if w is not None:
        raise LawViolation("braided functor compatibility", w)
    return BraidedFunctor(source, target, F)


# -- the product on End(U) -------------------------------------------------------------


def unit_endo_product(beta: int, alpha: int, c: FinMonoidalCategory) -> int:
    """``r_U ∘ (β ⊗ α) ∘ l_U^-1`` for endomorphisms of the unit."""
    u = c.unit_obj
    for f in (beta, alpha):
        if c.src(f) != u or c.tgt(f) != u:
            raise InputError(f"morphism {f} is not an endomorphism of the unit")
    return c.then(c.inv(c.l(u)), c.tm(beta, alpha), c.r(u))


def check_unit_endomorphisms(c: FinMonoidalCategory) -> None:
    """Every pair in End(U): ⊙ agrees with composition both ways round."""
    ends = c.end(c.unit_obj)
    for beta, alpha in product(ends, repeat=2):
        v = unit_endo_product(beta, alpha, c)
        if v != c.comp(beta, alpha) or v != c.comp(alpha, beta):
            raise LawViolation("product on End(U) differs from composition", (beta, alpha))
        if v != unit_endo_product(alpha, beta, c):
            raise LawViolation("product on End(U) not commutative", (beta, alpha))
