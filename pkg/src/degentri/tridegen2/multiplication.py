"""Multiplications on monoidal categories, the braidings they induce, and multiplicative functors.

A multiplication on ``M`` is a monoidal functor ``phi: M x M -> M`` with
invertible monoidal transformations ``rho: phi(-, U) => id`` and
``lam: phi(U, -) => id``.  A doubly degenerate structure carries one with
``phi(X, Y) = R ((X ⊠ Y) L*)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import InputError, LawViolation
from ..fincat import pair_mor, pair_obj
from ..monoidal.category import (FinMonoidalCategory, MonoidalFunctorData, MonoidalTransformationData,
                                 compose_monoidal_functors, identity_monoidal_functor, product_monoidal,
                                 validate_monoidal_functor, validate_monoidal_transformation)
from ..monoidal.expr import Apply, Fun, Gen, Id, Inv, MGen, Model, Path, Phi0, Phi2, Tens, Tensor, Unit, Evaluator
from ..monoidal.structures import BraidedCategory, BraidedFunctor, BraidingData, validate_braided_functor, \
    validate_braiding
from .data import DoublyDegenData, box_model


@dataclass(frozen=True, eq=False)
class Multiplication:
    cat: FinMonoidalCategory
    phi: MonoidalFunctorData
    rho: MonoidalTransformationData
    lam: MonoidalTransformationData

    def obj(self, x: int, y: int) -> int:
        return self.phi.obj(pair_obj(self.cat.base, x, y))

    def mor(self, f: int, g: int) -> int:
        return self.phi.mor(pair_mor(self.cat.base, f, g))

    def phi2(self, p: tuple[int, int], q: tuple[int, int]) -> int:
        d = self.cat.base
        return self.phi.phi2[pair_obj(d, *p)][pair_obj(d, *q)]


def unit_slice(M: FinMonoidalCategory, side: str) -> MonoidalFunctorData:
    """``x -> (x, U)`` for ``side="right"``, ``x -> (U, x)`` for ``side="left"``."""
    MM = product_monoidal(M, M)
    d, u = M.base, M.unit_obj
    if side == "right":
        po, pm = (lambda x: pair_obj(d, x, u)), (lambda f: pair_mor(d, f, M.id(u)))
        p2 = lambda x, y: pair_mor(d, M.id(M.t(x, y)), M.l(u))
    elif side == "left":
        po, pm = (lambda x: pair_obj(d, u, x)), (lambda f: pair_mor(d, M.id(u), f))
        p2 = lambda x, y: pair_mor(d, M.l(u), M.id(M.t(x, y)))
    else:
        raise InputError(f"unknown side {side!r}")
    n = M.base.n_objects
    return validate_monoidal_functor(M, MM, [po(x) for x in M.objects], [pm(f) for f in M.morphisms],
                                     [[p2(x, y) for y in range(n)] for x in range(n)], MM.id(MM.unit_obj))


def validate_multiplication(M: FinMonoidalCategory, phi: MonoidalFunctorData, rho, lam) -> Multiplication:
    if phi.source != product_monoidal(M, M) or phi.target != M:
        raise InputError("multiplication must be a functor M x M -> M")
    ident = identity_monoidal_functor(M)
    out = []
    for side, comps in (("right", rho), ("left", lam)):
        slice_ = compose_monoidal_functors(phi, unit_slice(M, side))
        try:
            t = validate_monoidal_transformation(slice_, ident, list(comps))
        except LawViolation as err:
            raise LawViolation(f"{'rho' if side == 'right' else 'lam'}: {err.law}", err.witness, err.detail) from None
        if not all(M.base.is_iso(c) for c in t.components):
            raise LawViolation(f"{'rho' if side == 'right' else 'lam'} not invertible")
        out.append(t)
    return Multiplication(M, phi, *out)


# -- from doubly degenerate data ---------------------------------------------------------------

_R, _D, _I = Gen("R"), Gen("D"), Gen("I")
_X, _Y, _X2, _Y2 = Gen("X"), Gen("Y"), Gen("X2"), Gen("Y2")


def _box(x, y):
    return Apply("box", [x, y])


def _phi_word(x, y):
    return Tensor(_R, Tensor(_box(x, y), _D))


def build_multiplication(dd: DoublyDegenData) -> Multiplication:
    """``phi(X, Y) = R ((X ⊠ Y) L*)``; needs ``L* = R*`` as objects so ``eta_R`` can cancel ``L* R``."""
    B = dd.cat
    if dd.L.pair.x_dual != dd.R.pair.x_dual:
        raise InputError("the multiplication is built only when L* and R* are the same object")
    base = Model({"B": B}, {"R": dd.R.pair.x, "D": dd.R.pair.x_dual, "I": dd.monoid.obj},
                 {"epsR": dd.R.pair.eps, "etaR": dd.R.pair.eta, "unitI": dd.monoid.unit},
                 functors={"box": box_model(B, dd.box)})
    eps = MGen("epsR", Tensor(_R, _D), Unit())
    eta = MGen("etaR", Unit(), Tensor(_D, _R))
    unit_i = MGen("unitI", Unit(), _I)
    MM = product_monoidal(B, B)
    d = B.base
    nd = d.n_objects
    pairs = [divmod(p, nd) for p in MM.objects]

    def ev(e, **binds):
        return Evaluator(base.with_objects(**binds)).mor(e)

    obj = [Evaluator(base.with_objects(X=x, Y=y)).obj(_phi_word(_X, _Y)) for x, y in pairs]
    mor = []
    for h in MM.morphisms:
        f, g = divmod(h, d.n_morphisms)
        mor.append(B.tm(B.id(dd.R.pair.x), B.tm(dd.box_mor(f, g), B.id(dd.R.pair.x_dual))))

    cancel = Path(Tensor(_phi_word(_X, _Y), _phi_word(_X2, _Y2)))
    cancel.step(Tens(Id(_R), Tens(Id(_box(_X, _Y)), Tens(Inv(eta), Tens(Id(_box(_X2, _Y2)), Id(_D))))))
    cancel.step(Tens(Id(_R), Tens(Phi2("box", [_X, _Y], [_X2, _Y2]), Id(_D))))
    phi2_expr = cancel.build(_phi_word(Tensor(_X, _X2), Tensor(_Y, _Y2)))
    phi2 = [[ev(phi2_expr, X=x, Y=y, X2=x2, Y2=y2) for x2, y2 in pairs] for x, y in pairs]

    unit = Path(Unit()).step(Inv(eps)).step(Tens(Id(_R), Tens(Phi0("box", ["B", "B"]), Id(_D))))
    phi0 = ev(unit.build(_phi_word(Unit(), Unit())))
    phi = validate_monoidal_functor(MM, B, obj, mor, phi2, phi0)

    rho, lam = [], []
    for x in B.objects:
        fam_r = MGen("famR", Tensor(_R, _box(_X, _I)), Tensor(_X, _R))
        p = Path(_phi_word(_X, Unit())).step(Tens(Id(_R), Tens(Fun("box", [Id(_X), unit_i]), Id(_D))))
        p.step(Tens(fam_r, Id(_D))).step(Tens(Id(_X), eps))
        rho.append(Evaluator(Model(base.cats, {**base.objects, "X": x}, {**base.morphisms, "famR": dd.R.fam[(x,)]},
                                   functors=base.functors)).mor(p.build(_X)))
        fam_l = MGen("famL*", Tensor(_D, _X), Tensor(_box(_I, _X), _D))
        q = Path(_phi_word(Unit(), _X)).step(Tens(Id(_R), Tens(Fun("box", [unit_i, Id(_X)]), Id(_D))))
        q.step(Tens(Id(_R), Inv(fam_l))).step(Tens(eps, Id(_X)))
        lam.append(Evaluator(Model(base.cats, {**base.objects, "X": x}, {**base.morphisms, "famL*": dd.L.fam_dual[(x,)]},
                                   functors=base.functors)).mor(q.build(_X)))
    return validate_multiplication(B, phi, rho, lam)


# -- the induced braiding -------------------------------------------------------------------------


def braiding_component(mult: Multiplication, a: int, b: int) -> int:
    M = mult.cat
    u = M.unit_obj
    rho, lam = mult.rho.components, mult.lam.components
    return M.then(M.tm(M.inv(lam[a]), M.inv(rho[b])),
                  mult.phi2((u, a), (b, u)),
                  mult.mor(M.l(b), M.r(a)),
                  mult.mor(M.inv(M.r(b)), M.inv(M.l(a))),
                  M.inv(mult.phi2((b, u), (u, a))),
                  M.tm(rho[b], lam[a]))


def derive_braiding(M: FinMonoidalCategory, mult: Multiplication) -> BraidingData:
    if mult.cat != M:
        raise InputError("multiplication lives on a different category")
    n = M.base.n_objects
    b = BraidingData(tuple(tuple(braiding_component(mult, x, y) for y in range(n)) for x in range(n)))
    return validate_braiding(b, M)


def braided_of_dd(dd: DoublyDegenData) -> BraidedCategory:
    return BraidedCategory(dd.cat, derive_braiding(dd.cat, build_multiplication(dd)), f"U({dd.name})")


# -- multiplicative functors ----------------------------------------------------------------------


def product_functor(F: MonoidalFunctorData, G: MonoidalFunctorData) -> MonoidalFunctorData:
    S = product_monoidal(F.source, G.source)
    T = product_monoidal(F.target, G.target)
    ds, dt = G.source.base, G.target.base
    ns, ms = ds.n_objects, ds.n_morphisms
    obj = [pair_obj(dt, F.obj(p // ns), G.obj(p % ns)) for p in S.objects]
    mor = [pair_mor(dt, F.mor(h // ms), G.mor(h % ms)) for h in S.morphisms]
    p2 = [[pair_mor(dt, F.phi2[p // ns][q // ns], G.phi2[p % ns][q % ns]) for q in S.objects] for p in S.objects]
    return validate_monoidal_functor(S, T, obj, mor, p2, pair_mor(dt, F.phi0, G.phi0))


@dataclass(frozen=True, eq=False)
class MultiplicativeFunctor:
    functor: MonoidalFunctorData
    source: Multiplication
    target: Multiplication
    chi: MonoidalTransformationData     # psi (F x F) => F phi


def unit_axiom_witness(F: MonoidalFunctorData, phi: Multiplication, psi: Multiplication, chi_comps):
    """First failure of ``rho'_{Fx} = F(rho_x) chi_{x,U} psi(1, F0)`` or its left twin, else ``None``."""
    N = F.target
    d = F.source.base
    u = F.source.unit_obj
    for x in F.source.objects:
        Fx = F.obj(x)
        right = N.then(psi.mor(N.id(Fx), F.phi0), chi_comps[pair_obj(d, x, u)], F.mor(phi.rho.components[x]))
        if right != psi.rho.components[Fx]:
            return ("right unit", x)
        left = N.then(psi.mor(F.phi0, N.id(Fx)), chi_comps[pair_obj(d, u, x)], F.mor(phi.lam.components[x]))
        if left != psi.lam.components[Fx]:
            return ("left unit", x)
    return None


def validate_multiplicative(F: MonoidalFunctorData, phi: Multiplication, psi: Multiplication,
                            chi_comps) -> MultiplicativeFunctor:
    if F.source != phi.cat or F.target != psi.cat:
        raise InputError("functor does not join the two multiplications")
    src = compose_monoidal_functors(psi.phi, product_functor(F, F))
    tgt = compose_monoidal_functors(F, phi.phi)
    chi = validate_monoidal_transformation(src, tgt, list(chi_comps))
    if not all(F.target.base.is_iso(c) for c in chi.components):
        raise LawViolation("chi not invertible")
    w = unit_axiom_witness(F, phi, psi, chi.components)
    if w is not None:
        raise LawViolation(f"multiplicative functor {w[0]} axiom", w[1])
    return MultiplicativeFunctor(F, phi, psi, chi)


def multiplicative_of_dd_functor(Fd) -> MultiplicativeFunctor:
    """``chi_{X,Y}``: unmarked isos around the chi family, then ``F`` of the coherence into ``phi(X, Y)``.

    Defined when every block object of both structures and the chi pair are the unit.
    """
    S, T = Fd.source, Fd.target
    if not (S.is_unit_object() and T.is_unit_object() and Fd.chi.pair.x == T.cat.unit_obj):
        raise InputError("multiplicative structure is built only for unit-object structures")
    F = Fd.functor
    M, N = S.cat, T.cat
    phi, psi = build_multiplication(S), build_multiplication(T)
    uM, uN = M.unit_obj, N.unit_obj
    chi = []
    for x, y in product(M.objects, repeat=2):
        bxy = S.box_obj(x, y)
        b = T.box_obj(F.obj(x), F.obj(y))
        # psi(Fx, Fy) = U ((Fx ⊠ Fy) U) -> Fx ⊠ Fy
        to_box = N.then(N.tm(N.id(uN), N.r(b)), N.l(b))
        # the chi family, with chi = U: U (Fx ⊠ Fy) -> F(x ⊠ y) U
        step = N.then(N.inv(N.l(b)), Fd.chi.fam[(x, y)], N.r(F.obj(bxy)))
        into = F.mor(M.inv(M.then(M.tm(M.id(uM), M.r(bxy)), M.l(bxy))))
        chi.append(N.then(to_box, step, into))
    return validate_multiplicative(F, phi, psi, chi)


def braided_functor_of_multiplicative(mf: MultiplicativeFunctor) -> BraidedFunctor:
    F = mf.functor
    src = BraidedCategory(F.source, derive_braiding(F.source, mf.source))
    tgt = BraidedCategory(F.target, derive_braiding(F.target, mf.target))
    return validate_braided_functor(src, tgt, F)
