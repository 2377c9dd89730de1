"""Triply degenerate tricategories as commutative monoids with distinguished elements.

Every formula is evaluated in the base monoid: products are the monoid
operation, powers are iterated products and inverses are monoid inverses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import InputError, InternalConsistencyError, LawViolation
from .monoid import (FiniteCommutativeMonoid, MonoidHom, enumerate_cmonoids, enumerate_homs, identity_hom,
                     validate_hom)

DISTINGUISHED = ("d", "m", "a", "l", "r", "u", "pi", "mu")
HOM_CAP = 4


def _word(M: FiniteCommutativeMonoid, *factors: tuple[int, int]) -> int:
    """Product of ``x ** k`` over ``(x, k)`` pairs."""
    return M.prod(*(M.power(x, k) for x, k in factors))


def _require_invertible(M: FiniteCommutativeMonoid, named: dict[str, int]) -> None:
    for name, x in named.items():
        if not 0 <= x < M.order:
            raise InputError(f"{name} = {x} is not an element index")
        if not M.is_invertible(x):
            raise LawViolation("distinguished element not invertible", name, f"{name} = {x}")


# -- tricategories -------------------------------------------------------------------


@dataclass(frozen=True)
class TriplyDegenTricat:
    base: FiniteCommutativeMonoid
    d: int
    m: int
    a: int
    l: int
    r: int
    u: int
    pi: int
    mu: int
    lam: int
    rho: int

    def elements(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in DISTINGUISHED}

    def raw(self) -> dict:
        out = {"monoid": self.base.raw()}
        out.update(self.elements())
        return out


def lambda_rho_formula(M: FiniteCommutativeMonoid, d: int, m: int, pi: int) -> int:
    return _word(M, (pi, -1), (d, 2), (m, 4))


def make_td3(base: FiniteCommutativeMonoid, d: int, m: int, a: int, l: int, r: int, u: int, pi: int,
             mu: int) -> TriplyDegenTricat:
    named = dict(d=d, m=m, a=a, l=l, r=r, u=u, pi=pi, mu=mu)
    _require_invertible(base, named)
    lam = lambda_rho_formula(base, d, m, pi)
    return TriplyDegenTricat(base, **named, lam=lam, rho=lam)


def unit_td3(base: FiniteCommutativeMonoid) -> TriplyDegenTricat:
    e = base.unit
    return make_td3(base, e, e, e, e, e, e, e, e)


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failures(self) -> list[str]:
        return [name for name, ok in self.checks if not ok]


def axiom_oracle_td3(t: TriplyDegenTricat) -> AxiomReport:
    """Re-evaluate the reduced tricategory axioms from the stored elements.

    The first axiom has no content; the second and third read
    ``λ π = d² m⁴`` and ``ρ π = d² m⁴``.
    """
    M = t.base
    rhs = _word(M, (t.d, 2), (t.m, 4))
    invertible = all(M.is_invertible(x) for x in (*t.elements().values(), t.lam, t.rho))
    return AxiomReport((("distinguished elements invertible", invertible), ("first axiom (vacuous)", True),
                        ("second axiom", M.mul(t.lam, t.pi) == rhs), ("third axiom", M.mul(t.rho, t.pi) == rhs)))


def adjoint_equiv_dd_bicat(XB: FiniteCommutativeMonoid, eta: int, eps: int) -> bool:
    """An adjoint equivalence in a doubly degenerate bicategory is an invertible element."""
    return XB.is_invertible(eta) and eps == XB.inv(eta)


# -- functors ----------------------------------------------------------------------


@dataclass(frozen=True)
class TD3Functor:
    source: TriplyDegenTricat
    target: TriplyDegenTricat
    hom: MonoidHom
    m: int
    chi: int
    iota: int
    gamma: int
    omega: int
    delta: int

    def __call__(self, x: int) -> int:
        return self.hom(x)

    @property
    def chi_naturality(self) -> int:
        T, F = self.target.base, self.hom
        return T.mul(F(self.source.m), T.inv(T.mul(self.target.m, self.m)))

    @property
    def iota_naturality(self) -> int:
        return self.m

    def data(self) -> tuple[int, int, int, int]:
        return (self.m, self.chi, self.iota, self.gamma)

    def raw(self) -> dict:
        return {"hom": list(self.hom.map), "m": self.m, "chi": self.chi, "iota": self.iota, "gamma": self.gamma,
                "omega": self.omega, "delta": self.delta}


def _functor_common(S: TriplyDegenTricat, T: TriplyDegenTricat, hom: MonoidHom) -> int:
    """``F(m_S)² m_T⁻² F(d_S)² d_T⁻²``, shared by both functor axioms."""
    M = T.base
    return _word(M, (hom(S.m), 2), (T.m, -2), (hom(S.d), 2), (T.d, -2))


def derive_omega(S: TriplyDegenTricat, T: TriplyDegenTricat, hom: MonoidHom) -> int:
    M = T.base
    return M.mul(hom(S.pi), M.inv(M.mul(T.pi, _functor_common(S, T, hom))))


def derive_delta(S: TriplyDegenTricat, T: TriplyDegenTricat, hom: MonoidHom, omega: int, gamma: int) -> int:
    M = T.base
    return M.mul(hom(S.mu), M.inv(M.prod(omega, gamma, T.mu, _functor_common(S, T, hom))))


def make_td3_functor(S: TriplyDegenTricat, T: TriplyDegenTricat, hom: MonoidHom | Sequence[int], m: int,
                     chi: int, iota: int, gamma: int) -> TD3Functor:
    if not isinstance(hom, MonoidHom):
        hom = validate_hom(S.base, T.base, hom)
    elif hom.source != S.base or hom.target != T.base:
        raise InputError("homomorphism does not match the tricategories")
    _require_invertible(T.base, dict(m=m, chi=chi, iota=iota, gamma=gamma))
    omega = derive_omega(S, T, hom)
    delta = derive_delta(S, T, hom, omega, gamma)
    return TD3Functor(S, T, hom, m, chi, iota, gamma, omega, delta)


def functor_axioms(F: TD3Functor) -> AxiomReport:
    """Both reduced functor axioms, evaluated directly."""
    S, T, M = F.source, F.target, F.target.base
    common = _word(M, (F(S.m), 2), (T.m, -2), (F(S.d), 2), (T.d, -2))
    first = M.prod(F.omega, T.pi, common) == F(S.pi)
    second = M.prod(F.omega, F.delta, F.gamma, T.mu, common) == F(S.mu)
    return AxiomReport((("first functor axiom", first), ("second functor axiom", second)))


def identity_td3_functor(T: TriplyDegenTricat) -> TD3Functor:
    """Identity homomorphism with all-unit data."""
    e = T.base.unit
    return make_td3_functor(T, T, identity_hom(T.base), e, e, e, e)


def compose_td3_functors(G: TD3Functor, F: TD3Functor) -> TD3Functor:
    """``G`` after ``F``."""
    if F.target != G.source:
        raise InputError("functors are not composable")
    Y, Z, M = F.target, G.target, G.target.base
    hom = G.hom.compose(F.hom)
    Ym = Y.base
    m = M.mul(G.m, G(F.m))
    chi = _word(M, (G.chi, 1), (G(Ym.mul(F.chi, Y.d)), 1), (Z.d, -2))
    iota = _word(M, (G.iota, 1), (G(Ym.mul(F.iota, Y.d)), 1), (Z.d, -2))
    gamma = _word(M, (Z.d, -2), (Z.m, 2), (G.m, 2), (G.gamma, 1), (G(Ym.prod(F.gamma, Y.d, Y.m)), 1))
    return make_td3_functor(F.source, Z, hom, m, chi, iota, gamma)


# -- transformations --------------------------------------------------------------


@dataclass(frozen=True)
class TD3Transformation:
    source: TD3Functor
    target: TD3Functor
    Pi: int
    alpha: int
    M: int

    @property
    def naturality(self) -> int:
        T = self.source.target.base
        return T.mul(T.inv(self.source.m), self.target.m)

    def raw(self) -> dict:
        return {"Pi": self.Pi, "alpha": self.alpha, "M": self.M}


def derive_M(F: TD3Functor, G: TD3Functor, Pi: int) -> int:
    T = F.target
    X = T.base
    return X.mul(X.prod(Pi, T.mu, T.l, F.gamma), X.inv(_word(X, (T.m, 4), (T.d, 2), (T.a, -1), (G.gamma, 1))))


def transformation_axioms(t: TD3Transformation) -> AxiomReport:
    F, G = t.source, t.target
    T = F.target
    X = T.base
    second = X.prod(t.Pi, T.mu, T.l, F.gamma) == X.prod(t.M, X.power(T.m, 4), X.power(T.d, 2), X.inv(T.a), G.gamma)
    rhs = _word(X, (T.a, -1), (T.l, -1), (T.d, 2), (T.m, 4), (T.mu, -1), (t.M, 1), (G.delta, 1))
    third = X.mul(t.Pi, F.delta) == rhs
    return AxiomReport((("first transformation axiom", F.m == G.m), ("second transformation axiom", second),
                        ("third transformation axiom", third)))


def _check_parallel(F: TD3Functor, G: TD3Functor) -> None:
    if F.source != G.source or F.target != G.target:
        raise InputError("functors are not parallel")
    if F.hom.map != G.hom.map or F.m != G.m:
        raise LawViolation("first transformation axiom", None,
                           "a transformation requires equal homomorphisms and equal m components")


def make_td3_transformation(F: TD3Functor, G: TD3Functor, Pi: int, alpha: int) -> TD3Transformation:
    """Derive ``M`` from ``Π`` and verify all three axioms.

    The third axiom is not implied by the other two: with ``M`` substituted
    it reduces to ``γ_F² = γ_G²``, so data violating that is rejected.
    """
    _check_parallel(F, G)
    _require_invertible(F.target.base, dict(Pi=Pi, alpha=alpha))
    t = TD3Transformation(F, G, Pi, alpha, derive_M(F, G, Pi))
    rep = transformation_axioms(t)
    if not rep.passed:
        raise LawViolation(rep.failures()[0], (Pi, alpha))
    return t


def transformation_exists(F: TD3Functor, G: TD3Functor) -> bool:
    X = F.target.base
    return (F.source == G.source and F.target == G.target and F.hom.map == G.hom.map and F.m == G.m
            and X.power(F.gamma, 2) == X.power(G.gamma, 2))


def compose_td3_transformations(beta: TD3Transformation, alpha: TD3Transformation) -> TD3Transformation:
    """Vertical composite ``β ∘ α``: componentwise product of ``(Π, α_T)``."""
    if alpha.target != beta.source:
        raise InputError("transformations are not composable")
    X = alpha.source.target.base
    return make_td3_transformation(alpha.source, beta.target, X.mul(beta.Pi, alpha.Pi), X.mul(beta.alpha, alpha.alpha))


def unit_td3_transformation(F: TD3Functor) -> TD3Transformation:
    """``Π = 1`` and ``α_T = d⁻¹ m``."""
    T = F.target
    X = T.base
    return make_td3_transformation(F, F, X.unit, X.mul(X.inv(T.d), T.m))


# -- modifications and perturbations --------------------------------------------------


@dataclass(frozen=True)
class TD3Modification:
    source: TD3Transformation
    target: TD3Transformation
    m: int


@dataclass(frozen=True)
class TD3Perturbation:
    source: TD3Modification
    target: TD3Modification
    sigma: int


def _check_parallel_transformations(alpha: TD3Transformation, beta: TD3Transformation) -> None:
    if alpha.source != beta.source or alpha.target != beta.target:
        raise InputError("transformations are not parallel")


def modification_solutions(alpha: TD3Transformation, beta: TD3Transformation) -> list[int]:
    """Invertible ``m`` with ``m² Π G(d_S) = Π F(d_S) m``."""
    _check_parallel_transformations(alpha, beta)
    F, G = alpha.source, alpha.target
    X, dS = F.target.base, F.source.d
    return [m for m in X.invertibles()
            if X.prod(m, m, alpha.Pi, G(dS)) == X.prod(alpha.Pi, F(dS), m)]


def unique_td3_modification(alpha: TD3Transformation, beta: TD3Transformation) -> TD3Modification:
    sols = modification_solutions(alpha, beta)
    if sols != [alpha.source.target.base.unit]:
        raise InternalConsistencyError(f"expected only the unit modification, found {sols}")
    return TD3Modification(alpha, beta, sols[0])


def make_td3_perturbation(source: TD3Modification, target: TD3Modification, sigma: int) -> TD3Perturbation:
    X = source.source.source.target.base
    if source.source != target.source or source.target != target.target:
        raise InputError("modifications are not parallel")
    if not 0 <= sigma < X.order:
        raise InputError(f"{sigma} is not an element")
    return TD3Perturbation(source, target, sigma)


def perturbations(source: TD3Modification, target: TD3Modification) -> list[TD3Perturbation]:
    X = source.source.source.target.base
    return [make_td3_perturbation(source, target, s) for s in X.elements]


# -- the hom-bicategory and the comparison with commutative monoids ---------------------


def enumerate_td3_functors(X: TriplyDegenTricat, Y: TriplyDegenTricat) -> Iterator[TD3Functor]:
    inv = Y.base.invertibles()
    for h in enumerate_homs(X.base, Y.base):
        for m, chi, iota, gamma in product(inv, repeat=4):
            yield make_td3_functor(X, Y, h, m, chi, iota, gamma)


@dataclass
class Tricat3Hom:
    """The hom-bicategory between two triply degenerate tricategories.

    0-cells are functors, 1-cells transformations and 2-cells the unique
    modifications, so only units and composition carry information.
    """
    source: TriplyDegenTricat
    target: TriplyDegenTricat
    functors: list[TD3Functor] = field(default_factory=list)

    def one_cells(self, F: TD3Functor, G: TD3Functor) -> list[TD3Transformation]:
        if not transformation_exists(F, G):
            return []
        inv = F.target.base.invertibles()
        return [make_td3_transformation(F, G, p, a) for p, a in product(inv, repeat=2)]

    def unit(self, F: TD3Functor) -> TD3Transformation:
        return unit_td3_transformation(F)

    def compose(self, beta: TD3Transformation, alpha: TD3Transformation) -> TD3Transformation:
        return compose_td3_transformations(beta, alpha)

    def two_cell(self, alpha: TD3Transformation, beta: TD3Transformation) -> TD3Modification:
        return unique_td3_modification(alpha, beta)

    def law_report(self, sample: int | None = None, seed: int = 0) -> dict:
        """Associativity on the nose, units up to the unique 2-cells."""
        rng = random.Random(seed)
        fs = self.functors if sample is None else rng.sample(self.functors, min(sample, len(self.functors)))
        assoc = unit_strict = unit_weak = checked = 0
        for F in fs:
            cells = self.one_cells(F, F)
            if sample is not None:
                cells = rng.sample(cells, min(sample, len(cells)))
            for a, b, c in product(cells, repeat=3):
                checked += 1
                if self.compose(c, self.compose(b, a)) == self.compose(self.compose(c, b), a):
                    assoc += 1
            for a in cells:
                lhs = self.compose(a, self.unit(F))
                unit_strict += lhs == a
                self.two_cell(lhs, a)
                unit_weak += 1
        return {"triples": checked, "associative": assoc, "unit_checks": unit_weak, "strict_units": unit_strict}


def build_hom_bicategory(X: TriplyDegenTricat, Y: TriplyDegenTricat) -> Tricat3Hom:
    if X.base.order > HOM_CAP or Y.base.order > HOM_CAP:
        raise InputError(f"hom-bicategories are materialized only for orders up to {HOM_CAP}")
    return Tricat3Hom(X, Y, list(enumerate_td3_functors(X, Y)))


def xi3(X: TriplyDegenTricat) -> FiniteCommutativeMonoid:
    return X.base


def xi3_on_functor(F: TD3Functor) -> MonoidHom:
    return F.hom


def assemble_tricat3(structures: Sequence[TriplyDegenTricat]) -> dict:
    """Composition, units and ξ₃-functoriality across a list of structures."""
    failures = []
    checked = 0
    for X, Y, Z in product(structures, repeat=3):
        for F in _sample_functors(X, Y):
            for G in _sample_functors(Y, Z):
                GF = compose_td3_functors(G, F)
                checked += 1
                if xi3_on_functor(GF).map != G.hom.compose(F.hom).map:
                    failures.append(("xi3 preserves composition", X.raw(), Y.raw(), Z.raw()))
                if not functor_axioms(GF).passed:
                    failures.append(("composite functor axioms", X.raw(), Y.raw(), Z.raw()))
    return {"composites": checked, "failures": failures}


def _sample_functors(X: TriplyDegenTricat, Y: TriplyDegenTricat) -> list[TD3Functor]:
    """Every hom with all-unit data plus one non-unit datum per invertible."""
    out = []
    e = Y.base.unit
    for h in enumerate_homs(X.base, Y.base):
        out.append(make_td3_functor(X, Y, h, e, e, e, e))
        for g in Y.base.invertibles():
            if g != e:
                out.append(make_td3_functor(X, Y, h, g, g, e, g))
    return out


def catalog(max_order: int = 3) -> list[TriplyDegenTricat]:
    """All-unit lifts of every monoid of order ≤ ``max_order`` plus one lift with ``d`` non-unit per group."""
    out = []
    for k in range(1, max_order + 1):
        for M in enumerate_cmonoids(k):
            out.append(unit_td3(M))
            inv = [x for x in M.invertibles() if x != M.unit]
            if inv:
                g = inv[0]
                e = M.unit
                out.append(make_td3(M, g, e, e, g, e, e, g, g))
    return out


@dataclass(frozen=True)
class Xi3Report:
    object_surjective: bool
    one_cell_surjective: bool
    unique_three_cells: bool
    composition_preserved: bool
    counts: dict

    @property
    def passed(self) -> bool:
        return self.object_surjective and self.one_cell_surjective and self.unique_three_cells \
            and self.composition_preserved

    def raw(self) -> dict:
        return {"object_surjective": self.object_surjective, "one_cell_surjective": self.one_cell_surjective,
                "unique_three_cells": self.unique_three_cells, "composition_preserved": self.composition_preserved,
                "counts": dict(self.counts)}


def check_xi3_triequivalence(max_order: int = 3) -> Xi3Report:
    monoids = [M for k in range(1, max_order + 1) for M in enumerate_cmonoids(k)]
    lifts = []
    obj_ok = True
    for M in monoids:
        X = unit_td3(M)
        obj_ok &= xi3(X) == M and axiom_oracle_td3(X).passed
        lifts.append(X)
    hom_ok, homs = True, 0
    for X, Y in product(lifts, repeat=2):
        e = Y.base.unit
        for h in enumerate_homs(X.base, Y.base):
            homs += 1
            F = make_td3_functor(X, Y, h, e, e, e, e)
            hom_ok &= xi3_on_functor(F).map == h.map and functor_axioms(F).passed
    structures = catalog(max_order)
    three_ok, pairs = True, 0
    for X, Y in product(structures, repeat=2):
        for F in _sample_functors(X, Y):
            cells = _sample_transformations(F)
            for a, b in product(cells, repeat=2):
                pairs += 1
                three_ok &= modification_solutions(a, b) == [Y.base.unit]
    comp = assemble_tricat3([s for s in structures if s.base.order <= 2])
    return Xi3Report(obj_ok, hom_ok, three_ok, not comp["failures"],
                     {"monoids": len(monoids), "homs": homs, "parallel_pairs": pairs,
                      "composites": comp["composites"]})


def _sample_transformations(F: TD3Functor) -> list[TD3Transformation]:
    X = F.target.base
    inv = X.invertibles()
    return [make_td3_transformation(F, F, p, a) for p, a in product(inv, repeat=2)][:9]


# -- the negative results ------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    claim: str
    found: bool
    payload: dict

    def raw(self) -> dict:
        return {"claim": self.claim, "found": self.found, "payload": self.payload}


def z2_structure(d: int = 1, m: int = 0) -> TriplyDegenTricat:
    from .monoid import cyclic_group
    Z2 = cyclic_group(2)
    return make_td3(Z2, d, m, 0, 0, 0, 0, 0, 0)


def witness_non_category() -> Witness:
    """The identity functor fails to be a strict unit for composition."""
    T = z2_structure(d=1)
    for chi in T.base.invertibles():
        F = make_td3_functor(T, T, identity_hom(T.base), 0, chi, 0, 0)
        I = identity_td3_functor(T)
        IF = compose_td3_functors(I, F)
        if IF.data() != F.data():
            return Witness("non-category", True, {"base": "Z/2", "d_T": T.d, "F": F.raw(), "I∘F": IF.raw()})
    return Witness("non-category", False, {})


def witness_non_associative(max_order: int = 3) -> Witness:
    """Three composable functors whose two composites differ."""
    from .monoid import cyclic_group
    for n in range(2, max_order + 1):
        M = cyclic_group(n)
        structures = [make_td3(M, d, 0, 0, 0, 0, 0, 0, 0) for d in M.invertibles()]
        for X, Y, Z, W in product(structures, repeat=4):
            for F, G, H in product(_sample_functors(X, Y), _sample_functors(Y, Z), _sample_functors(Z, W)):
                left = compose_td3_functors(compose_td3_functors(H, G), F)
                right = compose_td3_functors(H, compose_td3_functors(G, F))
                if left.data() != right.data():
                    return Witness("non-associative", True, {
                        "base": f"Z/{n}", "d": [X.d, Y.d, Z.d, W.d], "F": F.raw(), "G": G.raw(), "H": H.raw(),
                        "(HG)F": left.raw(), "H(GF)": right.raw()})
    return Witness("non-associative", False, {})


def witness_non_bicategory() -> Witness:
    """Composing with the unit transformation changes the α component."""
    T = z2_structure(d=1, m=0)
    F = identity_td3_functor(T)
    for p, a in product(T.base.invertibles(), repeat=2):
        alpha = make_td3_transformation(F, F, p, a)
        composite = compose_td3_transformations(alpha, unit_td3_transformation(F))
        if composite != alpha:
            return Witness("non-bicategory", True, {"base": "Z/2", "d_T": T.d, "m_T": T.m, "alpha": alpha.raw(),
                                                    "alpha∘unit": composite.raw()})
    return Witness("non-bicategory", False, {})


def witness_xi4_unfaithful() -> Witness:
    """Two distinct perturbations with the same image among commutative monoids."""
    T = z2_structure(d=0)
    F = identity_td3_functor(T)
    alpha = unit_td3_transformation(F)
    mod = unique_td3_modification(alpha, alpha)
    ps = perturbations(mod, mod)
    image = lambda p: ("identity 4-cell", xi3(T).raw()["table"])
    for p, q in product(ps, repeat=2):
        if p.sigma != q.sigma and image(p) == image(q):
            return Witness("xi4-unfaithful", True, {"base": "Z/2", "sigma": [p.sigma, q.sigma]})
    return Witness("xi4-unfaithful", False, {})


# -- random instances for the derivation sweeps -----------------------------------------


def random_td3(rng: random.Random, monoids: Sequence[FiniteCommutativeMonoid]) -> TriplyDegenTricat:
    M = rng.choice(list(monoids))
    inv = M.invertibles()
    return make_td3(M, *(rng.choice(inv) for _ in range(8)))


def random_functor(rng: random.Random, S: TriplyDegenTricat, T: TriplyDegenTricat) -> TD3Functor:
    h = rng.choice(enumerate_homs(S.base, T.base))
    inv = T.base.invertibles()
    return make_td3_functor(S, T, h, *(rng.choice(inv) for _ in range(4)))


def same_shape(F: TD3Functor, chi: int, iota: int, gamma: int) -> TD3Functor:
    """A functor parallel to ``F`` sharing its homomorphism and ``m``."""
    return make_td3_functor(F.source, F.target, F.hom, F.m, chi, iota, gamma)


def derivation_sweep(count: int = 1000, max_order: int = 4, seed: int = 0) -> dict:
    """Random functors and transformations with derived ``ω, δ, M``, tallied against the axioms.

    ``third_always`` counts pairs where the third transformation axiom held;
    ``third_iff_gamma`` counts pairs where it held exactly when ``γ_F² = γ_G²``.
    """
    rng = random.Random(seed)
    monoids = [M for k in range(1, max_order + 1) for M in enumerate_cmonoids(k)]
    tally = dict(instances=count, first_functor=0, second_functor=0, second_transformation=0,
                 third_always=0, third_iff_gamma=0, gamma_squares_equal=0)
    for _ in range(count):
        S, T = random_td3(rng, monoids), random_td3(rng, monoids)
        F = random_functor(rng, S, T)
        inv = T.base.invertibles()
        G = same_shape(F, *(rng.choice(inv) for _ in range(3)))
        Pi, alpha = rng.choice(inv), rng.choice(inv)
        names = dict(functor_axioms(F).checks)
        tally["first_functor"] += names["first functor axiom"]
        tally["second_functor"] += names["second functor axiom"]
        t = dict(transformation_axioms(TD3Transformation(F, G, Pi, alpha, derive_M(F, G, Pi))).checks)
        tally["second_transformation"] += t["second transformation axiom"]
        squares = T.base.power(F.gamma, 2) == T.base.power(G.gamma, 2)
        tally["gamma_squares_equal"] += squares
        tally["third_always"] += t["third transformation axiom"]
        tally["third_iff_gamma"] += t["third transformation axiom"] == squares
    return tally


def td3_from_raw(base: FiniteCommutativeMonoid, raw: dict) -> TriplyDegenTricat:
    try:
        vals = [int(raw[k]) for k in DISTINGUISHED]
    except KeyError as exc:
        raise InputError(f"missing distinguished element {exc.args[0]}") from None
    return make_td3(base, *vals)


def overwrite(t: TriplyDegenTricat, **changes: int) -> TriplyDegenTricat:
    """Copy with some stored elements replaced (no re-derivation)."""
    return replace(t, **changes)


def classify(monoids: Iterable[FiniteCommutativeMonoid]) -> Iterator[tuple[TriplyDegenTricat, AxiomReport]]:
    """Every structure over each monoid, paired with its oracle verdict."""
    for M in monoids:
        inv = M.invertibles()
        for tup in product(inv, repeat=8):
            t = make_td3(M, *tup)
            yield t, axiom_oracle_td3(t)
