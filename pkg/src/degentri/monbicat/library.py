"""Transcribed diagrams for monoidal transformations and modifications.

On a one-object carrier a 1-cell of the target bicategory is an object of
its hom category, so every diagram below is a pasting of 2-cells written
as rewrites of 1-cell words: juxtaposition is composition of 1-cells
(later cells to the left), ``[x.y]`` is the monoidal product.

Names: functors ``F, G, H`` from sort ``S``; a transformation ``alpha``
has component 1-cell ``alpha``, naturality family ``famalpha{X}:
alpha F(X) -> G(X) alpha`` and cells ``Pialpha: chiG [alpha.alpha] ->
alpha chiF``, ``Malpha: alpha iotaF -> iotaG``; a modification ``m``
is a 2-cell ``alpha -> beta``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..tridegen2.engine import PLAIN, DiagramSpec, Edge, cell
from ..tridegen2.vocab import (CellType, FamilyType, Vocabulary, dd_cells, dd_families, functor_cells,
                               functor_families, functor_vocabulary)

_ = PLAIN


def mt_cells(a: str, F: str, G: str) -> list[CellType]:
    return [CellType(f"Pi{a}", f"chi{G} [{a}.{a}]", f"{a} chi{F}"),
            CellType(f"M{a}", f"{a} iota{F}", f"iota{G}")]


def mt_families(a: str, F: str, G: str, source: str) -> list[FamilyType]:
    return [FamilyType(f"fam{a}", (("X", source),), f"{a} {F}(X)", f"{G}(X) {a}")]


def transformation_vocabulary() -> Vocabulary:
    """``alpha, beta: F => G`` and ``m: alpha -> beta``."""
    v = functor_vocabulary(("F", "G"))
    for a in ("alpha", "beta"):
        v.add_cells("B", mt_cells(a, "F", "G")).add_families("B", mt_families(a, "F", "G", "S"))
    v.add_cells("B", [CellType("m", "alpha", "beta")])
    return v


def composition_vocabulary() -> Vocabulary:
    """``alpha: F => G`` and ``beta: G => H``."""
    v = functor_vocabulary(("F", "G", "H"))
    v.add_cells("B", mt_cells("alpha", "F", "G")).add_families("B", mt_families("alpha", "F", "G", "S"))
    v.add_cells("B", mt_cells("beta", "G", "H")).add_families("B", mt_families("beta", "G", "H", "S"))
    return v


def box_vocabulary() -> Vocabulary:
    """``alpha: F => K`` between functors ``S -> B`` and ``beta: G => H`` between functors ``B -> T``."""
    sorts = ("T", "B", "S")
    v = Vocabulary(home="T", boxes={s: ("box" if s == "T" else f"box{s}") for s in sorts})
    for s in sorts:
        v.add_cells(s, dd_cells()).add_families(s, dd_families())
    for N, src, tgt in (("F", "S", "B"), ("K", "S", "B"), ("G", "B", "T"), ("H", "B", "T")):
        v.functors[N] = (src, tgt)
        v.add_cells(tgt, functor_cells(N)).add_families(tgt, functor_families(N, src))
    v.add_cells("B", mt_cells("alpha", "F", "K")).add_families("B", mt_families("alpha", "F", "K", "S"))
    v.add_cells("T", mt_cells("beta", "G", "H")).add_families("T", mt_families("beta", "G", "H", "B"))
    return v


@dataclass(frozen=True)
class CompositeSpec:
    """A single pasting that defines a cell; ``src`` and ``tgt`` are its declared boundary."""
    name: str
    side: tuple
    src: str
    tgt: str
    indices: tuple[str, ...] = ()


# -- the underlying transformation --------------------------------------------------------------

MT_COMPOSITION = DiagramSpec(
    "transformation: composition of 1-cells",
    left=("alpha F(X) F(Y)", _, "G(X) alpha F(Y)", _, "G(X) G(Y) alpha", _, "G(X Y) alpha"),
    right=("alpha F(X) F(Y)", _, "alpha F(X Y)", Edge("famalpha{X Y}"), "G(X Y) alpha"),
    indices=("S:X", "S:Y"))

MT_UNIT = DiagramSpec(
    "transformation: identity 1-cell",
    left=("alpha F(U)", Edge("famalpha{U}"), "G(U) alpha"),
    right=("alpha F(U)", _, "alpha", _, "G(U) alpha"))

MT_PI_NATURAL = DiagramSpec(
    "transformation: Pi is a modification",
    left=("chiG [alpha.alpha] [F(X).F(Y)]", cell("Pialpha", "Pi"),
          "alpha chiF [F(X).F(Y)]", _, "alpha F([X.Y]) chiF", Edge("famalpha{[X.Y]}"), "G([X.Y]) alpha chiF"),
    right=("chiG [alpha.alpha] [F(X).F(Y)]", Edge("chiG [famalpha{X}.famalpha{Y}]"),
           "chiG [G(X).G(Y)] [alpha.alpha]", _, "G([X.Y]) chiG [alpha.alpha]", cell("Pialpha", "Pi"),
           "G([X.Y]) alpha chiF"),
    indices=("S:X", "S:Y"))

# -- the three monoidal transformation axioms ---------------------------------------------------

# the delta cells enter through their mates  F(R) chiF [U.iotaF] -> R
_DELTA_F = "F(R) chiF [U.iotaF] etaR ; F(R) inv(deltaF) R ; F(epsR) R"
_DELTA_G = "G(R) chiG [U.iotaG] etaR ; G(R) inv(deltaG) R ; G(epsR) R"

MT_AXIOM_ASSOC = DiagramSpec(
    "monoidal transformation axiom: associativity",
    left=("G(A) chiG [chiG.U] [(U.U).alpha] [(alpha.alpha).U]", _,
          "G(A) chiG [U.alpha] [chiG.U] [(alpha.alpha).U]", cell("[Pialpha.U]", "Pi 1"),
          "G(A) chiG [U.alpha] [alpha.U] [chiF.U]", _,
          "G(A) chiG [alpha.alpha] [chiF.U]", cell("Pialpha", "Pi"),
          "G(A) alpha chiF [chiF.U]", _,
          "alpha F(A) chiF [chiF.U]", cell("omegaF", "omega F"),
          "alpha chiF [U.chiF] A"),
    right=("G(A) chiG [chiG.U] [(U.U).alpha] [(alpha.alpha).U]", cell("omegaG", "omega G"),
           "chiG [U.chiG] A [(U.U).alpha] [(alpha.alpha).U]", _,
           "chiG [U.chiG] [U.(U.alpha)] A [(alpha.alpha).U]", _,
           "chiG [U.chiG] [U.(U.alpha)] [alpha.(alpha.U)] A", _,
           "chiG [U.chiG] [U.(alpha.alpha)] [alpha.(U.U)] A", cell("[U.Pialpha]", "1 Pi"),
           "chiG [U.alpha] [U.chiF] [alpha.(U.U)] A", _,
           "chiG [U.alpha] [alpha.U] [U.chiF] A", _,
           "chiG [alpha.alpha] [U.chiF] A", cell("Pialpha", "Pi"),
           "alpha chiF [U.chiF] A"))

MT_AXIOM_LEFT = DiagramSpec(
    "monoidal transformation axiom: left unit",
    left=("G(L) chiG [U.alpha] [alpha.U] [iotaF.U]", cell("[Malpha.U]", "M 1"),
          "G(L) chiG [U.alpha] [iotaG.U]", _,
          "G(L) chiG [iotaG.U] [U.alpha]", cell("gammaG", "gamma G"),
          "L [U.alpha]"),
    right=("G(L) chiG [U.alpha] [alpha.U] [iotaF.U]", _,
           "G(L) chiG [alpha.alpha] [iotaF.U]", cell("Pialpha", "Pi"),
           "G(L) alpha chiF [iotaF.U]", _,
           "alpha F(L) chiF [iotaF.U]", cell("gammaF", "gamma F"),
           "alpha L",
           # naturality of l in the 1-cell alpha; the unit object's identity 1-cell is compared with I by isoI
           Edge("inv(famL{alpha}) ; [isoI.alpha]"),
           "L [U.alpha]"))

MT_AXIOM_RIGHT = DiagramSpec(
    "monoidal transformation axiom: right unit",
    left=("G(R) chiG [alpha.U] [U.alpha] [U.iotaF]", cell("[U.Malpha]", "1 M"),
          "G(R) chiG [alpha.U] [U.iotaG]", _,
          "G(R) chiG [U.iotaG] [alpha.U]", Edge(_DELTA_G, "delta G"),
          "R [alpha.U]"),
    right=("G(R) chiG [alpha.U] [U.alpha] [U.iotaF]", _,
           "G(R) chiG [alpha.alpha] [U.iotaF]", cell("Pialpha", "Pi"),
           "G(R) alpha chiF [U.iotaF]", _,
           "alpha F(R) chiF [U.iotaF]", Edge(_DELTA_F, "delta F"),
           "alpha R", Edge("inv(famR{alpha}) ; [alpha.isoI]"),
           "R [alpha.U]"))

MT_BLOCKS = (MT_COMPOSITION, MT_UNIT, MT_PI_NATURAL)
MT_AXIOMS = (MT_AXIOM_ASSOC, MT_AXIOM_LEFT, MT_AXIOM_RIGHT)

# -- modifications m: alpha -> beta -----------------------------------------------------------

MM_NATURAL = DiagramSpec(
    "modification: naturality",
    left=("alpha F(X)", Edge("famalpha{X}"), "G(X) alpha", cell("G(X) m", "m"), "G(X) beta"),
    right=("alpha F(X)", cell("m F(X)", "m"), "beta F(X)", Edge("fambeta{X}"), "G(X) beta"),
    indices=("S:X",))

MM_AXIOM_PI = DiagramSpec(
    "monoidal modification axiom: Pi",
    left=("chiG [alpha.alpha]", cell("chiG [m.m]", "m m"), "chiG [beta.beta]", cell("Pibeta", "Pi beta"),
          "beta chiF"),
    right=("chiG [alpha.alpha]", cell("Pialpha", "Pi alpha"), "alpha chiF", cell("m chiF", "m"), "beta chiF"))

MM_AXIOM_M = DiagramSpec(
    "monoidal modification axiom: M",
    left=("alpha iotaF", cell("m iotaF", "m"), "beta iotaF", cell("Mbeta", "M beta"), "iotaG"),
    right=("alpha iotaF", cell("Malpha", "M alpha"), "iotaG"))

MM_AXIOMS = (MM_NATURAL, MM_AXIOM_PI, MM_AXIOM_M)

# -- composites -------------------------------------------------------------------------------

COMPOSITE_FAMILY = CompositeSpec(
    "composite transformation: naturality",
    ("(beta alpha) F(X)", _, "beta alpha F(X)", Edge("beta famalpha{X}"), "beta G(X) alpha", Edge("fambeta{X} alpha"), "H(X) beta alpha", _,
     "H(X) (beta alpha)"),
    "(beta alpha) F(X)", "H(X) (beta alpha)", ("S:X",))

COMPOSITE_PI = CompositeSpec(
    "composite transformation: Pi",
    ("chiH [(beta alpha).(beta alpha)]", _, "chiH [beta.beta] [alpha.alpha]", cell("Pibeta", "Pi beta"),
     "beta chiG [alpha.alpha]", cell("beta Pialpha", "Pi alpha"), "beta alpha chiF", _, "(beta alpha) chiF"),
    "chiH [(beta alpha).(beta alpha)]", "(beta alpha) chiF")

COMPOSITE_M = CompositeSpec(
    "composite transformation: M",
    ("(beta alpha) iotaF", _, "beta alpha iotaF", cell("beta Malpha", "M alpha"), "beta iotaG",
     cell("Mbeta", "M beta"), "iotaH"),
    "(beta alpha) iotaF", "iotaH")

COMPOSITES = (COMPOSITE_FAMILY, COMPOSITE_PI, COMPOSITE_M)

# beta ⊠ alpha has 1-cell component H(alpha) beta, i.e. beta * F followed by H * alpha

BOX_FAMILY = CompositeSpec(
    "box composite: naturality",
    ("(H(alpha) beta) G(F(X))", _, "H(alpha) beta G(F(X))", Edge("H(alpha) fambeta{F(X)}"), "H(alpha) H(F(X)) beta", _,
     "H(alpha F(X)) beta", Edge("H(famalpha{X}) beta"), "H(K(X) alpha) beta", _,
     "H(K(X)) (H(alpha) beta)"),
    "(H(alpha) beta) G(F(X))", "H(K(X)) (H(alpha) beta)", ("S:X",))

BOX_PI = CompositeSpec(
    "box composite: Pi",
    ("H(chiK) chiH [(H(alpha) beta).(H(alpha) beta)]", _,
     "H(chiK) chiH [H(alpha).H(alpha)] [beta.beta]", Edge("H(chiK) famchiH{alpha, alpha} [beta.beta]"),
     "H(chiK) H([alpha.alpha]) chiH [beta.beta]", _,
     "H(chiK [alpha.alpha]) chiH [beta.beta]", cell("H(Pialpha) chiH [beta.beta]", "H Pi alpha"),
     "H(alpha chiF) chiH [beta.beta]", cell("H(alpha chiF) Pibeta", "Pi beta"),
     "H(alpha) H(chiF) beta chiG", Edge("H(alpha) inv(fambeta{chiF}) chiG"),
     "H(alpha) beta G(chiF) chiG", _, "(H(alpha) beta) G(chiF) chiG"),
    "H(chiK) chiH [(H(alpha) beta).(H(alpha) beta)]", "(H(alpha) beta) G(chiF) chiG")

BOX_M = CompositeSpec(
    "box composite: M",
    ("(H(alpha) beta) G(iotaF) iotaG", _, "H(alpha) beta G(iotaF) iotaG", Edge("H(alpha) fambeta{iotaF} iotaG"), "H(alpha) H(iotaF) beta iotaG", _,
     "H(alpha iotaF) beta iotaG", cell("H(Malpha) beta iotaG", "H M alpha"), "H(iotaK) beta iotaG",
     cell("H(iotaK) Mbeta", "M beta"), "H(iotaK) iotaH"),
    "(H(alpha) beta) G(iotaF) iotaG", "H(iotaK) iotaH")

BOX_COMPOSITES = (BOX_FAMILY, BOX_PI, BOX_M)
