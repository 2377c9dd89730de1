"""Transcribed pasting diagrams for doubly degenerate structures.

Each diagram lists its two sides node by node.  Labelled arrows carry the
cell they are built from (whiskered as written); unmarked arrows carry
nothing, or an explicit family component where its index is a product
that pattern matching cannot see.  Diagrams marked ``analogue`` are the
companion axioms for the other blocks, shaped after the displayed one.
"""

from __future__ import annotations

from .engine import PLAIN, DiagramSpec, Edge, cell

_ = PLAIN


def fam(core: str) -> Edge:
    """An unmarked arrow that is a family component."""
    return Edge(core, "")


# -- blocks of a doubly degenerate structure ----------------------------------------------

BLOCK_A_TENSOR = DiagramSpec(
    "block A: tensor compatibility",
    left=("A [(X1.Y1).Z1] [(X2.Y2).Z2]", _,
          "[X1.(Y1.Z1)] A [(X2.Y2).Z2]", _,
          "[X1.(Y1.Z1)] [X2.(Y2.Z2)] A", _,
          "[(X1 X2).((Y1 Y2).(Z1 Z2))] A"),
    right=("A [(X1.Y1).Z1] [(X2.Y2).Z2]", _,
           "A [((X1 X2).(Y1 Y2)).(Z1 Z2)]", _,
           "[(X1 X2).((Y1 Y2).(Z1 Z2))] A"),
    indices=("X1", "Y1", "Z1", "X2", "Y2", "Z2"))

BLOCK_A_UNIT = DiagramSpec(
    "block A: unit",
    left=("A", _, "A U", _, "A [(U.U).U]", _, "[U.(U.U)] A"),
    right=("A", _, "U A", _, "[U.(U.U)] A"))

BLOCK_ADUAL_TENSOR = DiagramSpec(
    "block A*: tensor compatibility",
    left=("A* [X1.(Y1.Z1)] [X2.(Y2.Z2)]", _,
          "[(X1.Y1).Z1] A* [X2.(Y2.Z2)]", _,
          "[(X1.Y1).Z1] [(X2.Y2).Z2] A*", _,
          "[((X1 X2).(Y1 Y2)).(Z1 Z2)] A*"),
    right=("A* [X1.(Y1.Z1)] [X2.(Y2.Z2)]", _,
           "A* [(X1 X2).((Y1 Y2).(Z1 Z2))]", _,
           "[((X1 X2).(Y1 Y2)).(Z1 Z2)] A*"),
    indices=("X1", "Y1", "Z1", "X2", "Y2", "Z2"), note="analogue")

BLOCK_ADUAL_UNIT = DiagramSpec(
    "block A*: unit",
    left=("A*", _, "A* U", _, "A* [U.(U.U)]", _, "[(U.U).U] A*"),
    right=("A*", _, "U A*", _, "[(U.U).U] A*"), note="analogue")

BLOCK_L_TENSOR = DiagramSpec(
    "block L: tensor compatibility",
    left=("L [I.X1] [I.X2]", _, "X1 L [I.X2]", _, "X1 X2 L"),
    right=("L [I.X1] [I.X2]", _, "L [(I I).(X1 X2)]", cell("[mult.X1 X2]", "mult"),
           "L [I.(X1 X2)]", fam("famL{X1 X2}"), "(X1 X2) L"),
    indices=("X1", "X2"), note="analogue")

BLOCK_L_UNIT = DiagramSpec(
    "block L: unit",
    left=("L [U.U]", cell("[unitI.U]", "unit"), "L [I.U]", _, "U L", _, "L"),
    right=("L [U.U]", _, "L"), note="analogue")

BLOCK_LDUAL_TENSOR = DiagramSpec(
    "block L*: tensor compatibility",
    left=("L* X1 X2", _, "[I.X1] L* X2", _, "[I.X1] [I.X2] L*", _, "[(I I).(X1 X2)] L*",
          cell("[mult.X1 X2]", "mult"), "[I.(X1 X2)] L*"),
    right=("L* X1 X2", fam("famL*{X1 X2}"), "[I.(X1 X2)] L*"),
    indices=("X1", "X2"), note="analogue")

BLOCK_LDUAL_UNIT = DiagramSpec(
    "block L*: unit",
    left=("L*", _, "L* U", fam("famL*{U}"), "[I.U] L*"),
    right=("L*", _, "[U.U] L*", cell("[unitI.U]", "unit"), "[I.U] L*"), note="analogue")

BLOCK_R_TENSOR = DiagramSpec(
    "block R: tensor compatibility",
    left=("R [X1.I] [X2.I]", _, "X1 R [X2.I]", _, "X1 X2 R"),
    right=("R [X1.I] [X2.I]", _, "R [(X1 X2).(I I)]", cell("[X1 X2.mult]", "mult"),
           "R [(X1 X2).I]", fam("famR{X1 X2}"), "(X1 X2) R"),
    indices=("X1", "X2"), note="analogue")

BLOCK_R_UNIT = DiagramSpec(
    "block R: unit",
    left=("R [U.U]", cell("[U.unitI]", "unit"), "R [U.I]", _, "U R", _, "R"),
    right=("R [U.U]", _, "R"), note="analogue")

BLOCK_RDUAL_TENSOR = DiagramSpec(
    "block R*: tensor compatibility",
    left=("R* X1 X2", _, "[X1.I] R* X2", _, "[X1.I] [X2.I] R*", _, "[(X1 X2).(I I)] R*",
          cell("[X1 X2.mult]", "mult"), "[(X1 X2).I] R*"),
    right=("R* X1 X2", fam("famR*{X1 X2}"), "[(X1 X2).I] R*"),
    indices=("X1", "X2"), note="analogue")

BLOCK_RDUAL_UNIT = DiagramSpec(
    "block R*: unit",
    left=("R*", _, "R* U", fam("famR*{U}"), "[U.I] R*"),
    right=("R*", _, "[U.U] R*", cell("[U.unitI]", "unit"), "[U.I] R*"), note="analogue")

DD_BLOCKS = (BLOCK_A_TENSOR, BLOCK_A_UNIT, BLOCK_ADUAL_TENSOR, BLOCK_ADUAL_UNIT,
             BLOCK_L_TENSOR, BLOCK_L_UNIT, BLOCK_LDUAL_TENSOR, BLOCK_LDUAL_UNIT,
             BLOCK_R_TENSOR, BLOCK_R_UNIT, BLOCK_RDUAL_TENSOR, BLOCK_RDUAL_UNIT)


# -- each dual-side family is the mate of the primary one ------------------------------------


def mate(name: str, x: str, src_dual: str, tgt_dual: str, dual_fam: str, indices=(),
         note="analogue") -> DiagramSpec:
    """``x* P -> Q x*`` equals: insert ``x x*`` on the right, the primary family backwards, then ``eta^-1``."""
    return DiagramSpec(
        name,
        left=(f"{x}* {src_dual}", Edge(f"inv(eps{x})"),
              f"~{x}* {src_dual} {x} {x}*", _,
              f"~{x}* {x} {tgt_dual} {x}*", Edge(f"inv(eta{x})"),
              f"{tgt_dual} {x}*"),
        right=(f"{x}* {src_dual}", fam(dual_fam), f"{tgt_dual} {x}*"),
        indices=indices, note=note)


MATE_A = mate("block A: dual family is the mate", "A", "[X.(Y.Z)]", "[(X.Y).Z]",
              "famA*{X, Y, Z}", ("X", "Y", "Z"))
MATE_L = mate("block L: dual family is the mate", "L", "X", "[I.X]", "famL*{X}", ("X",))
MATE_R = mate("block R: dual family is the mate", "R", "X", "[X.I]", "famR*{X}", ("X",))

DD_MATES = (MATE_A, MATE_L, MATE_R)


# -- the three axioms of a doubly degenerate tricategory ---------------------------------

TRICAT_PENTAGONATOR = DiagramSpec(
    "tricategory axiom: pentagonator",
    left=("[U.(U.A)] [U.A] A [(U.A).U] [A.U] [(A.U).U]", cell("[pi.U]", "pi"),
          "[U.(U.A)] [U.A] A [A.U] [A.U]", cell("pi"),
          "[U.(U.A)] A A [A.U]", _,
          "A [(U.U).A] A [A.U]", _,
          "A [U.A] A [A.U]", cell("pi"),
          "A A A"),
    right=("[U.(U.A)] [U.A] A [(U.A).U] [A.U] [(A.U).U]", _,
           "[U.(U.A)] [U.A] [U.(A.U)] A [A.U] [(A.U).U]", cell("[U.pi]", "pi"),
           "[U.A] [U.A] A [A.U] [(A.U).U]", cell("pi"),
           "[U.A] A A [(A.U).U]", _,
           "[U.A] A [A.(U.U)] A", _,
           "[U.A] A [A.U] A", cell("pi"),
           "A A A"))

TRICAT_LEFT_UNIT = DiagramSpec(
    "tricategory axiom: left unit",
    left=("A [(U.L).U] [A.U] [(R*.U).U]", _,
          "[U.(L.U)] A [A.U] [(R*.U).U]", cell("[U.lam]", "lam"),
          "[U.(L A)] A [A.U] [(R*.U).U]", _,
          "[U.L] [U.A] A [A.U] [(R*.U).U]", cell("pi"),
          "[U.L] A A [(R*.U).U]", _,
          "[U.L] A [R*.(U.U)] A", _,
          "[U.L] A [R*.U] A", cell("mu"),
          "U A", _, "A"),
    right=("A [(U.L).U] [A.U] [(R*.U).U]", _,
           "A [((U.L) A (R*.U)).(U U U)]", _,
           "A [((U.L) A (R*.U)).U]", cell("[mu.U]", "mu"),
           "A [U.U]", _, "A U", _, "A"))

TRICAT_RIGHT_UNIT = DiagramSpec(
    "tricategory axiom: right unit",
    left=("[U.(U.L)] [U.A] [U.(R*.U)] A", _,
          "[U.(U.L)] [U.A] A [(U.R*).U]", cell("[rho.U]", "rho"),
          "[U.(U.L)] [U.A] A [(A R*).U]", _,
          "[U.(U.L)] [U.A] A [A.U] [R*.U]", cell("pi"),
          "[U.(U.L)] A A [R*.U]", _,
          "A [(U.U).L] A [R*.U]", _,
          "A [U.L] A [R*.U]", cell("mu"),
          "A U", _, "A"),
    right=("[U.(U.L)] [U.A] [U.(R*.U)] A", _,
           "[(U U U).((U.L) A (R*.U))] A", _,
           "[U.((U.L) A (R*.U))] A", cell("[U.mu]", "mu"),
           "[U.U] A", _, "U A", _, "A"))

DD_AXIOMS = (TRICAT_PENTAGONATOR, TRICAT_LEFT_UNIT, TRICAT_RIGHT_UNIT)


# -- functors: blocks for chi and iota, and the two functor axioms -----------------------
# Names: the functor is F; source-sort names appear inside F( ).

_S4 = ("S:X1", "S:Y1", "S:X2", "S:Y2")

BLOCK_CHI_TENSOR = DiagramSpec(
    "block chi: tensor compatibility",
    left=("chiF [F(X1).F(Y1)] [F(X2).F(Y2)]", _,
          "F([X1.Y1]) chiF [F(X2).F(Y2)]", _,
          "F([X1.Y1]) F([X2.Y2]) chiF", _,
          "F([(X1 X2).(Y1 Y2)]) chiF"),
    right=("chiF [F(X1).F(Y1)] [F(X2).F(Y2)]", _,
           "chiF [F(X1 X2).F(Y1 Y2)]", fam("famchiF{X1 X2, Y1 Y2}"),
           "F([(X1 X2).(Y1 Y2)]) chiF"),
    indices=_S4, note="analogue")

BLOCK_CHI_UNIT = DiagramSpec(
    "block chi: unit",
    left=("chiF", _, "chiF [F(U).F(U)]", fam("famchiF{U, U}"), "F([U.U]) chiF", _, "chiF"),
    right=("chiF",), note="analogue")

BLOCK_IOTA_TENSOR = DiagramSpec(
    "block iota: multiplication",
    left=("iotaF I I", _, "F(I) iotaF I", _, "F(I) F(I) iotaF", cell("F(mult)", "F mult"), "F(I) iotaF"),
    right=("iotaF I I", cell("mult"), "iotaF I", _, "F(I) iotaF"), note="analogue")

BLOCK_IOTA_UNIT = DiagramSpec(
    "block iota: unit",
    left=("iotaF U", cell("unitI", "unit"), "iotaF I", _, "F(I) iotaF"),
    right=("iotaF U", _, "F(U) iotaF", cell("F(unitI)", "F unit"), "F(I) iotaF"), note="analogue")

FUNCTOR_BLOCKS = (BLOCK_CHI_TENSOR, BLOCK_CHI_UNIT, BLOCK_IOTA_TENSOR, BLOCK_IOTA_UNIT)

FUNCTOR_AXIOM_OMEGA = DiagramSpec(
    "functor axiom: omega",
    left=("F([U.A]) F(A) F([A.U]) chiF [chiF.U] [(chiF.U).U]", cell("F(pi)", "F pi"),
          "F(A) F(A) chiF [chiF.U] [(chiF.U).U]", cell("omegaF", "omega"),
          "F(A) chiF [U.chiF] A [(chiF.U).U]", _,
          "F(A) chiF [U.chiF] [chiF.(U.U)] A", _,
          "F(A) chiF [U.chiF] [chiF.U] A", _,
          "F(A) chiF [chiF.U] [U.chiF] A", cell("omegaF", "omega"),
          "chiF [U.chiF] A [U.chiF] A", _,
          "chiF [U.chiF] A [(U.U).chiF] A", _,
          "chiF [U.chiF] [U.(U.chiF)] A A"),
    right=("F([U.A]) F(A) F([A.U]) chiF [chiF.U] [(chiF.U).U]", _,
           "F([U.A]) F(A) chiF [F(A).F(U)] [chiF.U] [(chiF.U).U]", _,
           "F([U.A]) F(A) chiF [F(A).U] [chiF.U] [(chiF.U).U]", _,
           "F([U.A]) F(A) chiF [(F(A) chiF (chiF.U)).(U U U)]", _,
           "F([U.A]) F(A) chiF [(F(A) chiF (chiF.U)).U]", cell("[omegaF.U]", "omega"),
           "F([U.A]) F(A) chiF [(chiF (U.chiF) A).U]", _,
           "F([U.A]) F(A) chiF [chiF.U] [(U.chiF).U] [A.U]", cell("omegaF", "omega"),
           "F([U.A]) chiF [U.chiF] A [(U.chiF).U] [A.U]", _,
           "chiF [U.F(A)] [U.chiF] [U.(chiF.U)] A [A.U]", cell("[U.omegaF]", "omega"),
           "chiF [U.chiF] [U.(U.chiF)] [U.A] A [A.U]", cell("pi"),
           "chiF [U.chiF] [U.(U.chiF)] A A"))

FUNCTOR_AXIOM_UNIT = DiagramSpec(
    "functor axiom: unit",
    left=("F([U.L]) F(A) F([R*.U]) chiF", cell("F(mu)", "F mu"),
          "F(U) chiF", _, "U chiF", _, "chiF", _, "chiF U"),
    right=("F([U.L]) F(A) F([R*.U]) chiF", _,
           "F([U.L]) F(A) chiF [F(R*).U]", cell("[deltaF.U]", "delta"),
           "F([U.L]) F(A) chiF [(chiF (U.iotaF) R*).U]", _,
           "F([U.L]) F(A) chiF [chiF.U] [(U.iotaF).U] [R*.U]", cell("omegaF", "omega"),
           "F([U.L]) chiF [U.chiF] A [(U.iotaF).U] [R*.U]", _,
           "chiF [U.F(L)] [U.chiF] [U.(iotaF.U)] A [R*.U]", cell("[U.gammaF]", "gamma"),
           "chiF [U.L] A [R*.U]", cell("mu"),
           "chiF U"))

FUNCTOR_AXIOMS = (FUNCTOR_AXIOM_OMEGA, FUNCTOR_AXIOM_UNIT)


# -- transformations alpha: F => G -------------------------------------------------------

BLOCK_ALPHA_TENSOR = DiagramSpec(
    "block alpha: tensor compatibility",
    left=("alpha [U.F(X1)] [U.F(X2)]", _, "[G(X1).U] alpha [U.F(X2)]", _,
          "[G(X1).U] [G(X2).U] alpha", _, "[G(X1 X2).U] alpha"),
    right=("alpha [U.F(X1)] [U.F(X2)]", _, "alpha [U.F(X1 X2)]", fam("famalpha{X1 X2}"),
           "[G(X1 X2).U] alpha"),
    indices=("S:X1", "S:X2"), note="analogue")

BLOCK_ALPHA_UNIT = DiagramSpec(
    "block alpha: unit",
    left=("alpha", _, "alpha [U.F(U)]", fam("famalpha{U}"), "[G(U).U] alpha", _, "alpha"),
    right=("alpha",), note="analogue")

TRANSFORMATION_BLOCKS = (BLOCK_ALPHA_TENSOR, BLOCK_ALPHA_UNIT)

_T1 = "[G(A).U] [chiG.U] A* [U.alpha] [chiG.U] "
_T1_TAIL = " [(U.alpha).U] [A.U] [(alpha.U).U]"

TRANSFORMATION_AXIOM_PI = DiagramSpec(
    "transformation axiom: Pi",
    left=("[G(A).U] [chiG.U] A* [chiG.U] A* [U.(U.alpha)] [U.A] A [(U.alpha).U] [A.U] [(alpha.U).U]", _,
          "~[G(A).U] [chiG.U] A* [chiG.(U.U)] A* [U.(U.alpha)] [U.A] A [(U.alpha).U] [A.U] [(alpha.U).U]", _,
          "[G(A).U] [chiG.U] [(chiG.U).U] A* A* [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] [(alpha.U).U]",
          cell("[omegaG.U]", "omega"),
          "[chiG.U] [(U.chiG).U] [A.U] A* A* [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] [(alpha.U).U]",
          Edge("etaA ; [U.etaA]"),
          "~[chiG.U] [(U.chiG).U] A* [U.(A* A)] A [A.U] A* A* [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] "
          "[(alpha.U).U]", _,
          "~[chiG.U] [(U.chiG).U] A* [U.A*] [U.A] A [A.U] A* A* [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] "
          "[(alpha.U).U]", cell("pi"),
          "~[chiG.U] [(U.chiG).U] A* [U.A*] A A A* A* [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] "
          "[(alpha.U).U]", Edge("epsA ; epsA"),
          "[chiG.U] [(U.chiG).U] A* [U.A*] [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] [(alpha.U).U]", _,
          "[chiG.U] A* [U.(chiG.U)] [U.A*] [U.(U.alpha)] [U.A] [U.(alpha.U)] A [A.U] [(alpha.U).U]",
          cell("[U.Pialpha]", "Pi"),
          # the node printed here ends in [(A.U).U]; the arrow leaves that factor untouched, so it is [(alpha.U).U]
          "[chiG.U] A* [U.alpha] [U.(U.chiF)] [U.A] A [A.U] [(alpha.U).U]", cell("pi"),
          "[chiG.U] A* [U.alpha] [U.(U.chiF)] A A [(alpha.U).U]", _,
          "[chiG.U] A* [U.alpha] A [U.chiF] [alpha.U] A", _,
          "[chiG.U] A* [U.alpha] A [alpha.U] [U.chiF] A",
          # printed unmarked; Pi is the only cell of this shape
          cell("Pialpha", "Pi"),
          "alpha [U.chiF] A [(U.U).chiF] A"),
    right=("[G(A).U] [chiG.U] A* [chiG.U] A* [U.(U.alpha)] [U.A] A [(U.alpha).U] [A.U] [(alpha.U).U]", _,
           "[G(A).U] [chiG.U] A* [chiG.U] [U.alpha] A* [U.A] A" + _T1_TAIL, _,
           _T1 + "A* [U.A] A" + _T1_TAIL, Edge("[inv(epsA).U]"),
           "~" + _T1 + "A* [U.A] A [(A A*).U]" + _T1_TAIL, _,
           "~" + _T1 + "A* [U.A] A [A.U] [A*.U]" + _T1_TAIL, cell("pi"),
           "~" + _T1 + "A* A A [A*.U]" + _T1_TAIL, Edge("inv(etaA)"),
           _T1 + "A [A*.U]" + _T1_TAIL, _,
           "~[G(A).U] [chiG.U] A* [U.alpha] [chiG.(U.U)] A [A*.U]" + _T1_TAIL, _,
           "[G(A).U] [chiG.U] A* [U.alpha] A [(chiG.U).U] [A*.U]" + _T1_TAIL, cell("[Pialpha.U]", "Pi"),
           "[G(A).U] [chiG.U] A* [U.alpha] A [alpha.U] [(U.chiF).U] [A.U]", cell("Pialpha", "Pi"),
           "[G(A).U] alpha [U.chiF] A [(U.chiF).U] [A.U]", _,
           "alpha [U.F(A)] [U.chiF] [U.(chiF.U)] A [A.U]", cell("[U.omegaF]", "omega"),
           "alpha [U.chiF] [U.(U.chiF)] [U.A] A [A.U]", cell("pi"),
           "alpha [U.chiF] [U.(U.chiF)] A A", _,
           "alpha [U.chiF] A [(U.U).chiF] A"))

TRANSFORMATION_AXIOM_M = DiagramSpec(
    "transformation axiom: M",
    left=("[G(L).U] [chiG.U] A* [U.alpha] A [alpha.U] [(U.iotaF).U] [R*.U]", cell("Pialpha", "Pi"),
          "[G(L).U] alpha [U.chiF] A [(U.iotaF).U] [R*.U]", _,
          "[G(L).U] alpha [U.chiF] [U.(iotaF.U)] A [R*.U]", _,
          "alpha [U.F(L)] [U.chiF] [U.(iotaF.U)] A [R*.U]", cell("[U.gammaF]", "gamma"),
          "alpha [U.L] A [R*.U]", cell("mu"),
          "alpha U", Edge("[inv(epsL).U]"),
          "~alpha [(L L*).U]", _,
          "~alpha [L.U] [L*.U]", cell("lam", "lambda"),
          "alpha L A [L*.U]", Edge("inv(famL{alpha}) ; [isoI.alpha]"),
          "L [U.alpha] A [L*.U]"),
    right=("[G(L).U] [chiG.U] A* [U.alpha] A [alpha.U] [(U.iotaF).U] [R*.U]", cell("[Malpha.U]", "M"),
           "[G(L).U] [chiG.U] A* [U.alpha] A [(iotaG.U).U] [L*.U]", _,
           "[G(L).U] [chiG.U] A* [U.alpha] [iotaG.U] A [L*.U]", _,
           "[G(L).U] [chiG.U] A* [iotaG.U] [U.alpha] A [L*.U]", _,
           "~[G(L).U] [chiG.U] A* [iotaG.(U.U)] [U.alpha] A [L*.U]", _,
           "[G(L).U] [chiG.U] [(iotaG.U).U] A* [U.alpha] A [L*.U]", cell("[gammaG.U]", "gamma"),
           "[L.U] A* [U.alpha] A [L*.U]", Edge("lam ; epsA", "lambda"),
           "L [U.alpha] A [L*.U]"))

TRANSFORMATION_AXIOM_RHO = DiagramSpec(
    "transformation axiom: rho",
    left=("[chiG.U] A* [U.alpha] [U.(U.iotaF)] [U.R*] alpha", cell("[U.Malpha]", "M"),
          "[chiG.U] A* [U.(iotaG.U)] [U.L*] alpha", _,
          "[chiG.U] [(U.iotaG).U] A* [U.L*] alpha",
          # delta enters through its mate
          Edge("[(chiG (U.iotaG) etaR).U] ; [(inv(deltaG) R).U]", "delta"),
          "[G(R*).U] [R.U] A* [U.L*] alpha", Edge("inv(mu) ; [inv(etaR).U] ; epsA ; [U.epsL]", "mu"),
          "[G(R*).U] U alpha", _,
          "[G(R*).U] alpha"),
    right=("[chiG.U] A* [U.alpha] [U.(U.iotaF)] [U.R*] alpha", cell("rho"),
           "[chiG.U] A* [U.alpha] [U.(U.iotaF)] A R* alpha", Edge("famR*{alpha} ; [alpha.isoI]"),
           "[chiG.U] A* [U.alpha] A [alpha.U] [U.iotaF] R*", cell("Pialpha", "Pi"),
           "alpha [U.chiF] A [U.iotaF] R*", _,
           "~alpha [U.chiF] A [(U.U).iotaF] R*", _,
           "alpha [U.chiF] [U.(U.iotaF)] A R*",
           Edge("[U.(chiF (U.iotaF) etaR)] ; [U.(inv(deltaF) R)]", "delta"),
           "alpha [U.F(R*)] [U.R] A R*", Edge("inv(rho) ; [U.epsR]", "rho"),
           "alpha [U.F(R*)] U", _,
           "[G(R*).U] alpha"))

TRANSFORMATION_AXIOMS = (TRANSFORMATION_AXIOM_PI, TRANSFORMATION_AXIOM_M, TRANSFORMATION_AXIOM_RHO)


# -- modifications m: alpha => beta, perturbations sigma: m => n ----------------------------

MODIFICATION_AXIOM_PI = DiagramSpec(
    "modification axiom: Pi",
    left=("[G(U).m] [chiG.U] A* [U.alpha] A [alpha.U]", cell("Pialpha", "Pi"),
          "[G(U).m] alpha [U.chiF] A", cell("isom", "m"),
          "beta [m.F([U.U])] [U.chiF] A", Edge("[m.inv(famchiF{U, U})]"),
          "beta [U.chiF] [m.(F(U).F(U))] A", _,
          "beta [U.chiF] A [(m.F(U)).F(U)]"),
    right=("[G(U).m] [chiG.U] A* [U.alpha] A [alpha.U]", Edge("[inv(famchiG{U, U}).m]"),
           "[chiG.U] [(G(U).G(U)).m] A* [U.alpha] A [alpha.U]", _,
           "[chiG.U] A* [G(U).(G(U).m)] [U.alpha] A [alpha.U]", cell("[U.isom]", "m"),
           "[chiG.U] A* [U.beta] [G(U).(m.F(U))] A [alpha.U]", _,
           "[chiG.U] A* [U.beta] A [(G(U).m).F(U)] [alpha.U]", cell("[isom.U]", "m"),
           "[chiG.U] A* [U.beta] A [beta.U] [(m.F(U)).F(U)]", cell("Pibeta", "Pi"),
           "beta [U.chiF] A [(m.F(U)).F(U)]"))

MODIFICATION_AXIOM_M = DiagramSpec(
    "modification axiom: M",
    left=("[U.m] alpha [U.iotaF] R*", cell("Malpha", "M"),
          "[U.m] [iotaG.U] L*", _,
          "[iotaG.U] [U.m] L*", Edge("[inv(isoI).m] ; inv(famL*{m})"),
          "[iotaG.U] L* m"),
    right=("[U.m] alpha [U.iotaF] R*", cell("isom", "m"),
           "beta [m.U] [U.iotaF] R*", _,
           "beta [U.iotaF] [m.U] R*", Edge("[m.inv(isoI)] ; inv(famR*{m})"),
           "beta [U.iotaF] R* m", cell("Mbeta", "M"),
           "[iotaG.U] L* m"))

MODIFICATION_AXIOMS = (MODIFICATION_AXIOM_PI, MODIFICATION_AXIOM_M)

PERTURBATION_AXIOM = DiagramSpec(
    "perturbation axiom",
    left=("[U.m] alpha", cell("isom", "m"), "beta [m.U]", cell("[sigma.U]", "1[sigma.1]"), "beta [n.U]"),
    right=("[U.m] alpha", cell("[U.sigma]", "[1.sigma]1"), "[U.n] alpha", cell("ison", "n"), "beta [n.U]"))

MATE_CHI = mate("block chi: dual family is the mate", "chiF", "F([X.Y])", "[F(X).F(Y)]",
                "famchiF*{X, Y}", ("S:X", "S:Y"))
MATE_IOTA = mate("block iota: dual family is the mate", "iotaF", "F(I)", "I", "famiotaF*{}")
MATE_ALPHA = mate("block alpha: dual family is the mate", "alpha", "[G(X).U]", "[U.F(X)]",
                  "famalpha*{X}", ("S:X",))

FUNCTOR_MATES = (MATE_CHI, MATE_IOTA)
TRANSFORMATION_MATES = (MATE_ALPHA,)
