"""Monoidal bicategories on one-object carriers.

A monoidal bicategory whose underlying bicategory has a single object is
the same thing as a doubly degenerate tricategory: the hom category of
the carrier is the monoidal category of the structure, horizontal
composition is its ``⊗`` and the monoidal product of the bicategory is
the structure's box.  The tricategory axioms are then the three
pentagonator and unit diagrams of the doubly degenerate data.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import InputError, LawViolation
from ..monoid import FiniteCommutativeMonoid
from ..monoidal.instances import discrete_braided, one_object_monoidal, z3_pointed_braided
from ..monoidal.structures import braided, identity_braiding
from ..tridegen2.comparison import functor_F
from ..tridegen2.data import CheckReport, DoublyDegenData, dd_report
from .bicategory import FinBicategory, bicategory_report, suspension


@dataclass(frozen=True, eq=False)
class MonoidalBicategoryData:
    bicat: FinBicategory
    structure: DoublyDegenData
    name: str = ""

    @property
    def cat(self):
        return self.structure.cat


def carrier_of(dd: DoublyDegenData, name: str = "") -> MonoidalBicategoryData:
    return MonoidalBicategoryData(suspension(dd.cat), dd, name or dd.name)


def _suspension_mismatch(B: FinBicategory, dd: DoublyDegenData) -> str | None:
    C = dd.cat
    if B.n_objects != 1:
        return "the carrier has more than one object"
    if B.hom[(0, 0)] != C.base:
        return "the hom category differs from the structure's category"
    tables = ((B.comp1[(0, 0, 0)], C.tensor_obj, "composition of 1-cells"),
              (B.comp2[(0, 0, 0)], C.tensor_mor, "horizontal composition of 2-cells"),
              (B.assoc[(0, 0, 0, 0)], C.assoc, "associator"), (B.lunit[(0, 0)], C.lunit, "left unitor"),
              (B.runit[(0, 0)], C.runit, "right unitor"), ((B.ident[0],), (C.unit_obj,), "identity 1-cell"))
    for got, want, what in tables:
        if _as_tuple(got) != _as_tuple(want):
            return f"{what} differs from the structure's tensor"
    return None


def _as_tuple(x):
    if isinstance(x, (list, tuple)):
        return tuple(_as_tuple(v) for v in x)
    return x


def monoidal_bicategory_report(d: MonoidalBicategoryData, stop_early: bool = False) -> CheckReport:
    rep = CheckReport()
    for n, ok, detail in bicategory_report(d.bicat, stop_early).checks:
        rep.checks.append((f"carrier: {n}", ok, detail))
    if stop_early and not rep.passed:
        return rep
    why = _suspension_mismatch(d.bicat, d.structure)
    rep.checks.append(("carrier has one object and the structure's hom", why is None, why or ""))
    if why is not None:
        return rep
    rep.checks += dd_report(d.structure, stop_early).checks
    return rep


def validate_monoidal_bicategory(d: MonoidalBicategoryData) -> MonoidalBicategoryData:
    rep = monoidal_bicategory_report(d, stop_early=True)
    if not rep.passed:
        name, detail = rep.failures()[0]
        raise LawViolation(name, None, detail)
    return d


# -- shipped carriers ---------------------------------------------------------------------------


def discrete_carrier(m: FiniteCommutativeMonoid, name: str = "") -> MonoidalBicategoryData:
    """1-cells are the elements of ``m``; only identity 2-cells; every constraint is an identity."""
    bx = discrete_braided(m, name or f"disc{m.order}")
    return carrier_of(functor_F(bx), f"Sigma {bx.name}")


def loop_carrier(m: FiniteCommutativeMonoid, name: str = "") -> MonoidalBicategoryData:
    """One 1-cell whose 2-cells are the elements of ``m``; every constraint is an identity."""
    c = one_object_monoidal(m, name or f"end{m.order}")
    return carrier_of(functor_F(braided(c, identity_braiding(c), c.name)), f"Sigma {c.name}")


def z3_suspension() -> MonoidalBicategoryData:
    """Box constraints carry the phases of the ℤ/3-pointed braiding."""
    return carrier_of(functor_F(z3_pointed_braided()), "Sigma z3pointed")


def with_pi(d: MonoidalBicategoryData, pi: int) -> MonoidalBicategoryData:
    C = d.cat
    old = d.structure.pi
    if C.src(pi) != C.src(old) or C.tgt(pi) != C.tgt(old):
        raise InputError("the replacement pi has a different boundary")
    return replace(d, structure=replace(d.structure, pi=pi), name=f"{d.name} with pi = {pi}")


def pi_mutations(d: MonoidalBicategoryData) -> list[MonoidalBicategoryData]:
    """Every other invertible 2-cell with the boundary of pi."""
    C = d.cat
    old = d.structure.pi
    return [with_pi(d, f) for f in C.base.hom(C.src(old), C.tgt(old)) if f != old and C.base.is_iso(f)]
