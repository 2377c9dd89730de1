"""Shipped monoidal and braided monoidal categories.

Pointed categories have objects ``Z/n`` and endomorphism phases ``Z/n`` at
each object; morphism ``(a, s)`` is stored at index ``a * n + s``.  Tensor
adds objects and phases.  Associator and unitor phases may be twisted by a
3-cocycle and a constant.
"""

from __future__ import annotations

from typing import Callable

from ..fincat import FinCategory, discrete_category, make_category, one_object_category
from ..monoid import FiniteCommutativeMonoid, cyclic_group
from .category import (FinMonoidalCategory, MonoidalFunctorData, strict_tables, validate_monoidal,
                       validate_monoidal_functor)
from .structures import BraidedCategory, BraidingData, braided, identity_braiding


def discrete_monoidal(m: FiniteCommutativeMonoid, name: str = "") -> FinMonoidalCategory:
    """Objects are the elements, only identities, tensor is the operation."""
    base = discrete_category(m.order)
    to = [list(r) for r in m.op]
    assoc, lu, ru = strict_tables(base, to, m.unit)
    return validate_monoidal(base, to, to, m.unit, assoc, lu, ru, name or f"disc{m.order}")


def one_object_monoidal(m: FiniteCommutativeMonoid, name: str = "") -> FinMonoidalCategory:
    """One object whose endomorphisms form ``m``; tensor of morphisms is the operation."""
    base = one_object_category(m.op, m.unit)
    assoc, lu, ru = strict_tables(base, [[0]], 0)
    return validate_monoidal(base, [[0]], [list(r) for r in m.op], 0, assoc, lu, ru, name or f"end{m.order}")


def pointed_base(n: int) -> FinCategory:
    mors = [(a, a) for a in range(n) for _ in range(n)]
    comps = [(a * n + t, a * n + s, a * n + (s + t) % n) for a in range(n) for s in range(n) for t in range(n)]
    return make_category(n, mors, [a * n for a in range(n)], comps)


def pointed_monoidal(n: int, cocycle: Callable[[int, int, int], int] | None = None, unit_phase: int = 0,
                     name: str = "") -> FinMonoidalCategory:
    base = pointed_base(n)
    mor = lambda a, s: a * n + s % n
    to = [[(a + b) % n for b in range(n)] for a in range(n)]
    tm = [[mor((f // n + g // n) % n, f % n + g % n) for g in range(n * n)] for f in range(n * n)]
    w = cocycle or (lambda a, b, c: 0)
    assoc = [[[mor((x + y + z) % n, w(x, y, z)) for z in range(n)] for y in range(n)] for x in range(n)]
    lu = [mor(a, unit_phase) for a in range(n)]
    return validate_monoidal(base, to, tm, 0, assoc, lu, list(lu), name or f"pointed{n}")


def pointed_braiding(cat: FinMonoidalCategory, form: Callable[[int, int], int]) -> BraidingData:
    n = cat.base.n_objects
    return BraidingData(tuple(tuple(((x + y) % n) * n + form(x, y) % n for y in range(n)) for x in range(n)))


def pointed_functor(src: FinMonoidalCategory, tgt: FinMonoidalCategory, obj_scale: int,
                    phase_scale: int) -> MonoidalFunctorData:
    """``(a, s) -> (k a, j s)`` with identity constraints."""
    n = src.base.n_objects
    obj = [(obj_scale * a) % n for a in range(n)]
    mor = [obj[f // n] * n + (phase_scale * (f % n)) % n for f in range(n * n)]
    phi2 = [[tgt.id(tgt.t(obj[x], obj[y])) for y in range(n)] for x in range(n)]
    return validate_monoidal_functor(src, tgt, obj, mor, phi2, tgt.id(tgt.unit_obj))


def trilinear(a: int, b: int, c: int) -> int:
    return a * b * c


# -- the shipped catalog -------------------------------------------------------------


def z3_pointed() -> FinMonoidalCategory:
    return pointed_monoidal(3, name="z3pointed")


def z3_pointed_braided() -> BraidedCategory:
    c = z3_pointed()
    return braided(c, pointed_braiding(c, lambda a, b: a * b), "z3pointed")


def z3_bad_braiding() -> BraidingData:
    """Phase ``a + b``: natural but violates the hexagons."""
    return pointed_braiding(z3_pointed(), lambda a, b: a + b)


def z3_cocycle() -> FinMonoidalCategory:
    """Non-strict: associator phase ``abc`` and unitor phase 1."""
    return pointed_monoidal(3, trilinear, 1, name="z3cocycle")


def z_category() -> FinMonoidalCategory:
    """One object with endomorphisms Z/2."""
    return one_object_monoidal(cyclic_group(2), "Z")


def z_braided() -> BraidedCategory:
    c = z_category()
    return braided(c, identity_braiding(c), "Z")


def discrete_braided(m: FiniteCommutativeMonoid, name: str = "") -> BraidedCategory:
    c = discrete_monoidal(m, name)
    return braided(c, identity_braiding(c), c.name)


def shipped_monoidal() -> list[FinMonoidalCategory]:
    """Every monoidal category the test suites sweep over."""
    from ..monoid import enumerate_cmonoids
    out = [discrete_monoidal(cyclic_group(2), "discZ2"), discrete_monoidal(cyclic_group(4), "discZ4")]
    for k in (2, 3):
        for i, m in enumerate(enumerate_cmonoids(k)):
            out.append(discrete_monoidal(m, f"disc{k}_{i}"))
    out += [z_category(), z3_pointed(), z3_cocycle()]
    return out


def shipped_braided() -> list[BraidedCategory]:
    return [discrete_braided(cyclic_group(2), "discZ2"), discrete_braided(cyclic_group(4), "discZ4"),
            z_braided(), z3_pointed_braided()]
