"""Structure files: one JSON document per structure, tagged by ``kind``.

Every document is an object whose first key is ``kind``; the remaining keys
are the body for that kind (see README for the schema).  Bodies nest, so a
transformation file carries its functors, which carry their carriers.
:func:`emit` writes a canonical layout (two-space indent, rows of scalars on
one line) so ``emit(parse(text)) == text`` for every file it wrote.
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable

from .errors import InputError
from .fincat import FinFunctor, make_category, validate_nat_transform
from .monoid import FiniteCommutativeMonoid, TwoOpSet, validate_hom, validate_monoid, validate_two_op_set
from .monoidal.category import (FinMonoidalCategory, MonoidalFunctorData,
                                product_monoidal, validate_monoidal, validate_monoidal_functor,
                                validate_monoidal_transformation)
from .monoidal.structures import BraidedCategory, BraidedFunctor, BraidingData, DualPair, braided, validate_braiding
from .monbicat.bicategory import FinBicategory
from .monbicat.carriers import MonoidalBicategoryData
from .monbicat.cells import MonoidalModificationData3, MonoidalTransformationData3
from .tridegen2.data import DoublyDegenData, IndexedDualPairBlock, MonoidObjectData
from .tridegen2.higher import DD2Functor
from .tridegen3 import (TD3Functor, TD3Transformation, TriplyDegenTricat, make_td3_functor, td3_from_raw)

# -- layout -------------------------------------------------------------------------------------


def _scalar(x) -> bool:
    return x is None or isinstance(x, (bool, int, float, str))


def _emit(x, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if _scalar(x):
        return json.dumps(x, ensure_ascii=False)
    if isinstance(x, (list, tuple)):
        if all(_scalar(v) for v in x):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in x) + "]"
        return "[\n" + ",\n".join(inner + _emit(v, indent + 1) for v in x) + "\n" + pad + "]"
    if isinstance(x, dict):
        if not x:
            return "{}"
        rows = [inner + json.dumps(str(k), ensure_ascii=False) + ": " + _emit(v, indent + 1) for k, v in x.items()]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    raise InputError(f"cannot emit a value of type {type(x).__name__}")


def emit(doc: Any) -> str:
    return _emit(doc, 0) + "\n"


def parse(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InputError("a structure file is an object with a 'kind' key")
    return doc


def read_doc(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)


# -- field access ---------------------------------------------------------------------------------


def _get(body: dict, key: str):
    try:
        return body[key]
    except (KeyError, TypeError):
        raise InputError(f"missing field '{key}'") from None


def _int(body: dict, key: str) -> int:
    v = _get(body, key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise InputError(f"field '{key}' must be an integer")
    return v


def _table_out(t) -> list:
    return [[*k, v] for k, v in sorted(t.items())]


def _table_in(rows, arity: int) -> dict:
    out = {}
    for r in rows:
        if not isinstance(r, list) or len(r) != arity + 1:
            raise InputError(f"family rows need {arity} indices and a value")
        out[tuple(int(v) for v in r[:arity])] = int(r[arity])
    return out


# -- kinds ----------------------------------------------------------------------------------------


def _monoid_out(m: FiniteCommutativeMonoid) -> dict:
    return m.raw()


def _monoid_in(b: dict) -> FiniteCommutativeMonoid:
    return validate_monoid(_int(b, "order"), _get(b, "table"), _int(b, "unit"))


def _two_out(t: TwoOpSet) -> dict:
    return {"size": t.size, "star": [list(r) for r in t.star], "circ": [list(r) for r in t.circ],
            "shared_unit": t.shared_unit}


def _two_in(b: dict) -> TwoOpSet:
    return validate_two_op_set(_int(b, "size"), _get(b, "star"), _get(b, "circ"), _int(b, "shared_unit"))


def _category_in(b: dict):
    return make_category(_int(b, "objects"), _get(b, "morphisms"), _get(b, "identities"), _get(b, "composition"),
                         b.get("object_names"), b.get("morphism_names"))


def _monoidal_out(c: FinMonoidalCategory) -> dict:
    return {"name": c.name, **c.raw()}


def _monoidal_in(b: dict) -> FinMonoidalCategory:
    return validate_monoidal(_category_in(_get(b, "category")), _get(b, "tensor_obj"), _get(b, "tensor_mor"),
                             _int(b, "unit"), _get(b, "associator"), _get(b, "left_unitor"),
                             _get(b, "right_unitor"), b.get("name", ""))


def _braided_out(bc: BraidedCategory) -> dict:
    return {"name": bc.name, "monoidal": _monoidal_out(bc.cat), "braiding": [list(r) for r in bc.braiding.c]}


def _braided_in(b: dict) -> BraidedCategory:
    c = _monoidal_in(_get(b, "monoidal"))
    br = BraidingData(tuple(tuple(int(v) for v in r) for r in _get(b, "braiding")))
    return braided(c, validate_braiding(br, c), b.get("name", ""))


def _fdata_out(F: MonoidalFunctorData) -> dict:
    return {"obj": list(F.underlying.obj), "mor": list(F.underlying.mor), "phi2": [list(r) for r in F.phi2],
            "phi0": F.phi0}


def _fdata_in(b: dict, S: FinMonoidalCategory, T: FinMonoidalCategory) -> MonoidalFunctorData:
    return validate_monoidal_functor(S, T, _get(b, "obj"), _get(b, "mor"), _get(b, "phi2"), _int(b, "phi0"))


def _mfunctor_out(F: MonoidalFunctorData) -> dict:
    return {"source": _monoidal_out(F.source), "target": _monoidal_out(F.target), **_fdata_out(F)}


def _mfunctor_in(b: dict) -> MonoidalFunctorData:
    return _fdata_in(b, _monoidal_in(_get(b, "source")), _monoidal_in(_get(b, "target")))


def _bfunctor_out(F: BraidedFunctor) -> dict:
    return {"source": _braided_out(F.source), "target": _braided_out(F.target), **_fdata_out(F.functor)}


def _bfunctor_in(b: dict) -> BraidedFunctor:
    from .monoidal.structures import validate_braided_functor
    S, T = _braided_in(_get(b, "source")), _braided_in(_get(b, "target"))
    return validate_braided_functor(S, T, _fdata_in(b, S.cat, T.cat))


def _btrans_out(t) -> dict:
    theta, bs, bt = t
    return {"source": _bfunctor_out(bs), "target": _bfunctor_out(bt), "components": list(theta.components)}


def _btrans_in(b: dict):
    """``(transformation, source braided functor, target braided functor)``."""
    bs, bt = _bfunctor_in(_get(b, "source")), _bfunctor_in(_get(b, "target"))
    return validate_monoidal_transformation(bs.functor, bt.functor, _get(b, "components")), bs, bt


def _td3_out(t: TriplyDegenTricat) -> dict:
    return t.raw()


def _td3_in(b: dict) -> TriplyDegenTricat:
    t = td3_from_raw(_monoid_in(_get(b, "monoid")), b)
    stored = {k: int(b[k]) for k in ("lam", "rho") if k in b}
    return replace(t, **stored) if stored else t


def _td3f_out(F: TD3Functor) -> dict:
    return {"source": _td3_out(F.source), "target": _td3_out(F.target), **F.raw()}


def _td3f_in(b: dict) -> TD3Functor:
    S, T = _td3_in(_get(b, "source")), _td3_in(_get(b, "target"))
    F = make_td3_functor(S, T, validate_hom(S.base, T.base, _get(b, "hom")), _int(b, "m"), _int(b, "chi"),
                         _int(b, "iota"), _int(b, "gamma"))
    stored = {k: int(b[k]) for k in ("omega", "delta") if k in b}
    return replace(F, **stored) if stored else F


def _td3t_out(t: TD3Transformation) -> dict:
    return {"source": _td3f_out(t.source), "target": _td3f_out(t.target), **t.raw()}


def _td3t_in(b: dict) -> TD3Transformation:
    return TD3Transformation(_td3f_in(_get(b, "source")), _td3f_in(_get(b, "target")), _int(b, "Pi"),
                             _int(b, "alpha"), _int(b, "M"))


def _block_out(k: IndexedDualPairBlock) -> dict:
    p = k.pair
    return {"pair": [p.x, p.x_dual, p.eps, p.eta], "fam": _table_out(k.fam), "fam_dual": _table_out(k.fam_dual)}


def _block_in(b: dict, arity: int) -> IndexedDualPairBlock:
    pair = _get(b, "pair")
    if not isinstance(pair, list) or len(pair) != 4:
        raise InputError("a dual pair is [x, x_dual, eps, eta]")
    return IndexedDualPairBlock(DualPair(*(int(v) for v in pair)), _table_in(_get(b, "fam"), arity),
                                _table_in(_get(b, "fam_dual"), arity))


def _dd_out(d: DoublyDegenData) -> dict:
    mo = d.monoid
    return {"name": d.name, "monoidal": _monoidal_out(d.cat), "box": _fdata_out(d.box),
            "monoid": {"obj": mo.obj, "mult": mo.mult, "unit": mo.unit, "iso": mo.iso},
            "A": _block_out(d.A), "L": _block_out(d.L), "R": _block_out(d.R),
            "pi": d.pi, "mu": d.mu, "lam": d.lam, "rho": d.rho}


def _dd_in(b: dict) -> DoublyDegenData:
    c = _monoidal_in(_get(b, "monoidal"))
    box = _fdata_in(_get(b, "box"), product_monoidal(c, c), c)
    mo = _get(b, "monoid")
    monoid = MonoidObjectData(_int(mo, "obj"), _int(mo, "mult"), _int(mo, "unit"), _int(mo, "iso"))
    return DoublyDegenData(c, box, monoid, _block_in(_get(b, "A"), 3), _block_in(_get(b, "L"), 1),
                           _block_in(_get(b, "R"), 1), _int(b, "pi"), _int(b, "mu"), _int(b, "lam"),
                           _int(b, "rho"), b.get("name", ""))


def _ddf_out(F: DD2Functor) -> dict:
    return {"name": F.name, "source": _dd_out(F.source), "target": _dd_out(F.target),
            "functor": _fdata_out(F.functor), "chi": _block_out(F.chi), "iota": _block_out(F.iota),
            "omega": F.omega, "gamma": F.gamma, "delta": F.delta}


def _ddf_in(b: dict) -> DD2Functor:
    S, T = _dd_in(_get(b, "source")), _dd_in(_get(b, "target"))
    return DD2Functor(S, T, _fdata_in(_get(b, "functor"), S.cat, T.cat), _block_in(_get(b, "chi"), 2),
                      _block_in(_get(b, "iota"), 0), _int(b, "omega"), _int(b, "gamma"), _int(b, "delta"),
                      b.get("name", ""))


def _bicat_out(B: FinBicategory) -> dict:
    return {
        "name": B.name, "objects": B.n_objects,
        "homs": [{"a": a, "b": b, "category": c.raw()} for (a, b), c in sorted(B.hom.items())],
        "identities": list(B.ident),
        "comp1": [{"abc": list(k), "table": [list(r) for r in t]} for k, t in sorted(B.comp1.items())],
        "comp2": [{"abc": list(k), "table": [list(r) for r in t]} for k, t in sorted(B.comp2.items())],
        "associator": [{"abcd": list(k), "table": [[list(r) for r in p] for p in t]}
                       for k, t in sorted(B.assoc.items())],
        "left_unitor": [{"ab": list(k), "table": list(t)} for k, t in sorted(B.lunit.items())],
        "right_unitor": [{"ab": list(k), "table": list(t)} for k, t in sorted(B.runit.items())],
    }


def _keyed(rows, key: str) -> dict:
    return {tuple(int(v) for v in _get(r, key)): _get(r, "table") for r in rows}


def _bicat_in(b: dict) -> FinBicategory:
    hom = {(_int(r, "a"), _int(r, "b")): _category_in(_get(r, "category")) for r in _get(b, "homs")}
    return FinBicategory(_int(b, "objects"), hom, _keyed(_get(b, "comp1"), "abc"), _keyed(_get(b, "comp2"), "abc"),
                         list(_get(b, "identities")), _keyed(_get(b, "associator"), "abcd"),
                         _keyed(_get(b, "left_unitor"), "ab"), _keyed(_get(b, "right_unitor"), "ab"),
                         b.get("name", ""))


def _monbicat_out(d: MonoidalBicategoryData) -> dict:
    return {"name": d.name, "structure": _dd_out(d.structure), "bicategory": _bicat_out(d.bicat)}


def _monbicat_in(b: dict) -> MonoidalBicategoryData:
    return MonoidalBicategoryData(_bicat_in(_get(b, "bicategory")), _dd_in(_get(b, "structure")), b.get("name", ""))


def _mbt_out(t: MonoidalTransformationData3) -> dict:
    return {"name": t.name, "source": _ddf_out(t.source), "target": _ddf_out(t.target), "obj": t.obj,
            "fam": _table_out(t.fam), "Pi": t.Pi, "M": t.M}


def _mbt_in(b: dict) -> MonoidalTransformationData3:
    return MonoidalTransformationData3(_ddf_in(_get(b, "source")), _ddf_in(_get(b, "target")), _int(b, "obj"),
                                       _table_in(_get(b, "fam"), 1), _int(b, "Pi"), _int(b, "M"),
                                       b.get("name", ""))


def _mbm_out(m: MonoidalModificationData3) -> dict:
    return {"source": _mbt_out(m.source), "target": _mbt_out(m.target), "comp": m.comp}


def _mbm_in(b: dict) -> MonoidalModificationData3:
    return MonoidalModificationData3(_mbt_in(_get(b, "source")), _mbt_in(_get(b, "target")), _int(b, "comp"))


KINDS: dict[str, tuple[Callable, Callable]] = {
    "monoid": (_monoid_out, _monoid_in),
    "two-op": (_two_out, _two_in),
    "category": (lambda c: c.raw(), _category_in),
    "monoidal": (_monoidal_out, _monoidal_in),
    "braided": (_braided_out, _braided_in),
    "monoidal-functor": (_mfunctor_out, _mfunctor_in),
    "braided-functor": (_bfunctor_out, _bfunctor_in),
    "braided-transformation": (_btrans_out, _btrans_in),
    "td3": (_td3_out, _td3_in),
    "td3-functor": (_td3f_out, _td3f_in),
    "td3-transformation": (_td3t_out, _td3t_in),
    "dd": (_dd_out, _dd_in),
    "dd-functor": (_ddf_out, _ddf_in),
    "bicategory": (_bicat_out, _bicat_in),
    "monbicat": (_monbicat_out, _monbicat_in),
    "mb-transformation": (_mbt_out, _mbt_in),
    "mb-modification": (_mbm_out, _mbm_in),
}


def to_doc(kind: str, obj) -> dict:
    try:
        out, _ = KINDS[kind]
    except KeyError:
        raise InputError(f"unknown kind {kind!r}") from None
    return {"kind": kind, **out(obj)}


def from_doc(doc: dict, kind: str | None = None):
    k = _get(doc, "kind")
    if kind is not None and k != kind:
        raise InputError(f"expected a {kind} file, got {k!r}")
    try:
        _, inp = KINDS[k]
    except KeyError:
        raise InputError(f"unknown kind {k!r}") from None
    try:
        return inp(doc)
    except (TypeError, ValueError, IndexError, AttributeError) as e:
        raise InputError(f"malformed {k} body: {e}") from None


def load(path: str | Path, kind: str | None = None):
    return from_doc(read_doc(path), kind)


def dump(kind: str, obj) -> str:
    return emit(to_doc(kind, obj))


__all__ = ["KINDS", "emit", "parse", "read_doc", "to_doc", "from_doc", "load", "dump", "FinFunctor",
           "validate_nat_transform"]
