"""The structure files shipped in ``degentri/data``, and the code that writes them.

``python3 -m degentri.shipped`` regenerates the directory.  Names ending in
``-bad`` hold data that parses but breaks a law; they exist for the
negative paths of the command line.
"""

from __future__ import annotations

import sys
from importlib import resources
from pathlib import Path
from typing import Callable

from . import io
from .monoid import cyclic_group, multiplicative_monoid, validate_two_op_set
from .monoidal.category import identity_monoidal_functor, validate_monoidal_transformation
from .monoidal.instances import (pointed_functor, shipped_braided, shipped_monoidal, z3_bad_braiding, z3_cocycle,
                                 z3_pointed_braided)
from .monoidal.structures import validate_braided_functor
from .monbicat.bicategory import suspension
from .monbicat.carriers import pi_mutations, z3_suspension
from .monbicat.cells import enumerate_mb_transformations, identity_mb_modification, identity_mb_transformation
from .monbicat.hom import shipped_catalog
from .tridegen2.comparison import functor_F, functor_F_functor
from .tridegen3 import identity_td3_functor, make_td3, unit_td3, unit_td3_transformation, z2_structure


def _slug(name: str) -> str:
    return name.replace("Sigma ", "sigma-").replace(" ", "-").lower()


def _braided_identity(b):
    return validate_braided_functor(b, b, identity_monoidal_functor(b.cat))


def _z3_double():
    b = z3_pointed_braided()
    return validate_braided_functor(b, b, pointed_functor(b.cat, b.cat, 2, 1))


def _identity_theta(bf):
    F = bf.functor
    comps = [F.target.id(F.underlying.obj[x]) for x in range(F.source.base.n_objects)]
    return validate_monoidal_transformation(F, F, comps), bf, bf


def _catalog_functors():
    return {_slug(e.carrier.name): e for e in shipped_catalog()}


def _good() -> dict[str, tuple[str, Callable]]:
    out: dict[str, tuple[str, Callable]] = {
        "monoid-z2": ("monoid", lambda: cyclic_group(2)),
        "monoid-z3": ("monoid", lambda: cyclic_group(3)),
        "monoid-z4": ("monoid", lambda: cyclic_group(4)),
        "monoid-mult4": ("monoid", lambda: multiplicative_monoid(4)),
        "two-op-z2": ("two-op", lambda: validate_two_op_set(2, [[0, 1], [1, 0]], [[0, 1], [1, 0]], 0)),
        "category-pointed3": ("category", lambda: z3_cocycle().base),
    }
    for c in shipped_monoidal():
        out[f"monoidal-{_slug(c.name)}"] = ("monoidal", lambda c=c: c)
    for b in shipped_braided():
        nm = _slug(b.name)
        out[f"braided-{nm}"] = ("braided", lambda b=b: b)
        out[f"braided-functor-id-{nm}"] = ("braided-functor", lambda b=b: _braided_identity(b))
        out[f"dd-{nm}"] = ("dd", lambda b=b: functor_F(b))
    out["braided-functor-double-z3pointed"] = ("braided-functor", _z3_double)
    out["braided-transformation-id-z3pointed"] = ("braided-transformation",
                                                  lambda: _identity_theta(_braided_identity(z3_pointed_braided())))
    out["dd-functor-id-z3pointed"] = ("dd-functor", lambda: functor_F_functor(_braided_identity(z3_pointed_braided())))
    out["dd-functor-double-z3pointed"] = ("dd-functor", lambda: functor_F_functor(_z3_double()))
    out.update({
        "td3-unit-z2": ("td3", lambda: unit_td3(cyclic_group(2))),
        "td3-z2-d1": ("td3", lambda: z2_structure(d=1)),
        "td3-z3": ("td3", lambda: make_td3(cyclic_group(3), 1, 2, 1, 1, 2, 1, 2, 1)),
        "td3-functor-id-z2-d1": ("td3-functor", lambda: identity_td3_functor(z2_structure(d=1))),
        "td3-transformation-unit-z2-d1": ("td3-transformation",
                                          lambda: unit_td3_transformation(identity_td3_functor(z2_structure(d=1)))),
        "bicategory-sigma-z3cocycle": ("bicategory", lambda: suspension(z3_cocycle(), "Sigma z3cocycle")),
    })
    for nm, e in _catalog_functors().items():
        out[f"monbicat-{nm}"] = ("monbicat", lambda e=e: e.carrier)
    out["mb-transformation-id-sigma-z3pointed"] = (
        "mb-transformation", lambda: identity_mb_transformation(_catalog_functors()["sigma-z3pointed"].functors[0]))
    out["mb-transformation-end2"] = ("mb-transformation", lambda: _end2_transformations()[-1])
    out["mb-modification-id-sigma-end2"] = ("mb-modification",
                                            lambda: identity_mb_modification(_end2_transformations()[-1]))
    return out


def _end2_transformations():
    F = _catalog_functors()["sigma-end2"].functors[0]
    return enumerate_mb_transformations(F, F)


def _bad() -> dict[str, tuple[str, Callable[[], dict]]]:
    """Documents, not structures: each is a good document with one entry changed."""
    def braided_bad():
        doc = io.to_doc("braided", z3_pointed_braided())
        doc["braiding"] = [list(r) for r in z3_bad_braiding().c]
        doc["name"] = "z3pointed with phase a+b"
        return doc

    def monoidal_bad():
        doc = io.to_doc("monoidal", z3_cocycle())
        a = doc["associator"]
        a[1][1][1] = a[1][1][1] - a[1][1][1] % 3 + (a[1][1][1] + 1) % 3
        doc["name"] = "z3cocycle with one associator component shifted"
        return doc

    def monbicat_bad():
        return io.to_doc("monbicat", pi_mutations(z3_suspension())[0])

    def transformation_bad():
        t = identity_mb_transformation(_catalog_functors()["sigma-z3pointed"].functors[0])
        doc = io.to_doc("mb-transformation", t)
        C = t.source.target.cat
        doc["Pi"] = next(f for f in C.base.hom(C.src(t.Pi), C.tgt(t.Pi)) if f != t.Pi)
        doc["name"] = "identity with Pi replaced"
        return doc

    return {"braided-z3pointed-bad": ("braided", braided_bad), "monoidal-z3cocycle-bad": ("monoidal", monoidal_bad),
            "monbicat-sigma-z3pointed-bad": ("monbicat", monbicat_bad),
            "mb-transformation-z3pointed-bad": ("mb-transformation", transformation_bad)}


def documents() -> dict[str, dict]:
    """Every shipped file name (without extension) and its document."""
    docs = {name: io.to_doc(kind, build()) for name, (kind, build) in _good().items()}
    docs.update({name: build() for name, (_, build) in _bad().items()})
    return dict(sorted(docs.items()))


def data_dir() -> Path:
    return Path(str(resources.files("degentri") / "data"))


def shipped_path(name: str) -> Path:
    return data_dir() / f"{name}.json"


def shipped_names() -> list[str]:
    return sorted(p.stem for p in data_dir().glob("*.json"))


def write_all(target: Path | None = None) -> list[Path]:
    target = data_dir() if target is None else target
    target.mkdir(parents=True, exist_ok=True)
    out = []
    for name, doc in documents().items():
        p = target / f"{name}.json"
        p.write_text(io.emit(doc), encoding="utf-8")
        out.append(p)
    return out


if __name__ == "__main__":
    for p in write_all(Path(sys.argv[1]) if len(sys.argv) > 1 else None):
        print(p)
