"""Static boundary audit of every transcribed diagram.

Each diagram is resolved against the vocabulary it is written in: every
edge must have an explicit or unmarked core whose source and target are
the printed nodes, and both sides must join the same endpoints.  Single
pastings that define a cell must start and end at their declared
boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..tridegen2 import library as T
from ..tridegen2.data import CheckReport, _dd_vocab
from ..tridegen2.engine import DiagramSpec, Resolver
from ..tridegen2.higher import vocabulary as higher_vocabulary
from ..tridegen2.notation import parse_obj
from ..tridegen2.vocab import Vocabulary
from . import library as L
from .cells import BOX_INTERCHANGE, _vocab
from .library import CompositeSpec


@dataclass(frozen=True)
class DiagramGroup:
    name: str
    vocabulary: Callable[[], Vocabulary]
    diagrams: tuple


def diagram_groups() -> list[DiagramGroup]:
    return [
        DiagramGroup("doubly degenerate structure", _dd_vocab, T.DD_BLOCKS + T.DD_MATES + T.DD_AXIOMS),
        DiagramGroup("functors of doubly degenerate structures", higher_vocabulary,
                     T.FUNCTOR_BLOCKS + T.FUNCTOR_MATES + T.FUNCTOR_AXIOMS),
        DiagramGroup("transformations, modifications, perturbations", higher_vocabulary,
                     T.TRANSFORMATION_BLOCKS + T.TRANSFORMATION_MATES + T.TRANSFORMATION_AXIOMS
                     + T.MODIFICATION_AXIOMS + (T.PERTURBATION_AXIOM,)),
        DiagramGroup("monoidal transformations and modifications", lambda: _vocab("transformation"),
                     L.MT_BLOCKS + L.MT_AXIOMS + L.MM_AXIOMS),
        DiagramGroup("composite monoidal transformation", lambda: _vocab("composition"), L.COMPOSITES),
        DiagramGroup("box product of monoidal transformations", lambda: _vocab("box"), L.BOX_COMPOSITES),
        DiagramGroup("box interchange", lambda: _vocab("interchange"), (BOX_INTERCHANGE,)),
    ]


def _audit_one(d, v: Vocabulary) -> tuple[bool, str, int]:
    ctx = v.context()
    r = Resolver(ctx, v.rules(), v.via())
    if isinstance(d, DiagramSpec):
        rd = r.resolve(d)
        edges = len(rd.left.edges) + len(rd.right.edges)
        return rd.ok, "; ".join(rd.problems), edges
    assert isinstance(d, CompositeSpec)
    side = r.resolve_side(d.side)
    problems = [f"edge {e.src} -> {e.tgt}: {e.error}" for e in side.edges if e.error]
    for what, node, want in (("source", d.side[0], d.src), ("target", d.side[-1], d.tgt)):
        if parse_obj(node.lstrip("~"), ctx) != parse_obj(want, ctx):
            problems.append(f"declared {what} {want} differs from the pasting's {node}")
    return not problems and side.ok, "; ".join(problems), len(side.edges)


def audit_diagrams() -> CheckReport:
    rep = CheckReport()
    for g in diagram_groups():
        v = g.vocabulary()
        for d in g.diagrams:
            ok, detail, edges = _audit_one(d, v)
            rep.checks.append((f"{g.name}: {d.name}", ok, detail or f"{edges} edges"))
    return rep


def diagram_library() -> list[dict]:
    """The transcription as plain data: group, name, index variables and the printed nodes and edges."""
    out = []
    for g in diagram_groups():
        for d in g.diagrams:
            sides = {"left": d.left, "right": d.right} if isinstance(d, DiagramSpec) else {"side": d.side}
            out.append({"group": g.name, "name": d.name, "indices": list(d.indices),
                        **{k: [_show(x) for x in s] for k, s in sides.items()}})
    return out


def _show(x) -> str:
    if isinstance(x, str):
        return x
    return f"--{x.core}-->" if x.core else "-->"
