"""Command line: ``degentri <verb> ...``.

Exit status 0 means every check passed (for witness verbs: a witness was
found), 1 means a check failed, 2 means the input or the usage was wrong.
Reports carry no timing or paths beyond the arguments, so a fixed command
prints the same bytes every time.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import io
from .errors import InputError, LawViolation
from .monbicat.audit import audit_diagrams
from .monbicat.bicategory import bicategory_report
from .monbicat.carriers import monoidal_bicategory_report
from .monbicat.cells import (compose_mb_transformations, mb_modification_report, mb_transformation_report,
                             underlying_matches, vcompose_modifications)
from .monbicat.hom import assemble_monbicat
from .monoid import eckmann_hilton_check, enumerate_cmonoids
from .monoidal.category import compose_monoidal_functors
from .monoidal.structures import check_symmetry, validate_braided_functor, validate_braiding
from .tridegen2.comparison import (compose_restricted, count_iconic_2cells, functor_U, restricted_failure,
                                   roundtrip_FU, roundtrip_UF)
from .tridegen2.data import CheckReport, dd_report
from .tridegen2.higher import functor_report
from .tridegen2.multiplication import build_multiplication, derive_braiding
from .tridegen3 import (axiom_oracle_td3, check_xi3_triequivalence, compose_td3_functors,
                        compose_td3_transformations, derivation_sweep, functor_axioms, transformation_axioms,
                        witness_non_associative, witness_non_bicategory, witness_non_category, witness_xi4_unfaithful)


class Outcome:
    """Checks plus optional payload; turned into a report by :func:`render`."""

    def __init__(self):
        self.checks: list[tuple[str, bool, str]] = []
        self.result: dict = {}
        self.witness: dict | None = None
        self.error: str | None = None

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((name, bool(ok), detail))
        return bool(ok)

    def extend(self, rep: CheckReport, prefix: str = "") -> None:
        for n, ok, d in rep.checks:
            self.check(prefix + n, ok, d)

    def axioms(self, rep) -> None:
        for n, ok in rep.checks:
            self.check(n, ok)

    @property
    def code(self) -> int:
        if self.error is not None:
            return 2
        return 0 if all(ok for _, ok, _ in self.checks) else 1


def render(command: Sequence[str], out: Outcome, fmt: str) -> str:
    status = {0: "pass", 1: "fail", 2: "error"}[out.code]
    if fmt == "json":
        doc = {"command": " ".join(command), "status": status,
               "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in out.checks]}
        if out.witness is not None:
            doc["witness"] = out.witness
        if out.result:
            doc["result"] = out.result
        if out.error is not None:
            doc["error"] = out.error
        return io.emit(doc)
    lines = [f"command: {' '.join(command)}"]
    for n, ok, d in out.checks:
        d = d[len(n) + 2:] if d.startswith(n + ": ") else d
        lines.append(f"{'PASS' if ok else 'FAIL'}  {n}" + (f": {d}" if d and not ok else ""))
    if out.witness is not None:
        lines.append("witness: " + json.dumps(out.witness, ensure_ascii=False, sort_keys=False))
    for k, v in out.result.items():
        if isinstance(v, dict) and "kind" in v:
            v = f"a {v['kind']} structure (printed in full with --report json)"
        lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v, ensure_ascii=False)}")
    if out.error is not None:
        lines.append(f"error: {out.error}")
    passed = sum(ok for _, ok, _ in out.checks)
    lines.append(f"status: {status} ({passed}/{len(out.checks)} checks)")
    return "\n".join(lines) + "\n"


def _load(out: Outcome, path: str, kind: str | None = None):
    """The parsed structure, or ``None`` after recording a law failure met while parsing."""
    try:
        return io.load(path, kind)
    except LawViolation as e:
        out.check(f"{kind or 'structure'} laws", False, str(e))
        return None


# -- validate ----------------------------------------------------------------------------------------


def _validated_on_parse(label: str) -> Callable:
    def run(out: Outcome, obj) -> None:
        out.check(label, True)
    return run


def _two_op(out: Outcome, t) -> None:
    out.check("two operations with a shared unit satisfy interchange", True)
    try:
        m = eckmann_hilton_check(t)
    except LawViolation as e:
        out.check("Eckmann-Hilton: operations agree and commute", False, str(e))
        return
    out.check("Eckmann-Hilton: operations agree and commute", True)
    out.result["monoid"] = m.raw()


def _braided(out: Outcome, b) -> None:
    out.check("braiding natural and both hexagons hold", True)
    sym, at = check_symmetry(b.braiding, b.cat)
    out.result["symmetric"] = sym
    if not sym:
        out.result["asymmetric_at"] = list(at)


VALIDATORS: dict[str, Callable[[Outcome, object], None]] = {
    "monoid": _validated_on_parse("commutative monoid laws"),
    "two-op": _two_op,
    "category": _validated_on_parse("category laws"),
    "monoidal": _validated_on_parse("pentagon, triangle and naturality"),
    "braided": _braided,
    "monoidal-functor": _validated_on_parse("monoidal functor laws"),
    "braided-functor": _validated_on_parse("braided monoidal functor laws"),
    "braided-transformation": _validated_on_parse("monoidal transformation laws"),
    "td3": lambda out, t: out.axioms(axiom_oracle_td3(t)),
    "td3-functor": lambda out, F: out.axioms(functor_axioms(F)),
    "td3-transformation": lambda out, t: out.axioms(transformation_axioms(t)),
    "dd": lambda out, d: out.extend(dd_report(d)),
    "dd-functor": lambda out, F: out.extend(functor_report(F)),
    "bicategory": lambda out, B: out.extend(bicategory_report(B)),
    "monbicat": lambda out, X: out.extend(monoidal_bicategory_report(X)),
    "mb-transformation": lambda out, t: out.extend(mb_transformation_report(t)),
    "mb-modification": lambda out, m: out.extend(mb_modification_report(m)),
}


def cmd_validate(a, out: Outcome) -> None:
    obj = _load(out, a.file, a.kind)
    if obj is not None:
        VALIDATORS[a.kind](out, obj)


# -- compose -----------------------------------------------------------------------------------------


def _compose_braided(g, f):
    return validate_braided_functor(f.source, g.target, compose_monoidal_functors(g.functor, f.functor))


def _compose_mb(out: Outcome, beta, alpha):
    comp = compose_mb_transformations(beta, alpha)
    out.check("composite monoidal transformation re-validates", True)
    out.check("composite family equals the plain composite", underlying_matches(comp, beta, alpha))
    return comp


COMPOSERS: dict[str, tuple[str, Callable]] = {
    "monoidal-functor": ("monoidal-functor", lambda out, g, f: compose_monoidal_functors(g, f)),
    "braided-functor": ("braided-functor", lambda out, g, f: _compose_braided(g, f)),
    "td3-functor": ("td3-functor", lambda out, g, f: compose_td3_functors(g, f)),
    "td3-transformation": ("td3-transformation", lambda out, b, a: compose_td3_transformations(b, a)),
    "dd-functor": ("dd-functor", lambda out, g, f: compose_restricted(g, f)),
    "mb": ("mb-transformation", _compose_mb),
    "mb-modification": ("mb-modification", lambda out, n, m: vcompose_modifications(n, m)),
}


def cmd_compose(a, out: Outcome) -> None:
    kind, run = COMPOSERS[a.kind]
    f, g = _load(out, a.f, kind), _load(out, a.g, kind)
    if f is None or g is None:
        return
    try:
        comp = run(out, f, g)
    except LawViolation as e:
        out.check("composite satisfies its laws", False, str(e))
        return
    if not out.checks:
        out.check("composite satisfies its laws", True)
    out.result["composite"] = io.to_doc(kind, comp)


# -- dd verbs ----------------------------------------------------------------------------------------


def cmd_braiding(a, out: Outcome) -> None:
    dd = _load(out, a.file, "dd")
    if dd is None:
        return
    try:
        mult = build_multiplication(dd)
        out.check("multiplication is a monoidal functor with unit isos", True)
        br = derive_braiding(dd.cat, mult)
        validate_braiding(br, dd.cat)
        out.check("derived braiding natural and both hexagons hold", True)
    except LawViolation as e:
        out.check("braiding from the multiplication", False, str(e))
        return
    sym, at = check_symmetry(br, dd.cat)
    out.result["braiding"] = [list(r) for r in br.c]
    out.result["symmetric"] = sym
    if not sym:
        out.result["asymmetric_at"] = list(at)


def _load_any(out: Outcome, path: str, kinds: Sequence[str]):
    doc = io.read_doc(path)
    if doc.get("kind") not in kinds:
        raise InputError(f"expected one of {', '.join(kinds)}, got {doc.get('kind')!r}")
    try:
        return io.from_doc(doc)
    except LawViolation as e:
        out.check(f"{doc['kind']} laws", False, str(e))
        return None


def cmd_roundtrip(a, out: Outcome) -> None:
    if a.direction == "uf":
        y = _load_any(out, a.file, ("braided", "braided-functor"))
        if y is not None:
            out.check("U(F(x)) equals x", roundtrip_UF(y))
    else:
        x = _load_any(out, a.file, ("dd", "dd-functor"))
        if x is not None:
            why = restricted_failure(x)
            if out.check("input is in the restricted image", why is None, why or ""):
                out.check("F(U(x)) equals x", roundtrip_FU(x))


def cmd_restricted(a, out: Outcome) -> None:
    x = _load_any(out, a.file, ("dd", "dd-functor"))
    if x is not None:
        why = restricted_failure(x)
        out.check("restricted membership", why is None, why or "")


def cmd_counterexample(a, out: Outcome) -> None:
    n, sols = count_iconic_2cells()
    images = {functor_U(s).components for s in sols}
    out.check("exactly two iconic 2-cells", n == 2, f"found {n}")
    C = sols[0].source.target.cat if sols else None
    out.check("every solution has Pi + M = 0", all(C.base.is_identity(C.comp(s.Pi, s.M)) for s in sols))
    out.check("both have the same image under U", len(images) == 1, f"{len(images)} images")
    out.result["summary"] = f"{n} iconic 2-cells, {len(images)} image"
    out.witness = {"solutions": [s.raw() for s in sols]}


# -- td3 verbs ---------------------------------------------------------------------------------------


WITNESSES = {"non-category": witness_non_category, "non-bicategory": witness_non_bicategory,
             "xi4": witness_xi4_unfaithful, "xi4-unfaithful": witness_xi4_unfaithful}


def cmd_witness(a, out: Outcome) -> None:
    if a.claim == "non-associative":
        w = witness_non_associative(a.max_order or 3)
    else:
        if a.base != "z2":
            raise InputError(f"the {a.claim} witness is searched over z2 only")
        w = WITNESSES[a.claim]()
    out.check(f"witness for {w.claim} found", w.found, "search exhausted")
    out.witness = w.raw()


def cmd_check(a, out: Outcome) -> None:
    if a.what == "xi3":
        r = check_xi3_triequivalence(a.max_order or 3)
        out.check("object surjectivity", r.object_surjective)
        out.check("1-cell surjectivity", r.one_cell_surjective)
        out.check("unique 3-cells", r.unique_three_cells)
        out.check("composition preserved", r.composition_preserved)
        out.result["counts"] = dict(r.counts)
    elif a.what == "derivations":
        t = derivation_sweep(a.count, a.max_order or 4, a.seed)
        n = t["instances"]
        for key, label in (("first_functor", "derived omega satisfies the first functor axiom"),
                           ("second_functor", "derived delta satisfies the second functor axiom"),
                           ("second_transformation", "derived M satisfies the second transformation axiom"),
                           ("third_iff_gamma", "third transformation axiom holds exactly when gamma squares agree")):
            out.check(label, t[key] == n, f"{t[key]}/{n}")
        out.result["tally"] = t
    else:
        out.extend(assemble_monbicat())


def cmd_enumerate(a, out: Outcome) -> None:
    if a.order < 1:
        raise InputError("--order must be at least 1")
    ms = enumerate_cmonoids(a.order)
    out.check(f"commutative monoids of order {a.order} enumerated up to isomorphism", True)
    out.result["count"] = len(ms)
    out.result["monoids"] = [m.raw() for m in ms]


def cmd_audit(a, out: Outcome) -> None:
    out.extend(audit_diagrams())


# -- parser ------------------------------------------------------------------------------------------


FLAG_DEFAULTS = {"report": "text", "max_order": None, "seed": 0}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    # flags are accepted before or after the verb, so defaults are filled in after parsing
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--report", choices=("json", "text"))
    common.add_argument("--max-order", type=int)
    common.add_argument("--seed", type=int)
    p = _Parser(prog="degentri", parents=[common], description="Check finite models of degenerate tricategories.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=func)
        return s

    s = verb("validate", cmd_validate, "check a structure file")
    s.add_argument("kind", choices=sorted(VALIDATORS))
    s.add_argument("file")
    s = verb("compose", cmd_compose, "compose f after g and re-validate")
    s.add_argument("kind", choices=sorted(COMPOSERS))
    s.add_argument("f")
    s.add_argument("g")
    verb("braiding", cmd_braiding, "derive the braiding of a doubly degenerate structure").add_argument("file")
    s = verb("roundtrip", cmd_roundtrip, "compare U(F(x)) or F(U(x)) with x")
    s.add_argument("direction", choices=("uf", "fu"))
    s.add_argument("file")
    s = verb("restricted", cmd_restricted, "membership in the restricted image of F")
    s.add_argument("action", choices=("check",))
    s.add_argument("file")
    s = verb("witness", cmd_witness, "search for a counterexample witness")
    s.add_argument("claim", choices=("non-category", "non-bicategory", "xi4", "xi4-unfaithful", "non-associative"))
    s.add_argument("--base", default="z2")
    s = verb("check", cmd_check, "run a catalog-wide check")
    s.add_argument("what", choices=("xi3", "derivations", "monbicat"))
    s.add_argument("--count", type=int, default=1000)
    s = verb("counterexample", cmd_counterexample, "iconic 2-cells over the one-object Z/2 carrier")
    s.add_argument("base", choices=("z2",))
    s = verb("enumerate", cmd_enumerate, "list structures up to isomorphism")
    s.add_argument("what", choices=("cmonoids",))
    s.add_argument("--order", type=int, required=True)
    s = verb("audit", cmd_audit, "boundary audit of the transcribed diagrams")
    s.add_argument("what", choices=("diagrams",))
    return p


def run(argv: Sequence[str]) -> tuple[int, str]:
    argv = list(argv)
    out = Outcome()
    fmt = "json" if "json" in _report_flag(argv) else "text"
    try:
        a = build_parser().parse_args(argv)
        for k, v in FLAG_DEFAULTS.items():
            if not hasattr(a, k):
                setattr(a, k, v)
        fmt = a.report
        a.func(a, out)
    except InputError as e:
        out.error = str(e)
    except LawViolation as e:
        out.check("structure laws", False, str(e))
    return out.code, render(argv, out, fmt)


def _report_flag(argv: list[str]) -> list[str]:
    for i, x in enumerate(argv):
        if x == "--report" and i + 1 < len(argv):
            return [argv[i + 1]]
        if x.startswith("--report="):
            return [x.split("=", 1)[1]]
    return []


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stderr if code == 2 else sys.stdout).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
