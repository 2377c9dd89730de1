"""Exhaustive sweeps shared by the unit tests and the acceptance run."""

import random
from itertools import product

import oracles
from degentri.monoidal.expr import Coh, Evaluator, Gen, Tensor, Unit, left_normal_form, single_sort_model

MAX_ASSIGNMENTS = {1: 243, 2: 243, 3: 243, 4: 243, 5: 243}


def to_expr(t):
    if t[0] == "x":
        return Gen(f"X{t[1]}")
    if t[0] == "u":
        return Unit()
    return Tensor(to_expr(t[1]), to_expr(t[2]))


def assignments(c, k, rng):
    n = c.base.n_objects
    every = list(product(range(n), repeat=k))
    cap = MAX_ASSIGNMENTS[k]
    return every if len(every) <= cap else sorted(rng.sample(every, cap))


def words(k):
    """Leaf sequences of length k: all variables, or (for k <= 4) any positions replaced by the unit."""
    yield [("x", i) for i in range(k)]
    if k <= 4:
        for mask in product((0, 1), repeat=k):
            if any(mask):
                yield [("u",) if u else ("x", i) for i, u in enumerate(mask)]


def coherence_sweep(c, max_len=5, seed=0):
    """Every pair of bracketings of every word, evaluated against the rotation oracle."""
    rng = random.Random(seed)
    checked = 0
    for k in range(1, max_len + 1):
        for leaves in words(k):
            trees = list(oracles.bracketings(leaves))
            exprs = {s: to_expr(s) for s in trees}
            # routes depend only on the bracketings, not on the objects plugged in
            routes = {(s, t): Coh(exprs[s], exprs[t]) for s, t in product(trees, repeat=2)}
            lefts = {s: (left_normal_form(exprs[s])[1], Coh(exprs[s], left_normal_form(exprs[s])[0])) for s in trees}
            for asg in assignments(c, k, rng):
                ev = Evaluator(single_sort_model(c, {f"X{i}": asg[i] for i in range(k)}))
                for (s, t), route in routes.items():
                    if ev.mor(route) != oracles.coherence_oracle(c, s, t, asg):
                        return False, (s, t, asg), checked
                    checked += 1
                for s, (left, direct) in lefts.items():
                    # the left-nested route is a second synthesized route
                    if ev.mor(left) != ev.mor(direct):
                        return False, ("left route", s, asg), checked
    return True, None, checked


def single_mutations(c):
    """Every copy of ``c`` with one constraint component replaced by another morphism with its endpoints."""
    B, n = c.base, c.base.n_objects
    for x, y, z in product(range(n), repeat=3):
        old = c.assoc[x][y][z]
        for f in B.hom(B.src[old], B.tgt[old]):
            if f != old:
                a = [[list(r) for r in p] for p in c.assoc]
                a[x][y][z] = f
                yield "assoc", (x, y, z), dict(assoc=a)
    for key in ("lunit", "runit"):
        table = getattr(c, key)
        for x in range(n):
            for f in B.hom(B.src[table[x]], B.tgt[table[x]]):
                if f != table[x]:
                    t = list(table)
                    t[x] = f
                    yield key, x, {key: t}
