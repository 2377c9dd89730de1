"""Brute-force references that share no code with the library.

Every function works on plain nested lists and recomputes its answer by
exhaustive search or direct evaluation.
"""

from itertools import permutations, product


def tables(n):
    """Every binary operation on ``range(n)``."""
    for flat in product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def is_cmonoid(t, e):
    n = len(t)
    r = range(n)
    return (all(t[e][x] == x and t[x][e] == x for x in r)
            and all(t[x][y] == t[y][x] for x in r for y in r)
            and all(t[t[x][y]][z] == t[x][t[y][z]] for x in r for y in r for z in r))


def relabel(t, e, p):
    n = len(t)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[p[i]][p[j]] = p[t[i][j]]
    return tuple(map(tuple, out)), p[e]


def iso_class(t, e):
    return min(relabel(t, e, p) for p in permutations(range(len(t))))


def cmonoid_classes(n):
    """Isomorphism classes of commutative monoids of order ``n``, by raw search over every table and unit."""
    return {iso_class(t, e) for t in tables(n) for e in range(n) if is_cmonoid(t, e)}


def unital_tables(n, e):
    """Operations on ``range(n)`` with two-sided unit ``e``."""
    free = [(i, j) for i in range(n) for j in range(n) if e not in (i, j)]
    for vals in product(range(n), repeat=len(free)):
        t = [[j if i == e else i if j == e else None for j in range(n)] for i in range(n)]
        for (i, j), v in zip(free, vals):
            t[i][j] = v
        yield t


def interchange_holds(s, c):
    n = len(s)
    return all(c[s[a][b]][s[x][d]] == s[c[a][x]][c[b][d]] for a, b, x, d in product(range(n), repeat=4))


def two_op_sets(n):
    """Every ``(star, circ, e)`` on ``range(n)`` with shared unit and interchange."""
    for e in range(n):
        units = list(unital_tables(n, e))
        for s in units:
            for c in units:
                if interchange_holds(s, c):
                    yield s, c, e


class Mon:
    """Minimal monoid arithmetic over a raw table."""

    def __init__(self, t, e):
        self.t, self.e, self.n = t, e, len(t)

    def mul(self, *xs):
        acc = self.e
        for x in xs:
            acc = self.t[acc][x]
        return acc

    def inv(self, x):
        return next(y for y in range(self.n) if self.t[x][y] == self.e)

    def pow(self, x, k):
        if k < 0:
            x, k = self.inv(x), -k
        return self.mul(*([x] * k))

    def units(self):
        return [x for x in range(self.n) if any(self.t[x][y] == self.e for y in range(self.n))]


def td3_axioms(M, d, m, pi, lam, rho):
    """The two non-vacuous tricategory equations ``λπ = d²m⁴`` and ``ρπ = d²m⁴``."""
    rhs = M.mul(M.pow(d, 2), M.pow(m, 4))
    return M.mul(lam, pi) == rhs, M.mul(rho, pi) == rhs


def td3_lambda(M, d, m, pi):
    """The unique solution of the second axiom, found by search."""
    sols = [x for x in range(M.n) if td3_axioms(M, d, m, pi, x, x)[0]]
    assert len(sols) == 1
    return sols[0]


def homs(A, B):
    out = []
    for f in product(range(B.n), repeat=A.n):
        if f[A.e] == B.e and all(f[A.t[x][y]] == B.t[f[x]][f[y]] for x in range(A.n) for y in range(A.n)):
            out.append(f)
    return out


def solve(M, pred):
    """Every element satisfying ``pred``."""
    return [x for x in range(M.n) if pred(x)]


def cmonoid_classes_unit0(n):
    """Same classes, searched over symmetric tables with unit 0 (every class has such a representative)."""
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    out = set()
    for vals in product(range(n), repeat=len(cells)):
        t = [[j if i == 0 else i if j == 0 else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(cells, vals):
            t[i][j] = t[j][i] = v
        if is_cmonoid(t, 0):
            out.add(iso_class(t, 0))
    return out


# -- monoidal coherence by rotation ---------------------------------------------------
# trees: ("x", i) leaf bound to assignment[i], ("u",) the unit, ("t", L, R) a tensor


def tree_obj(c, tree, asg):
    if tree[0] == "x":
        return asg[tree[1]]
    if tree[0] == "u":
        return c.unit_obj
    return c.tensor_obj[tree_obj(c, tree[1], asg)][tree_obj(c, tree[2], asg)]


def _comp(c, g, f):
    return c.base.comp[g][f]


def rotate_to_normal(c, tree, asg):
    """``(normal tree, morphism)`` reaching the right-nested unit-free word by root rotations."""
    ident = c.base.identity
    if tree[0] != "t":
        return tree, ident[tree_obj(c, tree, asg)]
    L, R = tree[1], tree[2]
    if L[0] == "u":
        n, m = rotate_to_normal(c, R, asg)
        return n, _comp(c, m, c.lunit[tree_obj(c, R, asg)])
    if L[0] == "t":
        A, B = L[1], L[2]
        step = c.assoc[tree_obj(c, A, asg)][tree_obj(c, B, asg)][tree_obj(c, R, asg)]
        n, m = rotate_to_normal(c, ("t", A, ("t", B, R)), asg)
        return n, _comp(c, m, step)
    x = tree_obj(c, L, asg)
    nR, mR = rotate_to_normal(c, R, asg)
    whisk = c.tensor_mor[ident[x]][mR]
    if nR[0] == "u":
        return L, _comp(c, c.runit[x], whisk)
    return ("t", L, nR), whisk


def coherence_oracle(c, src, tgt, asg):
    ns, ms = rotate_to_normal(c, src, asg)
    nt, mt = rotate_to_normal(c, tgt, asg)
    assert ns == nt
    return _comp(c, c.base.inverse[mt], ms)


def bracketings(leaves):
    if len(leaves) == 1:
        yield leaves[0]
        return
    for i in range(1, len(leaves)):
        for left in bracketings(leaves[:i]):
            for right in bracketings(leaves[i:]):
                yield ("t", left, right)


def hexagon_failures(c, b):
    """Triples where either hexagon fails, computed from the raw tables."""
    bad = []
    for x, y, z in product(range(c.base.n_objects), repeat=3):
        h1 = (c.then(c.a(x, y, z), b[x][c.t(y, z)], c.a(y, z, x))
              == c.then(c.tm(b[x][y], c.id(z)), c.a(y, x, z), c.tm(c.id(y), b[x][z])))
        h2 = (c.then(c.inv(c.a(x, y, z)), b[c.t(x, y)][z], c.inv(c.a(z, x, y)))
              == c.then(c.tm(c.id(x), b[y][z]), c.inv(c.a(x, z, y)), c.tm(b[x][z], c.id(y))))
        if not (h1 and h2):
            bad.append((x, y, z))
    return bad


def braiding_natural(c, b):
    m = c.base.n_morphisms
    return all(c.comp(b[c.tgt(f)][c.tgt(g)], c.tm(f, g)) == c.comp(c.tm(g, f), b[c.src(f)][c.src(g)])
               for f in range(m) for g in range(m))


def raw_monoid(M):
    return Mon([list(r) for r in M.op], M.unit)


def functor_equations(F):
    """The two defining equations, written out from the raw tables."""
    S, T = F.source, F.target
    O = raw_monoid(T.base)
    f = F.hom
    common = O.mul(O.pow(f(S.m), 2), O.pow(T.m, -2), O.pow(f(S.d), 2), O.pow(T.d, -2))
    omega = solve(O, lambda w: O.mul(w, T.pi, common) == f(S.pi))
    delta = solve(O, lambda d: O.mul(F.omega, d, F.gamma, T.mu, common) == f(S.mu))
    return omega, delta


def transformation_equations(F, G, Pi):
    T = F.target
    O = raw_monoid(T.base)
    M = solve(O, lambda M: O.mul(Pi, T.mu, T.l, F.gamma)
                      == O.mul(M, O.pow(T.m, 4), O.pow(T.d, 2), O.inv(T.a), G.gamma))
    assert len(M) == 1
    third = O.mul(Pi, F.delta) == O.mul(O.inv(T.a), O.inv(T.l), O.pow(T.d, 2), O.pow(T.m, 4), O.inv(T.mu), M[0],
                                        G.delta)
    return M[0], third
