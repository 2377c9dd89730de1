"""Finite commutative monoids, homomorphisms and the Eckmann-Hilton checker.

Elements are the dense indices ``0..order-1``; the unit can be any index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import InputError, InternalConsistencyError, LawViolation

ORDER_CAP = 5

Table = tuple[tuple[int, ...], ...]


def _as_table(order: int, table: Sequence[Sequence[int]], name: str = "table") -> Table:
    if order < 1:
        raise InputError(f"order must be positive, got {order}")
    if len(table) != order or any(len(row) != order for row in table):
        raise InputError(f"{name} must be {order}x{order}")
    out = tuple(tuple(int(v) for v in row) for row in table)
    for i, row in enumerate(out):
        for j, v in enumerate(row):
            if not 0 <= v < order:
                raise InputError(f"{name}[{i}][{j}] = {v} is not an element index")
    return out


@dataclass(frozen=True)
class FiniteCommutativeMonoid:
    order: int
    op: Table
    unit: int
    inverse: tuple[int | None, ...] = field(compare=False, repr=False)

    def mul(self, x: int, y: int) -> int:
        return self.op[x][y]

    def prod(self, *xs: int) -> int:
        acc = self.unit
        for x in xs:
            acc = self.op[acc][x]
        return acc

    def is_invertible(self, x: int) -> bool:
        return self.inverse[x] is not None

    def inv(self, x: int) -> int:
        y = self.inverse[x]
        if y is None:
            raise LawViolation("not invertible", x)
        return y

    def power(self, x: int, n: int) -> int:
        """``x`` iterated ``n`` times; negative ``n`` uses the inverse."""
        if n < 0:
            x, n = self.inv(x), -n
        acc = self.unit
        for _ in range(n):
            acc = self.op[acc][x]
        return acc

    def invertibles(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if self.inverse[x] is not None)

    @property
    def elements(self) -> range:
        return range(self.order)

    def raw(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.op], "unit": self.unit}


def validate_monoid(order: int, table: Sequence[Sequence[int]], unit: int) -> FiniteCommutativeMonoid:
    """Check the laws and return the validated monoid.

    Laws are checked in the order unit, commutativity, associativity and
    the first failure is raised with its witness.
    """
    op = _as_table(order, table)
    if not 0 <= unit < order:
        raise InputError(f"unit {unit} is not an element index")
    for x in range(order):
        if op[unit][x] != x or op[x][unit] != x:
            raise LawViolation("unit law", x)
    for x, y in product(range(order), repeat=2):
        if op[x][y] != op[y][x]:
            raise LawViolation("commutativity", (x, y))
    for x, y, z in product(range(order), repeat=3):
        if op[op[x][y]][z] != op[x][op[y][z]]:
            raise LawViolation("associativity", (x, y, z))
    inverse = tuple(next((y for y in range(order) if op[x][y] == unit), None) for x in range(order))
    return FiniteCommutativeMonoid(order, op, unit, inverse)


def invertible_elements(m: FiniteCommutativeMonoid) -> frozenset[int]:
    return frozenset(m.invertibles())


def cyclic_group(n: int) -> FiniteCommutativeMonoid:
    """The additive group Z/n."""
    return validate_monoid(n, [[(i + j) % n for j in range(n)] for i in range(n)], 0)


def multiplicative_monoid(n: int) -> FiniteCommutativeMonoid:
    """Z/n under multiplication, unit 1 (for n >= 2)."""
    return validate_monoid(n, [[(i * j) % n for j in range(n)] for i in range(n)], 1 % n)


def trivial_monoid() -> FiniteCommutativeMonoid:
    return validate_monoid(1, [[0]], 0)


def product_monoid(a: FiniteCommutativeMonoid, b: FiniteCommutativeMonoid) -> FiniteCommutativeMonoid:
    """Direct product, element ``(x, y)`` encoded as ``x * b.order + y``."""
    n = a.order * b.order
    table = [[0] * n for _ in range(n)]
    for x1, y1, x2, y2 in product(range(a.order), range(b.order), range(a.order), range(b.order)):
        table[x1 * b.order + y1][x2 * b.order + y2] = a.op[x1][x2] * b.order + b.op[y1][y2]
    return validate_monoid(n, table, a.unit * b.order + b.unit)


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class MonoidHom:
    source: FiniteCommutativeMonoid
    target: FiniteCommutativeMonoid
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def compose(self, first: "MonoidHom") -> "MonoidHom":
        """``self`` after ``first``."""
        if first.target != self.source:
            raise InputError("homomorphisms are not composable")
        return MonoidHom(first.source, self.target, tuple(self.map[first.map[x]] for x in first.source.elements))


def validate_hom(source: FiniteCommutativeMonoid, target: FiniteCommutativeMonoid, mapping: Sequence[int]) -> MonoidHom:
    if len(mapping) != source.order or any(not 0 <= v < target.order for v in mapping):
        raise InputError("hom table has the wrong shape")
    f = tuple(int(v) for v in mapping)
    if f[source.unit] != target.unit:
        raise LawViolation("hom preserves unit", source.unit)
    for x, y in product(source.elements, repeat=2):
        if f[source.op[x][y]] != target.op[f[x]][f[y]]:
            raise LawViolation("hom preserves op", (x, y))
    return MonoidHom(source, target, f)


def identity_hom(m: FiniteCommutativeMonoid) -> MonoidHom:
    return MonoidHom(m, m, tuple(m.elements))


def enumerate_homs(source: FiniteCommutativeMonoid, target: FiniteCommutativeMonoid) -> list[MonoidHom]:
    """All homomorphisms, in lexicographic order of their tables."""
    out = []
    for f in product(target.elements, repeat=source.order):
        try:
            out.append(validate_hom(source, target, f))
        except LawViolation:
            continue
    return out


# -- enumeration up to isomorphism -------------------------------------------


def permute_table(op: Table, unit: int, perm: Sequence[int]) -> tuple[Table, int]:
    """Relabel element ``i`` as ``perm[i]``."""
    n = len(op)
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new[perm[i]][perm[j]] = perm[op[i][j]]
    return tuple(tuple(r) for r in new), perm[unit]


def canonical_form(op: Table, unit: int) -> tuple[Table, int]:
    """Lexicographically least relabelled table over all permutations."""
    return min(permute_table(op, unit, p) for p in permutations(range(len(op))))


def are_isomorphic(a: FiniteCommutativeMonoid, b: FiniteCommutativeMonoid) -> bool:
    return a.order == b.order and canonical_form(a.op, a.unit) == canonical_form(b.op, b.unit)


def _search_unit_zero(n: int) -> Iterable[Table]:
    """Commutative monoid tables on ``0..n-1`` with unit 0, by backtracking.

    Cells of the upper triangle are filled in row-major order; every
    associativity instance whose entries are all known is checked as soon
    as it becomes decidable.
    """
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = x

    def consistent() -> bool:
        for x in range(1, n):
            for y in range(1, n):
                xy = t[x][y]
                if xy < 0:
                    continue
                for z in range(1, n):
                    yz = t[y][z]
                    if yz < 0:
                        continue
                    left, right = t[xy][z], t[x][yz]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    def go(k: int):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = t[j][i] = v
            if consistent():
                yield from go(k + 1)
        t[i][j] = t[j][i] = -1

    yield from go(0)


def enumerate_cmonoids(order: int) -> list[FiniteCommutativeMonoid]:
    """Commutative monoids of the given order, one per isomorphism class.

    Each entry is stored in its canonical form and the list is sorted by
    that form, so the output is deterministic.
    """
    if not 1 <= order <= ORDER_CAP:
        raise InputError(f"order must be between 1 and {ORDER_CAP}, got {order}")
    forms = {canonical_form(tab, 0) for tab in _search_unit_zero(order)}
    return [validate_monoid(order, tab, unit) for tab, unit in sorted(forms)]


# -- two operations sharing a unit -----------------------------------------


@dataclass(frozen=True)
class TwoOpSet:
    size: int
    star: Table
    circ: Table
    shared_unit: int


def validate_two_op_set(size: int, star: Sequence[Sequence[int]], circ: Sequence[Sequence[int]], shared_unit: int) -> TwoOpSet:
    s = _as_table(size, star, "star")
    c = _as_table(size, circ, "circ")
    if not 0 <= shared_unit < size:
        raise InputError("shared unit out of range")
    e = shared_unit
    for x in range(size):
        if s[e][x] != x or s[x][e] != x:
            raise LawViolation("unit law for star", x)
        if c[e][x] != x or c[x][e] != x:
            raise LawViolation("unit law for circ", x)
    for a, b, cc, d in product(range(size), repeat=4):
        if c[s[a][b]][s[cc][d]] != s[c[a][cc]][c[b][d]]:
            raise LawViolation("interchange", (a, b, cc, d))
    return TwoOpSet(size, s, c, e)


def eckmann_hilton_check(two: TwoOpSet) -> FiniteCommutativeMonoid:
    """Confirm that both operations agree and are commutative.

    The input is re-validated first; the conclusion can only fail if the
    interchange argument itself were wrong, which is reported as an
    internal error.
    """
    two = validate_two_op_set(two.size, two.star, two.circ, two.shared_unit)
    n = two.size
    for x, y in product(range(n), repeat=2):
        if two.star[x][y] != two.circ[x][y]:
            raise InternalConsistencyError(f"star and circ differ at {(x, y)}")
        if two.star[x][y] != two.star[y][x]:
            raise InternalConsistencyError(f"common operation not commutative at {(x, y)}")
    try:
        return validate_monoid(n, two.star, two.shared_unit)
    except LawViolation as exc:
        raise InternalConsistencyError(f"common operation is not a monoid: {exc}") from exc
