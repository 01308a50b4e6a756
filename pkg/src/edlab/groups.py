"""Concrete finite groups stored as Cayley tables.

Element 0 is always the identity.  Every constructor fixes its element
numbering so that golden outputs are reproducible:

* ``cyclic(n)``: index ``i`` is ``c^i``.
* ``dihedral(n)``: index ``i + n*j`` is ``a^i b^j`` (order ``2n``).
* ``quaternion(n)``: index ``i + 2n*j`` is ``a^i b^j`` with ``a`` of order
  ``2n``, ``b^2 = a^n`` and ``b a b^-1 = a^-1`` (order ``4n``).
* ``direct_product(G1, G2)``: index ``i1*|G2| + i2`` is ``(g1, g2)``.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

CAYLEY_CAP = 512
EXHAUSTIVE_ASSOCIATIVITY_CAP = 128


class GroupError(ValueError):
    """Raised for malformed group data or violated preconditions."""


class GroupSizeError(GroupError):
    """Raised when a construction would exceed an order cap."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    name: str = ""
    cap: int = field(default=CAYLEY_CAP, repr=False)

    def __post_init__(self) -> None:
        _validate_table(self.table, self.labels, self.cap)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for i, row in enumerate(self.table):
            inv[i] = row.index(0)
        return tuple(inv)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def comm(self, x: int, y: int) -> int:
        """``[x, y] = x y x^-1 y^-1``."""
        t, inv = self.table, self.inverse
        return t[t[t[x][y]][inv[x]]][inv[y]]

    def power(self, x: int, m: int) -> int:
        if m < 0:
            x, m = self.inverse[x], -m
        result, base = 0, x
        while m:
            if m & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            m >>= 1
        return result

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = self.table[y][x]
                k += 1
            orders.append(k)
        return tuple(orders)

    def element_order(self, x: int) -> int:
        return self.element_orders[x]

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        t = np.asarray(self.table)
        return bool((t == t.T).all())

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(conjugacy_classes_under(whole(self), whole(self)).classes)

    @cached_property
    def class_number(self) -> int:
        return len(self.conjugacy_classes)

    @cached_property
    def centralizer_orders(self) -> tuple[int, ...]:
        t = np.asarray(self.table)
        return tuple(int(n) for n in (t == t.T).sum(axis=1))

    def order_statistics(self) -> dict[int, int]:
        stats: dict[int, int] = {}
        for k in self.element_orders:
            stats[k] = stats.get(k, 0) + 1
        return dict(sorted(stats.items()))

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table], "labels": list(self.labels)}


def _validate_table(table: Sequence[Sequence[int]], labels: Sequence[str], cap: int = CAYLEY_CAP) -> None:
    n = len(table)
    if n == 0:
        raise GroupError("a group needs at least one element")
    if n > cap:
        raise GroupSizeError(f"order {n} exceeds the Cayley-table cap {cap}")
    if len(labels) != n:
        raise GroupError(f"{len(labels)} labels for {n} elements")
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (n, n):
        raise GroupError(f"table must be {n}x{n}, got {t.shape}")
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entries out of range")
    idx = np.arange(n)
    if not (t[0] == idx).all() or not (t[:, 0] == idx).all():
        raise GroupError("element 0 is not a two-sided identity")
    srt = np.sort(t, axis=1)
    if not (srt == idx).all() or not (np.sort(t, axis=0) == idx[:, None]).all():
        raise GroupError("table is not a Latin square")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_CAP:
        left = t[t[:, :, None], idx[None, None, :]]
        right = t[idx[:, None, None], t[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad):
            x, y, z = (int(v) for v in bad[0])
            raise GroupError(f"associativity fails at ({x}, {y}, {z})")
    else:
        rng = np.random.default_rng(0)
        samples = 10 * n * n
        x, y, z = (rng.integers(0, n, samples) for _ in range(3))
        bad = np.nonzero(t[t[x, y], z] != t[x, t[y, z]])[0]
        if len(bad):
            k = bad[0]
            raise GroupError(f"associativity fails at ({x[k]}, {y[k]}, {z[k]})")


def from_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, name: str = "") -> FiniteGroup:
    n = len(table)
    if labels is None:
        labels = ["1"] + [f"g{i}" for i in range(1, n)]
    return FiniteGroup(tuple(tuple(int(v) for v in row) for row in table), tuple(labels), name)


def load_table(path: str | Path) -> FiniteGroup:
    """Read the JSON Cayley-table format ``{"order", "table", "labels"}``."""
    data = json.loads(Path(path).read_text())
    if data.get("order") != len(data.get("table", [])):
        raise GroupError(f"{path}: 'order' does not match the table size")
    return from_table(data["table"], data.get("labels"), name=f"table:{path}")


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple(_power_label("c", i) or "1" for i in range(n))
    return FiniteGroup(table, labels, f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """The dihedral group D_2n of order 2n: a^n = b^2 = 1, b a b^-1 = a^-1."""
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        k, l = y % n, y // n
        return (i + (-k if j else k)) % n + n * ((j + l) % 2)

    order = 2 * n
    table = tuple(tuple(mul(x, y) for y in range(order)) for x in range(order))
    labels = tuple((_power_label("a", x % n) + ("b" if x >= n else "")) or "1" for x in range(order))
    return FiniteGroup(table, labels, f"D{order}")


def quaternion(n: int) -> FiniteGroup:
    """Generalized quaternion (dicyclic) group Q_n of order 4n: a^n = b^2 = (ab)^2."""
    if n < 2:
        raise GroupError("quaternion group needs n >= 2")
    r = 2 * n

    def mul(x: int, y: int) -> int:
        i, j = x % r, x // r
        k, l = y % r, y // r
        e = i + (-k if j else k)
        if j and l:
            return (e + n) % r
        return e % r + r * ((j + l) % 2)

    order = 4 * n
    table = tuple(tuple(mul(x, y) for y in range(order)) for x in range(order))
    labels = tuple((_power_label("a", x % r) + ("b" if x >= r else "")) or "1" for x in range(order))
    return FiniteGroup(table, labels, f"Q{order}")


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupSizeError("symmetric groups are supported for 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = tuple(tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms) for p in perms)
    labels = tuple(format_cycles(p) for p in perms)
    return FiniteGroup(table, labels, f"S{n}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> tuple[FiniteGroup, Subgroup, Subgroup]:
    n1, n2 = g1.order, g2.order
    if n1 * n2 > CAYLEY_CAP:
        raise GroupSizeError(f"product order {n1 * n2} exceeds the Cayley-table cap {CAYLEY_CAP}")
    t1, t2 = g1.table, g2.table
    table = tuple(
        tuple(t1[x // n2][y // n2] * n2 + t2[x % n2][y % n2] for y in range(n1 * n2))
        for x in range(n1 * n2)
    )
    labels = tuple(
        "1" if x == 0 else f"({g1.labels[x // n2]},{g2.labels[x % n2]})" for x in range(n1 * n2)
    )
    name = f"{g1.name}x{g2.name}" if g1.name and g2.name else ""
    product = FiniteGroup(table, labels, name)
    left = make_subgroup(product, [i * n2 for i in range(n1)])
    right = make_subgroup(product, range(n2))
    return product, left, right


# permutations -----------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation on points 1..d into a 0-based image tuple.

    >>> parse_cycles("(1 2 3)(4 5)")
    (1, 2, 0, 4, 3)
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return tuple(range(degree or 0))
    if _CYCLE_RE.sub("", stripped).strip():
        raise GroupError(f"cannot parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        parts = body.replace(",", " ").split()
        try:
            pts = [int(p) for p in parts]
        except ValueError:
            raise GroupError(f"non-integer point in permutation {text!r}") from None
        if any(p < 1 for p in pts):
            raise GroupError(f"points are numbered from 1 in {text!r}")
        if len(set(pts)) != len(pts):
            raise GroupError(f"repeated point inside a cycle of {text!r}")
        cycles.append(pts)
    top = max((max(c) for c in cycles if c), default=0)
    d = max(top, degree or 0)
    img = list(range(d))
    seen: set[int] = set()
    for c in cycles:
        if seen & set(c):
            raise GroupError(f"cycles of {text!r} are not disjoint")
        seen |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def format_cycles(perm: Sequence[int]) -> str:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def from_permutations(generators: Iterable[str | Sequence[int]], cap: int = CAYLEY_CAP) -> FiniteGroup:
    """Close a set of permutations under composition.

    Generators are cycle-notation strings on points ``1..d`` or 0-based
    image sequences.  Elements are numbered breadth-first from the
    identity, multiplying by the generators in the order given.
    """
    gens: list[tuple[int, ...]] = []
    degree = 0
    parsed = []
    for g in generators:
        p = parse_cycles(g) if isinstance(g, str) else tuple(int(v) for v in g)
        if sorted(p) != list(range(len(p))):
            raise GroupError(f"not a permutation: {g!r}")
        parsed.append(p)
        degree = max(degree, len(p))
    for p in parsed:
        gens.append(p + tuple(range(len(p), degree)))
    identity = tuple(range(degree))
    index = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = tuple(x[s[i]] for i in range(degree))  # x after s: (x s)(i) = x(s(i))
            if y not in index:
                if len(elements) >= cap:
                    raise GroupSizeError(f"permutation group exceeds the order cap {cap}")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(degree))] for q in elements) for p in elements
    )
    labels = tuple(format_cycles(p) for p in elements)
    return FiniteGroup(table, labels, "perm")


# subgroups --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]
    is_normal: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        els = self.members
        g = self.parent
        if 0 not in els:
            raise GroupError("subgroup must contain the identity")
        for x in self.elements:
            if g.inverse[x] not in els or any(g.table[x][y] not in els for y in self.elements):
                raise GroupError("element set is not closed")
        normal = all(g.conj(a, h) in els for a in range(g.order) for h in self.elements)
        object.__setattr__(self, "is_normal", normal)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    def __le__(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r}, normal={self.is_normal})"

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.parent.element_orders[x] for x in self.elements))

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """The subgroup as a standalone group, plus the embedding."""
        pos = {x: i for i, x in enumerate(self.elements)}
        t = self.parent.table
        table = tuple(tuple(pos[t[x][y]] for y in self.elements) for x in self.elements)
        labels = tuple(self.parent.labels[x] for x in self.elements)
        return FiniteGroup(table, labels, ""), self.elements


def make_subgroup(g: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    return Subgroup(g, tuple(elements))


def whole(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, tuple(range(g.order)))


def trivial(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, (0,))


def subgroup_closure(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    seed = list(seed)
    for s in seed:
        if not 0 <= s < g.order:
            raise GroupError(f"element index {s} out of range")
    elements = {0}
    frontier = [0]
    gens = sorted(set(seed) - {0})
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.table[x][s]
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, tuple(elements))


def centralizer(k: Subgroup, x: int) -> Subgroup:
    t = k.parent.table
    return Subgroup(k.parent, tuple(y for y in k.elements if t[y][x] == t[x][y]))


def center(g: FiniteGroup) -> Subgroup:
    orders = g.centralizer_orders
    return Subgroup(g, tuple(x for x in range(g.order) if orders[x] == g.order))


@dataclass(frozen=True)
class ClassPartition:
    acting: Subgroup
    domain: Subgroup
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


def conjugacy_classes_under(k: Subgroup, h: Subgroup) -> ClassPartition:
    """The orbits of K acting on H by conjugation, ordered by representative."""
    if k.parent is not h.parent:
        raise GroupError("subgroups live in different groups")
    g = h.parent
    seen: set[int] = set()
    classes = []
    for x in h.elements:
        if x in seen:
            continue
        orbit = {g.conj(a, x) for a in k.elements}
        if not orbit <= h.members:
            raise GroupError("H not K-stable")
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return ClassPartition(k, h, tuple(classes), tuple(c[0] for c in classes))


def commutator_subgroup(h: Subgroup, k: Subgroup) -> Subgroup:
    if h.parent is not k.parent:
        raise GroupError("subgroups live in different groups")
    g = h.parent
    return subgroup_closure(g, {g.comm(x, y) for x in h.elements for y in k.elements})


def derived_subgroup(g: FiniteGroup) -> Subgroup:
    return commutator_subgroup(whole(g), whole(g))


def normal_closure(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    return subgroup_closure(g, {g.conj(a, x) for x in seed for a in range(g.order)})


def product_set(h: Subgroup, k: Subgroup) -> frozenset[int]:
    t = h.parent.table
    return frozenset(t[x][y] for x in h.elements for y in k.elements)


def join(h: Subgroup, k: Subgroup) -> Subgroup:
    return subgroup_closure(h.parent, set(h.elements) | set(k.elements))


def intersection(h: Subgroup, k: Subgroup) -> Subgroup:
    return Subgroup(h.parent, tuple(sorted(h.members & k.members)))


def normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, ordered by (order, elements)."""
    minimal = {normal_closure(g, [x]).elements for x in range(g.order)}
    found = set(minimal)
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for b in minimal:
                j = subgroup_closure(g, set(a) | set(b)).elements
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return [Subgroup(g, els) for els in sorted(found, key=lambda e: (len(e), e))]


def quotient(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """The factor group G/N with cosets numbered by their least element."""
    if n.parent is not g:
        raise GroupError("N is not a subgroup of G")
    if not n.is_normal:
        raise GroupError("quotient by a non-normal subgroup")
    proj = [-1] * g.order
    reps = []
    for x in range(g.order):
        if proj[x] >= 0:
            continue
        for y in n.elements:
            proj[g.table[x][y]] = len(reps)
        reps.append(x)
    table = tuple(tuple(proj[g.table[x][y]] for y in reps) for x in reps)
    labels = tuple(g.labels[x] if i else "1" for i, x in enumerate(reps))
    name = f"{g.name}/N" if g.name else ""
    return FiniteGroup(table, labels, name), tuple(proj)


def image(sub: Subgroup, target: FiniteGroup, proj: Sequence[int]) -> Subgroup:
    return Subgroup(target, tuple({proj[x] for x in sub.elements}))

