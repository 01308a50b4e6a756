"""The exterior pairing realized in a stem cover.

For a stem extension A -> G* -> G with A = M(G), x ^ y = 1 in G ^ G exactly
when the commutator of any two lifts of x and y is trivial in G*.  All wedge
questions therefore reduce to multiplications in the cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, prod
from typing import Callable

from .abelian import AbelianInvariants
from .degrees import DegreeValue
from .groups import (
    ClassPartition,
    FiniteGroup,
    GroupError,
    GroupSizeError,
    Subgroup,
    center,
    centralizer,
    conjugacy_classes_under,
    derived_subgroup,
    whole,
)
from .homology import StemCocycle, stem_cocycle

WedgeTest = Callable[[int, int], bool]


class CoverError(AssertionError):
    """A constructed cover failed one of its structural checks."""


@dataclass(frozen=True, eq=False)
class StemCover:
    base: FiniteGroup
    kernel: AbelianInvariants
    cover: FiniteGroup
    cocycle: StemCocycle

    def section(self, g: int) -> int:
        return g

    def projection(self, x: int) -> int:
        return x % self.base.order

    def kernel_elements(self) -> list[int]:
        n = self.base.order
        return [a * n for a in range(self.kernel.order)]

    def lift_commutator(self, x: int, y: int) -> int:
        return self.cover.comm(x, y)

    @cached_property
    def wedge_table(self) -> tuple[tuple[bool, ...], ...]:
        """wedge_table[x][y] is True iff x ^ y = 1."""
        c = self.cover
        n = self.base.order
        return tuple(tuple(c.comm(x, y) == 0 for y in range(n)) for x in range(n))

    def check(self) -> None:
        """Centrality, stem property, commutator order and lift independence."""
        c, n = self.cover, self.base.order
        ker = self.kernel_elements()
        t = c.table
        for a in ker:
            if any(t[a][y] != t[y][a] for y in range(c.order)):
                raise CoverError(f"kernel element {a} is not central")
        der = derived_subgroup(c)
        if not set(ker) <= der.members:
            raise CoverError("kernel is not inside the derived subgroup")
        expect = self.kernel.order * derived_subgroup(self.base).order
        if der.order != expect:
            raise CoverError(f"|[G*,G*]| = {der.order}, expected |M(G)||G'| = {expect}")
        for x in range(n):
            for y in range(n):
                base = c.comm(x, y)
                for a in ker:
                    for b in ker:
                        if c.comm(t[a][x], t[b][y]) != base:
                            raise CoverError(f"commutator depends on the lifts of ({x}, {y})")


def _encode(a: tuple[int, ...], divisors: tuple[int, ...]) -> int:
    code = 0
    for v, d in zip(a, divisors):
        code = code * d + v
    return code


def _decode(code: int, divisors: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for d in reversed(divisors):
        code, v = divmod(code, d)
        out.append(v)
    return tuple(reversed(out))


COVER_CAP = 2048


def build_cover(g: FiniteGroup, cap: int | None = None, check: bool = True, cover_cap: int = COVER_CAP) -> StemCover:
    """Central extension by M(G) from the stem cocycle: (a,x)(b,y) = (a+b+f(x,y), xy).

    Element (a, x) has index ``code(a) * |G| + x``, so the section x -> (0, x)
    is the identity on indices.  The cover may exceed the ordinary Cayley
    cap (|M(G)| |G| is 1024 for C2^4), up to ``cover_cap``.
    """
    f = stem_cocycle(g, cap=cap)
    divs = f.target.divisors
    n = g.order
    na = prod(divs)
    if na * n > cover_cap:
        raise GroupSizeError(f"cover of order {na * n} exceeds the cover cap {cover_cap}")
    coords = [_decode(k, divs) for k in range(na)]
    t = g.table
    table = []
    for u in range(na * n):
        a, x = coords[u // n], u % n
        row = []
        for v in range(na * n):
            b, y = coords[v // n], v % n
            s = f.add(f.add(a, b), f(x, y))
            row.append(_encode(s, divs) * n + t[x][y])
        table.append(tuple(row))
    labels = tuple(
        g.labels[u % n] if u < n else f"{coords[u // n]}{g.labels[u % n]}" for u in range(na * n)
    )
    cov = StemCover(g, f.target, FiniteGroup(tuple(table), labels, f"{g.name}*", cap=cover_cap), f)
    if check:
        cov.check()
    return cov


def wedge_trivial(cov: StemCover, x: int, y: int) -> bool:
    return cov.wedge_table[x][y]


def exterior_centralizer(cov: StemCover, x: int, within: Subgroup | None = None) -> Subgroup:
    k = within if within is not None else whole(cov.base)
    row = cov.wedge_table[x]
    return Subgroup(cov.base, tuple(y for y in k.elements if row[y]))


def exterior_center(cov: StemCover) -> Subgroup:
    g = cov.base
    wt = cov.wedge_table
    z = Subgroup(g, tuple(x for x in range(g.order) if all(wt[x])))
    if not z <= center(g):
        raise CoverError("exterior center is not central")
    return z


def exterior_degree_m(cov: StemCover, m: int) -> DegreeValue:
    """|{(x, y) : x^m ^ y = 1}| / |G|^2 as a centralizer sum."""
    if m < 1:
        raise ValueError("m must be >= 1")
    g = cov.base
    wt = cov.wedge_table
    sizes = [sum(row) for row in wt]
    total = sum(sizes[g.power(x, m)] for x in range(g.order))
    return DegreeValue(Fraction(total, g.order**2), {"m": m, "method": "cover"})


@dataclass(frozen=True)
class AlphaTable:
    partition: ClassPartition
    m: int
    alpha: tuple[int, ...]
    L_orders: tuple[int, ...]

    @property
    def beta(self) -> int:
        return min(self.alpha)

    @property
    def gamma(self) -> int:
        return max(self.alpha)


def class_sum_degree(
    h: Subgroup, k: Subgroup, m: int, wedge: WedgeTest, method: str
) -> tuple[DegreeValue, AlphaTable]:
    """d^_m(H, K) summed over the K-classes of H.

    With h_i a class representative, alpha_i = |C_K(h_i^m)| / |C_K(h_i)| and
    |L_i| = |C_K(h_i^m)| / |C^_K(h_i^m)|, the degree is
    (1/|H|) sum_i alpha_i / |L_i|.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not h.is_normal:
        raise GroupError("the class-sum form needs H normal")
    g = h.parent
    part = conjugacy_classes_under(k, h)
    alpha, lorders = [], []
    total = Fraction(0)
    for rep in part.representatives:
        hm = g.power(rep, m)
        c_h = centralizer(k, rep).order
        c_hm = centralizer(k, hm).order
        ext = sum(1 for y in k.elements if wedge(hm, y))
        if c_hm % c_h or c_hm % ext:
            raise AssertionError(f"centralizer orders do not divide at representative {rep}")
        alpha.append(c_hm // c_h)
        lorders.append(c_hm // ext)
        total += Fraction(c_hm // c_h, c_hm // ext)
    value = DegreeValue(total / h.order, {"m": m, "method": method})
    return value, AlphaTable(part, m, tuple(alpha), tuple(lorders))


def degree_via_classes(cov: StemCover, h: Subgroup, k: Subgroup, m: int) -> tuple[DegreeValue, AlphaTable]:
    """Class-sum form with wedges evaluated in G ^ G (exact for H = K = G)."""
    if h.parent is not cov.base or k.parent is not cov.base:
        raise GroupError("subgroups must live in the cover's base group")
    return class_sum_degree(h, k, m, lambda x, y: cov.wedge_table[x][y], "via-G^G")


def _piecewise(n: int, m: int) -> Fraction:
    t = gcd(m, n)
    if m % 2 == 0:
        return Fraction(3 * n + t, 4 * n)
    return Fraction(n + t + 2, 4 * n)


def closed_form_dihedral(n: int, m: int) -> DegreeValue:
    """m-th exterior degree of the dihedral group of order 2n."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return DegreeValue(_piecewise(n, m), {"m": m, "method": "closed-form"})


def closed_form_quaternion(n: int, m: int) -> DegreeValue:
    """m-th exterior degree of the generalized quaternion group of order 4n."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return DegreeValue(_piecewise(n, m), {"m": m, "method": "closed-form"})


def exterior_square_order(cov: StemCover) -> int:
    """|G ^ G| = |[G*, G*]|."""
    return derived_subgroup(cov.cover).order
