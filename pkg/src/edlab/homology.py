"""Second integral homology through the normalized bar complex.

Degree-k chains have basis the k-tuples of non-identity elements; a face
that produces the identity in some slot is dropped.  With trivial
coefficients

    d2(g, h)    = (h) - (gh) + (g)
    d3(g, h, k) = (h, k) - (gh, k) + (g, hk) - (g, h)

H_2(G) is finite, so it equals the torsion of coker d3, which is read off
the elementary divisors of d3.  Tracking the row transform of that same
elimination names both generating cycles and a dual cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abelian import AbelianInvariants
from .groups import FiniteGroup, GroupSizeError
from .snf import Elimination, SparseIntMatrix

HOMOLOGY_CAP = 48


def _check_cap(g: FiniteGroup, cap: int | None) -> None:
    cap = HOMOLOGY_CAP if cap is None else cap
    if g.order > cap:
        raise GroupSizeError(f"order {g.order} exceeds the homology cap {cap}")


def pair_index(g: FiniteGroup, x: int, y: int) -> int:
    return (x - 1) * (g.order - 1) + (y - 1)


def pair_of(g: FiniteGroup, i: int) -> tuple[int, int]:
    x, y = divmod(i, g.order - 1)
    return x + 1, y + 1


def bar_boundary(g: FiniteGroup, degree: int, cap: int | None = None) -> SparseIntMatrix:
    """Boundary map of the normalized bar complex from degree to degree-1."""
    _check_cap(g, cap)
    n1 = g.order - 1
    t = g.table
    if degree == 2:
        m = SparseIntMatrix(n1, n1 * n1)
        for x in range(1, g.order):
            for y in range(1, g.order):
                col = (x - 1) * n1 + (y - 1)
                xy = t[x][y]
                m.add(y - 1, col, 1)
                if xy:
                    m.add(xy - 1, col, -1)
                m.add(x - 1, col, 1)
        return m
    if degree == 3:
        m = SparseIntMatrix(n1 * n1, n1**3)
        ent = m.entries
        for x in range(1, g.order):
            for y in range(1, g.order):
                xy = t[x][y]
                for z in range(1, g.order):
                    col = ((x - 1) * n1 + (y - 1)) * n1 + (z - 1)
                    yz = t[y][z]
                    terms = [((y - 1) * n1 + (z - 1), 1), ((x - 1) * n1 + (y - 1), -1)]
                    if xy:
                        terms.append(((xy - 1) * n1 + (z - 1), -1))
                    if yz:
                        terms.append(((x - 1) * n1 + (yz - 1), 1))
                    for r, v in terms:
                        nv = ent.get((r, col), 0) + v
                        if nv:
                            ent[(r, col)] = nv
                        else:
                            ent.pop((r, col), None)
        return m
    raise ValueError("only degrees 2 and 3 are supported")


@lru_cache(maxsize=64)
def _d3_elimination(g: FiniteGroup, tracked: bool) -> Elimination:
    return Elimination(bar_boundary(g, 3, cap=g.order), track_u=tracked, track_uinv=tracked).run()


def schur_multiplier(g: FiniteGroup, cap: int | None = None) -> AbelianInvariants:
    """H_2(G, Z) as invariant factors."""
    _check_cap(g, cap)
    if g.order == 1:
        return AbelianInvariants()
    el3 = _d3_elimination(g, False)
    rank2 = Elimination(bar_boundary(g, 2, cap=g.order)).run().rank
    n1 = g.order - 1
    if el3.rank != n1 * n1 - rank2:
        raise AssertionError(f"H_2 of {g} is not finite: rank d3 = {el3.rank}, rank d2 = {rank2}")
    return AbelianInvariants(tuple(d for d in el3.diagonal if d > 1))


@dataclass(frozen=True)
class Cycle:
    """An integral 2-cycle, as coefficients on pairs (g, h)."""

    coefficients: dict[tuple[int, int], int]
    order: int


def homology_generators(g: FiniteGroup, cap: int | None = None) -> list[Cycle]:
    """Cycles whose classes generate H_2(G) with orders d_1, ..., d_t."""
    _check_cap(g, cap)
    if g.order == 1:
        return []
    el = _d3_elimination(g, True)
    out = []
    for r, _, d in el.pivots:
        if d > 1:
            coeffs = {pair_of(g, i): v for i, v in sorted(el.uinv_cols[r].items())}
            out.append(Cycle(coeffs, d))
    return out


def boundary_of_pairs(g: FiniteGroup, coefficients: dict[tuple[int, int], int]) -> dict[int, int]:
    """d2 of a 2-chain, as coefficients on the 1-chains (g)."""
    out: dict[int, int] = {}
    for (x, y), a in coefficients.items():
        xy = g.table[x][y]
        for e, s in ((y, 1), (xy, -1), (x, 1)):
            if e:
                out[e] = out.get(e, 0) + s * a
    return {e: v for e, v in out.items() if v}


@dataclass(frozen=True)
class StemCocycle:
    """Normalized 2-cocycle f: G x G -> A = Z/d_1 x ... x Z/d_t."""

    group: FiniteGroup
    target: AbelianInvariants
    values: dict[tuple[int, int], tuple[int, ...]]

    def __call__(self, x: int, y: int) -> tuple[int, ...]:
        if x == 0 or y == 0 or self.target.is_trivial:
            return self.zero
        return self.values[(x, y)]

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.target.divisors)

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((u + v) % d for u, v, d in zip(a, b, self.target.divisors))

    def cocycle_failures(self) -> list[tuple[int, int, int]]:
        """Triples where f(g,h) + f(gh,k) != f(h,k) + f(g,hk)."""
        g = self.group
        t = g.table
        bad = []
        for x in range(g.order):
            for y in range(g.order):
                for z in range(g.order):
                    lhs = self.add(self(x, y), self(t[x][y], z))
                    rhs = self.add(self(y, z), self(x, t[y][z]))
                    if lhs != rhs:
                        bad.append((x, y, z))
        return bad

    def evaluate(self, cycle: Cycle) -> tuple[int, ...]:
        acc = self.zero
        for (x, y), a in cycle.coefficients.items():
            val = self(x, y)
            acc = tuple((u + a * v) % d for u, v, d in zip(acc, val, self.target.divisors))
        return acc


def stem_cocycle(g: FiniteGroup, cap: int | None = None) -> StemCocycle:
    """A cocycle whose evaluation on the generating cycles is the identity matrix.

    With U d3 V = diag(s), the functional e_r U (mod s_r) kills the image of
    d3 and is 1 on the cycle U^-1 e_r, 0 on the other U^-1 e_r'.
    """
    _check_cap(g, cap)
    target = schur_multiplier(g, cap=g.order)
    if target.is_trivial:
        return StemCocycle(g, target, {})
    el = _d3_elimination(g, True)
    torsion = [(r, d) for r, _, d in el.pivots if d > 1]
    if tuple(d for _, d in torsion) != target.divisors:
        raise AssertionError("tracked and untracked eliminations disagree")
    n1 = g.order - 1
    values = {}
    for i in range(n1 * n1):
        values[pair_of(g, i)] = tuple(el.u_rows[r].get(i, 0) % d for r, d in torsion)
    f = StemCocycle(g, target, values)
    gens = homology_generators(g, cap=g.order)
    for j, z in enumerate(gens):
        expect = tuple(int(i == j) for i in range(len(gens)))
        if f.evaluate(z) != expect:
            raise AssertionError(f"cocycle does not evaluate to the Kronecker pattern on cycle {j}")
    return f
