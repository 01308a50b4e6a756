"""Non-abelian tensor and exterior products of normal subgroups, by enumeration.

H (x) K is generated by symbols s(h, k) subject to

    s(h h', k) = s(^h h', ^h k) s(h, k)
    s(h, k k') = s(h, k) s(^k h, ^k k')

with ^g x = g x g^-1; H ^ K additionally kills s(y, y) for y in H n K.  The
presentation is enumerated over the trivial subgroup, so the product comes
out as a concrete finite group and every wedge question becomes a lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import AbelianInvariants, invariants_of
from .degrees import DegreeValue
from .exterior import AlphaTable, class_sum_degree
from .fp import COSET_CAP, EnumerationError, Presentation, canonical_relator, group_from_table, todd_coxeter
from .groups import FiniteGroup, GroupError, GroupSizeError, Subgroup, commutator_subgroup, product_set

PAIR_CAP = 12


@dataclass(frozen=True, eq=False)
class PairProduct:
    ambient: FiniteGroup
    left: Subgroup
    right: Subgroup
    kind: str
    product: FiniteGroup
    pairing: dict[tuple[int, int], int]
    kappa_image: Subgroup
    kernel_elements: tuple[int, ...]
    kernel: AbelianInvariants

    def wedge_trivial(self, h: int, k: int) -> bool:
        return self.pairing[(h, k)] == 0

    def relation_failures(self) -> list[tuple[str, int, int, int]]:
        """Instances of the defining relations violated by the pairing map."""
        g, prod = self.ambient, self.product
        s, t = self.pairing, g.table
        pt = prod.table
        bad = []
        for x in self.left.elements:
            for x2 in self.left.elements:
                for y in self.right.elements:
                    if s[(t[x][x2], y)] != pt[s[(g.conj(x, x2), g.conj(x, y))]][s[(x, y)]]:
                        bad.append(("left", x, x2, y))
        for x in self.left.elements:
            for y in self.right.elements:
                for y2 in self.right.elements:
                    if s[(x, t[y][y2])] != pt[s[(x, y)]][s[(g.conj(y, x), g.conj(y, y2))]]:
                        bad.append(("right", x, y, y2))
        if self.kind == "exterior":
            bad.extend(("diagonal", y, y, y) for y in self.left.elements if y in self.right and s[(y, y)] != 0)
        return bad

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ambient_order": self.ambient.order,
            "left": list(self.left.elements),
            "right": list(self.right.elements),
            "product_order": self.product.order,
            "commutator_order": self.kappa_image.order,
            "kernel": self.kernel.to_json(),
            "pairing": [[h, k, v] for (h, k), v in sorted(self.pairing.items())],
        }


def pair_presentation(h: Subgroup, k: Subgroup, kind: str) -> tuple[Presentation, dict[tuple[int, int], int]]:
    g = h.parent
    t = g.table
    hk = {(x, y): i * k.order + j + 1 for i, x in enumerate(h.elements) for j, y in enumerate(k.elements)}
    rels: set[tuple[int, ...]] = set()
    for x in h.elements:
        for x2 in h.elements:
            for y in k.elements:
                # s(x x2, y) s(x, y)^-1 s(^x x2, ^x y)^-1
                w = (hk[(t[x][x2], y)], -hk[(x, y)], -hk[(g.conj(x, x2), g.conj(x, y))])
                rels.add(canonical_relator(w))
    for x in h.elements:
        for y in k.elements:
            for y2 in k.elements:
                # s(x, y y2) s(^y x, ^y y2)^-1 s(x, y)^-1
                w = (hk[(x, t[y][y2])], -hk[(g.conj(y, x), g.conj(y, y2))], -hk[(x, y)])
                rels.add(canonical_relator(w))
    if kind == "exterior":
        for y in sorted(h.members & k.members):
            rels.add(canonical_relator((hk[(y, y)],)))
    rels.discard(())
    names = tuple(f"s{x}_{y}" for x in h.elements for y in k.elements)
    ordered = sorted(rels, key=lambda r: (len(r), [(abs(v), v < 0) for v in r]))
    return Presentation(names, tuple(ordered)), hk


def pair_product(
    g: FiniteGroup,
    h: Subgroup,
    k: Subgroup,
    kind: str = "exterior",
    cap: int = PAIR_CAP,
    coset_cap: int = COSET_CAP,
    strategy: str = "hlt",
) -> PairProduct:
    if kind not in ("tensor", "exterior"):
        raise ValueError(f"kind must be 'tensor' or 'exterior', not {kind!r}")
    if h.parent is not g or k.parent is not g:
        raise GroupError("H and K must be subgroups of G")
    if not (h.is_normal and k.is_normal):
        raise GroupError("H and K must be normal in G")
    if h.order > cap or k.order > cap:
        raise GroupSizeError(f"|H| = {h.order}, |K| = {k.order} exceed the pair cap {cap}")
    pres, symbol = pair_presentation(h, k, kind)
    ct = todd_coxeter(pres, (), cap=coset_cap, strategy=strategy)
    if not ct.complete:
        raise EnumerationError(
            f"{kind} product of subgroups of orders {h.order}, {k.order} in {g!r} "
            f"exceeded the coset cap {coset_cap}"
        )
    product, gens = group_from_table(ct)
    pairing = {hk: gens[i - 1] for hk, i in symbol.items()}

    # the commutator map must be well defined on every edge of the coset table
    comm = [g.comm(x, y) for (x, y) in sorted(symbol, key=symbol.get)]
    images = [-1] * product.order
    images[0] = 0
    stack = [0]
    tab = ct.table
    while stack:
        c = stack.pop()
        for col, d in enumerate(tab[c]):
            z = comm[col // 2] if col % 2 == 0 else g.inverse[comm[col // 2]]
            want = g.table[images[c]][z]
            if images[d] < 0:
                images[d] = want
                stack.append(d)
            elif images[d] != want:
                raise AssertionError("the commutator map is not a homomorphism on the product")
    target = commutator_subgroup(h, k)
    if set(images) != set(target.elements):
        raise AssertionError("the commutator map is not onto [H, K]")
    kernel_elements = tuple(i for i, z in enumerate(images) if z == 0)
    kernel = invariants_of(Subgroup(product, kernel_elements))
    if kernel.order * target.order != product.order:
        raise AssertionError("kernel order does not match |product| / |[H, K]|")
    return PairProduct(g, h, k, kind, product, pairing, target, kernel_elements, kernel)


def _check_triple(g: FiniteGroup, h: Subgroup, k: Subgroup) -> None:
    if len(product_set(h, k)) != g.order:
        raise GroupError("G is not the product HK")


def triple_multiplier(g: FiniteGroup, h: Subgroup, k: Subgroup, product: PairProduct | None = None, **kw) -> AbelianInvariants:
    """The kernel of the commutator map on H ^ K, for G = HK."""
    _check_triple(g, h, k)
    if product is None:
        product = pair_product(g, h, k, "exterior", **kw)
    return product.kernel


def relative_exterior_degree(
    g: FiniteGroup, h: Subgroup, k: Subgroup, m: int, product: PairProduct | None = None, **kw
) -> DegreeValue:
    """|{(h, k) : h^m ^ k = 1 in H ^ K}| / (|H| |K|)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if product is None:
        product = pair_product(g, h, k, "exterior", **kw)
    count = sum(1 for x in h.elements for y in k.elements if product.pairing[(g.power(x, m), y)] == 0)
    return DegreeValue(Fraction(count, h.order * k.order), {"m": m, "method": "fp"})


def relative_alpha_table(
    g: FiniteGroup, h: Subgroup, k: Subgroup, m: int, product: PairProduct | None = None, **kw
) -> tuple[DegreeValue, AlphaTable]:
    if product is None:
        product = pair_product(g, h, k, "exterior", **kw)
    return class_sum_degree(h, k, m, product.wedge_trivial, "fp")


def relative_exterior_center(g: FiniteGroup, h: Subgroup, k: Subgroup, product: PairProduct | None = None, **kw) -> Subgroup:
    """{h in H : h ^ k = 1 for every k in K}."""
    if product is None:
        product = pair_product(g, h, k, "exterior", **kw)
    return Subgroup(g, tuple(x for x in h.elements if all(product.pairing[(x, y)] == 0 for y in k.elements)))
