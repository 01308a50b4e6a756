"""Commutativity-type probabilities, kept as exact fractions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .groups import FiniteGroup, GroupError, Subgroup, conjugacy_classes_under

NILPOTENCY_BUDGET = 10**8


class BudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class DegreeValue:
    value: Fraction
    context: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if not 0 < self.value <= 1:
            raise ValueError(f"degree {self.value} outside (0, 1]")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def to_json(self) -> dict[str, int]:
        return {"num": self.numerator, "den": self.denominator}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeValue):
            return self.value == other.value
        if isinstance(other, (Fraction, int)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: DegreeValue | Fraction) -> bool:
        return self.value < _val(other)

    def __le__(self, other: DegreeValue | Fraction) -> bool:
        return self.value <= _val(other)


def _val(x: DegreeValue | Fraction | int) -> Fraction:
    return x.value if isinstance(x, DegreeValue) else Fraction(x)


def commuting_pairs(h: Subgroup, k: Subgroup) -> int:
    t = h.parent.table
    return sum(1 for x in h.elements for y in k.elements if t[x][y] == t[y][x])


def commutativity_degree(g: FiniteGroup) -> DegreeValue:
    by_classes = Fraction(g.class_number, g.order)
    by_pairs = Fraction(sum(g.centralizer_orders), g.order**2)
    if by_classes != by_pairs:
        raise AssertionError(f"class count and pair count disagree for {g}: {by_classes} != {by_pairs}")
    return DegreeValue(by_classes, {"m": 1, "method": "classes"})


def relative_degree(h: Subgroup, k: Subgroup) -> DegreeValue:
    """Probability that a random pair of H x K commutes.

    When H is normal the value is also k_K(H)/|H| and the two are compared.
    """
    if h.parent is not k.parent:
        raise GroupError("subgroups live in different groups")
    value = Fraction(commuting_pairs(h, k), h.order * k.order)
    if h.is_normal:
        by_classes = Fraction(len(conjugacy_classes_under(k, h)), h.order)
        if by_classes != value:
            raise AssertionError(f"class form {by_classes} != pair count {value}")
    return DegreeValue(value, {"m": 1, "method": "pairs"})


def nilpotency_degree(n: int, h: Subgroup, g: FiniteGroup, budget: int = NILPOTENCY_BUDGET) -> DegreeValue:
    """Probability that the left-normed commutator [h_1, ..., h_n, g] vanishes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if h.parent is not g:
        raise GroupError("H is not a subgroup of G")
    if h.order**n > budget:
        raise BudgetError(f"|H|^n = {h.order}^{n} tuples exceed the budget {budget}")
    # distribution of [h_1, ..., h_j] over H^j
    dist = Counter({x: 1 for x in h.elements})
    for _ in range(n - 1):
        nxt: Counter[int] = Counter()
        for c, mult in dist.items():
            for y in h.elements:
                nxt[g.comm(c, y)] += mult
        dist = nxt
    cent = g.centralizer_orders
    total = sum(mult * cent[c] for c, mult in dist.items())
    return DegreeValue(Fraction(total, h.order**n * g.order), {"n": n, "method": "commutator-words"})


def power_commutativity_degree(m: int, h: Subgroup, k: Subgroup) -> DegreeValue:
    """Probability that h^m commutes with k for random (h, k) in H x K."""
    if m < 1:
        raise ValueError("m must be >= 1")
    g = h.parent
    t = g.table
    count = 0
    for x in h.elements:
        xm = g.power(x, m)
        count += sum(1 for y in k.elements if t[xm][y] == t[y][xm])
    return DegreeValue(Fraction(count, h.order * k.order), {"m": m, "method": "pairs"})

