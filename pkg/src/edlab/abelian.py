"""Isomorphism types of finite abelian groups."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import prod
from typing import Iterable

import sympy

from .groups import FiniteGroup, GroupError, Subgroup, whole


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d_1 | d_2 | ... | d_t, each >= 2; empty means trivial."""

    divisors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ds = self.divisors
        if any(d < 2 for d in ds):
            raise ValueError(f"invariant factors must be >= 2: {ds}")
        if any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"not a divisibility chain: {ds}")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> AbelianInvariants:
        """Normalize any list of cyclic orders (e.g. elementary divisors) to invariant factors."""
        primary: dict[int, list[int]] = defaultdict(list)
        for n in orders:
            if n == 0:
                raise ValueError("infinite cyclic factor")
            for p, e in sympy.factorint(abs(n)).items():
                primary[p].append(p**e)
        width = max((len(v) for v in primary.values()), default=0)
        factors = [1] * width
        for powers in primary.values():
            for i, q in enumerate(sorted(powers, reverse=True)):
                factors[width - 1 - i] *= q
        return cls(tuple(f for f in factors if f > 1))

    @property
    def order(self) -> int:
        return prod(self.divisors)

    @property
    def is_trivial(self) -> bool:
        return not self.divisors

    def __str__(self) -> str:
        if not self.divisors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.divisors)

    def to_json(self) -> list[int]:
        return list(self.divisors)


def invariants_of(sub: Subgroup | FiniteGroup) -> AbelianInvariants:
    """Invariant factors of an abelian group, read off p-power element counts."""
    if isinstance(sub, FiniteGroup):
        sub = whole(sub)
    g = sub.parent
    els = sub.elements
    t = g.table
    if any(t[x][y] != t[y][x] for x in els for y in els):
        raise GroupError("group is not abelian")
    orders = [g.element_orders[x] for x in els]
    cyclic_orders: list[int] = []
    for p in sympy.factorint(len(els)):
        # n_k = log_p #{x : x^(p^k) = 1}
        logs = [0]
        k = 1
        while True:
            count = sum(1 for o in orders if (p**k) % o == 0)
            logs.append(_exact_log(count, p))
            if logs[-1] == logs[-2]:
                break
            k += 1
        # number of cyclic factors of order >= p^k is logs[k] - logs[k-1]
        at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        for k, n_ge in enumerate(at_least, start=1):
            n_next = at_least[k] if k < len(at_least) else 0
            cyclic_orders += [p**k] * (n_ge - n_next)
    return AbelianInvariants.from_orders(cyclic_orders)


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n % p == 0 and n > 1:
        n //= p
        e += 1
    if n != 1:
        raise AssertionError("element count is not a prime power")
    return e
