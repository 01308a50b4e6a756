"""Named groups used by the verification suites.

``small_groups(16)`` lists one group from every isomorphism class of order
at most 16; the order-16 groups without a family name are given by
presentations.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import FiniteGroup
from .groupspec import parse_group

A4 = "perm:[(1 2 3),(1 2)(3 4)]"

_SMALL: tuple[tuple[int, str], ...] = (
    (1, "C(1)"),
    (2, "C(2)"),
    (3, "C(3)"),
    (4, "C(4)"),
    (4, "C(2) x C(2)"),
    (5, "C(5)"),
    (6, "C(6)"),
    (6, "D(3)"),
    (7, "C(7)"),
    (8, "C(8)"),
    (8, "C(2) x C(4)"),
    (8, "C(2) x C(2) x C(2)"),
    (8, "D(4)"),
    (8, "Q(2)"),
    (9, "C(9)"),
    (9, "C(3) x C(3)"),
    (10, "C(10)"),
    (10, "D(5)"),
    (11, "C(11)"),
    (12, "C(12)"),
    (12, "C(2) x C(6)"),
    (12, "D(6)"),
    (12, "Q(3)"),
    (12, A4),
    (13, "C(13)"),
    (14, "C(14)"),
    (14, "D(7)"),
    (15, "C(15)"),
    (16, "C(16)"),
    (16, "C(2) x C(8)"),
    (16, "C(4) x C(4)"),
    (16, "C(2) x C(2) x C(4)"),
    (16, "C(2) x C(2) x C(2) x C(2)"),
    (16, "D(8)"),
    (16, "Q(4)"),
    (16, "C(2) x D(4)"),
    (16, "C(2) x Q(2)"),
    (16, "fp:<a,b | a^8, b^2, b a b a^-3>"),
    (16, "fp:<a,b | a^8, b^2, b a b a^-5>"),
    (16, "fp:<a,b | a^4, b^4, b a b^-1 a>"),
    (16, "fp:<a,b,c | a^4, b^2, c^2, a b a^-1 b, b c b c, c a c b a^-1>"),
    (16, "fp:<a,b,c | a^4, b^2, c^2, a b a^-1 b, a c a^-1 c, c b c b a^-2>"),
)

# groups above order 16 that some checks need
EXTRA: tuple[str, ...] = (
    "D(4) x C(3)",
    "Q(2) x C(3)",
    "S(3) x C(5)",
    "D(3) x C(4)",
    "S(4)",
    "D(10)",
    "D(12)",
    "Q(6)",
)


def small_specs(max_order: int = 16) -> list[str]:
    return [s for n, s in _SMALL if n <= max_order]


@lru_cache(maxsize=None)
def group(spec: str) -> FiniteGroup:
    """Cached construction, so repeated suites share one object per spec."""
    return parse_group(spec)


def small_groups(max_order: int = 16) -> list[FiniteGroup]:
    return [group(s) for s in small_specs(max_order)]
