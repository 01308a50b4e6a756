"""A small expression language for naming groups and subgroups on the command line.

Groups::

    C(n)            cyclic of order n
    D(n)            dihedral of order 2n (D(4) is the symmetry group of a square)
    Q(n)            generalized quaternion of order 4n, n >= 2
    S(n)            symmetric on n points, n <= 5
    perm:[(1 2 3),(1 2)]     closure of permutations in cycle notation
    table:path.json          Cayley table file
    fp:<a,b | a^4, b^2, abab>  regular representation of a presentation

joined by ``x`` for direct products, e.g. ``D(4) x C(3)``.

Subgroups: ``whole``, ``center``, ``derived``, ``trivial`` or ``gen:[i,j,...]``
(closure of element indices).
"""

from __future__ import annotations

import re
from functools import reduce
from math import prod

from .fp import parse_presentation, regular_group
from .groups import (
    CAYLEY_CAP,
    FiniteGroup,
    GroupError,
    Subgroup,
    center,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    from_permutations,
    load_table,
    quaternion,
    subgroup_closure,
    symmetric,
    trivial,
    whole,
)


class SpecError(GroupError):
    def __init__(self, msg: str, position: int | None = None):
        super().__init__(msg if position is None else f"{msg} (at column {position + 1})")
        self.position = position


_FAMILY = re.compile(r"\s*([CDQS])\s*\(\s*(\d+)\s*\)\s*")
_PERM = re.compile(r"\s*perm:\s*\[([^\]]*)\]\s*")
_FP = re.compile(r"\s*fp:\s*(<[^>]*>)\s*")
_TABLE = re.compile(r"\s*table:\s*(\S+?)(?=\s+x\s|\s*$)\s*")
_TIMES = re.compile(r"\s*x\s*")

_BUILDERS = {"C": cyclic, "D": dihedral, "Q": quaternion, "S": symmetric}


def _term(text: str, pos: int, cap: int) -> tuple[FiniteGroup, int]:
    m = _FAMILY.match(text, pos)
    if m:
        fam, n = m.group(1), int(m.group(2))
        g = _BUILDERS[fam](n)
        return FiniteGroup(g.table, g.labels, f"{fam}({n})"), m.end()
    m = _PERM.match(text, pos)
    if m:
        gens = re.findall(r"(?:\([^()]*\))+", m.group(1))
        if not gens:
            raise SpecError("perm:[...] needs at least one permutation", pos)
        g = from_permutations(gens, cap=cap)
        return FiniteGroup(g.table, g.labels, m.group(0).strip()), m.end()
    m = _FP.match(text, pos)
    if m:
        g, _ = regular_group(parse_presentation(m.group(1)))
        if g.order > cap:
            raise SpecError(f"presented group has order {g.order} above the cap {cap}", pos)
        return FiniteGroup(g.table, g.labels, m.group(0).strip()), m.end()
    m = _TABLE.match(text, pos)
    if m:
        return load_table(m.group(1)), m.end()
    raise SpecError(f"cannot parse group expression {text[pos:]!r}", pos)


def parse_group(text: str, cap: int = CAYLEY_CAP) -> FiniteGroup:
    """Build the group named by ``text``."""
    factors = []
    pos = 0
    while True:
        g, pos = _term(text, pos, cap)
        factors.append(g)
        if pos == len(text):
            break
        m = _TIMES.match(text, pos)
        if not m or m.end() == pos:
            raise SpecError(f"expected 'x' or end of input, found {text[pos:]!r}", pos)
        pos = m.end()
    if len(factors) == 1:
        return factors[0]
    order = prod(f.order for f in factors)
    if order > cap:
        raise SpecError(f"product order {order} exceeds the cap {cap}")
    g = reduce(lambda a, b: direct_product(a, b)[0], factors)
    return FiniteGroup(g.table, g.labels, " x ".join(f.name for f in factors))


def parse_subgroup(g: FiniteGroup, text: str | None) -> Subgroup:
    s = (text or "whole").strip()
    if s == "whole":
        return whole(g)
    if s == "center":
        return center(g)
    if s == "derived":
        return derived_subgroup(g)
    if s == "trivial":
        return trivial(g)
    m = re.fullmatch(r"gen:\s*\[([\d,\s]*)\]", s)
    if m:
        idx = [int(v) for v in m.group(1).replace(",", " ").split()]
        return subgroup_closure(g, idx)
    raise SpecError(f"unknown subgroup spec {text!r}; use whole, center, derived, trivial or gen:[i,...]")
