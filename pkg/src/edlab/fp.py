"""Finitely presented groups and Todd-Coxeter coset enumeration.

Words are tuples of non-zero integers: ``i + 1`` is the i-th generator and
``-(i + 1)`` its inverse.  In a coset table, generator ``i`` owns column
``2i`` and its inverse column ``2i + 1``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import FiniteGroup
from .snf import Elimination, SparseIntMatrix

Word = tuple[int, ...]

COSET_CAP = 2_000_000


class PresentationError(ValueError):
    def __init__(self, message: str, position: int | None = None) -> None:
        where = f" at position {position}" if position is not None else ""
        super().__init__(message + where)
        self.position = position


class EnumerationError(RuntimeError):
    """Coset enumeration could not finish within its cap."""


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = list(free_reduce(word))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def canonical_relator(word: Iterable[int]) -> Word:
    """Least rotation of the word or its inverse, for deduplication."""
    w = cyclic_reduce(word)
    if not w:
        return w
    candidates = []
    for v in (w, invert(w)):
        candidates += [v[i:] + v[:i] for i in range(len(v))]
    return min(candidates, key=lambda v: (len(v), [(abs(x), x < 0) for x in v]))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise PresentationError("duplicate generator names")
        reduced = []
        for r in self.relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise PresentationError(f"relator {r} uses an undeclared generator")
            r = free_reduce(r)
            if r:
                reduced.append(r)
        object.__setattr__(self, "relators", tuple(reduced))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.generators[abs(word[i]) - 1]
            e = (j - i) * (1 if word[i] > 0 else -1)
            parts.append(name if e == 1 else f"{name}^{e}")
            i = j
        return " ".join(parts)

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"

    def has_infinite_abelianization(self) -> bool:
        """True when the relator exponent-sum matrix has rank below the generator count."""
        m = SparseIntMatrix(len(self.relators), self.ngens)
        for i, r in enumerate(self.relators):
            for x in r:
                m.add(i, abs(x) - 1, 1 if x > 0 else -1)
        return Elimination(m).run().rank < self.ngens


# parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[+-]?\d+)|(?P<sym>[<>|,()^=*]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PresentationError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str) -> None:
        self.toks = _tokenize(text)
        self.i = 0
        self.names: dict[str, int] = {}

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, value: str | None = None, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value or kind
            raise PresentationError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def presentation(self) -> Presentation:
        self.take("<")
        gens: list[str] = []
        if self.peek()[1] != "|":
            while True:
                _, name, pos = self.take(kind="id")
                if name in self.names:
                    raise PresentationError(f"generator {name!r} declared twice", pos)
                self.names[name] = len(gens) + 1
                gens.append(name)
                if self.peek()[1] != ",":
                    break
                self.take(",")
        self.take("|")
        rels: list[Word] = []
        if self.peek()[1] != ">":
            while True:
                chain = [self.word()]
                while self.peek()[1] == "=":
                    self.take("=")
                    chain.append(self.word())
                if len(chain) == 1:
                    rels.append(chain[0])
                else:
                    rels += [a + invert(b) for a, b in zip(chain, chain[1:])]
                if self.peek()[1] != ",":
                    break
                self.take(",")
        self.take(">")
        self.take(kind="end")
        return Presentation(tuple(gens), tuple(rels))

    def word(self) -> Word:
        out: list[int] = []
        while True:
            kind, val, pos = self.peek()
            if kind == "id" or val == "(":
                out += self.factor()
            elif val == "*":
                self.take("*")
            else:
                break
        if not out and self.peek()[1] not in (",", ">", "="):
            raise PresentationError(f"unexpected {self.peek()[1]!r}", self.peek()[2])
        return tuple(out)

    def factor(self) -> list[int]:
        kind, val, pos = self.take()
        if val == "(":
            base = list(self.word())
            self.take(")")
        elif val == "1" or (kind == "id" and val in self.names):
            base = [self.names[val]] if kind == "id" else []
        else:
            base = self._split(val, pos)
        if self.peek()[1] == "^":
            self.take("^")
            _, e, _ = self.take(kind="int")
            n = int(e)
            unit = base if n >= 0 else list(invert(base))
            return unit * abs(n)
        return base

    def _split(self, ident: str, pos: int) -> list[int]:
        # juxtaposed generator names written without spaces, e.g. "ab"
        out, i = [], 0
        while i < len(ident):
            for j in range(len(ident), i, -1):
                if ident[i:j] in self.names:
                    out.append(self.names[ident[i:j]])
                    i = j
                    break
            else:
                raise PresentationError(f"undeclared generator in {ident!r}", pos + i)
        return out


def parse_presentation(text: str) -> Presentation:
    """Parse ``< a, b | a^4, b^2, (ab)^2 >``.

    Words use juxtaposition, ``^`` with signed integer exponents and
    parentheses; ``u = v`` becomes the relator ``u v^-1``.
    """
    return _Parser(text).presentation()


# coset enumeration ------------------------------------------------------


def _col(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


@dataclass
class CosetTable:
    presentation: Presentation
    subgroup: tuple[Word, ...]
    table: list[list[int]]
    status: str
    defined: int = 0
    max_live: int = 0

    @property
    def index(self) -> int:
        return len(self.table)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def act(self, coset: int, word: Sequence[int]) -> int:
        for x in word:
            coset = self.table[coset][_col(x)]
        return coset

    def scan_failures(self) -> list[tuple[int, Word]]:
        """(coset, relator) pairs where the relator does not close up."""
        bad = []
        for c in range(self.index):
            for r in self.presentation.relators:
                if self.act(c, r) != c:
                    bad.append((c, r))
        return bad

    def is_closed(self) -> bool:
        return all(v >= 0 for row in self.table for v in row)


class _Enumerator:
    def __init__(self, ngens: int, relators: Sequence[Word], cap: int) -> None:
        self.ncols = 2 * ngens
        self.rels = [[_col(x) for x in r] for r in relators]
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.fwd = [0]
        self.live = 1
        self.defined = 1
        self.max_live = 1
        self.cap = cap
        self.deductions: list[tuple[int, int]] = []
        self.track_deductions = False

    def rep(self, c: int) -> int:
        fwd = self.fwd
        root = c
        while fwd[root] != root:
            root = fwd[root]
        while fwd[c] != root:
            fwd[c], c = root, fwd[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.fwd[c] == c

    def define(self, c: int, x: int) -> int:
        if self.live >= self.cap:
            raise EnumerationError("cap")
        n = len(self.table)
        self.table.append([-1] * self.ncols)
        self.fwd.append(n)
        self.table[c][x] = n
        self.table[n][x ^ 1] = c
        self.live += 1
        self.defined += 1
        self.max_live = max(self.max_live, self.live)
        if self.track_deductions:
            self.deductions.append((c, x))
        return n

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if l < k:
            k, l = l, k
        self.fwd[l] = k
        self.live -= 1
        queue.append(l)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = table[e]
            for x in range(self.ncols):
                f = row[x]
                if f < 0:
                    continue
                xi = x ^ 1
                if table[f][xi] == e:
                    table[f][xi] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] >= 0:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][xi] >= 0:
                    self._merge(e1, table[f1][xi], queue)
                else:
                    table[e1][x] = f1
                    table[f1][xi] = e1
                    if self.track_deductions:
                        self.deductions.append((e1, x))

    def scan(self, c: int, w: Sequence[int], fill: bool) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                if self.track_deductions:
                    self.deductions.append((f, w[i]))
                return
            if not fill:
                return
            self.define(f, w[i])

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            for r in self.rels:
                if not self.is_live(c):
                    break
                self.scan(c, r, fill=False)

    def hlt(self, subgroup: Sequence[Sequence[int]]) -> None:
        for w in subgroup:
            self._guarded(lambda w=w: self.scan(self.rep(0), w, fill=True))
        c = 0
        while c < len(self.table):
            for r in self.rels:
                if not self.is_live(c):
                    break
                self._guarded(lambda r=r: self.scan(c, r, fill=True))
            if self.is_live(c):
                for x in range(self.ncols):
                    if self.is_live(c) and self.table[c][x] < 0:
                        self._guarded(lambda x=x: self.define(c, x))
            c += 1

    def _guarded(self, step) -> None:
        try:
            step()
        except EnumerationError:
            self.lookahead()
            try:
                step()
            except EnumerationError:
                raise EnumerationError(f"coset cap {self.cap} exceeded") from None

    def felsch(self, subgroup: Sequence[Sequence[int]]) -> None:
        self.track_deductions = True
        # cyclic conjugates of relators and their inverses, keyed by first column
        by_first: dict[int, list[list[int]]] = {}
        seen = set()
        for r in self.rels:
            for v in (r, [x ^ 1 for x in reversed(r)]):
                for i in range(len(v)):
                    rot = tuple(v[i:] + v[:i])
                    if rot not in seen:
                        seen.add(rot)
                        by_first.setdefault(rot[0], []).append(list(rot))
        for w in subgroup:
            self.scan(self.rep(0), w, fill=True)
        self._process(by_first)
        c = 0
        while c < len(self.table):
            if self.is_live(c):
                for x in range(self.ncols):
                    if self.is_live(c) and self.table[c][x] < 0:
                        try:
                            self.define(c, x)
                        except EnumerationError:
                            raise EnumerationError(f"coset cap {self.cap} exceeded") from None
                        self._process(by_first)
            c += 1

    def _process(self, by_first: dict[int, list[list[int]]]) -> None:
        stack = self.deductions
        while stack:
            c, x = stack.pop()
            if not self.is_live(c):
                continue
            for w in by_first.get(x, ()):
                if not self.is_live(c):
                    break
                self.scan(c, w, fill=False)
            d = self.table[c][x] if self.is_live(c) else -1
            if d >= 0 and self.is_live(d):
                for w in by_first.get(x ^ 1, ()):
                    if not self.is_live(d):
                        break
                    self.scan(d, w, fill=False)

    def standardized(self) -> list[list[int]]:
        """Live cosets renumbered breadth-first from coset 0 in column order."""
        start = self.rep(0)
        order = {start: 0}
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for x in range(self.ncols):
                d = self.table[c][x]
                if d >= 0:
                    d = self.rep(d)
                    if d not in order:
                        order[d] = len(order)
                        queue.append(d)
        out = [[-1] * self.ncols for _ in order]
        for c, i in order.items():
            out[i] = [order[self.rep(d)] if d >= 0 else -1 for d in self.table[c]]
        return out


def todd_coxeter(
    p: Presentation,
    sub: Sequence[Sequence[int]] = (),
    cap: int = COSET_CAP,
    strategy: str = "hlt",
) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``sub``.

    Returns a table with status ``complete`` or ``capped``; a capped table is
    never a partial answer passed off as complete.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    sub = tuple(free_reduce(w) for w in sub)
    en = _Enumerator(p.ngens, p.relators, cap)
    subcols = [[_col(x) for x in w] for w in sub if w]
    try:
        if strategy == "hlt":
            en.hlt(subcols)
        else:
            en.felsch(subcols)
    except EnumerationError:
        return CosetTable(p, sub, [], "capped", en.defined, en.max_live)
    table = CosetTable(p, sub, en.standardized(), "complete", en.defined, en.max_live)
    if not table.is_closed() or table.scan_failures():
        raise AssertionError("coset enumeration produced an inconsistent table")
    return table


def regular_group(
    p: Presentation, cap: int = COSET_CAP, strategy: str = "hlt"
) -> tuple[FiniteGroup, list[int]]:
    """The group as its regular representation, plus the images of the generators."""
    if p.has_infinite_abelianization():
        raise EnumerationError("not enumerable over trivial subgroup: the abelianization is infinite")
    ct = todd_coxeter(p, (), cap=cap, strategy=strategy)
    if not ct.complete:
        raise EnumerationError(f"enumeration of {p} exceeded the coset cap {cap}")
    return group_from_table(ct)


def group_from_table(ct: CosetTable) -> tuple[FiniteGroup, list[int]]:
    """Cayley table of a regular coset table: coset i is the element 0 . w_i."""
    n = ct.index
    tab = ct.table
    parent: list[tuple[int, int]] = [(-1, -1)] * n
    words: list[Word] = [()] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    for c in order:
        for x, d in enumerate(tab[c]):
            if not seen[d]:
                seen[d] = True
                parent[d] = (c, x)
                letter = x // 2 + 1
                words[d] = words[c] + ((letter if x % 2 == 0 else -letter),)
                order.append(d)
    # mul[i][j] = i . w_j, built along the spanning tree of j
    mul = [[0] * n for _ in range(n)]
    for i in range(n):
        row = mul[i]
        row[0] = i
        for j in order[1:]:
            pj, x = parent[j]
            row[j] = tab[row[pj]][x]
    labels = tuple(ct.presentation.format_word(w) for w in words)
    g = FiniteGroup(tuple(tuple(r) for r in mul), labels, "fp")
    gens = [tab[0][2 * i] for i in range(ct.presentation.ngens)]
    return g, gens
