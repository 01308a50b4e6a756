"""Sparse integer matrices and Smith normal form.

The elimination pivots on the entry of least magnitude, preferring units in
short columns (a Markowitz-style rule), and works on dict-of-dict storage so
that the very sparse boundary matrices of the bar complex stay sparse.
Row transforms ``U`` and their inverses can be tracked, which is what the
homology code needs to name cycles and cocycles.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence


@dataclass
class SparseIntMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (r, c), v in list(self.entries.items()):
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                del self.entries[(r, c)]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> SparseIntMatrix:
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        entries = {(i, j): int(v) for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(nr, nc, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def add(self, r: int, c: int, v: int) -> None:
        nv = self.entries.get((r, c), 0) + v
        if nv:
            self.entries[(r, c)] = nv
        else:
            self.entries.pop((r, c), None)

    def column_dicts(self) -> dict[int, dict[int, int]]:
        cols: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, {})[r] = v
        return cols

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        """Matrix times a sparse column vector."""
        cols = self.column_dicts()
        out: dict[int, int] = {}
        for c, a in vec.items():
            for r, v in cols.get(c, {}).items():
                out[r] = out.get(r, 0) + a * v
        return {r: v for r, v in out.items() if v}

    def dumps(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines += [f"{r} {c} {v}" for (r, c), v in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str) -> SparseIntMatrix:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        nr, nc, nnz = (int(x) for x in lines[0].split())
        if len(lines) - 1 != nnz:
            raise ValueError(f"header announces {nnz} entries, found {len(lines) - 1}")
        entries = {}
        for ln in lines[1:]:
            r, c, v = (int(x) for x in ln.split())
            entries[(r, c)] = v
        return cls(nr, nc, entries)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    inner = len(b)
    ncols = len(b[0]) if inner else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def _axpy(dst: dict[int, int], src: dict[int, int], a: int) -> None:
    for k, v in src.items():
        nv = dst.get(k, 0) + a * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _rdiv(v: int, p: int) -> int:
    """Quotient of v by p rounded to nearest, so remainders are at most |p|/2."""
    q, r = divmod(v, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


class Elimination:
    """Unimodular diagonalization ``U M V = diag`` of a sparse integer matrix.

    After :meth:`run`, ``pivots`` lists ``(row, col, d)`` with ``d > 0`` and
    ``d_1 | d_2 | ...``.  ``u_rows[r]`` is row ``r`` of ``U``,
    ``uinv_cols[r]`` is column ``r`` of ``U^-1`` and ``v_cols[c]`` is column
    ``c`` of ``V``, when tracking was requested.
    """

    def __init__(
        self,
        m: SparseIntMatrix,
        track_u: bool = False,
        track_uinv: bool = False,
        track_v: bool = False,
    ) -> None:
        self.nrows, self.ncols = m.rows, m.cols
        self.cols: dict[int, dict[int, int]] = m.column_dicts()
        self.rows: dict[int, set[int]] = {}
        for c, col in self.cols.items():
            for r in col:
                self.rows.setdefault(r, set()).add(c)
        self.u_rows = {r: {r: 1} for r in range(m.rows)} if track_u else None
        self.uinv_cols = {r: {r: 1} for r in range(m.rows)} if track_uinv else None
        self.v_cols = {c: {c: 1} for c in range(m.cols)} if track_v else None
        self.pivots: list[tuple[int, int, int]] = []
        self._heap = [(len(col), c) for c, col in self.cols.items()]
        heapq.heapify(self._heap)

    # elementary operations ------------------------------------------------

    def _touch(self, c: int) -> None:
        col = self.cols.get(c)
        if col is not None:
            heapq.heappush(self._heap, (len(col), c))

    def add_col(self, dst: int, src: int, a: int) -> None:
        """col_dst += a * col_src."""
        cd = self.cols.setdefault(dst, {})
        for r, v in self.cols[src].items():
            nv = cd.get(r, 0) + a * v
            if nv:
                if r not in cd:
                    self.rows.setdefault(r, set()).add(dst)
                cd[r] = nv
            elif r in cd:
                del cd[r]
                self.rows[r].discard(dst)
        self._touch(dst)
        if self.v_cols is not None:
            _axpy(self.v_cols[dst], self.v_cols[src], a)

    def add_row(self, dst: int, src: int, a: int) -> None:
        """row_dst += a * row_src."""
        drow = self.rows.setdefault(dst, set())
        for c in list(self.rows[src]):
            col = self.cols[c]
            nv = col.get(dst, 0) + a * col[src]
            if nv:
                col[dst] = nv
                drow.add(c)
            elif dst in col:
                del col[dst]
                drow.discard(c)
            self._touch(c)
        if self.u_rows is not None:
            _axpy(self.u_rows[dst], self.u_rows[src], a)
        if self.uinv_cols is not None:
            _axpy(self.uinv_cols[src], self.uinv_cols[dst], -a)

    # pivoting ---------------------------------------------------------------

    def _choose(self) -> tuple[int, int] | None:
        heap = self._heap
        while heap:
            length, c = heap[0]
            col = self.cols.get(c)
            if col is None or len(col) != length:
                heapq.heappop(heap)
                if col is not None and not col:
                    del self.cols[c]
                continue
            units = [r for r, v in col.items() if v in (1, -1)]
            heapq.heappop(heap)
            if units:
                return min(units, key=lambda r: (len(self.rows[r]), r)), c
        # no unit left anywhere: least magnitude, then sparsest
        best = None
        for c, col in self.cols.items():
            for r, v in col.items():
                key = (abs(v), len(col) * len(self.rows[r]), c, r)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        return best[3], best[2]

    def _settle(self, r: int, c: int) -> tuple[int, int]:
        """Clear row r and column c around the pivot; the pivot may move."""
        while True:
            p = self.cols[c][r]
            for c2 in list(self.rows[r]):
                if c2 != c:
                    q = _rdiv(self.cols[c2][r], p)
                    if q:
                        self.add_col(c2, c, -q)
            for r2 in list(self.cols[c]):
                if r2 != r:
                    q = _rdiv(self.cols[c][r2], p)
                    if q:
                        self.add_row(r2, r, -q)
            rest = [(abs(self.cols[c2][r]), 0, r, c2) for c2 in self.rows[r] if c2 != c]
            rest += [(abs(v), 1, r2, c) for r2, v in self.cols[c].items() if r2 != r]
            if not rest:
                return r, c
            _, _, r, c = min(rest)

    def run(self) -> Elimination:
        while True:
            choice = self._choose()
            if choice is None:
                break
            r, c = self._settle(*choice)
            p = self.cols[c][r]
            del self.cols[c]
            del self.rows[r]
            if p < 0:
                self._negate_pivot_row(r)
                p = -p
            self.pivots.append((r, c, p))
        self._fix_divisibility()
        return self

    def _negate_pivot_row(self, r: int) -> None:
        if self.u_rows is not None:
            self.u_rows[r] = {k: -v for k, v in self.u_rows[r].items()}
        if self.uinv_cols is not None:
            self.uinv_cols[r] = {k: -v for k, v in self.uinv_cols[r].items()}

    def _fix_divisibility(self) -> None:
        piv = sorted(self.pivots, key=lambda t: (t[2], t[0], t[1]))
        big = [i for i, t in enumerate(piv) if t[2] > 1]
        for a_pos, i in enumerate(big):
            for j in big[a_pos + 1 :]:
                ri, ci, a = piv[i]
                rj, cj, b = piv[j]
                if b % a == 0:
                    continue
                g, s, t = _xgcd(a, b)
                # [[s, t], [-b/g, a/g]] diag(a, b) [[1, -t b/g], [1, s a/g]] = diag(g, ab/g)
                self._mix_rows(ri, rj, s, t, -b // g, a // g)
                self._mix_cols(ci, cj, 1, -t * b // g, 1, s * a // g)
                piv[i] = (ri, ci, g)
                piv[j] = (rj, cj, a * b // g)
        self.pivots = sorted(piv, key=lambda t: (t[2], t[0], t[1]))

    def _mix_rows(self, r1: int, r2: int, a: int, b: int, c: int, d: int) -> None:
        # rows (r1, r2) <- [[a, b], [c, d]] (r1, r2); determinant 1
        if self.u_rows is not None:
            u1, u2 = self.u_rows[r1], self.u_rows[r2]
            n1, n2 = {}, {}
            _axpy(n1, u1, a), _axpy(n1, u2, b)
            _axpy(n2, u1, c), _axpy(n2, u2, d)
            self.u_rows[r1], self.u_rows[r2] = n1, n2
        if self.uinv_cols is not None:
            w1, w2 = self.uinv_cols[r1], self.uinv_cols[r2]
            n1, n2 = {}, {}
            _axpy(n1, w1, d), _axpy(n1, w2, -c)
            _axpy(n2, w1, -b), _axpy(n2, w2, a)
            self.uinv_cols[r1], self.uinv_cols[r2] = n1, n2

    def _mix_cols(self, c1: int, c2: int, a: int, b: int, c: int, d: int) -> None:
        # cols (c1, c2) <- (c1, c2) [[a, b], [c, d]]
        if self.v_cols is not None:
            v1, v2 = self.v_cols[c1], self.v_cols[c2]
            n1, n2 = {}, {}
            _axpy(n1, v1, a), _axpy(n1, v2, c)
            _axpy(n2, v1, b), _axpy(n2, v2, d)
            self.v_cols[c1], self.v_cols[c2] = n1, n2

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def diagonal(self) -> list[int]:
        return [p for _, _, p in self.pivots]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b = g = gcd(a, b) > 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


@dataclass
class SmithForm:
    diagonal: list[int]
    S: list[list[int]]
    U: list[list[int]]
    V: list[list[int]]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(m: SparseIntMatrix | Sequence[Sequence[int]]) -> SmithForm:
    """Return ``S, U, V`` with ``U M V = S``, ``U`` and ``V`` unimodular."""
    if not isinstance(m, SparseIntMatrix):
        m = SparseIntMatrix.from_dense(m) if len(m) else SparseIntMatrix(0, 0)
    el = Elimination(m, track_u=True, track_v=True).run()
    piv_rows = [r for r, _, _ in el.pivots]
    piv_cols = [c for _, c, _ in el.pivots]
    row_order = piv_rows + sorted(set(range(m.rows)) - set(piv_rows))
    col_order = piv_cols + sorted(set(range(m.cols)) - set(piv_cols))
    U = []
    for r in row_order:
        row = [0] * m.rows
        for k, v in el.u_rows[r].items():
            row[k] = v
        U.append(row)
    V = [[0] * m.cols for _ in range(m.cols)]
    for j, c in enumerate(col_order):
        for k, v in el.v_cols[c].items():
            V[k][j] = v
    S = [[0] * m.cols for _ in range(m.rows)]
    for i, d in enumerate(el.diagonal):
        S[i][i] = d
    return SmithForm(el.diagonal, S, U, V)


def elementary_divisors(m: SparseIntMatrix) -> list[int]:
    return Elimination(m).run().diagonal


def is_smith_form(s: Sequence[Sequence[int]]) -> bool:
    diag = []
    for i, row in enumerate(s):
        for j, v in enumerate(row):
            if v and i != j:
                return False
        if i < len(row):
            diag.append(row[i])
    nz = [d for d in diag if d]
    if any(d < 0 for d in diag) or diag[: len(nz)] != nz:
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))


def rank_of(rows: Iterable[Sequence[int]]) -> int:
    return Elimination(SparseIntMatrix.from_dense(list(rows))).run().rank
