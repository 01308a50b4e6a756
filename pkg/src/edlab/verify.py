"""Property checks over the group corpus.

Each check yields CheckReport records with verdict ``pass``, ``fail`` or
``finding``.  A finding compares two quantities that are often taken to be
equal although they need not agree; it is evidence, not a failure.

Wedges are evaluated in the stem cover when H = K = G, where G ^ G is what
the cover realizes, and in the enumerated H ^ K otherwise.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Iterator

import sympy

from . import corpus
from .config import Config
from .degrees import commutativity_degree, power_commutativity_degree, relative_degree
from .exterior import (
    AlphaTable,
    StemCover,
    build_cover,
    class_sum_degree,
    closed_form_dihedral,
    closed_form_quaternion,
    exterior_center,
    exterior_centralizer,
    exterior_degree_m,
    exterior_square_order,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    center,
    conjugacy_classes_under,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    image,
    normal_subgroups,
    product_set,
    quaternion,
    quotient,
    whole,
)
from .homology import bar_boundary, schur_multiplier, stem_cocycle
from .snf import matmul
from .tensor import PairProduct, pair_product


@dataclass
class CheckReport:
    check: str
    instance: str
    verdict: str
    values: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "verdict": self.verdict,
            "values": {k: _jsonable(v) for k, v in self.values.items()},
            "witnesses": [_jsonable(w) for w in self.witnesses],
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if hasattr(v, "to_json") and not isinstance(v, type):
        return str(v) if hasattr(v, "value") else v.to_json()
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _report(check: str, instance: str, ok: bool, values: dict, witnesses: list | None = None) -> CheckReport:
    if not ok and not witnesses:
        # the instance string plus the compared values reproduce the failure
        witnesses = [{"instance": instance, **values}]
    return CheckReport(check, instance, "pass" if ok else "fail", values, witnesses or [])


# wedge evaluation ---------------------------------------------------------


@dataclass
class Exterior:
    """The pairing H x K -> H ^ K for one triple, whichever route produced it."""

    h: Subgroup
    k: Subgroup
    trivial: Callable[[int, int], bool]
    kernel_order: int
    route: str

    def degree(self, m: int) -> Fraction:
        g = self.h.parent
        count = 0
        for x in self.h.elements:
            xm = g.power(x, m)
            count += sum(1 for y in self.k.elements if self.trivial(xm, y))
        return Fraction(count, self.h.order * self.k.order)

    def alpha(self, m: int) -> tuple[Fraction, AlphaTable]:
        value, table = class_sum_degree(self.h, self.k, m, self.trivial, self.route)
        return value.value, table

    def center(self) -> Subgroup:
        return Subgroup(self.h.parent, tuple(x for x in self.h.elements if all(self.trivial(x, y) for y in self.k.elements)))


class Workbench:
    """Caches covers and pair products so that suites can share them."""

    def __init__(self, config: Config | None = None):
        self.config = config or Config()
        self._covers: dict[int, tuple[FiniteGroup, StemCover]] = {}
        self._products: dict[tuple, tuple[FiniteGroup, PairProduct]] = {}

    def cover(self, g: FiniteGroup) -> StemCover:
        hit = self._covers.get(id(g))
        if hit is None:
            hit = (g, build_cover(g, cap=self.config.homology))
            self._covers[id(g)] = hit
        return hit[1]

    def product(self, g: FiniteGroup, h: Subgroup, k: Subgroup, kind: str = "exterior") -> PairProduct:
        key = (id(g), h.elements, k.elements, kind)
        hit = self._products.get(key)
        if hit is None:
            cfg = self.config
            p = pair_product(g, h, k, kind, cap=cfg.fp_pair, coset_cap=cfg.coset_rows, strategy=cfg.strategy)
            hit = (g, p)
            self._products[key] = hit
        return hit[1]

    def exterior(self, h: Subgroup, k: Subgroup) -> Exterior:
        g = h.parent
        if h.order == g.order and k.order == g.order:
            cov = self.cover(g)
            wt = cov.wedge_table
            return Exterior(h, k, lambda x, y: wt[x][y], cov.kernel.order, "cover")
        p = self.product(g, h, k)
        return Exterior(h, k, p.wedge_trivial, p.kernel.order, "fp")


def _sub_name(s: Subgroup) -> str:
    g = s.parent
    if s.order == g.order:
        return "G"
    if s.order == 1:
        return "1"
    return "<" + ",".join(map(str, s.elements)) + ">"


def _triple_name(g: FiniteGroup, h: Subgroup, k: Subgroup, m: int | None = None) -> str:
    base = f"{g.name}; H={_sub_name(h)}; K={_sub_name(k)}"
    return base if m is None else f"{base}; m={m}"


def factorization_triples(g: FiniteGroup, max_pair: int) -> Iterator[tuple[Subgroup, Subgroup]]:
    """Pairs of normal subgroups with G = HK, both of order at most max_pair."""
    ns = [n for n in normal_subgroups(g) if n.order <= max_pair]
    for h in ns:
        for k in ns:
            if len(product_set(h, k)) == g.order:
                yield h, k


def _primes(n: int) -> list[int]:
    return sorted(sympy.factorint(n)) if n > 1 else []


def _p_depth(h: Subgroup, p: int) -> int:
    """Largest r with an element of order p^r in H."""
    best = 0
    for x in h.elements:
        o = h.parent.element_orders[x]
        r = 0
        while o % p == 0:
            o //= p
            r += 1
        best = max(best, r)
    return best


def _divides_m_minus_1(e: int, m: int) -> bool:
    return (m - 1) % e == 0


# family checks ------------------------------------------------------------


def check_closed_forms(wb: Workbench, dihedral_n=range(2, 11), quaternion_n=range(2, 9)) -> Iterator[CheckReport]:
    for fam, ns, build, closed in (
        ("D", dihedral_n, dihedral, closed_form_dihedral),
        ("Q", quaternion_n, quaternion, closed_form_quaternion),
    ):
        for n in ns:
            g = corpus.group(f"{fam}({n})")
            cov = wb.cover(g)
            for m in range(1, 2 * n + 1):
                got = exterior_degree_m(cov, m).value
                want = closed(n, m).value
                yield _report("closed-forms", f"{fam}({n}); m={m}", got == want, {"computed": got, "closed_form": want})


def check_dihedral_quaternion(wb: Workbench, ns=range(2, 9)) -> Iterator[CheckReport]:
    for n in ns:
        cd, cq = wb.cover(corpus.group(f"D({n})")), wb.cover(corpus.group(f"Q({n})"))
        for m in range(1, 2 * n + 1):
            d = exterior_degree_m(cd, m).value
            q = exterior_degree_m(cq, m).value
            yield _report("dihedral-quaternion", f"n={n}; m={m}", d == q, {"dihedral": d, "quaternion": q})


def check_multipliers(wb: Workbench, max_cyclic: int = 24, quaternion_n=range(2, 7)) -> Iterator[CheckReport]:
    cap = wb.config.homology
    for n in range(1, max_cyclic + 1):
        m = schur_multiplier(cyclic(n), cap=max(cap, n))
        yield _report("multipliers", f"C({n})", m.is_trivial, {"M": str(m)})
    for n in quaternion_n:
        m = schur_multiplier(corpus.group(f"Q({n})"), cap=max(cap, 4 * n))
        yield _report("multipliers", f"Q({n})", m.is_trivial, {"M": str(m)})


def check_dihedral_multiplier(wb: Workbench, ns=range(1, 13)) -> Iterator[CheckReport]:
    """Whether M(D_2n) is non-trivial, per n; trivial cases are findings."""
    for n in ns:
        m = schur_multiplier(corpus.group(f"D({n})"), cap=max(wb.config.homology, 2 * n))
        verdict = "pass" if not m.is_trivial else "finding"
        yield CheckReport("dihedral-multiplier", f"D({n})", verdict, {"M": str(m), "nontrivial": not m.is_trivial})


def check_exterior_vs_commutativity(wb: Workbench, ns=range(1, 13)) -> Iterator[CheckReport]:
    """d^(D_2n), d(D_2n), d^(Q_n) and d(Q_n) side by side; any disagreement is a finding."""
    for n in ns:
        g = corpus.group(f"D({n})")
        vals = {"ext_dihedral": exterior_degree_m(wb.cover(g), 1).value, "d_dihedral": commutativity_degree(g).value}
        if 2 <= n <= 8:
            q = corpus.group(f"Q({n})")
            vals["ext_quaternion"] = exterior_degree_m(wb.cover(q), 1).value
            vals["d_quaternion"] = commutativity_degree(q).value
        same = len(set(vals.values())) == 1
        yield CheckReport("exterior-vs-commutativity", f"n={n}", "pass" if same else "finding", vals)


def check_rotation_centralizers(wb: Workbench, ns=range(2, 11)) -> Iterator[CheckReport]:
    """|C^_{D_2n}(a^j)| = n for every non-trivial rotation a^j."""
    for n in ns:
        g = corpus.group(f"D({n})")
        cov = wb.cover(g)
        bad = [(j, exterior_centralizer(cov, j).order) for j in range(1, n) if exterior_centralizer(cov, j).order != n]
        yield _report("rotation-centralizer", f"D({n})", not bad, {"n": n}, bad)


def check_exterior_centers(wb: Workbench, dihedral_n=range(2, 13), quaternion_n=range(2, 9)) -> Iterator[CheckReport]:
    for n in dihedral_n:
        z = exterior_center(wb.cover(corpus.group(f"D({n})")))
        yield _report("exterior-center", f"D({n})", z.order == 1, {"order": z.order})
    for n in quaternion_n:
        g = corpus.group(f"Q({n})")
        z = exterior_center(wb.cover(g))
        yield _report("exterior-center", f"Q({n})", z == center(g), {"order": z.order, "center": center(g).order})


# structural checks --------------------------------------------------------


def _group_list(max_order: int) -> list[FiniteGroup]:
    groups = corpus.small_groups(min(max_order, 16))
    groups += [corpus.group(s) for s in corpus.EXTRA if corpus.group(s).order <= max_order]
    return groups


def check_structure(wb: Workbench, max_order: int = 24) -> Iterator[CheckReport]:
    """Cover invariants, cocycle identities and d2 d3 = 0."""
    for g in _group_list(max_order):
        if g.order == 1:
            continue
        problems = []
        try:
            cov = wb.cover(g)  # build_cover runs the four cover checks
        except AssertionError as exc:
            yield _report("structure", g.name, False, {}, [str(exc)])
            continue
        f = stem_cocycle(g, cap=max(wb.config.homology, g.order))
        if f.cocycle_failures():
            problems.append("cocycle identity")
        if any(f(0, x) != f.zero or f(x, 0) != f.zero for x in range(g.order)):
            problems.append("normalization")
        d2 = bar_boundary(g, 2, cap=g.order).to_dense()
        d3 = bar_boundary(g, 3, cap=g.order).to_dense()
        if d2 and d3 and any(any(r) for r in matmul(d2, d3)):
            problems.append("d2 d3 != 0")
        der = derived_subgroup(cov.cover).order
        values = {"M": str(cov.kernel), "cover_order": cov.cover.order, "derived_cover": der}
        yield _report("structure", g.name, not problems, values, problems)


def check_exterior_basics(wb: Workbench, max_order: int = 16) -> Iterator[CheckReport]:
    """Containments and symmetries every exterior pairing must satisfy."""
    for g in _group_list(max_order):
        cov = wb.cover(g)
        wt = cov.wedge_table
        n = g.order
        t = g.table
        bad = []
        for x in range(n):
            if not wt[x][x]:
                bad.append(("x^x", x))
            for y in range(n):
                if wt[x][y] != wt[y][x]:
                    bad.append(("symmetry", x, y))
                if wt[x][y] and t[x][y] != t[y][x]:
                    bad.append(("C^ in C", x, y))
        zc = exterior_center(cov)
        if not zc <= center(g):
            bad.append(("Z^ in Z",))
        d1 = exterior_degree_m(cov, 1).value
        d = commutativity_degree(g).value
        if d1 > d or (cov.kernel.is_trivial and d1 != d):
            bad.append(("d^ vs d", d1, d))
        for m in range(1, 7):
            e, pc = exterior_degree_m(cov, m).value, power_commutativity_degree(m, whole(g), whole(g)).value
            if e > pc:
                bad.append(("d^_m <= power commutativity", m, e, pc))
        yield _report("exterior-basics", g.name, not bad, {"M": str(cov.kernel), "d_ext": d1, "d": d}, bad)


def check_dual_oracle(wb: Workbench, max_order: int = 12) -> Iterator[CheckReport]:
    """Cover wedges against the enumerated G ^ G, and |ker| against M(G)."""
    for g in _group_list(max_order):
        if g.order > max_order:
            continue
        cov = wb.cover(g)
        W = whole(g)
        ext = wb.product(g, W, W, "exterior")
        ten = wb.product(g, W, W, "tensor")
        mism = [
            (x, y)
            for x in range(g.order)
            for y in range(g.order)
            if cov.wedge_table[x][y] != ext.wedge_trivial(x, y)
        ]
        problems = []
        if mism:
            problems.append({"wedge_mismatches": mism[:10]})
        if ext.kernel != cov.kernel:
            problems.append({"kernel": str(ext.kernel), "M": str(cov.kernel)})
        if ext.product.order != exterior_square_order(cov):
            problems.append({"exterior_order": ext.product.order, "cover_derived": exterior_square_order(cov)})
        if ten.product.order % ext.product.order:
            problems.append({"tensor_order": ten.product.order, "exterior_order": ext.product.order})
        fails = ext.relation_failures() + ten.relation_failures()
        if fails:
            problems.append({"relation_failures": fails[:5]})
        values = {
            "M": str(cov.kernel),
            "ker": str(ext.kernel),
            "exterior_order": ext.product.order,
            "tensor_order": ten.product.order,
            "J": str(ten.kernel),
        }
        yield _report("dual-oracle", g.name, not problems, values, problems)


# relative checks over G = HK ---------------------------------------------


def _triples(wb: Workbench, g: FiniteGroup) -> Iterator[tuple[Subgroup, Subgroup, Exterior]]:
    for h, k in factorization_triples(g, wb.config.fp_pair):
        yield h, k, wb.exterior(h, k)


def check_sandwich(wb: Workbench, g: FiniteGroup, ms=range(1, 7)) -> Iterator[CheckReport]:
    """beta d(H,K)/|M(G,H,K)| <= d^_m(H,K) <= gamma d(H,K)."""
    for h, k, ext in _triples(wb, g):
        d = relative_degree(h, k).value
        for m in ms:
            val = ext.degree(m)
            _, at = ext.alpha(m)
            lo = Fraction(at.beta) * d / ext.kernel_order
            hi = at.gamma * d
            ok = lo <= val <= hi
            yield _report(
                "sandwich-bound",
                _triple_name(g, h, k, m),
                ok,
                {"lower": lo, "value": val, "upper": hi, "beta": at.beta, "gamma": at.gamma, "M_order": ext.kernel_order},
                [] if ok else [{"lower": lo, "value": val, "upper": hi}],
            )


def check_class_sum(wb: Workbench, g: FiniteGroup, ms=range(1, 7)) -> Iterator[CheckReport]:
    """Class-sum form equals the direct count; each |L_i| divides |M(G,H,K)|."""
    for h, k, ext in _triples(wb, g):
        for m in ms:
            direct = ext.degree(m)
            summed, at = ext.alpha(m)
            bad_l = [(rep, l) for rep, l in zip(at.partition.representatives, at.L_orders) if ext.kernel_order % l]
            ok = direct == summed and not bad_l
            yield _report(
                "class-sum",
                _triple_name(g, h, k, m),
                ok,
                {"direct": direct, "class_sum": summed, "alpha": list(at.alpha), "L": list(at.L_orders), "M_order": ext.kernel_order},
                bad_l if bad_l else ([] if ok else [{"direct": direct, "class_sum": summed}]),
            )


def check_trivial_multiplier_alpha(wb: Workbench, g: FiniteGroup) -> Iterator[CheckReport]:
    """With M(G,H,K) = 1 and exp(H) = p^r - 1: all alpha(p^r, i) and |L(p^r, i)| equal 1."""
    for h, k, ext in _triples(wb, g):
        q = h.exponent + 1
        fac = sympy.factorint(q)
        if ext.kernel_order != 1 or len(fac) != 1:
            continue
        _, at = ext.alpha(q)
        ok = set(at.alpha) == {1} and set(at.L_orders) == {1}
        yield _report(
            "trivial-multiplier-alpha",
            _triple_name(g, h, k, q),
            ok,
            {"alpha": list(at.alpha), "L": list(at.L_orders)},
        )


def check_exponent_equality(wb: Workbench, g: FiniteGroup, ms=range(1, 14)) -> Iterator[CheckReport]:
    """With M(G,H,K) = 1 and exp(H) dividing m - 1: d^_m(H,K) = d(H,K)."""
    for h, k, ext in _triples(wb, g):
        if ext.kernel_order != 1:
            continue
        d = relative_degree(h, k).value
        for m in ms:
            if not _divides_m_minus_1(h.exponent, m):
                continue
            val = ext.degree(m)
            yield _report("exponent-equality", _triple_name(g, h, k, m), val == d, {"value": val, "d": d})


def check_chain_bound(wb: Workbench, g: FiniteGroup) -> Iterator[CheckReport]:
    """gamma(p^(r-1)) k_K(H)/p >= d^_{p^(r-1)} >= ... >= d^_1 >= beta(p^(r-1)) d/|M(G,H,K)| for some r >= 1."""
    for h, k, ext in _triples(wb, g):
        d = relative_degree(h, k).value
        kk = len(conjugacy_classes_under(k, h))
        for p in _primes(h.order):
            depth = _p_depth(h, p)
            holding = []
            detail = {}
            for r in range(1, depth + 1):
                chain = [ext.degree(p**e) for e in range(r)]
                _, at = ext.alpha(p ** (r - 1))
                top = Fraction(at.gamma * kk, p)
                bottom = Fraction(at.beta) * d / ext.kernel_order
                monotone = all(a <= b for a, b in zip(chain, chain[1:]))
                holds = monotone and chain[-1] <= top and bottom <= chain[0]
                detail[r] = {"top": top, "chain": chain, "bottom": bottom, "holds": holds}
                if holds:
                    holding.append(r)
            yield _report(
                "chain-bound",
                f"{_triple_name(g, h, k)}; p={p}",
                bool(holding),
                {"r_holding": holding, "depth": depth, "detail": detail},
            )


def check_two_over_p(wb: Workbench, g: FiniteGroup, ms=range(1, 7)) -> Iterator[CheckReport]:
    """[H,K] != 1: d^_m <= gamma (2p-1)/p^2, and <= 2/p when exp(H) divides m - 1.

    p is the smallest prime dividing |G|.  Reading p as the smallest prime
    dividing both |G| and |K| gives a stronger bound that can fail; such
    instances are reported as findings.
    """
    t = g.table
    for h, k, ext in _triples(wb, g):
        if all(t[x][y] == t[y][x] for x in h.elements for y in k.elements):
            continue
        p = min(_primes(g.order))
        q = min(_primes(math.gcd(g.order, k.order)))
        for m in ms:
            val = ext.degree(m)
            _, at = ext.alpha(m)
            exp_ok = _divides_m_minus_1(h.exponent, m)

            def holds(r: int) -> bool:
                ok = val <= at.gamma * Fraction(2 * r - 1, r * r)
                return ok and (not exp_ok or val <= Fraction(2, r))

            values = {"value": val, "gamma": at.gamma, "p": p, "gamma_bound": at.gamma * Fraction(2 * p - 1, p * p)}
            if exp_ok:
                values["two_over_p"] = Fraction(2, p)
            name = _triple_name(g, h, k, m)
            if not holds(p):
                yield _report("two-over-p-bound", name, False, values)
            elif q != p and not holds(q):
                values.update({"p_common": q, "gamma_bound_common": at.gamma * Fraction(2 * q - 1, q * q)})
                yield CheckReport("two-over-p-bound", name, "finding", values)
            else:
                yield _report("two-over-p-bound", name, True, values)


def check_extremal_value(wb: Workbench, g: FiniteGroup, ms=range(1, 14)) -> Iterator[CheckReport]:
    """d^_m = (2p-1)/p^2 under the exponent hypothesis pins |H:C_H(K)| = |K:C_K(H)| = p."""
    t = g.table
    for h, k, ext in _triples(wb, g):
        if ext.kernel_order != 1:
            continue
        for m in ms:
            if not _divides_m_minus_1(h.exponent, m):
                continue
            val = ext.degree(m)
            bound = int(2 / val) + 2
            ps = [p for p in sympy.primerange(2, bound + 1) if Fraction(2 * p - 1, p * p) == val]
            for p in ps:
                c_h = sum(1 for x in h.elements if all(t[x][y] == t[y][x] for y in k.elements))
                c_k = sum(1 for y in k.elements if all(t[x][y] == t[y][x] for x in h.elements))
                values = {"value": val, "p": p, "index_H": h.order // c_h, "index_K": k.order // c_k}
                ok = g.order % p == 0
                if p == min(_primes(g.order)):
                    ok = ok and h.order // c_h == p and k.order // c_k == p and h != k
                yield _report("extremal-value", _triple_name(g, h, k, m), ok, values)


def check_limit_form(wb: Workbench, g: FiniteGroup) -> Iterator[CheckReport]:
    """d^_{p^0} = d^, and the eventual value of d^_{p^r} when every alpha/|L| tends to 1."""
    for h, k, ext in _triples(wb, g):
        d = relative_degree(h, k).value
        classes = len(conjugacy_classes_under(k, h))
        for p in _primes(h.order):
            first = ext.degree(1)
            values = {"d_p0": first, "d_ext": ext.degree(1), "one_orbit": classes == 1}
            ok = first == ext.degree(p**0)
            # p^r mod exp(H) is periodic once r passes the p-adic valuation of exp(H)
            e = h.exponent
            start = _p_depth(h, p)
            period = sympy.n_order(p, e // p**start) if e // p**start > 1 else 1
            tail = range(start, start + period)
            ratios_one = all(set(a / l for a, l in zip(ext.alpha(p**r)[1].alpha, ext.alpha(p**r)[1].L_orders)) == {1} for r in tail)
            eventual = [ext.degree(p**r) for r in tail]
            values["eventual"] = eventual
            values["ratios_tend_to_one"] = ratios_one
            if ratios_one:
                ok = ok and all(v == d for v in eventual)
            if classes == 1:
                ok = ok and all(v <= Fraction(1, p) for v in eventual)
            yield _report("limit-form", f"{_triple_name(g, h, k)}; p={p}", ok, values)


def check_power_chain(wb: Workbench, g: FiniteGroup) -> Iterator[CheckReport]:
    """d^(H,K) <= d^_p <= ... <= d^_{p^(r-1)}(H,K), with p^r the largest p-power element order of H.

    Against K = G the centralizer sums compare as |G| d^_q(H,G) >= |K| d^_q(H,K);
    the unweighted d^_q(H,G) >= d^_q(H,K) can fail and is reported as a finding.
    """
    W = whole(g)
    cap = wb.config.fp_pair
    subs = [n for n in normal_subgroups(g) if n.order <= cap]
    pairs = [(W, W)] if W.order > cap else [(h, k) for h in subs for k in subs if h.order > 1]
    for h, k in pairs:
        ext = wb.exterior(h, k)
        ext_g = wb.exterior(h, W)
        for p in _primes(h.order):
            r = _p_depth(h, p)
            chain = [ext.degree(p**e) for e in range(r)]
            top = ext_g.degree(p ** (r - 1))
            ok = all(a <= b for a, b in zip(chain, chain[1:])) and g.order * top >= k.order * chain[-1]
            values = {"p": p, "r": r, "chain": chain, "over_G": top}
            name = f"{_triple_name(g, h, k)}; p={p}"
            if ok and top < chain[-1]:
                yield CheckReport("power-chain", name, "finding", values)
            else:
                yield _report("power-chain", name, ok, values)


def check_coprime_product(wb: Workbench, specs=(("D(4)", "C(3)"), ("Q(2)", "C(3)"), ("D(5)", "C(3)"), ("S(3)", "C(5)"), ("C(4)", "C(3)")), ms=range(1, 7)) -> Iterator[CheckReport]:
    """d^_m(A x B, C x D) = d^_m(A, C) d^_m(B, D) for coprime factor orders."""
    for sa, sb in specs:
        a, b = corpus.group(sa), corpus.group(sb)
        if math.gcd(a.order, b.order) != 1:
            raise ValueError(f"{sa} and {sb} do not have coprime orders")
        g, left, right = direct_product(a, b)
        g = FiniteGroup(g.table, g.labels, f"{sa} x {sb}")
        nb = b.order

        def lift(sub_a: Subgroup, sub_b: Subgroup) -> Subgroup:
            return Subgroup(g, tuple(x * nb + y for x in sub_a.elements for y in sub_b.elements))

        na_subs, nb_subs = normal_subgroups(a), normal_subgroups(b)
        for (ha, ka), (hb, kb) in cartesian(
            [(x, y) for x in na_subs for y in na_subs], [(x, y) for x in nb_subs for y in nb_subs]
        ):
            if ha.order * hb.order > wb.config.fp_pair or ka.order * kb.order > wb.config.fp_pair:
                if not (ha.order == a.order and ka.order == a.order and hb.order == nb and kb.order == nb):
                    continue
            h, k = lift(ha, hb), lift(ka, kb)
            e_prod = wb.exterior(h, k)
            e_a, e_b = wb.exterior(ha, ka), wb.exterior(hb, kb)
            for m in ms:
                lhs = e_prod.degree(m)
                rhs = e_a.degree(m) * e_b.degree(m)
                yield _report(
                    "coprime-product",
                    f"{g.name}; H={_sub_name(ha)}x{_sub_name(hb)}; K={_sub_name(ka)}x{_sub_name(kb)}; m={m}",
                    lhs == rhs,
                    {"product": lhs, "factors": rhs},
                )


def check_quotient_bound(wb: Workbench, g: FiniteGroup, ms=range(1, 5)) -> Iterator[CheckReport]:
    """d^_m(H,K) <= d^_m(H/N, K/N), with equality when N pairs trivially with K and with H.

    N inside Z^(H,K) alone (h ^ k = 1 for h in N, k in K) does not force
    equality; such instances are reported as findings.
    """
    cap = wb.config.fp_pair
    subs = [n for n in normal_subgroups(g) if n.order <= cap]
    W = whole(g)
    if W.order > cap:
        subs.append(W)
    quotients: dict[tuple[int, ...], tuple[FiniteGroup, tuple[int, ...]]] = {}
    for n in subs:
        if n.order == 1:
            continue
        for h in subs:
            for k in subs:
                if not (n <= h and n <= k):
                    continue
                if (h == W) != (k == W) and W.order > cap:
                    continue
                if n.elements not in quotients:
                    q, proj = quotient(g, n)
                    quotients[n.elements] = (FiniteGroup(q.table, q.labels, f"{g.name}/N"), proj)
                q, proj = quotients[n.elements]
                ext = wb.exterior(h, k)
                hq, kq = image(h, q, proj), image(k, q, proj)
                ext_q = wb.exterior(hq, kq)
                left = n <= ext.center()
                right = all(ext.trivial(x, y) for x in h.elements for y in n.elements)
                for m in ms:
                    a, b = ext.degree(m), ext_q.degree(m)
                    values = {"value": a, "quotient": b, "N_in_exterior_center": left, "N_pairs_trivially_with_H": right}
                    name = f"{_triple_name(g, h, k, m)}; N={_sub_name(n)}"
                    if a > b or (left and right and a != b):
                        yield _report("quotient-bound", name, False, values)
                    elif left and a != b:
                        yield CheckReport("quotient-bound", name, "finding", values)
                    else:
                        yield _report("quotient-bound", name, True, values)


# suite registry -----------------------------------------------------------

PER_GROUP: dict[str, Callable[[Workbench, FiniteGroup], Iterator[CheckReport]]] = {
    "sandwich-bound": check_sandwich,
    "class-sum": check_class_sum,
    "trivial-multiplier-alpha": check_trivial_multiplier_alpha,
    "exponent-equality": check_exponent_equality,
    "chain-bound": check_chain_bound,
    "two-over-p-bound": check_two_over_p,
    "extremal-value": check_extremal_value,
    "limit-form": check_limit_form,
    "power-chain": check_power_chain,
    "quotient-bound": check_quotient_bound,
}

# suites whose group loop runs over small_groups; max_order defaults
PER_GROUP_DEFAULT_ORDER = {"quotient-bound": 12}

GLOBAL: dict[str, Callable[..., Iterator[CheckReport]]] = {
    "closed-forms": check_closed_forms,
    "dihedral-quaternion": check_dihedral_quaternion,
    "multipliers": check_multipliers,
    "dihedral-multiplier": check_dihedral_multiplier,
    "exterior-vs-commutativity": check_exterior_vs_commutativity,
    "rotation-centralizer": check_rotation_centralizers,
    "exterior-center": check_exterior_centers,
    "structure": check_structure,
    "exterior-basics": check_exterior_basics,
    "dual-oracle": check_dual_oracle,
    "coprime-product": check_coprime_product,
}

SUITES = tuple(GLOBAL) + tuple(PER_GROUP)

# the verification runs allow H = G at order 16
VERIFY_PAIR_CAP = 16


def _per_group_worker(args: tuple[str, str, Config]) -> list[CheckReport]:
    suite, spec, cfg = args
    wb = Workbench(cfg)
    return list(PER_GROUP[suite](wb, corpus.group(spec)))


def run_suite(name: str, max_order: int | None = None, config: Config | None = None, workbench: Workbench | None = None) -> list[CheckReport]:
    """Run one suite (or "all") and return its reports in a fixed order."""
    cfg = config or Config(fp_pair=VERIFY_PAIR_CAP)
    if name == "all":
        wb = workbench or Workbench(cfg)
        out: list[CheckReport] = []
        for s in SUITES:
            out += run_suite(s, max_order, cfg, wb)
        return out
    if name in GLOBAL:
        wb = workbench or Workbench(cfg)
        fn = GLOBAL[name]
        if name in ("structure",):
            return list(fn(wb, max_order or 24))
        if name in ("exterior-basics", "dual-oracle"):
            return list(fn(wb, max_order or (12 if name == "dual-oracle" else 16)))
        return list(fn(wb))
    if name not in PER_GROUP:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    limit = max_order or PER_GROUP_DEFAULT_ORDER.get(name, 16)
    specs = corpus.small_specs(min(limit, 16))
    if cfg.parallelism > 1 and workbench is None:
        with ProcessPoolExecutor(cfg.parallelism) as pool:
            parts = list(pool.map(_per_group_worker, [(name, s, cfg) for s in specs]))
        return [r for part in parts for r in part]
    wb = workbench or Workbench(cfg)
    out = []
    for s in specs:
        out += list(PER_GROUP[name](wb, corpus.group(s)))
    return out


def summarize(reports: list[CheckReport]) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "finding": 0}
    for r in reports:
        counts[r.verdict] += 1
    return counts


def exit_status(reports: list[CheckReport]) -> int:
    c = summarize(reports)
    if c["fail"]:
        return 2
    if c["finding"]:
        return 3
    return 0
