"""Acceptance criteria 1-10, each printed as one PASS/FAIL line at the end of the run.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import random
import time
from fractions import Fraction

import pytest

from edlab import corpus
from edlab.config import Config
from edlab.exterior import closed_form_dihedral, closed_form_quaternion, exterior_degree_m
from edlab.fp import parse_presentation, regular_group, todd_coxeter
from edlab.groups import cyclic, dihedral, quaternion, symmetric
from edlab.homology import schur_multiplier
from edlab.snf import determinant, is_smith_form, matmul, smith_normal_form
from edlab.verify import VERIFY_PAIR_CAP, Workbench, run_suite, summarize


@pytest.fixture(scope="module")
def wb():
    return Workbench(Config(fp_pair=VERIFY_PAIR_CAP))


def _record(log, n, ok, detail):
    log[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


def _cover_degree(spec, m, wb):
    return exterior_degree_m(wb.cover(corpus.group(spec)), m).value


def test_criterion_1_dihedral_closed_form(wb, acceptance_log):
    t0 = time.perf_counter()
    bad = []
    count = 0
    for n in range(2, 11):
        for m in range(1, 2 * n + 1):
            count += 1
            got = _cover_degree(f"D({n})", m, wb)
            if got != closed_form_dihedral(n, m).value:
                bad.append((n, m, got))
    spots = _cover_degree("D(4)", 1, wb) == Fraction(7, 16) and _cover_degree("D(4)", 2, wb) == Fraction(7, 8)
    elapsed = time.perf_counter() - t0
    ok = not bad and spots and elapsed < 60
    _record(acceptance_log, 1, ok, f"{count} (n,m) cells exact, spots 7/16 and 7/8, {elapsed:.1f}s; mismatches {bad[:3]}")
    assert ok


def test_criterion_2_quaternion_closed_form(wb, acceptance_log):
    bad = []
    count = 0
    for n in range(2, 9):
        for m in range(1, 2 * n + 1):
            count += 1
            got = _cover_degree(f"Q({n})", m, wb)
            if got != closed_form_quaternion(n, m).value:
                bad.append((n, m, got))
    # Q_8 is Q(2)
    spots = _cover_degree("Q(2)", 1, wb) == Fraction(5, 8) and _cover_degree("Q(2)", 2, wb) == 1
    ok = not bad and spots
    _record(acceptance_log, 2, ok, f"{count} (n,m) cells exact, spots 5/8 and 1; mismatches {bad[:3]}")
    assert ok


def test_criterion_3_dihedral_equals_quaternion(wb, acceptance_log):
    bad = [
        (n, m)
        for n in range(2, 9)
        for m in range(1, 2 * n + 1)
        if _cover_degree(f"D({n})", m, wb) != _cover_degree(f"Q({n})", m, wb)
    ]
    _record(acceptance_log, 3, not bad, f"computed values agree for n=2..8, m=1..2n; disagreements {bad[:3]}")
    assert not bad


def test_criterion_4_multipliers(acceptance_log):
    cyc = [n for n in range(1, 25) if not schur_multiplier(cyclic(n), cap=48).is_trivial]
    quat = [n for n in range(2, 7) if not schur_multiplier(quaternion(n), cap=48).is_trivial]
    dih = {n: schur_multiplier(dihedral(n), cap=48) for n in range(1, 13)}
    reports = run_suite("dihedral-multiplier")
    findings = sorted(int(r.instance[2:-1]) for r in reports if r.verdict == "finding")
    odd = [n for n in range(1, 13) if n % 2]
    ok = not cyc and not quat and findings == odd and all(dih[n].order == (1 if n % 2 else 2) for n in dih)
    per_n = " ".join(f"{n}:{dih[n].order}" for n in dih)
    _record(acceptance_log, 4, ok, f"M(C_n)=1 n<=24, M(Q_n)=1 n=2..6; |M(D_2n)| {per_n}; findings at n={findings}")
    assert ok


def test_criterion_5_dual_oracle(wb, acceptance_log):
    t0 = time.perf_counter()
    reports = run_suite("dual-oracle", 12, workbench=wb)
    elapsed = time.perf_counter() - t0
    groups = [r.instance for r in reports]
    bad = [r.instance for r in reports if r.verdict != "pass"]
    ok = not bad and len(groups) == len(corpus.small_specs(12)) and elapsed < 600
    _record(acceptance_log, 5, ok, f"{len(groups)} groups of order <= 12, {elapsed:.1f}s; failing {bad}")
    assert ok


def test_criterion_6_sandwich(wb, acceptance_log):
    reports = run_suite("sandwich-bound", 16, workbench=wb)
    c = summarize(reports)
    ok = c["fail"] == 0 and c["finding"] == 0 and c["pass"] > 0
    _record(acceptance_log, 6, ok, f"{c['pass']} (G,H,K,m) instances, |G| <= 16, m <= 6; {c['fail']} failures")
    assert ok


BOUND_SUITES = (
    "power-chain",
    "coprime-product",
    "quotient-bound",
    "trivial-multiplier-alpha",
    "exponent-equality",
    "chain-bound",
    "two-over-p-bound",
    "extremal-value",
)


@pytest.fixture(scope="module")
def bound_reports(wb):
    return {s: run_suite(s, workbench=wb) for s in BOUND_SUITES}


def test_criterion_7_bounds_and_identities(bound_reports, acceptance_log):
    fails = {s: [r.instance for r in rs if r.verdict == "fail"] for s, rs in bound_reports.items()}
    fails = {s: v for s, v in fails.items() if v}
    # the monotone chains are required for H = K = G
    full_chain = [r for r in bound_reports["power-chain"] if "H=G; K=G" in r.instance]
    chain_ok = full_chain and all(r.verdict == "pass" for r in full_chain)
    quotient = bound_reports["quotient-bound"]
    equality_gaps = [r for r in quotient if r.verdict == "finding"]
    ok = not fails and chain_ok and not equality_gaps
    detail = (
        f"{sum(len(v) for v in bound_reports.values())} records; failures {fails}; "
        f"H=K=G chains {len(full_chain)} all pass: {bool(chain_ok)}; "
        f"quotient equality with N in Z^(H,K) refuted in {len(equality_gaps)} instances "
        f"(e.g. {equality_gaps[0].instance if equality_gaps else '-'})"
    )
    _record(acceptance_log, 7, ok, detail)
    # everything except the equality clause must hold
    assert not fails and chain_ok


@pytest.mark.xfail(strict=True, reason="equality needs N to pair trivially with H as well; counterexamples exist")
def test_criterion_7_quotient_equality_under_exterior_center(bound_reports):
    equality_gaps = [r for r in bound_reports["quotient-bound"] if r.verdict == "finding"]
    assert not equality_gaps, equality_gaps[0].instance


def _random_sparse(rng, rows, cols):
    density = rng.uniform(0.05, 0.4)
    return [[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def test_criterion_8_structure_and_snf(wb, acceptance_log):
    reports = run_suite("structure", 24, workbench=wb)
    c = summarize(reports)
    rng = random.Random(20261019)
    snf_bad = []
    for i in range(1000):
        m = _random_sparse(rng, rng.randint(1, 40), rng.randint(1, 60))
        s = smith_normal_form(m)
        if matmul(matmul(s.U, m), s.V) != s.S or abs(determinant(s.U)) != 1 or abs(determinant(s.V)) != 1:
            snf_bad.append(i)
        elif not is_smith_form(s.S):
            snf_bad.append(i)
    ok = c["fail"] == 0 and c["pass"] > 0 and not snf_bad
    _record(acceptance_log, 8, ok, f"structure {c['pass']} pass / {c['fail']} fail for |G| <= 24; SNF 1000 matrices, bad {snf_bad[:5]}")
    assert ok


def test_criterion_9_todd_coxeter(acceptance_log):
    cases = [(f"<c | c^{n}>", n) for n in range(1, 31)]
    cases += [
        ("<a,b | a^3, b^2, (a b)^2>", 6),
        ("<a,b | a^4, b^2, (a b)^2>", 8),
        ("<a,b | a^4, b^2 = a^2, b^-1 a b = a^-1>", 8),
    ]
    bad = []
    for text, order in cases:
        p = parse_presentation(text)
        for strategy in ("hlt", "felsch"):
            ct = todd_coxeter(p, (), strategy=strategy)
            if not ct.complete or ct.index != order or ct.scan_failures() or not ct.is_closed():
                bad.append((text, strategy))
    # the regular enumerations give the expected groups, not just the orders
    s3, _ = regular_group(parse_presentation(cases[-3][0]))
    q8, _ = regular_group(parse_presentation(cases[-1][0]))
    shapes = (
        sorted(s3.element_orders) == sorted(symmetric(3).element_orders)
        and sorted(q8.element_orders) == sorted(quaternion(2).element_orders)
    )
    ok = not bad and shapes
    _record(acceptance_log, 9, ok, f"{len(cases)} presentations x 2 strategies, full relator scans; bad {bad}")
    assert ok


def test_criterion_10_findings_surface(acceptance_log):
    mult = run_suite("dihedral-multiplier")
    ext = run_suite("exterior-vs-commutativity")
    verdicts = {r.verdict for r in mult + ext}
    d4 = next(r for r in ext if r.instance == "n=4")
    ok = (
        "fail" not in verdicts
        and any(r.verdict == "finding" for r in mult)
        and d4.verdict == "finding"
        and d4.values["ext_dihedral"] == Fraction(7, 16)
        and d4.values["d_dihedral"] == Fraction(5, 8)
    )
    n_find = sum(r.verdict == "finding" for r in mult + ext)
    _record(acceptance_log, 10, ok, f"dihedral multiplier and d^ vs d comparisons reported as {n_find} findings, none as failures")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v", "-s"]))
