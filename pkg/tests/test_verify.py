import json
from fractions import Fraction

import pytest

from edlab import corpus, verify
from edlab.config import Config
from edlab.groups import dihedral, whole
from edlab.verify import (
    CheckReport,
    Workbench,
    exit_status,
    factorization_triples,
    run_suite,
    summarize,
)


def test_report_json_and_status():
    r = CheckReport("x", "G", "fail", {"v": Fraction(7, 16)}, [{"pair": (1, 2)}])
    assert json.loads(json.dumps(r.to_json()))["values"]["v"] == "7/16"
    ok = CheckReport("x", "G", "pass")
    found = CheckReport("x", "G", "finding")
    assert exit_status([ok]) == 0
    assert exit_status([ok, found]) == 3
    assert exit_status([ok, found, r]) == 2
    assert summarize([ok, found, r]) == {"pass": 1, "fail": 1, "finding": 1}


def test_failures_carry_witnesses():
    r = verify._report("c", "G; m=1", False, {"a": 1})
    assert r.verdict == "fail" and r.witnesses


def test_workbench_routes():
    wb = Workbench(Config(fp_pair=16))
    g = corpus.group("D(4)")
    w = whole(g)
    assert wb.exterior(w, w).route == "cover"
    rot = next(h for h, k in factorization_triples(g, 8) if h.order == 4 and k.order == 8)
    ext = wb.exterior(rot, w)
    assert ext.route == "fp"
    assert wb.product(g, rot, w) is wb.product(g, rot, w)
    assert ext.degree(1) == Fraction(5, 8)


def test_factorization_triples():
    g = dihedral(4)
    pairs = list(factorization_triples(g, 8))
    assert all(len({g.table[x][y] for x in h.elements for y in k.elements}) == 8 for h, k in pairs)
    assert (whole(g), whole(g)) in pairs


@pytest.mark.parametrize("suite", ["closed-forms", "dihedral-quaternion", "rotation-centralizer", "exterior-center", "exterior-basics"])
def test_fast_global_suites_pass(suite):
    reports = run_suite(suite)
    assert reports and summarize(reports)["fail"] == 0 and summarize(reports)["finding"] == 0


def test_disagreements_are_findings():
    mult = run_suite("dihedral-multiplier")
    assert {r.instance for r in mult if r.verdict == "finding"} == {f"D({n})" for n in (1, 3, 5, 7, 9, 11)}
    ext = {r.instance: r for r in run_suite("exterior-vs-commutativity")}
    assert ext["n=4"].verdict == "finding"
    assert ext["n=4"].values["ext_dihedral"] == Fraction(7, 16)
    assert ext["n=3"].verdict == "pass"


@pytest.mark.parametrize(
    "suite", ["sandwich-bound", "class-sum", "exponent-equality", "chain-bound", "limit-form", "trivial-multiplier-alpha"]
)
def test_per_group_suites_small(suite):
    reports = run_suite(suite, max_order=8)
    assert summarize(reports)["fail"] == 0


def test_quotient_equality_counterexample():
    reports = run_suite("quotient-bound", max_order=4)
    found = [r for r in reports if r.verdict == "finding"]
    assert any(r.instance.startswith("C(4); H=G; K=<0,2>; m=1") for r in found)
    assert all(r.values["value"] < r.values["quotient"] for r in found)
    assert summarize(reports)["fail"] == 0


def test_checks_detect_wrong_closed_form(monkeypatch):
    real = verify.closed_form_dihedral

    def off_by_two(n, m):
        # the classic mistake: reading D(n) as the group of order n
        return real(max(n // 2, 1), m)

    monkeypatch.setattr(verify, "closed_form_dihedral", off_by_two)
    reports = list(verify.check_closed_forms(Workbench(), dihedral_n=range(4, 6), quaternion_n=range(0)))
    assert any(r.verdict == "fail" and r.witnesses for r in reports)


def test_parallel_matches_serial():
    serial = run_suite("class-sum", 8, Config(fp_pair=16))
    par = run_suite("class-sum", 8, Config(fp_pair=16, parallelism=2))
    assert [r.to_json() for r in serial] == [r.to_json() for r in par]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")
