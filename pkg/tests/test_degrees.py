from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edlab import corpus
from edlab.degrees import (
    BudgetError,
    DegreeValue,
    commutativity_degree,
    commuting_pairs,
    nilpotency_degree,
    power_commutativity_degree,
    relative_degree,
)
from edlab.groups import cyclic, dihedral, normal_subgroups, quaternion, subgroup_closure, symmetric, trivial, whole

from strategies import group_specs


def test_degree_value_contract():
    v = DegreeValue(Fraction(14, 16))
    assert str(v) == "7/8" and v.to_json() == {"num": 7, "den": 8}
    with pytest.raises(ValueError):
        DegreeValue(Fraction(0))
    with pytest.raises(ValueError):
        DegreeValue(Fraction(9, 8))


def test_commutativity_degree_values():
    assert commutativity_degree(cyclic(7)).value == 1
    assert commutativity_degree(symmetric(3)).value == Fraction(1, 2)
    assert commutativity_degree(dihedral(4)).value == Fraction(5, 8)
    assert commutativity_degree(quaternion(2)).value == Fraction(5, 8)


def test_relative_degree_d8():
    d8 = dihedral(4)
    rot = subgroup_closure(d8, [1])
    # a, a^3 commute with the rotations only; 1, a^2 with everything
    assert relative_degree(rot, whole(d8)).value == Fraction(2 * 8 + 2 * 4, 4 * 8)
    assert relative_degree(whole(d8), trivial(d8)).value == 1
    assert relative_degree(whole(d8), whole(d8)) == commutativity_degree(d8)


def test_nilpotency_degree():
    d8 = dihedral(4)
    rot = subgroup_closure(d8, [1])
    assert nilpotency_degree(1, whole(d8), d8) == commutativity_degree(d8)
    # class 2: every [x, y, z] is trivial
    assert nilpotency_degree(2, whole(d8), d8).value == 1
    assert nilpotency_degree(1, rot, d8).value == Fraction(3, 4)
    with pytest.raises(BudgetError):
        nilpotency_degree(3, whole(d8), d8, budget=100)


def test_power_commutativity_degree():
    q8, d8 = quaternion(2), dihedral(4)
    assert power_commutativity_degree(1, whole(q8), whole(q8)).value == Fraction(5, 8)
    # every square in D8 is central
    assert power_commutativity_degree(2, whole(d8), whole(d8)).value == 1
    assert power_commutativity_degree(d8.exponent, whole(d8), whole(d8)).value == 1


@given(group_specs(16))
def test_class_count_formula(spec):
    g = corpus.group(spec)
    w = whole(g)
    assert commutativity_degree(g).value == Fraction(g.class_number, g.order)
    assert commuting_pairs(w, w) == g.class_number * g.order


@given(group_specs(12), st.data(), st.integers(1, 13))
def test_relative_degree_properties(spec, data, m):
    g = corpus.group(spec)
    ns = normal_subgroups(g)
    h = data.draw(st.sampled_from(ns))
    k = data.draw(st.sampled_from(ns))
    d = relative_degree(h, k).value
    assert d == relative_degree(k, h).value
    assert d <= power_commutativity_degree(m, h, k).value or h.exponent > 1
    assert power_commutativity_degree(1, h, k).value == d
    assert power_commutativity_degree(h.exponent * m, h, k).value == 1
