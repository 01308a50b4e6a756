from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edlab import corpus
from edlab.degrees import commutativity_degree
from edlab.exterior import (
    build_cover,
    closed_form_dihedral,
    closed_form_quaternion,
    degree_via_classes,
    exterior_center,
    exterior_centralizer,
    exterior_degree_m,
    exterior_square_order,
    wedge_trivial,
)
from edlab.groups import GroupSizeError, center, centralizer, cyclic, derived_subgroup, dihedral, direct_product, quaternion, whole

from strategies import group_specs


def test_cover_orders():
    c5 = build_cover(cyclic(5))
    assert c5.cover.order == 5 and c5.kernel.is_trivial
    k4, _, _ = direct_product(cyclic(2), cyclic(2))
    ck = build_cover(k4)
    assert ck.cover.order == 8 and derived_subgroup(ck.cover).order == 2
    assert not ck.cover.is_abelian
    cd = build_cover(dihedral(4))
    assert cd.cover.order == 16 and exterior_square_order(cd) == 4
    assert center(cd.cover).order == 2


def test_cover_cap():
    g = corpus.group("C(2) x C(2) x C(2) x C(2)")
    with pytest.raises(GroupSizeError):
        build_cover(g, cover_cap=512)


def test_wedges_in_small_groups():
    k4, _, _ = direct_product(cyclic(2), cyclic(2))
    cov = build_cover(k4)
    a, b = 1, 2
    assert not wedge_trivial(cov, a, b)
    assert wedge_trivial(cov, a, a)
    # 6 of the 16 pairs have a non-trivial wedge
    assert exterior_degree_m(cov, 1).value == Fraction(5, 8)


def test_exterior_centralizers():
    cc = build_cover(cyclic(6))
    assert all(exterior_centralizer(cc, x) == whole(cc.base) for x in range(6))
    cd = build_cover(dihedral(4))
    assert exterior_centralizer(cd, 2).elements == (0, 1, 2, 3)
    cq = build_cover(quaternion(2))
    assert exterior_centralizer(cq, 2) == whole(cq.base)


def test_exterior_centers():
    assert exterior_center(build_cover(cyclic(7))).order == 7
    for n in range(2, 9):
        assert exterior_center(build_cover(dihedral(n))).order == 1
    cq = build_cover(quaternion(2))
    assert exterior_center(cq) == center(cq.base)


def test_spot_degrees():
    d8, q8 = build_cover(dihedral(4)), build_cover(quaternion(2))
    assert exterior_degree_m(d8, 1).value == Fraction(7, 16)
    assert exterior_degree_m(d8, 2).value == Fraction(7, 8)
    assert exterior_degree_m(d8, 4).value == 1
    assert exterior_degree_m(q8, 1).value == Fraction(5, 8)
    w = whole(d8.base)
    value, table = degree_via_classes(d8, w, w, 1)
    assert value.value == Fraction(7, 16) and set(table.alpha) == {1}
    assert degree_via_classes(d8, w, w, 2)[0].value == Fraction(7, 8)


def test_closed_form_values():
    assert closed_form_dihedral(4, 1).value == Fraction(7, 16)
    assert closed_form_dihedral(4, 2).value == Fraction(7, 8)
    assert closed_form_dihedral(5, 5).value == Fraction(3, 5)
    assert closed_form_quaternion(2, 1).value == Fraction(5, 8)
    assert closed_form_quaternion(2, 2).value == 1
    assert closed_form_quaternion(3, 3).value == Fraction(2, 3)
    with pytest.raises(ValueError):
        closed_form_quaternion(1, 1)


@given(st.integers(2, 9), st.integers(1, 20))
@settings(max_examples=40)
def test_dihedral_degree_by_direct_count(n, m):
    # exterior centralizers in D_2n: rotations a^j != 1 see exactly <a>, reflections see {1, x};
    # x^m = 1 for all reflections when m is even
    t = gcd(m, n)
    rotations_trivial = t  # a^j with (a^j)^m = 1
    if m % 2:
        count = rotations_trivial * 2 * n + (n - rotations_trivial) * n + n * 2
    else:
        count = (rotations_trivial + n) * 2 * n + (n - rotations_trivial) * n
    assert closed_form_dihedral(n, m).value == Fraction(count, 4 * n * n)


@given(group_specs(16), st.integers(1, 12))
@settings(max_examples=40)
def test_cover_invariants(spec, m):
    g = corpus.group(spec)
    cov = build_cover(g)
    cov.check()
    z = exterior_center(cov)
    assert z <= center(g)
    wt = cov.wedge_table
    for x in range(g.order):
        assert wt[x][x] and wt[0][x]
        assert exterior_centralizer(cov, x) <= centralizer(whole(g), x)
        for y in range(g.order):
            assert wt[x][y] == wt[y][x]
    ext = exterior_degree_m(cov, m).value
    assert ext <= 1
    if m == 1:
        assert ext <= commutativity_degree(g).value
    if m % g.exponent == 0:
        assert ext == 1
    w = whole(g)
    assert degree_via_classes(cov, w, w, m)[0].value == ext
