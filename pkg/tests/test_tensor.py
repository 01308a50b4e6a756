from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edlab import corpus
from edlab.abelian import AbelianInvariants, invariants_of
from edlab.exterior import build_cover, exterior_center
from edlab.groups import (
    GroupError,
    GroupSizeError,
    commutator_subgroup,
    cyclic,
    dihedral,
    direct_product,
    normal_subgroups,
    quaternion,
    subgroup_closure,
    symmetric,
    trivial,
    whole,
)
from edlab.homology import schur_multiplier
from edlab.tensor import (
    pair_product,
    relative_alpha_table,
    relative_exterior_center,
    relative_exterior_degree,
    triple_multiplier,
)

from strategies import group_specs


def square(g, kind):
    w = whole(g)
    return pair_product(g, w, w, kind)


def test_tensor_squares():
    # tabulated orders of G (x) G
    assert square(cyclic(2), "tensor").product.order == 2
    assert square(cyclic(6), "tensor").product.order == 6
    k4, _, _ = direct_product(cyclic(2), cyclic(2))
    assert square(k4, "tensor").product.order == 16
    assert square(symmetric(3), "tensor").product.order == 6
    q8 = square(quaternion(2), "tensor").product
    assert q8.is_abelian and invariants_of(q8).divisors == (2, 2, 4, 4)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dihedral_tensor_squares(n):
    # D_2n (x) D_2n is C2^3 x C_n for n even and C2 x C_n for n odd
    t = square(dihedral(n), "tensor").product
    want = AbelianInvariants.from_orders([2, 2, 2, n] if n % 2 == 0 else [2, n])
    assert t.is_abelian and invariants_of(t) == want


def test_exterior_squares():
    assert square(cyclic(7), "exterior").product.order == 1
    k4, _, _ = direct_product(cyclic(2), cyclic(2))
    assert square(k4, "exterior").product.order == 2
    d8 = square(dihedral(4), "exterior")
    assert d8.product.order == 4 and d8.kernel.divisors == (2,)
    q8 = square(quaternion(2), "exterior")
    assert q8.product.order == 2 and q8.kernel.is_trivial


def test_argument_checks():
    d8 = dihedral(4)
    with pytest.raises(GroupError):
        pair_product(d8, subgroup_closure(d8, [4]), whole(d8))
    with pytest.raises(GroupSizeError):
        pair_product(d8, whole(d8), whole(d8), cap=4)
    with pytest.raises(ValueError):
        pair_product(d8, whole(d8), whole(d8), kind="smash")
    with pytest.raises(GroupError):
        triple_multiplier(d8, subgroup_closure(d8, [2]), subgroup_closure(d8, [2]))


def test_relative_values_in_d8():
    d8 = dihedral(4)
    rot, w = subgroup_closure(d8, [1]), whole(d8)
    assert relative_exterior_degree(d8, w, w, 1).value == Fraction(7, 16)
    assert relative_exterior_degree(d8, rot, w, 4).value == 1
    assert relative_exterior_center(d8, w, trivial(d8)) == w
    m = triple_multiplier(d8, rot, w)
    assert m.order * commutator_subgroup(rot, w).order == pair_product(d8, rot, w).product.order
    value, table = relative_alpha_table(d8, rot, w, 1)
    assert value == relative_exterior_degree(d8, rot, w, 1)
    assert set(table.alpha) == {1}


@given(group_specs(12))
@settings(max_examples=25)
def test_enumeration_agrees_with_cover(spec):
    g = corpus.group(spec)
    w = whole(g)
    p = pair_product(g, w, w, "exterior")
    cov = build_cover(g)
    assert p.kernel == schur_multiplier(g)
    assert all(p.wedge_trivial(x, y) == cov.wedge_table[x][y] for x in range(g.order) for y in range(g.order))
    assert relative_exterior_center(g, w, w, product=p) == exterior_center(cov)
    assert p.relation_failures() == []
    t = pair_product(g, w, w, "tensor")
    assert t.product.order % p.product.order == 0
    assert t.relation_failures() == []


@given(group_specs(12), st.data(), st.integers(1, 8))
@settings(max_examples=30)
def test_relative_products(spec, data, m):
    g = corpus.group(spec)
    ns = normal_subgroups(g)
    h = data.draw(st.sampled_from(ns))
    k = data.draw(st.sampled_from(ns))
    p = pair_product(g, h, k, "exterior")
    assert p.relation_failures() == []
    assert p.kappa_image == commutator_subgroup(h, k)
    d = relative_exterior_degree(g, h, k, m, product=p)
    assert d == relative_alpha_table(g, h, k, m, product=p)[0]
    z = relative_exterior_center(g, h, k, product=p)
    assert z <= h
    if k.order == 1:
        assert z == h and p.product.order == 1
