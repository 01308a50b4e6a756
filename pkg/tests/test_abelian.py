from math import prod

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from edlab.abelian import AbelianInvariants, invariants_of
from edlab.groups import cyclic, dihedral, direct_product, quaternion, whole


def test_normalization():
    assert AbelianInvariants.from_orders([2, 3]).divisors == (6,)
    assert AbelianInvariants.from_orders([4, 2, 1]).divisors == (2, 4)
    assert AbelianInvariants.from_orders([6, 10]).divisors == (2, 30)
    assert AbelianInvariants.from_orders([]).is_trivial
    assert str(AbelianInvariants.from_orders([2, 4])) == "Z/2 x Z/4"
    assert str(AbelianInvariants.from_orders([1])) == "1"


def test_rejects_non_chain():
    with pytest.raises(ValueError):
        AbelianInvariants((4, 2))


def test_invariants_of_groups():
    assert invariants_of(cyclic(12)).divisors == (12,)
    k4, _, _ = direct_product(cyclic(2), cyclic(2))
    assert invariants_of(k4).divisors == (2, 2)
    g, _, _ = direct_product(cyclic(4), cyclic(6))
    assert invariants_of(g).divisors == (2, 12)
    with pytest.raises(ValueError):
        invariants_of(whole(dihedral(4)))
    with pytest.raises(ValueError):
        invariants_of(quaternion(2))


@given(st.lists(st.integers(1, 12), max_size=3))
def test_invariants_of_products_match_from_orders(orders):
    assume(prod(orders) <= 512)
    g = cyclic(1)
    for n in orders:
        g, _, _ = direct_product(g, cyclic(n))
    assert invariants_of(g) == AbelianInvariants.from_orders(orders)
