"""Schur multipliers against tabulated values, and bar-complex identities."""

import pytest
from hypothesis import given, settings

from edlab import corpus
from edlab.groups import GroupSizeError, cyclic, dihedral, direct_product, quaternion, symmetric
from edlab.homology import (
    bar_boundary,
    boundary_of_pairs,
    homology_generators,
    schur_multiplier,
    stem_cocycle,
)
from edlab.snf import matmul

from strategies import group_specs

# standard tables of Schur multipliers for the order <= 16 corpus
KNOWN = {
    "C(2) x C(2)": (2,),
    "C(2) x C(4)": (2,),
    "C(2) x C(2) x C(2)": (2, 2, 2),
    "D(4)": (2,),
    "Q(2)": (),
    "C(3) x C(3)": (3,),
    "D(3)": (),
    "D(5)": (),
    "D(6)": (2,),
    "Q(3)": (),
    "C(2) x C(6)": (2,),
    corpus.A4: (2,),
    "D(7)": (),
    "C(2) x C(8)": (2,),
    "C(4) x C(4)": (4,),
    "C(2) x C(2) x C(4)": (2, 2, 2),
    "C(2) x C(2) x C(2) x C(2)": (2, 2, 2, 2, 2, 2),
    "D(8)": (2,),
    "Q(4)": (),
    "C(2) x D(4)": (2, 2, 2),
    "C(2) x Q(2)": (2, 2),
    "fp:<a,b | a^8, b^2, b a b a^-3>": (),
    "fp:<a,b | a^8, b^2, b a b a^-5>": (),
    "fp:<a,b | a^4, b^4, b a b^-1 a>": (2,),
    "fp:<a,b,c | a^4, b^2, c^2, a b a^-1 b, b c b c, c a c b a^-1>": (2, 2),
    "fp:<a,b,c | a^4, b^2, c^2, a b a^-1 b, a c a^-1 c, c b c b a^-2>": (2, 2),
}


@pytest.mark.parametrize("spec", sorted(KNOWN))
def test_known_multipliers(spec):
    assert schur_multiplier(corpus.group(spec)).divisors == KNOWN[spec]


def test_cyclic_and_quaternion_multipliers_are_trivial():
    for n in range(1, 25):
        assert schur_multiplier(cyclic(n), cap=48).is_trivial
    for n in (2, 3, 4):
        assert schur_multiplier(quaternion(n)).is_trivial


def test_larger_groups():
    assert schur_multiplier(symmetric(4)).divisors == (2,)
    g, _, _ = direct_product(dihedral(4), cyclic(3))
    assert schur_multiplier(g).divisors == (2,)


def test_cap():
    with pytest.raises(GroupSizeError):
        schur_multiplier(cyclic(49))
    with pytest.raises(GroupSizeError):
        schur_multiplier(cyclic(9), cap=8)
    assert schur_multiplier(cyclic(9), cap=9).is_trivial


def test_trivial_group():
    assert bar_boundary(cyclic(1), 2).to_dense() == []
    assert schur_multiplier(cyclic(1)).is_trivial
    assert homology_generators(cyclic(1)) == []


def test_generators_of_small_examples():
    k4, _, _ = direct_product(cyclic(2), cyclic(2))
    for g in (k4, dihedral(4)):
        (z,) = homology_generators(g)
        assert z.order == 2
        assert boundary_of_pairs(g, z.coefficients) == {}
    assert homology_generators(quaternion(2)) == []
    assert stem_cocycle(cyclic(5)).values == {}


@given(group_specs(12))
@settings(max_examples=25)
def test_boundary_squares_to_zero(spec):
    g = corpus.group(spec)
    d2 = bar_boundary(g, 2).to_dense()
    d3 = bar_boundary(g, 3).to_dense()
    if d2 and d3 and d3[0]:
        assert all(v == 0 for row in matmul(d2, d3) for v in row)


@given(group_specs(16))
@settings(max_examples=30)
def test_stem_cocycle_is_normalized_cocycle(spec):
    g = corpus.group(spec)
    f = stem_cocycle(g)
    assert f.target == schur_multiplier(g)
    assert f.cocycle_failures() == []
    assert all(f(0, x) == f.zero and f(x, 0) == f.zero for x in range(g.order))
    gens = homology_generators(g)
    assert [z.order for z in gens] == list(f.target.divisors)
    for z in gens:
        assert boundary_of_pairs(g, z.coefficients) == {}
