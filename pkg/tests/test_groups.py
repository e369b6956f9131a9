"""Unit tests for exact group/character arithmetic.

Derived expected values are computed by independent brute force in the test
itself (closure over all sums, scans over all characters) and frozen by
assertion against the library.
"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcover.groups import (
    CyclicPair,
    FiniteAbelianGroup,
    Residue,
    ShapeError,
    SizeError,
    character_exponent,
    component_sum_hom,
    epsilon,
    residual_index,
    subgroup_generated,
)

Z2Z2 = FiniteAbelianGroup((2, 2))
Z4 = FiniteAbelianGroup((4,))


def brute_closure(group, gens):
    """Oracle: all sums c_1 g_1 + ... + c_k g_k over full coefficient boxes."""
    sums = set()
    boxes = [range(g.order) for g in gens]
    for coeffs in product(*boxes) if gens else [()]:
        total = group.zero()
        for c, g in zip(coeffs, gens):
            total = total + c * g
        sums.add(total)
    return sums


def test_group_basics():
    assert Z2Z2.order == 4
    assert Z2Z2.exponent == 2
    assert FiniteAbelianGroup(()).order == 1
    assert FiniteAbelianGroup((2, 4)).exponent == 4
    assert len(list(Z2Z2.elements())) == 4
    assert len(list(Z2Z2.characters())) == 4


def test_residue_normalization():
    assert Residue.from_fraction(Fraction(5, 4)) == Residue(1, 4)
    assert Residue.from_fraction(3) == Residue(0, 1)
    assert (Residue(1, 2) + Residue(1, 2)).is_zero
    with pytest.raises(ValueError):
        Residue(2, 4)


def test_subgroup_generated_full_group():
    gens = [Z2Z2.element((1, 0)), Z2Z2.element((0, 1))]
    assert subgroup_generated(Z2Z2, gens).order == 4


def test_subgroup_generated_trivial():
    assert subgroup_generated(Z2Z2, []).order == 1


def test_subgroup_generated_derived_closure():
    group = FiniteAbelianGroup((2, 2, 2))
    gens = [group.element(c) for c in ((1, 0, 0), (1, 1, 0), (0, 1, 0))]
    oracle = brute_closure(group, gens)
    sub = subgroup_generated(group, gens)
    assert sub.elements == frozenset(oracle)
    assert sub.order == 4


def test_subgroup_shape_and_size_errors():
    with pytest.raises(ShapeError):
        subgroup_generated(Z2Z2, [Z4.element((1,))])
    big = FiniteAbelianGroup((2,) * 17)
    with pytest.raises(SizeError):
        subgroup_generated(big, [g for g in [big.element(tuple(int(i == j) for i in range(17))) for j in range(17)]])


def test_character_exponent_z4():
    pair = CyclicPair.from_element(Z4.element((2,)))  # order 2
    assert character_exponent(Z4.character((1,)), pair) == 1
    assert character_exponent(Z4.character((2,)), pair) == 0


def test_character_exponent_derived_scan():
    pair = CyclicPair.from_element(Z2Z2.element((1, 1)))
    chi = Z2Z2.character((1, 0))  # dual to the first coordinate
    # oracle: scan a in {0, 1} for chi(h) = a * psi(h)
    target = chi.pairing(pair.generator)
    candidates = [a for a in range(2) if (a * pair.psi_value) % 1 == target]
    assert candidates == [1]
    assert character_exponent(chi, pair) == 1


def test_epsilon_values():
    pair2 = CyclicPair.from_element(Z2Z2.element((1, 0)))
    chi = Z2Z2.character((1, 0))
    assert epsilon(chi, chi, pair2) == 1  # chi(g) = chi'(g) = -1
    assert epsilon(Z2Z2.trivial_character(), chi, pair2) == 0
    pair4 = CyclicPair.from_element(Z4.element((1,)))
    assert epsilon(Z4.character((3,)), Z4.character((2,)), pair4) == 1  # (3+2)//4


def three_pair_hom():
    pairs = [
        CyclicPair.from_element(Z2Z2.element(c)) for c in ((1, 0), (0, 1), (1, 1))
    ]
    return component_sum_hom(Z2Z2, pairs)


def test_component_sum_hom_kernel():
    hom = three_pair_hom()
    assert hom.kernel.order == 2
    kernel_coeffs = {v.coeffs for v in hom.kernel.elements}
    assert kernel_coeffs == {(0, 0, 0), (1, 1, 1)}


def test_component_sum_hom_isomorphism_and_basis():
    single = component_sum_hom(
        FiniteAbelianGroup((2,)), [CyclicPair.from_element(FiniteAbelianGroup((2,)).element((1,)))]
    )
    assert single.kernel.order == 1
    z2_4 = FiniteAbelianGroup((2, 2, 2, 2))
    basis = [
        CyclicPair.from_element(z2_4.element(tuple(int(i == j) for i in range(4))))
        for j in range(4)
    ]
    assert component_sum_hom(z2_4, basis).kernel.order == 1


def brute_residual_index(hom, mask):
    trivial = 0
    for v in hom.kernel.elements:
        val = sum(
            Fraction(v.coeffs[j] * hom.psi_exponents[j], hom.source.orders[j])
            for j in mask
        )
        if val % 1 == 0:
            trivial += 1
    return hom.kernel.order // trivial


def test_residual_index_values():
    hom = three_pair_hom()
    assert residual_index(hom, {0, 1, 2}) == 2
    assert residual_index(hom, set()) == 1
    e1, e2 = Z2Z2.element((1, 0)), Z2Z2.element((0, 1))
    hom4 = component_sum_hom(Z2Z2, [CyclicPair.from_element(g) for g in (e1, e2, e1, e2)])
    assert brute_residual_index(hom4, {0, 1, 2, 3}) == 1
    assert residual_index(hom4, {0, 1, 2, 3}) == 1


small_groups = st.sampled_from(
    [(2,), (3,), (4,), (2, 2), (2, 4), (3, 3), (2, 2, 2), (6,)]
)


@st.composite
def group_with_data(draw):
    orders = draw(small_groups)
    group = FiniteAbelianGroup(orders)
    elements = [g for g in group.elements() if not g.is_zero]
    pair = CyclicPair.from_element(
        draw(st.sampled_from(elements)),
        psi_exponent=1,
    )
    chars = list(group.characters())
    return group, pair, draw(st.sampled_from(chars)), draw(st.sampled_from(chars))


@given(group_with_data())
@settings(max_examples=300, deadline=None)
def test_exponent_additivity(data):
    group, pair, chi, chi_prime = data
    m = pair.order
    a = character_exponent(chi, pair)
    b = character_exponent(chi_prime, pair)
    ab = character_exponent(chi * chi_prime, pair)
    assert ab == a + b - m * epsilon(chi, chi_prime, pair)


@given(group_with_data())
@settings(max_examples=300, deadline=None)
def test_residual_index_divides_exponent(data):
    group, pair, _, _ = data
    hom = component_sum_hom(group, [pair, pair])
    idx = residual_index(hom, {0, 1})
    assert group.exponent % idx == 0
    assert idx == brute_residual_index(hom, {0, 1})


@given(group_with_data(), st.integers(0, 3))
@settings(max_examples=200, deadline=None)
def test_subgroup_idempotent_monotone(data, extra):
    group, pair, _, _ = data
    gens = [pair.generator]
    sub = subgroup_generated(group, gens)
    again = subgroup_generated(group, list(sub.elements))
    assert again.elements == sub.elements
    more = subgroup_generated(group, gens + list(group.elements())[:extra])
    assert sub.elements <= more.elements
