#!/usr/bin/env python3
"""Tests for exact matrix group elements and the little Weyl group."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest

from thetaspin.lib_exact_arith import ONE, ZERO, ExactArith
from thetaspin.lib_reflgroup import GroupElement, LittleWeylGroup, integral_point
from thetaspin.lib_tables import TABLE1, W0_ORDER


def test_group_element_is_kept_in_lowest_terms() -> None:
    assert GroupElement(1, 2, [4, 2]) == GroupElement(1, 1, [2, 1])
    assert GroupElement(1, -1, [-1, 0]) == GroupElement.identity(1)
    with pytest.raises(ValueError):
        GroupElement(1, 0, [1, 0])
    with pytest.raises(ValueError):
        GroupElement(2, 1, [1, 0])


def test_from_rows_rejects_non_square() -> None:
    with pytest.raises(ValueError):
        GroupElement.from_rows([[1, 0]])


def test_swap_is_a_reflection() -> None:
    swap = GroupElement.from_rows([[0, 1], [1, 0]])
    assert swap * swap == GroupElement.identity(2)
    assert swap.order() == 2
    assert swap.is_reflection()
    assert swap.hyperplane() == (ONE, -ONE)
    assert swap.root() == (ONE, -ONE)
    assert swap.fixes([(1, 0), (1, 0)])
    assert not swap.fixes([(1, 0), (0, 0)])
    assert swap.apply((ONE, ZERO)) == (ZERO, ONE)


def test_complex_reflection_of_order_four() -> None:
    element = GroupElement.from_rows([["i", 0], [0, 1]])
    assert element.is_reflection()
    assert element.order() == 4
    assert element.inverse() * element == GroupElement.identity(2)
    assert element.conjugate_transpose() == element.inverse()


def test_identity_is_not_a_reflection() -> None:
    identity = GroupElement.identity()
    assert not identity.is_reflection()
    with pytest.raises(ValueError):
        identity.hyperplane()


def test_order_cap() -> None:
    shear = GroupElement.from_rows([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        shear.order(cap=10)


def test_integral_point_clears_denominators() -> None:
    point = (ExactArith.gauss("1/2"), ExactArith.gauss(0, "1/3"), ZERO)
    assert integral_point(point) == [(3, 0), (0, 2), (0, 0)]


def test_generate_needs_generators() -> None:
    with pytest.raises(ValueError):
        LittleWeylGroup.generate([])


def test_generate_respects_cap() -> None:
    element = GroupElement.from_rows([["i", 0], [0, 1]])
    assert len(LittleWeylGroup.generate([element])) == 4
    with pytest.raises(ValueError):
        LittleWeylGroup.generate([element], cap=2)


def test_words_and_generators() -> None:
    group = LittleWeylGroup()
    assert all(g.is_reflection() for g in group.generators())
    assert group.word("s1s1").is_identity()
    with pytest.raises(ValueError):
        group.word("s1s7")


def test_printed_gamma_bounds() -> None:
    with pytest.raises(ValueError):
        LittleWeylGroup().printed_gamma(1)


@pytest.mark.slow
def test_w0_order_and_center(group: LittleWeylGroup) -> None:
    assert group.order == W0_ORDER
    assert group.central_scalars() == {"-id": True, "i*id": True}
    assert len({tuple(r.hyperplane) for r in group.reflections()}) == 60


@pytest.mark.slow
def test_stabilizer_classes(group: LittleWeylGroup) -> None:
    for row, subgroup in zip(TABLE1, group.table1_subgroups()):
        assert subgroup.order == row.order
        assert group.same_span(group.fixed_space(subgroup), group.printed_fixed_space(row.index))
        assert group.normalizer_quotient_order(subgroup) == row.gamma_order


@pytest.mark.slow
@pytest.mark.parametrize("index", range(2, 9))
def test_printed_gamma_matches(group: LittleWeylGroup, index: int) -> None:
    assert group.gamma_matches_printed(index)


@pytest.mark.slow
def test_presentation(group: LittleWeylGroup) -> None:
    check = group.check_presentation()
    assert check.passed
    assert check.root_convention in LittleWeylGroup.ROOT_CONVENTIONS


@pytest.mark.slow
@pytest.mark.parametrize("index", range(1, 6))
def test_stratum_polynomials(group: LittleWeylGroup, index: int) -> None:
    assert group.verify_stratum_polynomials(index)


@pytest.mark.slow
@pytest.mark.parametrize("index", range(1, 10))
def test_base_points_lie_in_their_stratum(group: LittleWeylGroup, index: int) -> None:
    assert group.stratum_of(group.base_point(index)) == index

