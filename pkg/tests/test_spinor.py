#!/usr/bin/env python3
"""Tests for the Clifford construction, weights, Dynkin schemes and the g1 dictionary."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest
from sympy import QQ

from thetaspin.lib_exact_arith import ONE, ExactArith
from thetaspin.lib_spinor import LABELS, CliffordModel, SpinorDictionary, SpinorTensor, SpinorWeights
from thetaspin.lib_tables import CARTAN_BASIS, SCHEME_EXAMPLE

HALF = QQ(1, 2)


def test_wedge_operators() -> None:
    assert CliffordModel.gamma_action(6, {(): ONE}) == {(1,): ONE}
    assert not CliffordModel.gamma_action(6, {(1,): ONE})
    with pytest.raises(ValueError):
        CliffordModel.gamma_action(11, {(): ONE})


def test_clifford_relations_hold() -> None:
    assert CliffordModel.clifford_defect() == []


def test_rho_of_zero_and_non_orthogonal_input() -> None:
    images = CliffordModel.rho({})
    assert len(images) == 32
    assert all(not image for image in images.values())
    with pytest.raises(ValueError):
        CliffordModel.rho({(1, 1): ONE})


def test_o10_basis() -> None:
    basis = CliffordModel.o10_basis()
    assert len(basis) == 45
    assert all(CliffordModel.in_o10(a) for a in basis)


def test_delta_plus_and_highest_weight() -> None:
    assert CliffordModel.delta_plus_invariant()
    assert CliffordModel.highest_weight_labels() == [(1, 2, 3, 4)]


@pytest.mark.slow
def test_rho_is_a_homomorphism() -> None:
    assert CliffordModel.rho_homomorphism_defect() == []


def test_weights_of_labels() -> None:
    assert SpinorWeights.weight_of(((), 1)) == ((-HALF,) * 5, 1)
    assert SpinorWeights.weight_of(((1, 2), 3)) == ((HALF, HALF, -HALF, -HALF, -HALF), 3)
    assert SpinorWeights.weight_of(((1, 2, 3, 4), 2)) == ((HALF, HALF, HALF, HALF, -HALF), 2)
    with pytest.raises(ValueError):
        SpinorWeights.weight_of(((1,), 1))


def test_weight_products() -> None:
    assert SpinorWeights.label_dot(((1, 2), 1), ((1, 3), 1)) == 1
    assert SpinorWeights.label_dot(((), 1), ((1, 2, 3, 4), 2)) == -1
    assert all(SpinorWeights.label_dot(label, label) == 2 for label in LABELS)
    assert {SpinorWeights.label_dot(a, b) for a in LABELS for b in LABELS} == {2, 1, 0, -1}


def test_parse_and_format() -> None:
    tensor = SpinorTensor.parse(CARTAN_BASIS[0])
    assert tensor.format() == "(1,2,4,5)x2-(1,3)x4-(2,4)x3-(3,5)x1"
    assert SpinorTensor.parse(tensor.format()) == tensor
    scaled = SpinorTensor.parse("2*(1,2)x1-1/2(3,4)x2+(1/2+i)*()x3")
    assert scaled.coords[((1, 2), 1)] == 2 * ONE
    assert scaled.coords[((3, 4), 2)] == ExactArith.parse_gauss("-1/2")
    assert scaled.coords[((), 3)] == ExactArith.parse_gauss("1/2+i")


@pytest.mark.parametrize("text", ["", "(1,2)x5", "(1,2,3)x1", "(2,1)x1", "(1,2)x1(3,4)x2", "(1,6)x1"])
def test_parse_rejects_malformed(text: str) -> None:
    with pytest.raises(ValueError):
        SpinorTensor.parse(text)


def test_scheme_of_single_label_and_zero() -> None:
    scheme = SpinorWeights.dynkin_scheme(SpinorTensor.parse("(1,2)x1"))
    assert len(scheme.nodes) == 1
    assert not scheme.edges
    with pytest.raises(ValueError):
        SpinorWeights.dynkin_scheme(SpinorTensor())


def test_example_scheme_has_eight_nodes() -> None:
    scheme = SpinorWeights.dynkin_scheme(SpinorTensor.parse(SCHEME_EXAMPLE))
    assert len(scheme.nodes) == 8
    dot = scheme.to_dot()
    assert dot.startswith("graph scheme {")
    assert dot.count(" -- ") == len(scheme.edges)
    dashed = sum(1 for _, _, style in scheme.edges if style == "dashed")
    assert dot.count("style=dashed") == dashed


def test_cartan_basis_schemes_are_squares() -> None:
    for text in CARTAN_BASIS:
        assert SpinorWeights.dynkin_scheme(SpinorTensor.parse(text)).is_square()


def test_scheme_ignores_coefficients() -> None:
    plain = SpinorWeights.dynkin_scheme(SpinorTensor.parse(SCHEME_EXAMPLE))
    scaled = SpinorWeights.dynkin_scheme(3 * SpinorTensor.parse(SCHEME_EXAMPLE))
    assert plain == scaled


def test_dictionary_checks(dictionary: SpinorDictionary) -> None:
    assert dictionary.weight_multisets_agree()
    assert dictionary.single_root_lines()
    assert dictionary.pairing_mismatches() == []
    assert len(dictionary.g0_simple_roots) == 8
    assert dictionary.model.is_g0_simple_system(dictionary.g0_simple_roots)


def test_dictionary_normalization_and_inverse(dictionary: SpinorDictionary) -> None:
    first = dictionary.label_to_element[LABELS[0]]
    assert list(first.coords.values()) == [ONE]
    tensor = SpinorTensor.parse(SCHEME_EXAMPLE)
    assert dictionary.from_lie(dictionary.to_lie(tensor)) == tensor


def test_from_lie_rejects_other_components(dictionary: SpinorDictionary) -> None:
    with pytest.raises(ValueError):
        dictionary.from_lie(dictionary.model.e(1))
