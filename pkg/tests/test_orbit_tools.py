#!/usr/bin/env python3
"""Tests for centralizers, Jordan decomposition, sl2-triples and characteristics."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest

from thetaspin.lib_e8_graded import LieElement
from thetaspin.lib_exact_arith import ConsistencyError, ExactArith
from thetaspin.lib_orbit_tools import (
    CentralizerSignature,
    Characteristic,
    OrbitTools,
    rational_eigenvalues,
    simple_type,
    type_dimension,
)
from thetaspin.lib_reflgroup import LittleWeylGroup


def test_type_dimension() -> None:
    assert type_dimension("A1") == 3
    assert type_dimension("A2") == 8
    assert type_dimension("B2") == 10
    assert type_dimension("D5") == 45
    assert type_dimension("E8") == 248
    with pytest.raises(ValueError):
        type_dimension("X3")


def test_simple_type() -> None:
    assert simple_type(3, 1) == "A1"
    assert simple_type(8, 2) == "A2"
    assert simple_type(10, 2) == "B2"
    assert simple_type(45, 5) == "D5"
    assert simple_type(14, 2) == "G2"
    assert simple_type(5, 2) is None
    assert simple_type(0, 0) is None


def test_signature_parse_and_format() -> None:
    signature = CentralizerSignature.parse("2A1+t2+u3")
    assert signature == CentralizerSignature(("A1", "A1"), 2, 3)
    assert signature.format() == "2A1+t2+u3"
    assert signature.total_dim == 11
    assert CentralizerSignature.parse("A1+T3").toral_dim == 3
    assert CentralizerSignature.parse("0") == CentralizerSignature.parse("1") == CentralizerSignature()
    assert CentralizerSignature().format() == "0"
    assert CentralizerSignature.parse("D5+A3").format() == "A3+D5"
    with pytest.raises(ValueError):
        CentralizerSignature.parse("Q7")


def test_characteristic_format() -> None:
    assert Characteristic((1, 0, 2)).format() == "(102)"
    assert Characteristic((2, 0), (ExactArith.gauss("1/2"),)).format() == "(20, 1/2)"
    assert Characteristic((12, 0)).format() == "(12,0)"


def test_rational_eigenvalues() -> None:
    values = rational_eigenvalues(ExactArith.matrix([[2, 0], [0, -1]]))
    assert values == [ExactArith.gauss(2), ExactArith.gauss(-1)]
    assert not rational_eigenvalues(ExactArith.matrix([]))
    with pytest.raises(ConsistencyError):
        rational_eigenvalues(ExactArith.matrix([[0, -1], [1, 0]]))


def test_semisimple_and_nilpotent(tools: OrbitTools) -> None:
    model = tools.model
    assert tools.is_semisimple(LieElement())
    assert tools.is_semisimple(model.h(1))
    assert not tools.is_semisimple(model.e(1))
    assert tools.is_nilpotent(model.e(1))
    assert not tools.is_nilpotent(model.h(1))


def test_cartan_elements_are_semisimple(tools: OrbitTools) -> None:
    assert all(tools.is_semisimple(p) for p in tools.cartan_elements())


def test_jordan_of_pure_parts(tools: OrbitTools) -> None:
    p1 = tools.cartan_elements()[0]
    assert tools.jordan_g1(p1) == (p1, LieElement())
    e = tools.dictionary.parse("(1,4)x1")
    assert tools.jordan_g1(e) == (LieElement(), e)
    assert tools.jordan_g1(LieElement()) == (LieElement(), LieElement())


def test_jordan_rejects_other_components(tools: OrbitTools) -> None:
    with pytest.raises(ValueError):
        tools.jordan_g1(tools.model.e(1))


def test_jordan_round_trip(tools: OrbitTools) -> None:
    assert tools.jordan_round_trip(samples=5) == []


def test_jordan_round_trip_checks_part_types(tools: OrbitTools, monkeypatch: pytest.MonkeyPatch) -> None:
    e = tools.dictionary.parse("(1,4)x1")
    assert not tools.is_semisimple(e)
    monkeypatch.setattr(tools, "jordan_g1", lambda x: (x, LieElement()))
    failures = tools.jordan_round_trip(samples=5)
    assert failures
    assert all("not semisimple or n is not nilpotent" in message for message in failures)


def test_signature_edge_cases(tools: OrbitTools) -> None:
    assert tools.signature([]) == CentralizerSignature()
    with pytest.raises(ValueError):
        tools.signature([tools.dictionary.parse("(1,4)x1")])
    model = tools.model
    assert tools.signature([model.e(1), model.f(1), model.h(1)]) == CentralizerSignature(("A1",))
    assert tools.signature([model.h(1), model.h(2)]) == CentralizerSignature((), 2, 0)


def test_sl2_triple_through_a_root_vector(tools: OrbitTools) -> None:
    e = tools.dictionary.parse("(1,4)x1")
    triple = tools.sl2_complete(e)
    assert triple.defects(tools.model) == []
    assert tools.model.degree(triple.h) == 0
    assert tools.model.degree(triple.f) == 3
    with pytest.raises(ValueError):
        tools.sl2_complete(LieElement())


def test_characteristic_agrees_with_reflection_walk(tools: OrbitTools) -> None:
    triple = tools.sl2_complete(tools.dictionary.parse("(1,4)x1"))
    direct = tools.dominant_by_reflections(tools.cartan_coords(triple.h))
    assert tools.characteristic(triple.h) == direct
    assert all(value >= 0 for value in direct.labels)


def test_characteristic_edge_cases(tools: OrbitTools) -> None:
    assert tools.characteristic(LieElement()) == Characteristic((0,) * 8)
    with pytest.raises(ValueError):
        tools.characteristic(tools.dictionary.parse("(1,4)x1"))


def test_open_orbit_of_zero(tools: OrbitTools) -> None:
    assert tools.open_orbit_check(LieElement(), LieElement())


def test_orbit_dimension_needs_commuting_pair(tools: OrbitTools) -> None:
    with pytest.raises(ValueError):
        tools.orbit_dim_in_centralizer(tools.model.e(1), tools.model.f(1))


def test_cartan_coords_reject_root_vectors(tools: OrbitTools) -> None:
    with pytest.raises(ValueError):
        tools.cartan_coords(tools.model.e(1))


@pytest.mark.slow
def test_cartan_subspace(tools: OrbitTools) -> None:
    report = tools.cartan_subspace_report()
    assert report.passed
    assert report.z_g1_dim == 4


@pytest.mark.slow
def test_centralizer_of_p1(tools: OrbitTools) -> None:
    p1 = tools.cartan_elements()[0]
    z = tools.centralizer_in(p1, tools.model.components[0])
    assert len(z) == 15
    assert tools.signature(z) == CentralizerSignature.parse("2A1+A2+T1")


@pytest.mark.slow
def test_jordan_of_mixed_element(tools: OrbitTools) -> None:
    p1 = tools.cartan_elements()[0]
    e = tools.dictionary.parse("(1,4)x1")
    assert tools.jordan_g1(p1 + e) == (p1, e)
    assert tools.orbit_dim_in_centralizer(p1, e) == 4


@pytest.mark.slow
def test_identity_components(tools: OrbitTools, group: LittleWeylGroup) -> None:
    for index, computed, printed in tools.identity_component_checks(group):
        assert computed == printed, f"stratum {index}"


@pytest.mark.slow
@pytest.mark.parametrize("index", range(2, 9))
def test_mixed_tables(tools: OrbitTools, group: LittleWeylGroup, index: int) -> None:
    report = tools.verify_mixed_table(index, group)
    failing = [(row.row, row.details) for row in report.rows if not row.passed]
    assert not failing
    if report.convention:
        hits, listed = report.convention_fit
        assert hits == listed > 0
