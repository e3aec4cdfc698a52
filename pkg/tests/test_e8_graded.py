#!/usr/bin/env python3
"""Tests for the graded E8 model."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest
from sympy import QQ_I

from thetaspin.lib_e8_graded import E8Model, LieElement
from thetaspin.lib_exact_arith import ConsistencyError


def test_root_system_sizes(model: E8Model) -> None:
    assert len(model.positive_roots) == 120
    assert sum(1 for r in model.roots if r is not None) == 240
    assert len(model.roots) == 248
    assert model.positive_roots[-1] == (2, 3, 4, 6, 5, 4, 3, 2)


def test_component_dimensions(model: E8Model) -> None:
    assert tuple(len(c) for c in model.components) == (60, 64, 60, 64)


def test_g0_type(model: E8Model) -> None:
    assert model.g0_type() == "A3+D5"


def test_g0_simple_roots_come_from_degree_zero(model: E8Model) -> None:
    simple = model.g0_simple_roots()
    assert len(simple) == 8
    assert len(model.g0_roots()) == 52
    assert all(model.degrees[model.root_index[r]] == 0 for r in simple)
    assert model.is_g0_simple_system(simple)


def test_g0_type_follows_grading_node(model: E8Model, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(E8Model, "_degree_of_root", staticmethod(lambda root: 0 if root is None else root[0] % 4))
    assert len(model.g0_roots()) == 84
    assert model.g0_type() == "D7"


def test_foreign_roots_are_not_a_g0_simple_system(model: E8Model) -> None:
    simple = model.g0_simple_roots()
    assert not model.is_g0_simple_system(simple[:-1])
    assert not model.is_g0_simple_system([(0, 0, 0, 0, 0, 1, 0, 0)] + simple[1:])


def test_simple_relations(model: E8Model) -> None:
    assert model.simple_relation_defects() == []
    assert model.bracket(model.h(1), model.e(1)) == 2 * model.e(1)
    assert model.bracket(model.e(1), model.f(1)) == model.h(1)


def test_theta_on_simple_vectors(model: E8Model) -> None:
    assert model.theta(model.e(6)) == QQ_I(0, 1) * model.e(6)
    assert model.theta(model.f(6)) == QQ_I(0, -1) * model.f(6)
    assert model.theta(model.e(1)) == model.e(1)


def test_bracket_is_antisymmetric(model: E8Model) -> None:
    x = model.e(1) + model.e(3) + 3 * model.h(2)
    y = model.f(1) - model.e(4)
    assert model.bracket(x, x) == LieElement()
    assert model.bracket(x, y) == -model.bracket(y, x)


def test_ad_matrix_of_zero_and_grading_violation(model: E8Model) -> None:
    g1, g2 = model.components[1], model.components[2]
    assert not model.ad_matrix(LieElement(), g1, g2).to_dod()
    x = model.basis(g1[0])
    with pytest.raises(ConsistencyError):
        model.ad_matrix(x, g1, g1)


def test_ad_of_cartan_is_diagonal(model: E8Model) -> None:
    everything = list(range(model.DIM))
    matrix = model.ad_matrix(model.h(1), everything, everything)
    for i, row in matrix.to_dod().items():
        assert list(row) == [i]


def test_killing_form(model: E8Model) -> None:
    assert model.killing(model.e(1), model.f(1))
    assert not model.killing(model.e(1), model.e(1))
    assert model.killing(model.e(2), model.f(2)) == model.killing_trace(model.e(2), model.f(2))


def test_killing_is_invariant(model: E8Model) -> None:
    assert model.invariance_defects(seed=7, samples=50) == 0


def test_jacobi_on_sampled_triples(model: E8Model) -> None:
    assert model.jacobi_defects(seed=11, samples=2000) == []


def test_degree_and_projection(model: E8Model) -> None:
    assert model.degree(model.e(6)) == 1
    assert model.degree(model.f(6)) == 3
    assert model.degree(model.e(6) + model.e(1)) is None
    assert model.project(model.e(6) + model.e(1), 1) == model.e(6)


def test_dump_grading_covers_positive_roots(model: E8Model) -> None:
    rows = model.dump_grading()
    assert len(rows) == 120
    assert sum(1 for _, _, degree in rows if degree == 0) == 26


@pytest.mark.slow
def test_theta_is_an_automorphism(model: E8Model) -> None:
    assert model.theta_defects() == []


@pytest.mark.slow
def test_grading_is_closed(model: E8Model) -> None:
    assert model.grading_defects() == []
