#!/usr/bin/env python3
"""Tests for the quadrics, quartics and the basic invariants of W0."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest

from thetaspin.lib_exact_arith import ONE, X_GENS, X_RING, ExactArith
from thetaspin.lib_invariants import InvariantTheory
from thetaspin.lib_reflgroup import LittleWeylGroup


def test_elementary_symmetric() -> None:
    x1, x2, _, _ = X_GENS
    assert InvariantTheory.elementary_symmetric([x1, x2]) == [X_RING.one, x1 + x2, x1 * x2]


def test_ratio() -> None:
    x1, x2, _, _ = X_GENS
    assert InvariantTheory.ratio(2 * x1, x1) == ExactArith.gauss(2)
    assert InvariantTheory.ratio(x1, x2) is None
    assert InvariantTheory.ratio(x1 + x2, x1 - x2) is None
    assert InvariantTheory.ratio(x1, X_RING.zero) is None


def test_catalog_is_required() -> None:
    with pytest.raises(ValueError):
        InvariantTheory(LittleWeylGroup()).action_on_quadric(1, 1)


def test_generator_index_bounds(theory: InvariantTheory) -> None:
    with pytest.raises(ValueError):
        theory.action_on_quadric(6, 1)
    with pytest.raises(ValueError):
        theory.action_on_quartic(0, 1)


def test_catalog_names(theory: InvariantTheory) -> None:
    assert theory.catalog is not None
    names = list(theory.catalog.named())
    assert names[:2] == ["Q1", "Q2"]
    assert "F24" not in names
    assert len(names) == 21


def test_quadric_action_table(theory: InvariantTheory) -> None:
    assert theory.quadric_table_mismatches() == []
    assert theory.action_on_quadric(1, 1) == (6, ExactArith.gauss(-1))


def test_quartic_action_table(theory: InvariantTheory) -> None:
    assert theory.quartic_table_mismatches() == []
    assert theory.action_on_quartic(1, 1) == 3


def test_quadrics_form_one_orbit(theory: InvariantTheory) -> None:
    assert theory.quadric_orbit() == set(range(1, 11))


def test_identities_without_hessian(theory: InvariantTheory) -> None:
    check = theory.check_identities()
    assert check.passed
    assert check.results["A1+...+A6 = 0"]
    assert check.results["F20 = F8*F12 + 81*Pi20"]
    assert check.hessian_sign == 0


def test_quadrics_are_not_invariant(theory: InvariantTheory) -> None:
    assert theory.catalog is not None
    assert not theory.is_invariant(theory.catalog.quadrics[0])


def test_z_forms(theory: InvariantTheory) -> None:
    check = theory.z_basis_forms()
    assert check.passed
    assert all(position is not None for position in check.basis_order)
    assert sorted(check.basis_order) == [1, 2, 3, 4]


def test_z_quadric_scalars_are_pinned(theory: InvariantTheory) -> None:
    check = theory.z_basis_forms()
    half = ExactArith.gauss("1/2")
    assert check.quadric_scalars == [
        ExactArith.gauss("1/2", "-1/2"),
        ExactArith.gauss("-1/2", "-1/2"),
        ExactArith.gauss(0, "1/2"),
        ExactArith.gauss(0, "1/2"),
        ExactArith.gauss("1/2", "-1/2"),
        ExactArith.gauss("-1/2", "-1/2"),
        ONE,
        ONE,
        ONE,
        ONE,
    ]
    assert check.expected_scalars == check.quadric_scalars
    check.expected_scalars[6] = half
    assert not check.passed


def test_jacobian_has_full_rank(theory: InvariantTheory) -> None:
    assert theory.jacobian_rank(seed=2024) == 4


@pytest.mark.slow
def test_hessian_invariant() -> None:
    theory = InvariantTheory(LittleWeylGroup())
    catalog = theory.build_catalog(with_hessian=True)
    assert catalog.f24 is not None
    assert ExactArith.total_degree(catalog.f24) == 24
    check = theory.check_identities()
    assert check.hessian_sign == 1
    assert check.passed
