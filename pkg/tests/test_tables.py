#!/usr/bin/env python3
"""Tests for the transcribed tables and their accessors."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest

from thetaspin.lib_exact_arith import X_GENS, ExactArith
from thetaspin.lib_tables import (
    CARTAN_BASIS,
    MIXED_TABLES,
    PRESENTATION,
    QUADRIC_ACTION,
    QUARTIC_ACTION,
    TABLE1,
    W0_ORDER,
    TableData,
)


def test_table1_shape() -> None:
    assert [row.index for row in TABLE1] == list(range(1, 10))
    assert TABLE1[0].order == 1
    assert TABLE1[-1].order == W0_ORDER
    assert [len(row.fixed_basis) for row in TABLE1] == [4, 3, 2, 2, 2, 1, 1, 1, 0]


def test_table1_row_bounds() -> None:
    assert TableData.table1_row(4).identity_component == "A1"
    with pytest.raises(ValueError):
        TableData.table1_row(0)
    with pytest.raises(ValueError):
        TableData.table1_row(10)


def test_parse_poly() -> None:
    x1, x2, _, _ = X_GENS
    assert TableData.parse_poly("x1**2 - 3*x2") == x1**2 - 3 * x2
    with pytest.raises(ValueError):
        TableData.parse_poly("y7 + 1")


def test_invariant_lists_have_expected_degrees() -> None:
    assert {ExactArith.total_degree(q) for q in TableData.quadrics()} == {2}
    assert {ExactArith.total_degree(a) for a in TableData.quartics()} == {4}
    assert len(TableData.z_quadrics()) == len(TableData.quadrics())
    assert len(TableData.z_quartics()) == len(TableData.quartics())


def test_action_tables_are_permutations_per_generator() -> None:
    for k in range(5):
        assert sorted(row[k][0] for row in QUADRIC_ACTION) == list(range(1, 11))
        assert sorted(row[k] for row in QUARTIC_ACTION) == list(range(1, 7))


def test_stratum_polynomials_bounds() -> None:
    assert TableData.stratum_polynomials(5)
    with pytest.raises(ValueError):
        TableData.stratum_polynomials(6)


def test_mixed_rows_bounds() -> None:
    assert set(MIXED_TABLES) == set(range(2, 9))
    assert TableData.mixed_rows(2)[0].dim == 1
    with pytest.raises(ValueError):
        TableData.mixed_rows(1)


def test_expand_word() -> None:
    names = [f"s{i}" for i in range(1, 6)]
    assert TableData.expand_word("s4s2s3", names) == ["s4", "s2", "s3"]
    assert not TableData.expand_word("", names)
    with pytest.raises(ValueError):
        TableData.expand_word("s4s9", names)


def test_presentation_words_use_simple_reflections() -> None:
    names = [f"s{i}" for i in range(1, 6)]
    for generator in PRESENTATION:
        assert TableData.expand_word(generator.word, names)
    assert len(CARTAN_BASIS) == 4
