#!/usr/bin/env python3
"""Tests for exact Gaussian-rational arithmetic."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import pytest
from sympy import QQ, QQ_I

from thetaspin.lib_exact_arith import ONE, T, ZERO, EchelonBasis, ExactArith, X_GENS, X_RING


def test_parse_gauss_forms() -> None:
    assert ExactArith.parse_gauss("3") == QQ_I(3)
    assert ExactArith.parse_gauss("-1/2") == QQ_I(QQ(-1, 2))
    assert ExactArith.parse_gauss("i") == QQ_I(0, 1)
    assert ExactArith.parse_gauss("-2*i") == QQ_I(0, -2)
    assert ExactArith.parse_gauss("(1/2-1/3*i)") == QQ_I(QQ(1, 2), QQ(-1, 3))
    assert ExactArith.parse_gauss("-1+i") == QQ_I(-1, 1)


def test_parse_gauss_rejects_bad_text() -> None:
    with pytest.raises(ValueError):
        ExactArith.parse_gauss("1/0")
    with pytest.raises(ValueError):
        ExactArith.parse_gauss("")
    with pytest.raises(ValueError):
        ExactArith.parse_gauss("abc")


def test_format_gauss_is_canonical() -> None:
    assert ExactArith.format_gauss(QQ_I(QQ(1, 2), QQ(-1, 3))) == "1/2-1/3*i"
    assert ExactArith.format_gauss(QQ_I(0, -1)) == "-i"
    assert ExactArith.format_gauss(QQ_I(4, 0)) == "4"
    assert ExactArith.format_gauss(ExactArith.parse_gauss("-1+i")) == "-1+i"


def test_gauss_values_are_reduced() -> None:
    assert ExactArith.gauss("2/4", (3, 6)) == QQ_I(QQ(1, 2), QQ(1, 2))


def test_echelon_membership_and_coordinates() -> None:
    basis = EchelonBasis(track=True)
    assert basis.add({0: ONE, 1: ONE})
    assert basis.add({1: ONE, 2: ONE})
    assert not basis.add({0: ONE, 2: -ONE})
    assert len(basis) == 2
    assert basis.contains({0: ONE, 1: 2 * ONE, 2: ONE})
    assert not basis.contains({2: ONE})
    coords = basis.coordinates({0: ONE, 1: 2 * ONE, 2: ONE})
    assert coords == {0: ONE, 1: ONE}
    assert basis.coordinates({2: ONE}) is None


def test_coordinates_need_tracking() -> None:
    with pytest.raises(ValueError):
        EchelonBasis().coordinates({0: ONE})


def test_kernel_and_particular_solution() -> None:
    matrix = ExactArith.matrix([[1, 1], [0, 0]])
    assert ExactArith.kernel_basis(matrix) == [{0: ONE, 1: -ONE}]
    assert ExactArith.solve_particular(matrix, {0: 3 * ONE}) == {0: 3 * ONE}
    inconsistent = ExactArith.matrix([[1], [1]])
    assert ExactArith.solve_particular(inconsistent, {0: ONE, 1: 2 * ONE}) is None


def test_rref_rank_and_pivots() -> None:
    echelon, rank, pivots = ExactArith.rref(ExactArith.matrix([[1, 2], [2, 4]]))
    assert rank == 1
    assert pivots == [0]
    assert ExactArith.columns_of(echelon) == [{0: ONE}, {0: 2 * ONE}]
    assert ExactArith.rank(ExactArith.matrix([[2, 4], [1, 3]])) == 2


def test_zero_matrix_kernel_is_everything() -> None:
    assert ExactArith.kernel_basis(ExactArith.matrix([[0, 0]])) == [{0: ONE}, {1: ONE}]


def test_min_poly_and_squarefree() -> None:
    diagonal = ExactArith.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    poly = ExactArith.min_poly(diagonal)
    assert poly == (T - 1) * (T - 2)
    assert ExactArith.squarefree(poly)
    nilpotent = ExactArith.matrix([[0, 1], [0, 0]])
    assert ExactArith.min_poly(nilpotent) == T**2
    assert not ExactArith.squarefree(T**2)


def test_min_poly_rejects_rectangular() -> None:
    with pytest.raises(ValueError):
        ExactArith.min_poly(ExactArith.matrix([[1, 2]]))


def test_gaussian_eigenvalues_give_squarefree_min_poly() -> None:
    rotation = ExactArith.matrix([[0, -1], [1, 0]])
    poly = ExactArith.min_poly(rotation)
    assert poly == T**2 + 1
    assert ExactArith.squarefree(poly)


def test_poly_substitute_and_degree() -> None:
    x1, x2, _, _ = X_GENS
    swap = ExactArith.matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert ExactArith.poly_substitute(x1**2 + 3 * x2, swap) == x2**2 + 3 * x1
    assert ExactArith.total_degree(x1**3 * x2) == 4
    assert ExactArith.total_degree(X_RING.zero) == -1


def test_poly_determinant() -> None:
    x1, x2, _, _ = X_GENS
    assert ExactArith.poly_determinant([[x1, x2], [x2, x1]]) == x1**2 - x2**2


def test_format_poly() -> None:
    x1, x2, _, _ = X_GENS
    poly = x1**2 - x2.mul_ground(QQ_I(0, 1)) + 2
    assert ExactArith.format_poly(poly) == "x1^2 + (-i)*x2 + 2"
    assert ExactArith.format_poly(X_RING.zero) == "0"


def test_axpy_drops_zeros() -> None:
    target = {0: ONE, 1: ONE}
    ExactArith.axpy(target, -ONE, {0: ONE})
    assert target == {1: ONE}
    ExactArith.axpy(target, ZERO, {5: ONE})
    assert target == {1: ONE}
