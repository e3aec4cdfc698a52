#!/usr/bin/env python3
"""
Published reference data re-derived by the verification commands.

Copyright (C) 2025 Sergei Sveshnikov

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, see <https://www.gnu.org/licenses/>.

Everything here is transcribed data: the Cartan subspace basis, the five
generating reflections, the stabilizer classification, the stratum
polynomials, the quadric and quartic invariants with their action tables
and the nilpotent parts of mixed elements. Polynomials are kept as sympy
expression strings and converted through ``TableData`` accessors.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import sympify

from thetaspin.lib_exact_arith import X_RING, Z_RING

logger = logging.getLogger(__name__)

Entry = Any
MatrixRows = Tuple[Tuple[Entry, ...], ...]
Coefficients = Tuple[int, int, int, int]

CARTAN_BASIS: Tuple[str, ...] = (
    "-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4",
    "-(2,5)x1+(1,3,4,5)x2+(3,4)x3+(1,2)x4",
    "(1,2,3,4)x1+()x2+(1,2,3,5)x3-(4,5)x4",
    "(1,4)x1+(2,3)x2-(1,5)x3+(2,3,4,5)x4",
)

GENERATORS: Dict[str, MatrixRows] = {
    "s1": ((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    "s2": ((0, -1, 0, 0), (-1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    "s3": ((0, "-i", 0, 0), ("i", 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    "s4": (
        ("1/2", "-1/2", "-1/2", "-1/2"),
        ("-1/2", "1/2", "-1/2", "-1/2"),
        ("-1/2", "-1/2", "1/2", "-1/2"),
        ("-1/2", "-1/2", "-1/2", "1/2"),
    ),
    "s5": (
        (0, 0, "-1/2-1/2*i", "-1/2+1/2*i"),
        (0, 1, 0, 0),
        ("-1/2+1/2*i", 0, "1/2", "1/2*i"),
        ("-1/2-1/2*i", 0, "-1/2*i", "1/2"),
    ),
}

W0_ORDER = 46080


class Table1Row(NamedTuple):
    """One stabilizer class: generator words, group order, fixed space and normalizer data."""

    index: int
    words: Tuple[str, ...]
    order: int
    fixed_basis: Tuple[Coefficients, ...]
    identity_component: str
    component_group: str
    gamma_order: int


TABLE1: Tuple[Table1Row, ...] = (
    Table1Row(1, (), 1, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), "1", "C2^4", 46080),
    Table1Row(2, ("s1",), 2, ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), "T1", "C2^3", 384),
    Table1Row(3, ("s1", "s4s2s3s5s4s5s3s2s4"), 4, ((0, 1, 0, 0), (0, 0, 1, 0)), "T2", "C2^2", 32),
    Table1Row(4, ("s1", "s4"), 6, ((0, 1, -1, 0), (0, 0, 1, -1)), "A1", "C2^2", 24),
    Table1Row(
        5,
        ("s4s2s4", "s4s3s5s4s5s3s4", "s4s2s1s5s4s5s1s2s4"),
        16,
        ((1, 0, 0, 0), (0, 1, 0, 0)),
        "A1+T3",
        "C2^2",
        96,
    ),
    Table1Row(6, ("s1s2s1", "s1s2s4s3s5s3s4s2s1", "s4s2s3s5s4s5s3s2s4"), 12, ((1, 1, 1, 0),), "A1+T1", "C2", 4),
    Table1Row(7, ("s1", "s3s5s4s5s3", "s2s4s2"), 24, ((0, 1, 1, 0),), "2A1", "C2", 4),
    Table1Row(8, ("s2s1s2", "s2s5s2", "s3s5s3", "s4s5s4"), 192, ((1, 0, 0, 0),), "2A1+A2+T1", "C2", 4),
    Table1Row(9, ("s1", "s2", "s3", "s4", "s5"), W0_ORDER, (), "D5+A3", "1", 1),
)

# Generators of the normalizer quotients acting on the printed fixed-space basis.
GAMMA_GENERATORS: Dict[int, Tuple[MatrixRows, ...]] = {
    2: (
        ((1, 0, 0), (0, 1, 0), (0, 0, -1)),
        ((0, "1/2+1/2*i", "1/2-1/2*i"), ("1/2+1/2*i", "1/2", "1/2*i"), ("1/2-1/2*i", "1/2*i", "1/2")),
    ),
    3: (((1, 0), (0, "i")), ((0, 1), (1, 0))),
    4: (((1, 0), (1, -1)), (("-1/2-1/2*i", 1), ("1/2", "1/2-1/2*i"))),
    5: (((1, 0), (0, "i")), (("1/2+1/2*i", "1/2+1/2*i"), ("1/2+1/2*i", "-1/2-1/2*i"))),
    6: ((("i",),),),
    7: ((("i",),),),
    8: ((("i",),),),
}

# Polynomials in the coordinates of the printed fixed-space basis whose joint
# non-vanishing cuts out the points with stabilizer exactly M_i.
STRATUM_POLYNOMIALS: Dict[int, Tuple[str, ...]] = {
    1: (
        "x1*x2*x3*x4",
        "x2**4 - 2*x2**2*x3*x4 + x3**4/4 + x3**2*x4**2/2 + x4**4/4",
        "x1**4 - x2**4",
        "x3**4 - x4**4",
        "x2**4 + 2*x2**2*x3*x4 + x3**4/4 + x3**2*x4**2/2 + x4**4/4",
        "x1**2 - 2*x1*x2 + x2**2 - x3**2 - 2*x3*x4 - x4**2",
        "x1**2 - 2*x1*x2 + x2**2 - x3**2 + 2*x3*x4 - x4**2",
        "x1**2 + 2*x1*x2 + x2**2 - x3**2 - 2*x3*x4 - x4**2",
        "x1**2 + 2*x1*x2 + x2**2 - x3**2 + 2*x3*x4 - x4**2",
        "x1**4 + 2*x1**2*x2**2 - 8*x1*x2*x4**2 + x2**4 + 4*x4**4",
        "x1**4 + 2*x1**2*x2**2 + 8*x1*x2*x4**2 + x2**4 + 4*x4**4",
        "x1**4 + 2*x1**2*x2**2 - 8*x1*x2*x3**2 + x2**4 + 4*x3**4",
        "x1**4 + 2*x1**2*x2**2 + 8*x1*x2*x3**2 + x2**4 + 4*x3**4",
        "x1**4 - 2*x1**2*x3*x4 + x3**4/4 + x3**2*x4**2/2 + x4**4/4",
        "x1**4 + 2*x1**2*x3*x4 + x3**4/4 + x3**2*x4**2/2 + x4**4/4",
        "x1**2 - 2*x1*x2 + x2**2 + x3**2 - 2*x3*x4 + x4**2",
        "x1**2 - 2*x1*x2 + x2**2 + x3**2 + 2*x3*x4 + x4**2",
        "x1**2 + 2*x1*x2 + x2**2 + x3**2 - 2*x3*x4 + x4**2",
        "x1**2 + 2*x1*x2 + x2**2 + x3**2 + 2*x3*x4 + x4**2",
    ),
    2: (
        "x1*x2*x3",
        "x1**2 - 2*x1*x2 + x2**2 - x3**2",
        "x2**4 - x3**4",
        "x1**2 + 2*x1*x2 + x2**2 - x3**2",
        "x1**2 + x2**2 - 2*x2*x3 + x3**2",
        "x1**2 + x2**2 + 2*x2*x3 + x3**2",
        "x1**4 + 4*x3**4",
        "x1**4 + 4*x2**4",
        "x1**4 - 2*x1**2*x2*x3 + x2**4/4 + x2**2*x3**2/2 + x3**4/4",
        "x1**4 + 2*x1**2*x2*x3 + x2**4/4 + x2**2*x3**2/2 + x3**4/4",
    ),
    3: ("x1*x2", "x1**4 - x2**4", "x1**8 + 17*x1**4*x2**4/4 + x2**8"),
    4: (
        "x1*x2",
        "x1**2 - 3*x1*x2 + 2*x2**2",
        "x1**4 + 4*x2**4",
        "x1**2 - 6*x1*x2/5 + 2*x2**2/5",
        "x1**2 - 2*x1*x2/5 + 2*x2**2/5",
    ),
    5: ("x1*x2", "x1**4 - x2**4"),
}


class PresentationGenerator(NamedTuple):
    """A word in s1..s5 and the printed root of the reflection it gives."""

    name: str
    word: str
    root: Tuple[str, str, str, str]


PRESENTATION: Tuple[PresentationGenerator, ...] = (
    PresentationGenerator("s", "s1s5s3s4s3s5s1", ("1", "i", "1+i", "0")),
    PresentationGenerator("t", "s4", ("1", "1", "1", "1")),
    PresentationGenerator("u", "s2s1s5s1s2", ("0", "1+i", "1", "i")),
    PresentationGenerator("v", "s1", ("1", "0", "0", "0")),
    PresentationGenerator("w", "s4s2s3s5s4s5s3s2s4", ("0", "0", "0", "1")),
)

# Each relation lists words in s,t,u,v,w that must all give the same element.
PRESENTATION_RELATIONS: Tuple[Tuple[str, ...], ...] = (
    ("sw", "ws"),
    ("uv", "vu"),
    ("svs", "vsv"),
    ("vtv", "tvt"),
    ("wtw", "twt"),
    ("wuw", "uwu"),
    ("stu", "tus", "ust"),
)

QUADRICS: Tuple[str, ...] = (
    "x1*x3 + I*x1*x4 - x2*x4 - I*x2*x3",
    "x1*x3 + I*x2*x3 - x2*x4 - I*x1*x4",
    "x1**2 + I*x3**2 - x2**2 - I*x4**2",
    "x1**2 + I*x4**2 - x2**2 - I*x3**2",
    "x1*x3 - I*x1*x4 - I*x2*x3 + x2*x4",
    "x1*x3 + I*x1*x4 + I*x2*x3 + x2*x4",
    "x1**2 + x2**2 + 2*x3*x4",
    "2*x1*x2 + x3**2 + x4**2",
    "x1**2 + x2**2 - 2*x3*x4",
    "2*x1*x2 - x3**2 - x4**2",
)

QUARTICS: Tuple[str, ...] = (
    "2*x1**4 + 2*x2**4 - x3**4 - x4**4 + 12*x1*x2*(x3**2 + x4**2) + 6*x3**2*x4**2",
    "-x1**4 - x2**4 + 2*x3**4 + 2*x4**4 + 6*x1**2*x2**2 - 12*(x1**2 + x2**2)*x3*x4",
    "2*x1**4 + 2*x2**4 - x3**4 - x4**4 - 12*x1*x2*(x3**2 + x4**2) + 6*x3**2*x4**2",
    "-x1**4 - x2**4 + 2*x3**4 + 2*x4**4 + 6*x1**2*x2**2 + 12*(x1**2 + x2**2)*x3*x4",
    "-x1**4 - x2**4 - x3**4 - x4**4 - 6*x1**2*x2**2 + 6*I*(x1**2 - x2**2)*(x3**2 - x4**2) - 6*x3**2*x4**2",
    "-x1**4 - x2**4 - x3**4 - x4**4 - 6*x1**2*x2**2 - 6*I*(x1**2 - x2**2)*(x3**2 - x4**2) - 6*x3**2*x4**2",
)

# QUADRIC_ACTION[i][k] = (j, c): Q_{i+1} o s_{k+1} = c * Q_j.
QUADRIC_ACTION: Tuple[Tuple[Tuple[int, str], ...], ...] = (
    ((6, "-1"), (2, "i"), (5, "1"), (4, "-1/2-1/2*i"), (10, "1/2+1/2*i")),
    ((5, "-1"), (1, "-i"), (6, "-1"), (3, "-1/2+1/2*i"), (2, "1")),
    ((3, "1"), (4, "-1"), (3, "1"), (2, "-1-i"), (3, "1")),
    ((4, "1"), (3, "-1"), (4, "1"), (1, "-1+i"), (9, "-1")),
    ((2, "-1"), (6, "i"), (1, "1"), (5, "1"), (5, "1")),
    ((1, "-1"), (5, "-i"), (2, "-1"), (6, "1"), (8, "-1/2-1/2*i")),
    ((7, "1"), (7, "1"), (9, "-1"), (7, "1"), (7, "1")),
    ((8, "1"), (8, "1"), (8, "1"), (8, "1"), (6, "-1+i")),
    ((9, "1"), (9, "1"), (7, "-1"), (10, "-1"), (4, "-1")),
    ((10, "1"), (10, "1"), (10, "1"), (9, "-1"), (1, "1-i")),
)

# QUARTIC_ACTION[i][k] = j: A_{i+1} o s_{k+1} = A_j.
QUARTIC_ACTION: Tuple[Tuple[int, ...], ...] = (
    (3, 1, 1, 4, 1),
    (2, 2, 4, 2, 6),
    (1, 3, 3, 3, 3),
    (4, 4, 2, 1, 4),
    (5, 6, 5, 5, 5),
    (6, 5, 6, 6, 2),
)

HESSIAN_SCALE = 265531392

# sqrt(2) * z = Z_CHANGE * x.
Z_CHANGE: MatrixRows = (
    (1, 1, 0, 0),
    (0, 0, "-i", "i"),
    ("i", "-i", 0, 0),
    (0, 0, "-i", "-i"),
)

# sqrt(2) * b_k in the coordinates p1..p4, in printed order.
Z_PRINTED_BASIS: MatrixRows = (
    (1, 1, 0, 0),
    (0, 0, "i", "i"),
    ("-i", "i", 0, 0),
    (0, 0, "i", "-i"),
)

Z_QUADRICS: Tuple[str, ...] = (
    "z1*z2 + z3*z4",
    "z1*z2 - z3*z4",
    "z1*z3 + z2*z4",
    "z1*z3 - z2*z4",
    "z1*z4 + z2*z3",
    "z1*z4 - z2*z3",
    "z1**2 + z2**2 - z3**2 - z4**2",
    "z1**2 - z2**2 + z3**2 - z4**2",
    "z1**2 - z2**2 - z3**2 + z4**2",
    "z1**2 + z2**2 + z3**2 + z4**2",
)

# x-form of the i-th z-quadric = Z_QUADRIC_SCALARS[i] * Q_{i+1}.
Z_QUADRIC_SCALARS: Tuple[Entry, ...] = ("1/2-1/2*i", "-1/2-1/2*i", "1/2*i", "1/2*i", "1/2-1/2*i", "-1/2-1/2*i", 1, 1, 1, 1)

_Z_POWER_SUM = "z1**4 + z2**4 + z3**4 + z4**4"

Z_QUARTICS: Tuple[str, ...] = (
    f"{_Z_POWER_SUM} - 6*(z1**2*z2**2 + z1**2*z3**2 + z1**2*z4**2 + z2**2*z3**2 + z2**2*z4**2 + z3**2*z4**2)",
    f"{_Z_POWER_SUM} - 6*(z1**2*z2**2 - z1**2*z3**2 - z1**2*z4**2 - z2**2*z3**2 - z2**2*z4**2 + z3**2*z4**2)",
    f"{_Z_POWER_SUM} - 6*(-z1**2*z2**2 + z1**2*z3**2 - z1**2*z4**2 - z2**2*z3**2 + z2**2*z4**2 - z3**2*z4**2)",
    f"{_Z_POWER_SUM} - 6*(-z1**2*z2**2 - z1**2*z3**2 + z1**2*z4**2 + z2**2*z3**2 - z2**2*z4**2 - z3**2*z4**2)",
    f"-2*({_Z_POWER_SUM}) - 24*z1*z2*z3*z4",
    f"-2*({_Z_POWER_SUM}) + 24*z1*z2*z3*z4",
)


class MixedRow(NamedTuple):
    """A nilpotent part e of a mixed element p + e."""

    element: str
    dim: int
    centralizer: str
    characteristic: Optional[Tuple[Tuple[int, int, int, int], str]] = None
    continued: bool = False


MIXED_TABLES: Dict[int, Tuple[MixedRow, ...]] = {
    2: (MixedRow("(3,5)x1+(1,3)x4", 1, "0"),),
    3: (
        MixedRow("(1,4)x1-(1,5)x3", 1, "t1"),
        MixedRow("(3,5)x1+(1,3)x4", 1, "t1"),
        MixedRow("(1,4)x1-(3,5)x1-(1,5)x3-(1,3)x4", 2, "0"),
    ),
    4: (
        MixedRow("(3,5)x1+(1,3)x4", 2, "t1"),
        MixedRow("()x1+(2,3)x1+(1,3,4,5)x1-(3,5)x2+(1,3)x3+(1,5)x4-(3,4)x4-(1,2,3,5)x4", 3, "0", continued=True),
    ),
    5: (
        MixedRow("(1,4)x1", 2, "t3+u1"),
        MixedRow("(1,4)x1-(4,5)x4", 3, "t2+u1"),
        MixedRow("(1,5)x3+(4,5)x4", 3, "t2+u1"),
        MixedRow("()x2-(4,5)x4", 3, "t2+u1"),
        MixedRow("(2,3)x2-(4,5)x4", 4, "t2"),
        MixedRow("(2,3)x2-(1,5)x3", 4, "t2"),
        MixedRow("(1,4)x1+(2,3)x2", 4, "t2"),
        MixedRow("(1,4)x1+()x2-(4,5)x4", 4, "t1+u1"),
        MixedRow("(2,3)x2-(1,5)x3-(4,5)x4", 5, "t1"),
        MixedRow("(1,4)x1+(2,3)x2-(4,5)x4", 5, "t1"),
        MixedRow("(1,4)x1+(2,3)x2-(1,5)x3", 5, "t1"),
        MixedRow("()x2-(4,5)x4+(1,4)x1+(1,2,3,5)x3", 6, "0"),
        MixedRow("(1,4)x1+()x2+(2,3)x2+(2,3,4,5)x4", 6, "0"),
    ),
    6: (
        MixedRow("(2,3)x2+(2,3,4,5)x4", 1, "A1"),
        MixedRow("-(2,5)x1+(3,5)x1-(1,2,4,5)x2+(1,3,4,5)x2", 2, "t1+u1"),
        MixedRow(
            "-(2,4)x1+(3,4)x1-2(1,2,3,5)x1-(1,2)x2+(1,3)x2-2(4,5)x2"
            "-(2,5)x3+(3,5)x3+(1,2,4,5)x4-(1,3,4,5)x4",
            3,
            "t1",
            continued=True,
        ),
        MixedRow("(1,4)x1-(2,5)x1+(3,5)x1-(1,2,4,5)x2+(1,3,4,5)x2-(1,5)x3", 3, "u1"),
        MixedRow(
            "(1,4)x1-(2,4)x1+(3,4)x1-2(1,2,3,5)x1-(1,2)x2+(1,3)x2"
            "-2(4,5)x2-(1,5)x3-(2,5)x3+(3,5)x3+(1,2,4,5)x4-(1,3,4,5)x4",
            4,
            "0",
            continued=True,
        ),
    ),
    7: (
        MixedRow("(3,5)x1+(1,3)x4", 3, "t1+u2"),
        MixedRow("-()x1+(1,3,4,5)x1+(1,3)x3-(1,5)x4", 4, "t1+u1"),
        MixedRow(
            "-()x1-(2,3)x1+(1,3,4,5)x1-(3,5)x2+(1,3)x3-(1,5)x4-(3,4)x4+(1,2,3,5)x4",
            5,
            "u1",
            continued=True,
        ),
        MixedRow("(1,4)x1-(2,3)x1-(3,5)x2-(1,5)x3-(3,4)x4+(1,2,3,5)x4", 6, "0"),
    ),
    8: (
        MixedRow("(1,4)x1", 4, "2A1+t2+u3", ((0, 1, 1, 0), "1/3")),
        MixedRow("(1,4)x1-(4,5)x4", 5, "2A1+t2+u2", ((0, 2, 0, 0), "2/3")),
        MixedRow("(1,2)x1+(1,4)x4-(4,5)x1", 7, "A1+t2+u3", ((1, 1, 1, 0), "1")),
        MixedRow("(1,4)x1+()x2", 7, "t3+u5", ((1, 1, 1, 1), "0")),
        MixedRow("(1,2)x1-(4,5)x4", 8, "A1+t2+u2", ((2, 0, 0, 0), "4/3")),
        MixedRow("(1,4)x1+(2,3)x2", 8, "A1+t2+u2", ((0, 0, 2, 2), "0")),
        MixedRow("(1,4)x1-(4,5)x4+()x2", 8, "t3+u4", ((1, 2, 0, 1), "1/3")),
        MixedRow("(1,2)x1+(1,4)x4+(2,3,4,5)x4-(4,5)x1", 9, "2A1", ((0, 0, 0, 0), "2")),
        MixedRow("(1,4)x1+(1,5)x2-(4,5)x4+()x3", 9, "t3+u3", ((2, 2, 0, 0), "0")),
        MixedRow("(1,4)x1+(2,3)x2-(4,5)x4", 9, "A1+t2+u1", ((0, 2, 0, 4), "2/3")),
        MixedRow("(1,2)x1+(1,4)x4-(4,5)x1+()x2", 9, "t2+u4", ((2, 1, 1, 1), "2/3")),
        MixedRow("(1,2)x1-(4,5)x4+()x2", 10, "t2+u3", ((3, 0, 0, 1), "1")),
        MixedRow("(1,2,3,4)x1+(1,4)x4-(4,5)x1+()x2", 10, "t2+u3", ((0, 2, 2, 2), "2/3")),
        MixedRow("(1,2)x1+(1,4)x4+(1,5)x2-(4,5)x1+()x3", 10, "t2+u3", ((3, 1, 1, 0), "1/3")),
        MixedRow("(1,2)x1+(1,5)x2-(4,5)x4+()x3", 11, "t2+u2", ((4, 0, 0, 0), "2/3")),
        MixedRow("(1,2,3,4)x1+(1,4)x4+(1,5)x2-(4,5)x1+()x3", 11, "t2+u2", ((2, 2, 4, 0), "0")),
        MixedRow("(1,2)x1+(1,4)x4+(1,5)x2+(3,4)x2-(4,5)x1+()x3", 11, "t1+u3", ((2, 2, 2, 2), "0")),
        MixedRow("(1,2)x1+(3,4)x2-(4,5)x4", 11, "t2+u2", ((1, 2, 1, 3), "4/3")),
        MixedRow("(1,2)x1+(1,4)x4+(2,3)x2-(4,5)x1", 11, "t2+u2", ((1, 1, 1, 4), "1")),
        MixedRow("(1,2)x1+(2,3)x2+(3,4)x2-(4,5)x4", 12, "t1+u2", ((2, 0, 0, 4), "4/3")),
        MixedRow("(1,2,3,4)x1+(1,5)x2-(4,5)x4+()x3", 12, "t2+u1", ((2, 6, 4, 0), "4/3")),
        MixedRow("(1,2)x1+(1,4)x4+(1,5)x2+(2,3)x2-(4,5)x1+()x3", 12, "t1+u2", ((3, 1, 1, 4), "1/3")),
        MixedRow("(1,2,3,4)x1+(1,2)x4-(2,5)x1-(4,5)x4+()x2", 12, "t1+u2", ((1, 1, 1, 3), "2")),
        MixedRow("(1,2)x1+(1,5)x2+(3,4)x2-(4,5)x4+()x3", 12, "t1+u2", ((3, 2, 1, 3), "2/3")),
        MixedRow("-(1,2,3,4)x4+(1,2)x1+(2,3,4,5)x1-(4,5)x4+()x2", 13, "t1+u1", ((0, 0, 0, 4), "2")),
        MixedRow("(1,2)x1+(1,5)x2+(2,3)x2+(3,4)x2-(4,5)x4+()x3", 13, "u2", ((4, 0, 0, 4), "2/3")),
        MixedRow("(1,2,3,4)x1+(1,2)x4+(1,5)x2-(2,5)x1-(4,5)x4+()x3", 13, "t1+u1", ((4, 4, 4, 0), "2")),
        MixedRow("(1,2,3,4)x1+(1,4)x4+(1,5)x2+(2,3)x2-(4,5)x1+()x3", 13, "t1+u1", ((2, 2, 4, 4), "0")),
        MixedRow("(1,2,3,4)x1+(1,5)x2+(3,4)x2-(4,5)x4+()x3", 13, "t1+u1", ((1, 7, 4, 1), "1")),
        MixedRow("(1,2)x1-(1,5)x3+(3,4)x2-(4,5)x4", 13, "t1+u1", ((4, 4, 2, 2), "0")),
        MixedRow("(1,2)x1+(1,3,4,5)x3-(1,5)x3+(3,4)x2-(4,5)x4", 14, "u1", ((0, 8, 4, 0), "2/3")),
        MixedRow("(1,2,3,4)x1+(1,2)x4+(1,5)x2-(2,5)x1+(3,4)x2-(4,5)x4+()x3", 14, "u1", ((4, 4, 4, 4), "2")),
        MixedRow("(1,2,3,4)x1+(1,5)x2+(2,3)x2-(4,5)x4+()x3", 14, "t1", ((2, 6, 4, 8), "4/3")),
        MixedRow("(1,2,3,4)x1+(1,2)x4-(1,5)x3-(2,5)x1+(3,4)x2-(4,5)x4", 15, "0", ((8, 8, 8, 4), "2")),
        MixedRow("(1,2,3,4)x1+(1,2)x4+(1,5)x2+(2,3)x2-(2,5)x1-(4,5)x4+()x3", 15, "0", ((4, 4, 4, 8), "2")),
    ),
}

# Vector whose Dynkin scheme is the square over the two A4 diagrams.
SCHEME_EXAMPLE = "()x1+(1,3,4,5)x1+(1,2,3,4)x2+(1,5)x3+(2,3,4,5)x3+(2,3)x4+(4,5)x4+(1,2,4,5)x4"


class TableData:
    """Typed accessors over the transcribed constants."""

    @staticmethod
    def parse_poly(text: str, poly_ring: Any = X_RING) -> Any:
        """
        Convert an expression string into an element of ``poly_ring``.

        Raises:
            ValueError: If the expression uses symbols outside the ring.
        """
        try:
            return poly_ring.from_expr(sympify(text))
        except Exception as exc:  # pylint: disable=broad-exception-caught
            raise ValueError(f"cannot read polynomial '{text}': {exc}") from exc

    @staticmethod
    def table1_row(index: int) -> Table1Row:
        """Row ``index`` (1-based) of the stabilizer classification."""
        if not 1 <= index <= len(TABLE1):
            raise ValueError(f"no stabilizer class {index}, expected 1..{len(TABLE1)}")
        return TABLE1[index - 1]

    @classmethod
    def stratum_polynomials(cls, index: int) -> List[Any]:
        """The listed polynomials of stratum ``index`` as elements of ``X_RING``."""
        if index not in STRATUM_POLYNOMIALS:
            raise ValueError(f"no polynomial list for stratum {index}, expected 1..5")
        return [cls.parse_poly(text) for text in STRATUM_POLYNOMIALS[index]]

    @classmethod
    def quadrics(cls) -> List[Any]:
        return [cls.parse_poly(text) for text in QUADRICS]

    @classmethod
    def quartics(cls) -> List[Any]:
        return [cls.parse_poly(text) for text in QUARTICS]

    @classmethod
    def z_quadrics(cls) -> List[Any]:
        return [cls.parse_poly(text, Z_RING) for text in Z_QUADRICS]

    @classmethod
    def z_quartics(cls) -> List[Any]:
        return [cls.parse_poly(text, Z_RING) for text in Z_QUARTICS]

    @staticmethod
    def mixed_rows(index: int) -> Tuple[MixedRow, ...]:
        """Rows of the mixed-element table attached to stratum ``index`` (2..8)."""
        if index not in MIXED_TABLES:
            raise ValueError(f"no mixed-element table for stratum {index}, expected 2..8")
        return MIXED_TABLES[index]

    @staticmethod
    def expand_word(word: str, names: Sequence[str]) -> List[str]:
        """
        Split a concatenated word such as ``s4s2s3`` into generator names.

        Raises:
            ValueError: If the word uses a name outside ``names``.
        """
        tokens: List[str] = []
        rest = word
        ordered = sorted(names, key=len, reverse=True)
        while rest:
            for name in ordered:
                if rest.startswith(name):
                    tokens.append(name)
                    rest = rest[len(name):]
                    break
            else:
                raise ValueError(f"word '{word}' references an undefined generator near '{rest}'")
        return tokens
