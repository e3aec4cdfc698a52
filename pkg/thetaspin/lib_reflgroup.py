#!/usr/bin/env python3
"""
The little Weyl group W0 acting on the Cartan subspace spanned by p1..p4.

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

Class-based API:
    GroupElement: exact square matrix over Q(i), stored as integer numerators
        over a common denominator so that equality and hashing are structural.
    LittleWeylGroup: enumeration, reflections, the nine stabilizer classes,
        fixed spaces, normalizers, strata, the five-involution presentation
        and the stratum polynomial lists.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from thetaspin.lib_exact_arith import (
    I_UNIT,
    ONE,
    X_GENS,
    X_RING,
    ZERO,
    ConsistencyError,
    EchelonBasis,
    ExactArith,
    GaussRat,
    Vector,
)
from thetaspin.lib_tables import (
    GAMMA_GENERATORS,
    GENERATORS,
    PRESENTATION,
    PRESENTATION_RELATIONS,
    TABLE1,
    W0_ORDER,
    TableData,
)

logger = logging.getLogger(__name__)

Point = Tuple[GaussRat, ...]
IntPoint = List[Tuple[int, int]]
ELEMENT_CAP = 10**6
CARTAN_DIM = 4


class GroupElement:
    """
    Invertible n x n matrix over Q(i).

    ``num`` holds real and imaginary numerators row by row, interleaved, over
    the positive denominator ``den``; the representation is kept in lowest terms.
    """

    __slots__ = ("size", "den", "num", "_hash")

    def __init__(self, size: int, den: int, num: Sequence[int]) -> None:
        if den == 0:
            raise ValueError("zero denominator")
        if len(num) != 2 * size * size:
            raise ValueError(f"expected {2 * size * size} numerators, got {len(num)}")
        values = list(num)
        if den < 0:
            den, values = -den, [-v for v in values]
        common = math.gcd(den, *values)
        if common > 1:
            den, values = den // common, [v // common for v in values]
        self.size = size
        self.den = den
        self.num = tuple(values)
        self._hash = hash((size, den, self.num))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "GroupElement":
        """
        Build an element from nested rows of anything ``ExactArith.to_gauss`` accepts.

        Raises:
            ValueError: If the matrix is not square.
        """
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError("group elements must be square matrices")
        entries = [ExactArith.to_gauss(value) for row in rows for value in row]
        den = 1
        for value in entries:
            den = math.lcm(den, int(value.x.denominator), int(value.y.denominator))
        num: List[int] = []
        for value in entries:
            num.append(int(value.x.numerator) * (den // int(value.x.denominator)))
            num.append(int(value.y.numerator) * (den // int(value.y.denominator)))
        return cls(size, den, num)

    @classmethod
    def identity(cls, size: int = CARTAN_DIM) -> "GroupElement":
        num = [0] * (2 * size * size)
        for i in range(size):
            num[2 * (i * size + i)] = 1
        return cls(size, 1, num)

    @classmethod
    def scalar(cls, value: GaussRat, size: int = CARTAN_DIM) -> "GroupElement":
        return cls.from_rows([[value if i == j else ZERO for j in range(size)] for i in range(size)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.size == other.size and self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        n = self.size
        if other.size != n:
            raise ValueError(f"size mismatch {n} vs {other.size}")
        a, b = self.num, other.num
        out = [0] * (2 * n * n)
        for i in range(n):
            for k in range(n):
                ar, ai = a[2 * (i * n + k)], a[2 * (i * n + k) + 1]
                if not ar and not ai:
                    continue
                for j in range(n):
                    br, bi = b[2 * (k * n + j)], b[2 * (k * n + j) + 1]
                    if br or bi:
                        o = 2 * (i * n + j)
                        out[o] += ar * br - ai * bi
                        out[o + 1] += ar * bi + ai * br
        return GroupElement(n, self.den * other.den, out)

    def __repr__(self) -> str:
        return f"GroupElement({self.rows_text()})"

    def entry(self, i: int, j: int) -> GaussRat:
        o = 2 * (i * self.size + j)
        return ExactArith.gauss((self.num[o], self.den), (self.num[o + 1], self.den))

    def rows(self) -> List[List[GaussRat]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    def rows_text(self) -> str:
        return "[" + ", ".join("[" + ", ".join(ExactArith.format_gauss(v) for v in row) + "]" for row in self.rows()) + "]"

    def matrix(self) -> DomainMatrix:
        return ExactArith.matrix(self.rows())

    def transpose(self) -> "GroupElement":
        n = self.size
        num = [0] * (2 * n * n)
        for i in range(n):
            for j in range(n):
                num[2 * (j * n + i)] = self.num[2 * (i * n + j)]
                num[2 * (j * n + i) + 1] = self.num[2 * (i * n + j) + 1]
        return GroupElement(n, self.den, num)

    def conjugate_transpose(self) -> "GroupElement":
        flipped = self.transpose()
        num = [v if k % 2 == 0 else -v for k, v in enumerate(flipped.num)]
        return GroupElement(self.size, flipped.den, num)

    def inverse(self) -> "GroupElement":
        """Inverse; the conjugate transpose whenever the element is unitary."""
        candidate = self.conjugate_transpose()
        if self * candidate == GroupElement.identity(self.size):
            return candidate
        return GroupElement.from_rows(self.matrix().to_field().inv().to_Matrix().tolist())

    def is_identity(self) -> bool:
        return self == GroupElement.identity(self.size)

    def order(self, cap: int = 1000) -> int:
        """
        Multiplicative order.

        Raises:
            ValueError: If the order exceeds ``cap``.
        """
        power, count = self, 1
        while not power.is_identity():
            power, count = power * self, count + 1
            if count > cap:
                raise ValueError(f"element order exceeds {cap}")
        return count

    def _defect_rows(self) -> List[List[Tuple[int, int]]]:
        """Integer numerators of T - id over ``den``."""
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                re, im = self.num[2 * (i * n + j)], self.num[2 * (i * n + j) + 1]
                row.append((re - self.den if i == j else re, im))
            rows.append(row)
        return rows

    def is_reflection(self) -> bool:
        """True iff rank(T - id) = 1, via vanishing 2x2 minors."""
        rows = self._defect_rows()
        if not any(re or im for row in rows for re, im in row):
            return False
        n = self.size
        for i, k in itertools.combinations(range(n), 2):
            for j, m in itertools.combinations(range(n), 2):
                (ar, ai), (br, bi) = rows[i][j], rows[k][m]
                (cr, ci), (dr, di) = rows[i][m], rows[k][j]
                if ar * br - ai * bi != cr * dr - ci * di or ar * bi + ai * br != cr * di + ci * dr:
                    return False
        return True

    def hyperplane(self) -> Point:
        """Normalized covector n with ker(T - id) = {x : n.x = 0}; T must be a reflection."""
        for row in self._defect_rows():
            if any(re or im for re, im in row):
                return _normalized_point(ExactArith.gauss((re, self.den), (im, self.den)) for re, im in row)
        raise ValueError("identity has no reflection hyperplane")

    def root(self) -> Point:
        """Normalized spanning vector of the image of T - id."""
        rows = self._defect_rows()
        for j in range(self.size):
            column = [rows[i][j] for i in range(self.size)]
            if any(re or im for re, im in column):
                return _normalized_point(ExactArith.gauss((re, self.den), (im, self.den)) for re, im in column)
        raise ValueError("identity has no reflection root")

    def apply(self, point: Sequence[GaussRat]) -> Point:
        """Return T * point."""
        return tuple(
            sum((self.entry(i, j) * point[j] for j in range(self.size) if point[j]), ZERO) for i in range(self.size)
        )

    def fixes(self, point: IntPoint) -> bool:
        """True iff T fixes the point given by integer (re, im) numerators."""
        n = self.size
        for i in range(n):
            sr = si = 0
            for j in range(n):
                ar, ai = self.num[2 * (i * n + j)], self.num[2 * (i * n + j) + 1]
                qr, qi = point[j]
                sr += ar * qr - ai * qi
                si += ar * qi + ai * qr
            if sr != self.den * point[i][0] or si != self.den * point[i][1]:
                return False
        return True


def _normalized_point(values: Iterable[GaussRat]) -> Point:
    vector = list(values)
    lead = next((v for v in vector if v), None)
    if lead is None:
        return tuple(vector)
    inv = ONE / lead
    return tuple(v * inv for v in vector)


def integral_point(point: Sequence[GaussRat]) -> IntPoint:
    """Scale a point by the lcm of its denominators; stabilizers are scale invariant."""
    den = 1
    for value in point:
        den = math.lcm(den, int(value.x.denominator), int(value.y.denominator))
    return [
        (int(v.x.numerator) * (den // int(v.x.denominator)), int(v.y.numerator) * (den // int(v.y.denominator)))
        for v in point
    ]


def point_from_coefficients(coefficients: Sequence[object]) -> Point:
    """Point of c from coefficients on p1..p4."""
    return tuple(ExactArith.to_gauss(c) for c in coefficients)


@dataclass(frozen=True, eq=False)
class Reflection:
    """A reflection with its fixed hyperplane covector and its root line."""

    element: GroupElement
    hyperplane: Point
    root: Point


@dataclass(frozen=True, eq=False)
class ReflectionSubgroup:
    """Finite subgroup of W0 with the generators it was built from."""

    elements: FrozenSet[GroupElement]
    words: Tuple[str, ...] = ()
    generators: Tuple[GroupElement, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self.elements


@dataclass
class Stratum:
    """A row of the stabilizer classification."""

    index: int
    subgroup: ReflectionSubgroup
    fixed_space: List[Vector]
    gamma_order: int


@dataclass
class PresentationCheck:
    """Outcome of checking the five-involution presentation."""

    involutions: bool = False
    relations: Dict[str, bool] = field(default_factory=dict)
    generates: bool = False
    reflections: bool = False
    root_convention: Optional[str] = None

    @property
    def passed(self) -> bool:
        return (
            self.involutions
            and all(self.relations.values())
            and self.generates
            and self.reflections
            and self.root_convention is not None
        )


@dataclass
class StratumPolynomialCheck:
    """Outcome of matching a stratum polynomial list against restricted hyperplanes."""

    index: int
    restricted_lines: int = 0
    factored: List[bool] = field(default_factory=list)
    covered: bool = False
    degree_sum: int = 0
    generic_stabilizer: bool = False

    @property
    def passed(self) -> bool:
        return all(self.factored) and self.covered and self.generic_stabilizer


class LittleWeylGroup:
    """W0 generated by the five printed reflections, with lazily cached enumerations."""

    GENERATOR_NAMES = ("s1", "s2", "s3", "s4", "s5")
    ROOT_CONVENTIONS = ("image", "bilinear", "hermitian")

    def __init__(self) -> None:
        self.named: Dict[str, GroupElement] = {name: GroupElement.from_rows(GENERATORS[name]) for name in self.GENERATOR_NAMES}
        self._elements: Optional[FrozenSet[GroupElement]] = None
        self._reflections: Optional[List[Reflection]] = None
        self._subgroups: Optional[List[ReflectionSubgroup]] = None
        self._ordered: Optional[List[GroupElement]] = None
        self._normalizers: Dict[FrozenSet[GroupElement], List[GroupElement]] = {}

    def generators(self) -> List[GroupElement]:
        """s1..s5 exactly as printed."""
        return [self.named[name] for name in self.GENERATOR_NAMES]

    @staticmethod
    def generate(gens: Sequence[GroupElement], cap: int = ELEMENT_CAP) -> FrozenSet[GroupElement]:
        """
        Closure of ``gens`` under multiplication by breadth-first frontier expansion.

        Raises:
            ValueError: If ``gens`` is empty or the closure exceeds ``cap`` elements.
        """
        if not gens:
            raise ValueError("generate needs at least one generator")
        elements = set(gens)
        frontier = list(elements)
        while frontier:
            logger.debug("closure has %d elements, frontier %d", len(elements), len(frontier))
            fresh = []
            for left in gens:
                for right in frontier:
                    product = left * right
                    if product not in elements:
                        elements.add(product)
                        fresh.append(product)
                        if len(elements) > cap:
                            raise ValueError(f"group closure exceeded {cap} elements")
            frontier = fresh
        return frozenset(elements)

    @property
    def elements(self) -> FrozenSet[GroupElement]:
        """All of W0, enumerated on first use."""
        if self._elements is None:
            logger.info("Enumerating W0 from s1..s5")
            self._elements = self.generate(self.generators())
            logger.info("W0 has %d elements", len(self._elements))
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def ordered_elements(self) -> List[GroupElement]:
        """W0 in a fixed deterministic order."""
        if self._ordered is None:
            self._ordered = self._sorted_elements(self.elements)
        return self._ordered

    def word(self, word: str, named: Optional[Dict[str, GroupElement]] = None) -> GroupElement:
        """
        Product of a word such as ``s4s2s3``, read left to right.

        Raises:
            ValueError: If the word references an undefined generator.
        """
        table = named if named is not None else self.named
        result = GroupElement.identity(CARTAN_DIM)
        for name in TableData.expand_word(word, list(table)):
            result = result * table[name]
        return result

    @staticmethod
    def _sorted_elements(elements: Iterable[GroupElement]) -> List[GroupElement]:
        return sorted(elements, key=lambda g: (g.den, g.num))

    def reflections(self, group: Optional[Iterable[GroupElement]] = None) -> List[Reflection]:
        """Reflections of ``group`` (default W0), in a fixed order."""
        if group is None:
            if self._reflections is None:
                self._reflections = self._collect_reflections(self.elements)
                logger.info("W0 contains %d reflections", len(self._reflections))
            return list(self._reflections)
        return self._collect_reflections(group)

    def _collect_reflections(self, group: Iterable[GroupElement]) -> List[Reflection]:
        found = [Reflection(g, g.hyperplane(), g.root()) for g in self._sorted_elements(group) if g.is_reflection()]
        return found

    def subgroup(self, words: Sequence[str]) -> ReflectionSubgroup:
        """Subgroup generated by words in s1..s5; no words gives the trivial group."""
        gens = tuple(self.word(word) for word in words)
        if not gens:
            return ReflectionSubgroup(frozenset({GroupElement.identity(CARTAN_DIM)}))
        if len(words) == len(self.GENERATOR_NAMES) and list(words) == list(self.GENERATOR_NAMES):
            return ReflectionSubgroup(self.elements, tuple(words), gens)
        return ReflectionSubgroup(self.generate(gens), tuple(words), gens)

    def table1_subgroups(self) -> List[ReflectionSubgroup]:
        """M1..M9 generated by their printed words."""
        if self._subgroups is None:
            self._subgroups = [self.subgroup(row.words) for row in TABLE1]
            logger.info("Stabilizer class orders: %s", [m.order for m in self._subgroups])
        return list(self._subgroups)

    def fixed_space(self, subgroup: ReflectionSubgroup) -> List[Vector]:
        """Basis of the common kernel of T - id over the reflections of the subgroup."""
        rows = [dict(enumerate(r.hyperplane)) for r in self._collect_reflections(subgroup.elements)]
        rows = [{k: v for k, v in row.items() if v} for row in rows]
        if not rows:
            return [{j: ONE} for j in range(CARTAN_DIM)]
        return ExactArith.kernel_basis(ExactArith.from_rows(rows, CARTAN_DIM))

    @staticmethod
    def printed_fixed_space(index: int) -> List[Vector]:
        """The printed basis of c_{M_index} as sparse coefficient vectors."""
        row = TableData.table1_row(index)
        return [{k: ExactArith.to_gauss(c) for k, c in enumerate(vector) if c} for vector in row.fixed_basis]

    @staticmethod
    def same_span(first: Sequence[Vector], second: Sequence[Vector]) -> bool:
        left = EchelonBasis.spanning(first)
        right = EchelonBasis.spanning(second)
        return len(left) == len(right) and all(left.contains(v) for v in second)

    def stabilizer(self, point: Sequence[GaussRat]) -> ReflectionSubgroup:
        """
        Pointwise stabilizer of a point of c.

        Raises:
            ConsistencyError: If the stabilizer is not generated by its reflections.
        """
        target = integral_point(point)
        elements = frozenset(g for g in self.elements if g.fixes(target))
        gens = self.minimal_generators(elements)
        if gens:
            regenerated = self.generate(gens) if len(elements) < W0_ORDER else elements
        else:
            regenerated = frozenset({GroupElement.identity(CARTAN_DIM)})
        if regenerated != elements:
            raise ConsistencyError(f"stabilizer of order {len(elements)} is not generated by its reflections")
        return ReflectionSubgroup(elements, (), tuple(gens))

    def minimal_generators(self, elements: FrozenSet[GroupElement]) -> List[GroupElement]:
        """Reflections of ``elements`` added greedily until they generate all reflections found."""
        if len(elements) == W0_ORDER:
            return self.generators()
        gens: List[GroupElement] = []
        span: FrozenSet[GroupElement] = frozenset({GroupElement.identity(CARTAN_DIM)})
        for reflection in self._collect_reflections(elements):
            if reflection.element not in span:
                gens.append(reflection.element)
                span = self.generate(gens)
        return gens

    @staticmethod
    def conjugates_into(conjugator: GroupElement, gens: Sequence[GroupElement], target: ReflectionSubgroup) -> bool:
        inverse = conjugator.conjugate_transpose()
        return all(conjugator * g * inverse in target for g in gens)

    def normalizer(self, subgroup: ReflectionSubgroup) -> List[GroupElement]:
        """N_{W0}(M) by brute force over W0."""
        key = subgroup.elements
        if key not in self._normalizers:
            if subgroup.order in (1, W0_ORDER):
                found = self.ordered_elements()
            else:
                gens = subgroup.generators or tuple(self.minimal_generators(subgroup.elements))
                found = [w for w in self.ordered_elements() if self.conjugates_into(w, gens, subgroup)]
            logger.debug("normalizer of a subgroup of order %d has order %d", subgroup.order, len(found))
            self._normalizers[key] = found
        return self._normalizers[key]

    def normalizer_quotient_order(self, subgroup: ReflectionSubgroup) -> int:
        """|N_{W0}(M)| / |M|."""
        normalizer = self.normalizer(subgroup)
        if len(normalizer) % subgroup.order:
            raise ConsistencyError("subgroup order does not divide its normalizer order")
        return len(normalizer) // subgroup.order

    def restriction_image(self, index: int) -> FrozenSet[GroupElement]:
        """
        Image of N_{W0}(M_index) acting on the printed basis of c_{M_index}.

        Column j of each matrix holds the coordinates of w(b_j).
        """
        subgroup = self.table1_subgroups()[index - 1]
        basis = self.printed_fixed_space(index)
        size = len(basis)
        if not size:
            return frozenset()
        coords = EchelonBasis.spanning(basis, track=True)
        images = set()
        for w in self.normalizer(subgroup):
            columns = []
            for vector in basis:
                image = w.apply(tuple(vector.get(k, ZERO) for k in range(CARTAN_DIM)))
                column = coords.coordinates({k: v for k, v in enumerate(image) if v})
                if column is None:
                    raise ConsistencyError(f"normalizer of M{index} does not preserve its fixed space")
                columns.append(column)
            images.add(GroupElement.from_rows([[columns[j].get(i, ZERO) for j in range(size)] for i in range(size)]))
        return frozenset(images)

    def printed_gamma(self, index: int) -> FrozenSet[GroupElement]:
        """Group generated by the printed Gamma_index matrices."""
        if index not in GAMMA_GENERATORS:
            raise ValueError(f"no printed generators for Gamma_{index}, expected 2..8")
        return self.generate([GroupElement.from_rows(rows) for rows in GAMMA_GENERATORS[index]])

    def gamma_convention(self, index: int) -> Optional[str]:
        """
        Convention under which the printed Gamma_index equals the restricted normalizer.

        Returns:
            str or None: ``columns``, ``rows`` (transposed) or ``dual``
                (inverse transposed), None if none matches.
        """
        printed = self.printed_gamma(index)
        image = self.restriction_image(index)
        candidates = {
            "columns": image,
            "rows": frozenset(g.transpose() for g in image),
            "dual": frozenset(g.inverse().transpose() for g in image),
        }
        for name, group in candidates.items():
            if group == printed:
                return name
        logger.debug("Gamma_%d: printed order %d, restricted order %d", index, len(printed), len(image))
        return None

    def gamma_matches_printed(self, index: int) -> bool:
        return self.gamma_convention(index) is not None

    def conjugate_subgroups(self, first: ReflectionSubgroup, second: ReflectionSubgroup) -> bool:
        """True iff w first w^-1 = second for some w in W0."""
        if first.order != second.order:
            return False
        gens = first.generators or tuple(self.minimal_generators(first.elements))
        return any(self.conjugates_into(w, gens, second) for w in self.ordered_elements())

    def stratum_of(self, point: Sequence[GaussRat]) -> int:
        """
        Index i with the stabilizer of ``point`` conjugate to M_i.

        Raises:
            ConsistencyError: If no stabilizer class matches.
        """
        stabilizer = self.stabilizer(point)
        for index, subgroup in enumerate(self.table1_subgroups(), start=1):
            if subgroup.order == stabilizer.order and (
                subgroup.order in (1, W0_ORDER) or self.conjugate_subgroups(stabilizer, subgroup)
            ):
                return index
        raise ConsistencyError(f"stabilizer of order {stabilizer.order} matches no stabilizer class")

    @staticmethod
    def combine(basis: Sequence[Vector], coefficients: Sequence[object]) -> Point:
        out: Vector = {}
        for vector, coeff in zip(basis, coefficients):
            ExactArith.axpy(out, ExactArith.to_gauss(coeff), vector)
        return tuple(out.get(k, ZERO) for k in range(CARTAN_DIM))

    def base_point(self, index: int) -> Point:
        """
        A point of the open stratum c°_{M_index} with small positive integer coefficients.

        Strata 1..5 search coefficient tuples by increasing sum until every listed
        polynomial is nonzero; the one-dimensional strata use their basis vector.
        """
        basis = self.printed_fixed_space(index)
        if not basis:
            return (ZERO,) * CARTAN_DIM
        if len(basis) == 1:
            return self.combine(basis, [1])
        polys = TableData.stratum_polynomials(index)
        candidates = sorted(itertools.product(range(1, 9), repeat=len(basis)), key=lambda c: (sum(c), c))
        for coefficients in candidates:
            values = [ExactArith.to_gauss(c) for c in coefficients] + [ZERO] * (CARTAN_DIM - len(coefficients))
            if all(poly.evaluate(list(zip(X_GENS, values))) for poly in polys):
                logger.debug("base point of stratum %d: coefficients %s", index, coefficients)
                return self.combine(basis, coefficients)
        raise ConsistencyError(f"no small integer point found in the open stratum {index}")

    def strata(self) -> List[Stratum]:
        return [
            Stratum(index, subgroup, self.fixed_space(subgroup), self.normalizer_quotient_order(subgroup))
            for index, subgroup in enumerate(self.table1_subgroups(), start=1)
        ]

    def central_scalars(self) -> Dict[str, bool]:
        """Membership of -id and i*id in W0."""
        return {
            "-id": GroupElement.scalar(-ONE) in self.elements,
            "i*id": GroupElement.scalar(I_UNIT) in self.elements,
        }

    @staticmethod
    def _proportional(first: Sequence[GaussRat], second: Sequence[GaussRat]) -> bool:
        return _normalized_point(first) == _normalized_point(second)

    def _root_holds(self, element: GroupElement, printed: Point, convention: str) -> bool:
        if convention == "image":
            return self._proportional(element.root(), printed)
        if convention == "bilinear":
            return self._proportional(element.hyperplane(), printed)
        conjugate = tuple(ExactArith.gauss(v.x, -v.y) for v in printed)
        return self._proportional(element.hyperplane(), conjugate)

    def check_presentation(self) -> PresentationCheck:
        """Check the five printed involutions, their relations, generation and roots."""
        result = PresentationCheck()
        named = {gen.name: self.word(gen.word) for gen in PRESENTATION}
        identity = GroupElement.identity(CARTAN_DIM)
        result.involutions = all(g != identity and g * g == identity for g in named.values())
        for relation in PRESENTATION_RELATIONS:
            products = [self.word(word, named) for word in relation]
            result.relations["=".join(relation)] = all(p == products[0] for p in products)
        result.generates = len(self.generate(list(named.values()))) == self.order
        result.reflections = all(g.is_reflection() for g in named.values())
        if result.reflections:
            printed = {gen.name: point_from_coefficients(gen.root) for gen in PRESENTATION}
            for convention in self.ROOT_CONVENTIONS:
                if all(self._root_holds(named[name], printed[name], convention) for name in named):
                    result.root_convention = convention
                    break
        logger.info("Presentation roots hold under convention %s", result.root_convention)
        return result

    def verify_presentation(self) -> bool:
        return self.check_presentation().passed

    def restricted_lines(self, index: int) -> List[object]:
        """
        Distinct restrictions of reflection hyperplanes to c_{M_index}, as linear forms.

        Hyperplanes containing c_{M_index} restrict to zero and are skipped.
        """
        basis = self.printed_fixed_space(index)
        seen: Dict[Point, object] = {}
        for reflection in self.reflections():
            form = [sum((reflection.hyperplane[k] * vector.get(k, ZERO) for k in range(CARTAN_DIM)), ZERO) for vector in basis]
            if not any(form):
                continue
            key = _normalized_point(form)
            if key not in seen:
                seen[key] = sum((X_GENS[j].mul_ground(c) for j, c in enumerate(key) if c), X_RING.zero)
        return list(seen.values())

    def stratum_polynomial_check(self, index: int) -> StratumPolynomialCheck:
        """
        Match a listed polynomial family against the restricted hyperplanes.

        Every listed polynomial must be a product of restricted hyperplane forms
        times a constant, and every restricted form must divide one of them.
        """
        result = StratumPolynomialCheck(index)
        polys = TableData.stratum_polynomials(index)
        lines = self.restricted_lines(index)
        result.restricted_lines = len(lines)
        for poly in polys:
            rest = poly
            for line in lines:
                while rest:
                    quotient, remainder = divmod(rest, line)
                    if remainder:
                        break
                    rest = quotient
            result.factored.append(bool(rest) and rest.is_ground)
            result.degree_sum += ExactArith.total_degree(poly)
        result.covered = all(any(not divmod(poly, line)[1] for poly in polys) for line in lines)
        subgroup = self.table1_subgroups()[index - 1]
        result.generic_stabilizer = self.stabilizer(self.base_point(index)).elements == subgroup.elements
        return result

    def verify_stratum_polynomials(self, index: int) -> bool:
        """
        True iff the listed polynomials cut out exactly the points with stabilizer M_index.

        Raises:
            ValueError: If ``index`` is outside 1..5.
        """
        return self.stratum_polynomial_check(index).passed
