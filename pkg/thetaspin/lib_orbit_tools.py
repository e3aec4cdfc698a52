#!/usr/bin/env python3
"""
Orbit tools for g1: Jordan parts, centralizers, sl2-triples and characteristics.

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
    OrbitTools(model, dictionary): element tests, centralizers, signatures,
        sl2-triples, characteristics and the mixed-table verification.
    RelativeCartan(tools, base): split torus of z_g0(base) and characteristics
        taken relative to that centralizer.
    CentralizerSignature, Sl2Triple, Characteristic: value types.
"""

from __future__ import annotations

import itertools
import logging
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from thetaspin.lib_e8_graded import E8Model, LieElement, Root
from thetaspin.lib_exact_arith import ONE, T, T_RING, ZERO, ConsistencyError, EchelonBasis, ExactArith, GaussRat, Vector
from thetaspin.lib_reflgroup import LittleWeylGroup, Point
from thetaspin.lib_spinor import EVEN_SUBSETS, LABELS, CliffordModel, SpinorDictionary
from thetaspin.lib_tables import CARTAN_BASIS, MixedRow, TableData

logger = logging.getLogger(__name__)

DEFAULT_SEED = 2024
NEWTON_STEPS = 64
REFLECTION_CAP = 10_000

_EXCEPTIONAL_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}
_TYPE_RE = re.compile(r"^(\d*)([A-G])(\d+)$")
_UNIT: Tuple[Root, ...] = tuple(tuple(1 if j == i else 0 for j in range(8)) for i in range(8))


def type_dimension(name: str) -> int:
    """Dimension of a simple Lie algebra given its type name, e.g. ``A2`` -> 8."""
    if name in _EXCEPTIONAL_DIMS:
        return _EXCEPTIONAL_DIMS[name]
    letter, rank = name[0], int(name[1:])
    if letter == "A":
        return rank * (rank + 2)
    if letter in "BC":
        return rank * (2 * rank + 1)
    if letter == "D":
        return rank * (2 * rank - 1)
    raise ValueError(f"unknown simple type {name!r}")


def simple_type(dim: int, rank: int) -> Optional[str]:
    """Simple type with the given dimension and rank; classical series win ties."""
    if rank <= 0:
        return None
    if dim == rank * (rank + 2):
        return f"A{rank}"
    if rank >= 2 and dim == rank * (2 * rank + 1):
        return f"B{rank}"
    if rank >= 4 and dim == rank * (2 * rank - 1):
        return f"D{rank}"
    for name, size in _EXCEPTIONAL_DIMS.items():
        if size == dim and int(name[1]) == rank:
            return name
    return None


def _real(value: GaussRat) -> Any:
    if value.y:
        raise ConsistencyError(f"expected a real value, got {ExactArith.format_gauss(value)}")
    return value.x


def _as_number(value: GaussRat) -> Any:
    q = _real(value)
    return int(q.numerator) if q.denominator == 1 else q


def rational_eigenvalues(matrix: DomainMatrix) -> List[GaussRat]:
    """
    Eigenvalues with multiplicity of a square matrix whose spectrum is rational.

    Raises:
        ConsistencyError: If the characteristic polynomial has a non-linear factor
            or a non-real root.
    """
    size = matrix.shape[0]
    if size == 0:
        return []
    coeffs = matrix.to_dense().charpoly()
    poly = T_RING.zero
    for k, coeff in enumerate(coeffs):
        poly += (T ** (size - k)).mul_ground(coeff)
    values: List[GaussRat] = []
    for factor, mult in poly.factor_list()[1]:
        if factor.degree() != 1:
            raise ConsistencyError("eigenvalues are not rational")
        root = -factor.get((0,), ZERO) / factor.LC
        _real(root)
        values.extend([root] * mult)
    return sorted(values, key=lambda v: v.x, reverse=True)


@dataclass(frozen=True)
class CentralizerSignature:
    """Simple types of the Levi quotient, toral rank and nilpotent rank of the radical."""

    semisimple_type: Tuple[str, ...] = ()
    toral_dim: int = 0
    nilpotent_dim: int = 0

    @property
    def total_dim(self) -> int:
        return sum(type_dimension(name) for name in self.semisimple_type) + self.toral_dim + self.nilpotent_dim

    @classmethod
    def parse(cls, text: str) -> "CentralizerSignature":
        """
        Parse notation such as ``2A1+t2+u3``, ``A1+T3`` or ``0``.

        ``0`` and ``1`` both denote the zero algebra (``1`` being the trivial group).

        Raises:
            ValueError: On an unknown token.
        """
        compact = text.replace(" ", "")
        if compact in ("", "0", "1"):
            return cls()
        types: List[str] = []
        toral = nilpotent = 0
        for token in compact.split("+"):
            if token[0] in "tT" and token[1:].isdigit():
                toral += int(token[1:])
                continue
            if token[0] in "uU" and token[1:].isdigit():
                nilpotent += int(token[1:])
                continue
            match = _TYPE_RE.match(token)
            if match is None:
                raise ValueError(f"cannot parse centralizer token {token!r} in {text!r}")
            count = int(match.group(1) or 1)
            types.extend([match.group(2) + match.group(3)] * count)
        return cls(tuple(sorted(types)), toral, nilpotent)

    def format(self) -> str:
        parts = []
        for name, count in sorted(Counter(self.semisimple_type).items()):
            parts.append(f"{count}{name}" if count > 1 else name)
        if self.toral_dim:
            parts.append(f"t{self.toral_dim}")
        if self.nilpotent_dim:
            parts.append(f"u{self.nilpotent_dim}")
        return "+".join(parts) or "0"


@dataclass
class Sl2Triple:
    """Homogeneous triple: h in g0, e in g1, f in g3."""

    h: LieElement
    e: LieElement
    f: LieElement

    def defects(self, model: E8Model) -> List[str]:
        """Names of the violated relations."""
        bad = []
        if model.bracket(self.h, self.e) != 2 * self.e:
            bad.append("[h,e]=2e")
        if model.bracket(self.h, self.f) != -2 * self.f:
            bad.append("[h,f]=-2f")
        if model.bracket(self.e, self.f) != self.h:
            bad.append("[e,f]=h")
        return bad


@dataclass(frozen=True)
class Characteristic:
    """Values of the simple roots on a dominant representative, plus centre coordinates."""

    labels: Tuple[Any, ...]
    center: Tuple[Any, ...] = ()

    def format(self) -> str:
        if all(isinstance(v, int) and 0 <= v <= 9 for v in self.labels):
            head = "".join(str(v) for v in self.labels)
        else:
            head = ",".join(ExactArith.format_gauss(ExactArith.to_gauss(v)) for v in self.labels)
        tail = [ExactArith.format_gauss(ExactArith.to_gauss(c)) for c in self.center]
        return "(" + ", ".join([head] + tail) + ")"


@dataclass
class MixedRowResult:
    """Outcome of the checks on one row of a mixed-element table."""

    table: int
    row: int
    element: str
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, str] = field(default_factory=dict)
    continued: bool = False

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass
class MixedTableReport:
    """All rows of one table, with the sign choice on p1..p4 that was used."""

    table: int
    rows: List[MixedRowResult]
    signs: Tuple[int, ...] = (1, 1, 1, 1)
    convention: str = ""
    convention_fit: Tuple[int, int] = (0, 0)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


@dataclass
class CartanSubspaceReport:
    """Checks on c = span(p1..p4) and on the Cartan subalgebra z_g(c)."""

    commuting: bool
    semisimple: List[bool]
    z_g1_dim: int
    z_g1_is_c: bool
    z_g_dim: int
    z_g_abelian: bool
    z_g_semisimple: bool

    @property
    def passed(self) -> bool:
        return (
            self.commuting
            and all(self.semisimple)
            and self.z_g1_is_c
            and self.z_g_dim == 8
            and self.z_g_abelian
            and self.z_g_semisimple
        )


class OrbitTools:
    """
    Element-level computations in the graded E8 model.

    Args:
        model (E8Model): The graded model.
        dictionary (SpinorDictionary): A built dictionary between labels and g1.
        seed (int): Seed for the random combinations used in type recognition.
    """

    def __init__(self, model: E8Model, dictionary: SpinorDictionary, seed: int = DEFAULT_SEED) -> None:
        self.model = model
        self.dictionary = dictionary
        self.seed = seed
        self._g1 = set(model.components[1])
        self._label_pos = {label: n for n, label in enumerate(LABELS)}
        # h with 5^i on h_(i+1): no root vanishes on it
        self._regular = LieElement({model.CARTAN_OFFSET + i: ExactArith.to_gauss(5**i) for i in range(model.RANK)})
        self._relative: Dict[Tuple[Tuple[int, GaussRat], ...], RelativeCartan] = {}

    # -- helpers ---------------------------------------------------------------

    def component_basis(self, k: int) -> List[LieElement]:
        """Basis elements of g_k."""
        return [self.model.basis(i) for i in self.model.components[k % 4]]

    def root_value(self, root: Sequence[int], cartan: Mapping[int, GaussRat]) -> GaussRat:
        """Value of a root on the Cartan element sum c_i h_(i+1), given as {i: c_i}."""
        total = ZERO
        for i, coeff in cartan.items():
            total += coeff * self.model.pairing(root, _UNIT[i])
        return total

    def cartan_coords(self, h: LieElement) -> Dict[int, GaussRat]:
        """
        Coordinates of a Cartan element on h_1..h_8 (keys 0..7).

        Raises:
            ValueError: If h has root-vector components.
        """
        offset = self.model.CARTAN_OFFSET
        if any(not self.model.is_cartan(i) for i in h.coords):
            raise ValueError("element is not in the standard Cartan subalgebra")
        return {i - offset: v for i, v in h.coords.items()}

    def _rng(self, salt: int) -> random.Random:
        return random.Random(self.seed * 1000 + salt)

    # -- semisimple and nilpotent ----------------------------------------------------

    def ad_min_poly(self, x: LieElement) -> Any:
        """Minimal polynomial of ad x on all of E8."""
        return ExactArith.min_poly_of_columns(self.model.ad_columns(x, range(self.model.DIM)))

    def is_semisimple(self, x: LieElement) -> bool:
        """True iff the minimal polynomial of ad x is squarefree."""
        if not x:
            return True
        return ExactArith.squarefree(self.ad_min_poly(x))

    def is_nilpotent(self, x: LieElement) -> bool:
        """
        True iff the minimal polynomial of ad x is a power of t.

        The Krylov chains behind the minimal polynomial apply ad x to basis
        vectors, and each chain has length at most 248.
        """
        if not x:
            return True
        poly = self.ad_min_poly(x)
        return len(poly) == 1 and poly.LC == ONE

    # -- Jordan decomposition ----------------------------------------------------------

    @staticmethod
    def _compose_mod(poly: Any, inner: Any, modulus: Any) -> Any:
        """poly(inner) mod modulus by Horner's rule."""
        acc = T_RING.zero
        for k in range(poly.degree(), -1, -1):
            acc = acc * inner
            coeff = poly.get((k,))
            if coeff:
                acc += coeff
            acc = acc.rem(modulus)
        return acc

    @staticmethod
    def _inverse_mod(poly: Any, modulus: Any) -> Any:
        """Inverse of poly modulo modulus by the extended Euclidean algorithm."""
        r0, r1 = modulus, poly.rem(modulus)
        s0, s1 = T_RING.zero, T_RING.one
        while r1:
            quotient, remainder = divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, s0 - quotient * s1
        if not r0.is_ground:
            raise ConsistencyError("polynomial is not invertible modulo the minimal polynomial")
        return s0.mul_ground(ONE / r0.LC).rem(modulus)

    def semisimple_polynomial(self, min_poly: Any) -> Any:
        """
        Polynomial s(t) with s(A) the semisimple part of any A with minimal polynomial ``min_poly``.

        Newton iteration on the squarefree part g: s <- s - g(s)/g'(s) mod min_poly.
        """
        squarefree = min_poly.exquo(min_poly.gcd(min_poly.diff(T)))
        derivative = squarefree.diff(T)
        s = T.rem(min_poly)
        for _ in range(NEWTON_STEPS):
            value = self._compose_mod(squarefree, s, min_poly)
            if not value:
                return s
            s = (s - value * self._inverse_mod(self._compose_mod(derivative, s, min_poly), min_poly)).rem(min_poly)
        raise ConsistencyError("Newton iteration for the semisimple part did not converge")

    @staticmethod
    def _apply_poly(columns: Sequence[Vector], poly: Any, vector: Vector) -> Vector:
        out: Vector = {}
        for k in range(poly.degree(), -1, -1):
            out = ExactArith.matvec(columns, out)
            coeff = poly.get((k,))
            if coeff:
                ExactArith.axpy(out, coeff, vector)
        return out

    def jordan_g1(self, x: LieElement) -> Tuple[LieElement, LieElement]:
        """
        Jordan decomposition x = s + n of an element of g1.

        The semisimple part of ad x is a polynomial in ad x. It is applied to a
        regular Cartan element, and since every root is nonzero on that element
        the g1 coordinates of s can be read off one by one.

        Returns:
            tuple: (s, n), both in g1, s semisimple, n nilpotent, [s, n] = 0.

        Raises:
            ValueError: If x is not in g1.
            ConsistencyError: If the result fails the commuting check.
        """
        if any(i not in self._g1 for i in x.coords):
            raise ValueError("jordan_g1 expects an element of g1")
        if not x:
            return LieElement(), LieElement()
        columns = self.model.ad_columns(x, range(self.model.DIM))
        poly = self.semisimple_polynomial(ExactArith.min_poly_of_columns(columns))
        if poly == T:
            return x, LieElement()
        if not poly:
            return LieElement(), x
        image = self._apply_poly(columns, poly, self._regular.coords)
        regular = self.cartan_coords(self._regular)
        coords: Vector = {}
        for idx, value in image.items():
            root = self.model.roots[idx]
            if idx not in self._g1 or root is None:
                raise ConsistencyError(f"semisimple part leaves g1 at {self.model.label(idx)}")
            # [E_b, h] = -b(h) E_b
            coords[idx] = -value / self.root_value(root, regular)
        s = LieElement(coords)
        n = x - s
        if self.model.bracket(s, n):
            raise ConsistencyError("Jordan parts do not commute")
        return s, n

    def random_g1_element(self, rng: random.Random) -> LieElement:
        """Small integer combination of p1..p4 plus one or two g1 basis vectors."""
        terms: List[Tuple[Any, LieElement]] = [(rng.randint(-2, 2), p) for p in self.cartan_elements()]
        for idx in rng.sample(self.model.components[1], rng.randint(1, 2)):
            terms.append((rng.choice((-2, -1, 1, 2)), self.model.basis(idx)))
        return LieElement.combination(terms)

    def jordan_round_trip(self, samples: int = 200) -> List[str]:
        """
        Decompose seeded random elements of g1 and check x = s + n with [s, n] = 0,
        s semisimple and n nilpotent.

        Returns:
            list: One message per failing sample, empty when all pass.
        """
        rng = self._rng(13)
        failures: List[str] = []
        for number in range(samples):
            x = self.random_g1_element(rng)
            try:
                s, n = self.jordan_g1(x)
            except ConsistencyError as exc:
                failures.append(f"sample {number}: {exc}")
                continue
            if s + n != x or self.model.bracket(s, n):
                failures.append(f"sample {number}: parts do not recombine or commute")
            elif any(i not in self._g1 for i in s.coords) or any(i not in self._g1 for i in n.coords):
                failures.append(f"sample {number}: a part leaves g1")
            elif not self.is_semisimple(s) or not self.is_nilpotent(n):
                failures.append(f"sample {number}: s is not semisimple or n is not nilpotent")
        logger.info("Jordan round trip: %d/%d samples pass", samples - len(failures), samples)
        return failures

    # -- centralizers ----------------------------------------------------------------------

    def common_centralizer(self, xs: Sequence[LieElement], basis: Sequence[LieElement]) -> List[LieElement]:
        """Basis of {y in span(basis) : [x, y] = 0 for every x in xs}."""
        if not basis:
            return []
        dim = self.model.DIM
        columns: List[Vector] = []
        for b in basis:
            column: Vector = {}
            for k, x in enumerate(xs):
                for idx, value in self.model.bracket(x, b).coords.items():
                    column[k * dim + idx] = value
            columns.append(column)
        kernel = ExactArith.kernel_basis(ExactArith.from_columns(columns, max(1, len(xs)) * dim))
        return [LieElement.combination((c, basis[j]) for j, c in vector.items()) for vector in kernel]

    def centralizer_in(self, x: LieElement, domain: Sequence[int]) -> List[LieElement]:
        """Kernel of ad x on the span of the given basis indices."""
        return self.common_centralizer([x], [self.model.basis(i) for i in domain])

    def eigenspace(self, h: LieElement, value: Any, basis: Sequence[LieElement]) -> List[LieElement]:
        """Basis of {y in span(basis) : [h, y] = value * y}."""
        scalar = ExactArith.to_gauss(value)
        columns = [(self.model.bracket(h, b) - LieElement(ExactArith.scale(b.coords, scalar))).coords for b in basis]
        if not columns:
            return []
        kernel = ExactArith.kernel_basis(ExactArith.from_columns(columns, self.model.DIM))
        return [LieElement.combination((c, basis[j]) for j, c in vector.items()) for vector in kernel]

    # -- centralizer signatures --------------------------------------------------------------

    @staticmethod
    def _independent(basis: Sequence[LieElement]) -> List[LieElement]:
        seen = EchelonBasis()
        return [b for b in basis if seen.add(b.coords)]

    @staticmethod
    def _trace_product(first: Sequence[Vector], second: Mapping[int, Vector]) -> GaussRat:
        """trace(A B) for A given by columns and B by a column lookup."""
        total = ZERO
        for j, column in enumerate(first):
            for i, value in column.items():
                other = second[i].get(j)
                if other:
                    total += value * other
        return total

    @staticmethod
    def _intersection(first: Sequence[Vector], second: Sequence[Vector], size: int) -> List[Vector]:
        if not first or not second:
            return []
        columns = list(first) + [ExactArith.scale(v, -ONE) for v in second]
        kernel = ExactArith.kernel_basis(ExactArith.from_columns(columns, size))
        out: List[Vector] = []
        for vector in kernel:
            combo: Vector = {}
            for j, c in vector.items():
                if j < len(first):
                    ExactArith.axpy(combo, c, first[j])
            if combo:
                out.append(combo)
        return out

    def signature(self, basis: Sequence[LieElement]) -> CentralizerSignature:
        """
        Structure of a subalgebra of g0 given by a spanning set.

        The radical is the orthogonal complement of the derived algebra under the
        subalgebra's own Killing form. Its nilpotent part is the kernel of the E8
        trace form restricted to radical x subalgebra, and the rest is toral.

        Raises:
            ValueError: If the span is not closed under the bracket or leaves g0.
        """
        elements = self._independent(basis)
        n = len(elements)
        if not n:
            return CentralizerSignature()
        if any(self.model.degree(b) != 0 for b in elements):
            raise ValueError("signature expects a subalgebra of g0")
        space = EchelonBasis.spanning((b.coords for b in elements), track=True)
        ad: List[List[Vector]] = []
        for a in range(n):
            columns: List[Vector] = []
            for b in range(n):
                coords = space.coordinates(self.model.bracket(elements[a], elements[b]).coords)
                if coords is None:
                    raise ValueError("basis does not span a subalgebra")
                columns.append(coords)
            ad.append(columns)
        derived = EchelonBasis.spanning(ad[a][b] for a in range(n) for b in range(a + 1, n)).basis()

        kappa = [[ZERO] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                kappa[a][b] = kappa[b][a] = self._trace_product(ad[a], dict(enumerate(ad[b])))
        rows = [{a: sum((d[b] * kappa[a][b] for b in d), ZERO) for a in range(n)} for d in derived]
        rows = [{k: v for k, v in row.items() if v} for row in rows]
        radical = ExactArith.kernel_basis(ExactArith.from_rows(rows, n)) if rows else [{a: ONE} for a in range(n)]

        gram = [[self.model.killing(elements[a], elements[c]) for c in range(n)] for a in range(n)]
        nilpotent = 0
        if radical:
            killing_rows = [
                {r: sum((vec[a] * gram[a][c] for a in vec), ZERO) for r, vec in enumerate(radical)} for c in range(n)
            ]
            killing_rows = [{k: v for k, v in row.items() if v} for row in killing_rows]
            nilpotent = len(ExactArith.kernel_basis(ExactArith.from_rows(killing_rows, len(radical))))
        toral = len(radical) - nilpotent
        types: Tuple[str, ...] = ()
        if n > len(radical):
            types = self._levi_types(elements, ad, derived, radical, n - len(radical))
        result = CentralizerSignature(tuple(sorted(types)), toral, nilpotent)
        logger.debug("signature of a %d-dimensional subalgebra: %s", n, result.format())
        return result

    def _levi_types(
        self,
        elements: Sequence[LieElement],
        ad: Sequence[Sequence[Vector]],
        derived: Sequence[Vector],
        radical: Sequence[Vector],
        levi_dim: int,
    ) -> Tuple[str, ...]:
        """
        Simple types of the semisimple quotient [z,z] / ([z,z] cap rad z).

        Trace forms on g1, g2 and g3 descend to the quotient. The operator relating
        a random combination of them to the E8 Killing form acts on each simple
        ideal by a scalar, so its eigenspaces are sums of simple ideals.
        """
        n = len(elements)
        tracker = EchelonBasis(track=True)
        for vector in self._intersection(radical, derived, n):
            tracker.add(vector)
        reps: List[Vector] = []
        slot: Dict[int, int] = {}
        for vector in derived:
            index = tracker.added
            if tracker.add(vector):
                slot[index] = len(reps)
                reps.append(vector)
        if len(reps) != levi_dim:
            raise ConsistencyError(f"Levi quotient has dimension {len(reps)}, expected {levi_dim}")

        def lbracket(u: Vector, v: Vector) -> Vector:
            out: Vector = {}
            for a, ua in u.items():
                for b, vb in v.items():
                    ExactArith.axpy(out, ua * vb, ad[a][b])
            return out

        def quotient(v: Vector) -> Vector:
            combo = tracker.coordinates(v)
            if combo is None:
                raise ConsistencyError("bracket left the derived algebra")
            return {slot[k]: c for k, c in combo.items() if k in slot and c}

        def lift(q: Vector) -> Vector:
            out: Vector = {}
            for a, c in q.items():
                ExactArith.axpy(out, c, reps[a])
            return out

        lie_reps = [LieElement.combination((c, elements[a]) for a, c in rep.items()) for rep in reps]
        s = len(reps)
        rng = self._rng(s)
        weights = [rng.randint(1, 97) for _ in range(3)]
        base = [[self.model.killing(lie_reps[a], lie_reps[b]) for b in range(s)] for a in range(s)]
        mixed = [[ZERO] * s for _ in range(s)]
        for weight, k in zip(weights, (1, 2, 3)):
            comp = self.model.components[k]
            position = {idx: j for j, idx in enumerate(comp)}
            local: List[List[Vector]] = []
            for rep in lie_reps:
                local.append([{position[i]: v for i, v in col.items()} for col in self.model.ad_columns(rep, comp)])
            for a in range(s):
                for b in range(a, s):
                    value = self._trace_product(local[a], dict(enumerate(local[b]))) * weight
                    mixed[a][b] += value
                    if a != b:
                        mixed[b][a] += value
        base_m = ExactArith.matrix(base).to_dense()
        operator = base_m.inv() * ExactArith.matrix(mixed).to_dense()
        columns = ExactArith.columns_of(operator)
        values = sorted(set(rational_eigenvalues(operator)), key=lambda v: v.x)
        types: List[str] = []
        covered = 0
        for value in values:
            shifted = [dict(col) for col in columns]
            for j, col in enumerate(shifted):
                col[j] = col.get(j, ZERO) - value
                if not col[j]:
                    del col[j]
            ideal = ExactArith.kernel_basis(ExactArith.from_columns(shifted, s))
            covered += len(ideal)
            x = {}
            for vector in ideal:
                ExactArith.axpy(x, ExactArith.to_gauss(rng.randint(1, 50)), vector)
            images = EchelonBasis.spanning(quotient(lbracket(lift(x), lift(v))) for v in ideal)
            types.extend(self._recognize(len(ideal), len(ideal) - len(images)))
        if covered != s:
            raise ConsistencyError("trace-form operator is not diagonalizable on the Levi quotient")
        return tuple(types)

    @staticmethod
    def _recognize(dim: int, rank: int) -> List[str]:
        name = simple_type(dim, rank)
        if name is not None:
            return [name]
        for copies in range(2, rank + 1):
            if dim % copies == 0 and rank % copies == 0:
                name = simple_type(dim // copies, rank // copies)
                if name is not None:
                    return [name] * copies
        raise ConsistencyError(f"unrecognised semisimple ideal of dimension {dim} and rank {rank}")

    # -- sl2-triples -------------------------------------------------------------------------

    def sl2_complete(self, e: LieElement, within: Optional[LieElement] = None) -> Sl2Triple:
        """
        Homogeneous sl2-triple through a nilpotent e in g1.

        With ``within`` set, h and f are taken in the centralizer of that element.

        Raises:
            ValueError: If e is zero, not in g1, or has no such triple.
            ConsistencyError: If the solved triple fails a relation.
        """
        if not e or any(i not in self._g1 for i in e.coords):
            raise ValueError("sl2_complete expects a nonzero element of g1")
        g3 = self.component_basis(3)
        if within is not None and within:
            g3 = self.common_centralizer([within], g3)
        dim = self.model.DIM
        columns = [self.model.bracket(self.model.bracket(e, b), e).coords for b in g3]
        solution = ExactArith.solve_particular(ExactArith.from_columns(columns, dim), ExactArith.scale(e.coords, 2 * ONE))
        if solution is None:
            raise ValueError("no homogeneous sl2-triple through e (is e nilpotent?)")
        h = self.model.bracket(e, LieElement.combination((c, g3[j]) for j, c in solution.items()))
        columns = []
        for b in g3:
            column = dict(self.model.bracket(e, b).coords)
            for idx, value in (self.model.bracket(h, b) + 2 * b).coords.items():
                column[dim + idx] = value
            columns.append(column)
        solution = ExactArith.solve_particular(ExactArith.from_columns(columns, 2 * dim), h.coords)
        if solution is None:
            raise ConsistencyError("no f completing the triple")
        triple = Sl2Triple(h, e, LieElement.combination((c, g3[j]) for j, c in solution.items()))
        bad = triple.defects(self.model)
        if bad:
            raise ConsistencyError(f"sl2-triple relations fail: {', '.join(bad)}")
        return triple

    # -- characteristics -------------------------------------------------------------------

    def dominant_by_reflections(self, cartan: Mapping[int, GaussRat]) -> Characteristic:
        """
        Reflect a Cartan element by the simple reflections of g0 until every
        g0 simple root is nonnegative on it.
        """
        simple = self.dictionary.g0_simple_roots
        coords = [cartan.get(i, ZERO) for i in range(self.model.RANK)]
        for _ in range(REFLECTION_CAP):
            current = dict(enumerate(coords))
            values = [self.root_value(beta, current) for beta in simple]
            negative = next((k for k, v in enumerate(values) if _real(v) < 0), None)
            if negative is None:
                return Characteristic(tuple(_as_number(v) for v in values))
            beta, value = simple[negative], values[negative]
            coords = [c - value * b for c, b in zip(coords, beta)]
        raise ConsistencyError("simple reflections did not reach the dominant chamber")

    def _g1_label_columns(self, h: LieElement) -> List[Vector]:
        columns: List[Vector] = []
        for label in LABELS:
            image = self.dictionary.from_lie(self.model.bracket(h, self.dictionary.label_to_element[label]))
            columns.append({self._label_pos[lab]: v for lab, v in image.coords.items()})
        return columns

    @staticmethod
    def _sl4_basis() -> List[Dict[Tuple[int, int], GaussRat]]:
        basis = [{(k, l): ONE} for k in range(1, 5) for l in range(1, 5) if k != l]
        basis += [{(k, k): ONE, (k + 1, k + 1): -ONE} for k in range(1, 4)]
        return basis

    def _split_g0_action(self, columns: Sequence[Vector]) -> Tuple[Dict[Tuple[int, int], GaussRat], Dict[Tuple[int, int], GaussRat]]:
        """Write an operator on Delta+ (x) C^4 as rho(A) (x) 1 + 1 (x) X."""
        size = len(LABELS)
        o10, sl4 = CliffordModel.o10_basis(), self._sl4_basis()
        unknowns: List[Vector] = []
        for matrix in o10:
            images = CliffordModel.rho(matrix)
            column: Vector = {}
            for m, (subset, j) in enumerate(LABELS):
                for target, value in images[subset].items():
                    column[self._label_pos[(target, j)] * size + m] = value
            unknowns.append(column)
        for matrix in sl4:
            column = {}
            for m, (subset, j) in enumerate(LABELS):
                for (row, col), value in matrix.items():
                    if col == j:
                        column[self._label_pos[(subset, row)] * size + m] = value
            unknowns.append(column)
        rhs: Vector = {}
        for m, column in enumerate(columns):
            for r, value in column.items():
                rhs[r * size + m] = value
        solution = ExactArith.solve_particular(ExactArith.from_columns(unknowns, size * size), rhs)
        if solution is None:
            raise ConsistencyError("operator is not in the image of o(10) + sl(4)")
        a_part: Dict[Tuple[int, int], GaussRat] = {}
        x_part: Dict[Tuple[int, int], GaussRat] = {}
        for j, coeff in solution.items():
            target, source = (a_part, o10[j]) if j < len(o10) else (x_part, sl4[j - len(o10)])
            ExactArith.axpy(target, coeff, source)
        return a_part, x_part

    @staticmethod
    def _square(entries: Mapping[Tuple[int, int], GaussRat], size: int) -> DomainMatrix:
        rows: List[Vector] = [{} for _ in range(size)]
        for (i, j), value in entries.items():
            rows[i - 1][j - 1] = value
        return ExactArith.from_rows(rows, size)

    @staticmethod
    def _spin_charpoly(images: Mapping[Tuple[int, ...], Mapping[Tuple[int, ...], GaussRat]]) -> List[GaussRat]:
        position = {s: n for n, s in enumerate(EVEN_SUBSETS)}
        rows: List[Vector] = [{} for _ in EVEN_SUBSETS]
        for subset in EVEN_SUBSETS:
            for target, value in images[subset].items():
                rows[position[target]][position[subset]] = value
        return list(ExactArith.from_rows(rows, len(EVEN_SUBSETS)).to_dense().charpoly())

    def characteristic(self, h: LieElement) -> Characteristic:
        """
        Dominant characteristic of a semisimple h in g0, in the g0 node order.

        The action of h on g1 is written as rho(A) (x) 1 + 1 (x) X with A in o(10)
        and X in sl(4). Their eigenvalues give a diagonal conjugate, which maps to
        the standard Cartan subalgebra through the node coroots; simple
        reflections then make it dominant. The sign of the last o(10) eigenvalue
        is fixed by the half-spin spectrum.

        Raises:
            ValueError: If h is not a semisimple element of g0.
        """
        if not h:
            return Characteristic((0,) * self.model.RANK)
        if self.model.degree(h) != 0:
            raise ValueError("characteristic expects an element of g0")
        columns = self._g1_label_columns(h)
        if not ExactArith.squarefree(ExactArith.min_poly_of_columns(columns)):
            raise ValueError("h is not semisimple")
        a_part, x_part = self._split_g0_action(columns)

        spectrum = rational_eigenvalues(self._square(a_part, 10))
        lam = spectrum[:5]
        target = self._spin_charpoly(CliffordModel.rho(a_part))
        diagonal: Optional[Dict[Tuple[int, int], GaussRat]] = None
        for flip in (ONE, -ONE):
            values = lam[:4] + [lam[4] * flip]
            candidate = {(a + 1, a + 1): v for a, v in enumerate(values) if v}
            candidate.update({(10 - a, 10 - a): -v for a, v in enumerate(values) if v})
            if self._spin_charpoly(CliffordModel.rho(candidate)) == target:
                diagonal = candidate
                break
        if diagonal is None:
            raise ConsistencyError("no diagonal o(10) element matches the half-spin spectrum")

        coroots = [CliffordModel.commutator(CliffordModel.d5_raising(k), CliffordModel.d5_lowering(k)) for k in range(1, 6)]
        flat = [{(i - 1) * 10 + j - 1: v for (i, j), v in c.items()} for c in coroots]
        rhs = {(i - 1) * 10 + j - 1: v for (i, j), v in diagonal.items()}
        d5 = ExactArith.solve_particular(ExactArith.from_columns(flat, 100), rhs)
        if d5 is None:
            raise ConsistencyError("diagonal element is not in the span of the D5 coroots")
        nu = rational_eigenvalues(self._square(x_part, 4))
        partial = [nu[0], nu[0] + nu[1], nu[0] + nu[1] + nu[2]]
        weights = [d5.get(k, ZERO) for k in range(5)] + partial
        cartan: Dict[int, GaussRat] = {}
        for weight, root in zip(weights, self.dictionary.g0_simple_roots):
            for i, c in enumerate(root):
                if c:
                    cartan[i] = cartan.get(i, ZERO) + weight * c
        return self.dominant_by_reflections(cartan)

    def relative_setting(self, base: LieElement) -> "RelativeCartan":
        """Cached split torus and root data of z_g0(base)."""
        key = tuple(sorted(base.coords.items()))
        if key not in self._relative:
            self._relative[key] = RelativeCartan(self, base)
        return self._relative[key]

    # -- orbit dimension and openness ----------------------------------------------------------

    def orbit_dim_in_centralizer(self, p: LieElement, e: LieElement) -> int:
        """
        dim [z_g0(p), e].

        Raises:
            ValueError: If [p, e] != 0.
        """
        if self.model.bracket(p, e):
            raise ValueError("orbit dimension needs [p, e] = 0")
        z = self.centralizer_in(p, self.model.components[0])
        return len(EchelonBasis.spanning(self.model.bracket(a, e).coords for a in z))

    def open_orbit_check(self, e: LieElement, h: LieElement, within: Optional[LieElement] = None) -> bool:
        """
        True iff [z_g0(h), e] equals M_h = {x in g1 : [h, x] = 2x}.

        With ``within`` set, both sides are intersected with the centralizer of that element.
        """
        g0, g1 = self.component_basis(0), self.component_basis(1)
        if within is not None and within:
            g0 = self.common_centralizer([within], g0)
            g1 = self.common_centralizer([within], g1)
        z_h = self.common_centralizer([h], g0)
        image = EchelonBasis.spanning(self.model.bracket(a, e).coords for a in z_h)
        eigen = EchelonBasis.spanning(v.coords for v in self.eigenspace(h, 2, g1))
        return len(image) == len(eigen) and all(eigen.contains(row) for row in image.basis())

    # -- the Cartan subspace --------------------------------------------------------------------

    def cartan_elements(self, signs: Sequence[int] = (1, 1, 1, 1)) -> List[LieElement]:
        """p1..p4 in g1, each multiplied by the given sign."""
        return [sign * self.dictionary.parse(text) for sign, text in zip(signs, CARTAN_BASIS)]

    def point_element(self, point: Point, signs: Sequence[int] = (1, 1, 1, 1)) -> LieElement:
        """The element sum x_k p_k of g1 for a point of c."""
        return LieElement.combination(zip(point, self.cartan_elements(signs)))

    def cartan_subspace_report(self) -> CartanSubspaceReport:
        ps = self.cartan_elements()
        commuting = all(not self.model.bracket(a, b) for a, b in itertools.combinations(ps, 2))
        semisimple = [self.is_semisimple(p) for p in ps]
        z_g1 = self.common_centralizer(ps, self.component_basis(1))
        span = EchelonBasis.spanning(p.coords for p in ps)
        z_g = self.common_centralizer(ps, [self.model.basis(i) for i in range(self.model.DIM)])
        abelian = all(not self.model.bracket(a, b) for a, b in itertools.combinations(z_g, 2))
        report = CartanSubspaceReport(
            commuting=commuting,
            semisimple=semisimple,
            z_g1_dim=len(z_g1),
            z_g1_is_c=len(z_g1) == len(span) and all(span.contains(z.coords) for z in z_g1),
            z_g_dim=len(z_g),
            z_g_abelian=abelian,
            z_g_semisimple=all(self.is_semisimple(z) for z in z_g),
        )
        logger.info("Cartan subspace: z_g1(c) dim %d, z_g(c) dim %d", report.z_g1_dim, report.z_g_dim)
        return report

    def identity_component_checks(
        self, group: LittleWeylGroup
    ) -> List[Tuple[int, CentralizerSignature, CentralizerSignature]]:
        """(index, computed, printed) signatures of z_g0(p) for a point of each stratum."""
        out = []
        for index in range(1, 10):
            p = self.point_element(group.base_point(index))
            computed = self.signature(self.centralizer_in(p, self.model.components[0]))
            printed = CentralizerSignature.parse(TableData.table1_row(index).identity_component)
            out.append((index, computed, printed))
        return out

    # -- mixed tables ------------------------------------------------------------------------------

    def _check_rows(
        self, index: int, rows: Sequence[MixedRow], p: LieElement
    ) -> Tuple[List[MixedRowResult], List[Optional[Sl2Triple]]]:
        g0 = self.model.components[0]
        z_p = len(self.centralizer_in(p, g0))
        results: List[MixedRowResult] = []
        triples: List[Optional[Sl2Triple]] = []
        for number, row in enumerate(rows, start=1):
            result = MixedRowResult(index, number, row.element, continued=row.continued)
            e = self.dictionary.parse(row.element)
            commutes = not self.model.bracket(p, e)
            result.checks["commutes"] = commutes
            result.checks["nilpotent"] = self.is_nilpotent(e)
            dim = self.orbit_dim_in_centralizer(p, e) if commutes else -1
            result.checks["dim"] = dim == row.dim
            result.details["dim"] = f"{dim} (printed {row.dim})"
            z = self.centralizer_in(p + e, g0)
            computed = self.signature(z)
            result.checks["centralizer"] = computed == CentralizerSignature.parse(row.centralizer)
            result.details["centralizer"] = f"{computed.format()} (printed {row.centralizer})"
            result.checks["dim_balance"] = z_p == row.dim + len(z)
            result.details["dim_balance"] = f"{z_p} = {row.dim} + {len(z)}"
            triple: Optional[Sl2Triple] = None
            if commutes and result.checks["nilpotent"]:
                try:
                    triple = self.sl2_complete(e, within=p)
                    result.checks["open_orbit"] = self.open_orbit_check(e, triple.h, within=p)
                except (ValueError, ConsistencyError) as exc:
                    result.checks["open_orbit"] = False
                    result.details["open_orbit"] = str(exc)
            triples.append(triple)
            if row.continued:
                result.details["continued"] = "entry spans two printed lines, joined"
            logger.debug("table %d row %d: %s", index, number, result.checks)
            results.append(result)
        return results, triples

    def _characteristic_rows(
        self, p: LieElement, rows: Sequence[MixedRow], results: Sequence[MixedRowResult], triples: Sequence[Optional[Sl2Triple]]
    ) -> Tuple[str, int, int]:
        """
        Compare relative characteristics under one convention found across the whole table.

        Returns:
            tuple: (convention, rows matching under it, rows with a printed characteristic)
        """
        setting = self.relative_setting(p)
        raw: List[Optional[Characteristic]] = []
        for result, triple in zip(results, triples):
            value: Optional[Characteristic] = None
            if triple is not None:
                try:
                    value = setting.characteristic(triple.h)
                except (ValueError, ConsistencyError) as exc:
                    result.details["characteristic"] = str(exc)
            raw.append(value)
        printed = [row.characteristic for row in rows]
        size = len(setting.simple)
        best: Tuple[int, Tuple[int, ...], Any] = (-1, tuple(range(size)), None)
        for perm in itertools.permutations(range(size)):
            ratios: Counter = Counter()
            for value, want in zip(raw, printed):
                if value is None or want is None or tuple(value.labels[k] for k in perm) != want[0]:
                    continue
                centre = ExactArith.parse_gauss(want[1])
                if value.center and value.center[0]:
                    ratios[centre / ExactArith.to_gauss(value.center[0])] += 1
            scale = ratios.most_common(1)[0][0] if ratios else ONE
            hits = sum(self._char_matches(v, w, perm, scale) for v, w in zip(raw, printed))
            if hits > best[0]:
                best = (hits, perm, scale)
        hits, perm, scale = best
        for result, value, want in zip(results, raw, printed):
            result.checks["characteristic"] = self._char_matches(value, want, perm, scale)
            if value is not None and want is not None:
                shown = Characteristic(
                    tuple(value.labels[k] for k in perm),
                    tuple(_as_number(ExactArith.to_gauss(c) * scale) for c in value.center),
                )
                result.details["characteristic"] = f"{shown.format()} (printed ({''.join(map(str, want[0]))}, {want[1]}))"
        listed = sum(1 for want in printed if want is not None)
        return f"positions {tuple(k + 1 for k in perm)}, centre scale {ExactArith.format_gauss(scale)}", hits, listed

    @staticmethod
    def _char_matches(value: Optional[Characteristic], want: Optional[Tuple[Tuple[int, ...], str]], perm: Sequence[int], scale: Any) -> bool:
        if value is None or want is None:
            return False
        if tuple(value.labels[k] for k in perm) != tuple(want[0]):
            return False
        centre = ExactArith.to_gauss(value.center[0]) if value.center else ZERO
        return centre * scale == ExactArith.parse_gauss(want[1])

    def verify_mixed_table(self, index: int, group: Optional[LittleWeylGroup] = None) -> MixedTableReport:
        """
        Check every row of the mixed-element table for stratum ``index``.

        The semisimple part is p1 for stratum 8 and the base point of the stratum
        otherwise. If a row fails, the 16 sign choices on p1..p4 are tried and the
        first one under which the whole table passes is kept.

        Raises:
            ValueError: If there is no table for ``index``.
        """
        rows = TableData.mixed_rows(index)
        group = group or LittleWeylGroup()
        point: Point = (ONE, ZERO, ZERO, ZERO) if index == 8 else group.base_point(index)
        report: Optional[MixedTableReport] = None
        tried: List[LieElement] = []
        for signs in itertools.product((1, -1), repeat=4):
            p = self.point_element(point, signs)
            # p and -p have the same centralizers
            if any(p == q or p == -q for q in tried):
                continue
            tried.append(p)
            results, triples = self._check_rows(index, rows, p)
            convention, fit = "", (0, 0)
            if any(row.characteristic for row in rows):
                convention, hits, listed = self._characteristic_rows(p, rows, results, triples)
                fit = (hits, listed)
            attempt = MixedTableReport(index, results, tuple(signs), convention, fit)
            if report is None:
                report = attempt
            if attempt.passed:
                report = attempt
                break
            logger.info("table %d fails with signs %s, trying the next choice", index, signs)
        assert report is not None
        logger.info("table %d: %d/%d rows pass (signs %s)", index, sum(r.passed for r in report.rows), len(report.rows), report.signs)
        return report


class RelativeCartan:
    """
    Split torus t = {h in h : r(h) = 0 for the roots r supporting ``base``}
    inside K = z_g0(base), with the roots of K relative to t.

    Attributes:
        torus (list): Cartan coordinates ({i: c}) of a basis of t.
        roots (dict): restriction key -> root vector of K.
        simple (list): simple roots, grouped by simple component.
        components (list): lists of positions in ``simple``.
        center (list): Cartan coordinates of a basis of the centre of K.

    Raises:
        ValueError: If the base is not a sum of root vectors.
        ConsistencyError: If t is not a Cartan subalgebra of K.
    """

    def __init__(self, tools: OrbitTools, base: LieElement) -> None:
        self.tools = tools
        model = tools.model
        self.base = base
        self._coefficients: Dict[Tuple[GaussRat, ...], Vector] = {}
        support: List[Root] = []
        for idx in base.coords:
            root = model.roots[idx]
            if root is None:
                raise ValueError("base element must be a combination of root vectors")
            support.append(root)
        rows = [{i: ExactArith.to_gauss(model.pairing(r, _UNIT[i])) for i in range(8) if model.pairing(r, _UNIT[i])} for r in support]
        self.torus: List[Vector] = ExactArith.kernel_basis(ExactArith.from_rows(rows, 8)) if rows else [{i: ONE} for i in range(8)]
        self.k_basis = tools.centralizer_in(base, model.components[0])

        groups: Dict[Tuple[GaussRat, ...], List[int]] = {}
        for idx in model.components[0]:
            root = model.roots[idx]
            if root is None:
                continue
            key = self.key_of(root)
            if any(key):
                groups.setdefault(key, []).append(idx)
        self.roots: Dict[Tuple[GaussRat, ...], LieElement] = {}
        for key, members in groups.items():
            kernel = tools.common_centralizer([base], [model.basis(i) for i in members])
            if len(kernel) > 1:
                raise ConsistencyError("root space of the centralizer is not one-dimensional")
            if kernel:
                self.roots[key] = kernel[0]
        if len(self.torus) + len(self.roots) != len(self.k_basis):
            raise ConsistencyError("the torus is not a Cartan subalgebra of the centralizer")
        self.coroots = {key: self._coroot(key) for key in self.roots}
        self.positive = self._positive_keys()
        self.simple = self._simple_keys()
        self.cartan_integers = [[self._value(b, self.coroots[a]) for b in self.simple] for a in self.simple]
        self.components = self._components()
        self.simple = [self.simple[k] for comp in self.components for k in comp]
        self.cartan_integers = [[self._value(b, self.coroots[a]) for b in self.simple] for a in self.simple]
        start = 0
        ordered: List[List[int]] = []
        for comp in self.components:
            ordered.append(list(range(start, start + len(comp))))
            start += len(comp)
        self.components = ordered
        self.center = self._center()
        logger.info(
            "relative torus: dim %d, %d roots, simple components %s, centre dim %d",
            len(self.torus),
            len(self.roots),
            [len(c) for c in self.components],
            len(self.center),
        )

    def key_of(self, root: Sequence[int]) -> Tuple[GaussRat, ...]:
        """Values of a root on the torus basis."""
        return tuple(self.tools.root_value(root, t) for t in self.torus)

    def _value(self, key: Tuple[GaussRat, ...], cartan: Mapping[int, GaussRat]) -> GaussRat:
        """Value of a restricted root on a torus element given in Cartan coordinates."""
        coeffs = self._torus_coordinates(cartan)
        return sum((c * key[m] for m, c in coeffs.items()), ZERO)

    def _torus_coordinates(self, cartan: Mapping[int, GaussRat]) -> Vector:
        solution = ExactArith.solve_particular(ExactArith.from_columns(self.torus, 8), dict(cartan))
        if solution is None:
            raise ConsistencyError("element is not in the relative torus")
        return solution

    def _coroot(self, key: Tuple[GaussRat, ...]) -> Dict[int, GaussRat]:
        negative = tuple(-v for v in key)
        if negative not in self.roots:
            raise ConsistencyError("root of the centralizer without its negative")
        h = self.tools.model.bracket(self.roots[key], self.roots[negative])
        cartan = self.tools.cartan_coords(h)
        value = self._value(key, cartan)
        if not value:
            raise ConsistencyError("degenerate coroot in the centralizer")
        scale = 2 * ONE / value
        return {i: v * scale for i, v in cartan.items()}

    def _positive_keys(self) -> List[Tuple[GaussRat, ...]]:
        rng = self.tools._rng(len(self.roots))  # pylint: disable=protected-access
        for _ in range(100):
            weights = [ExactArith.to_gauss(rng.randint(1, 1000)) for _ in self.torus]
            values = {key: sum((w * v for w, v in zip(weights, key)), ZERO) for key in self.roots}
            if all(_real(v) != 0 for v in values.values()):
                return sorted((k for k, v in values.items() if _real(v) > 0), key=lambda k: tuple(_real(x) for x in k))
        raise ConsistencyError("no generic functional found for the relative roots")

    def _simple_keys(self) -> List[Tuple[GaussRat, ...]]:
        sums = {tuple(x + y for x, y in zip(a, b)) for a, b in itertools.combinations(self.positive, 2)}
        return [key for key in self.positive if key not in sums]

    def _components(self) -> List[List[int]]:
        size = len(self.simple)
        seen: set = set()
        components: List[List[int]] = []
        for start in range(size):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                a = stack.pop()
                comp.append(a)
                for b in range(size):
                    if b not in seen and (self.cartan_integers[a][b] or self.cartan_integers[b][a]):
                        seen.add(b)
                        stack.append(b)
            components.append(sorted(comp))
        return sorted(components, key=lambda c: (len(c), c))

    def _center(self) -> List[Vector]:
        if not self.simple:
            return [dict(t) for t in self.torus]
        rows = [{m: v for m, v in enumerate(key) if v} for key in self.simple]
        kernel = ExactArith.kernel_basis(ExactArith.from_rows(rows, len(self.torus)))
        out: List[Vector] = []
        for vector in kernel:
            cartan: Vector = {}
            for m, c in vector.items():
                ExactArith.axpy(cartan, c, self.torus[m])
            out.append(cartan)
        return out

    def simple_coefficients(self, key: Tuple[GaussRat, ...]) -> Vector:
        """Coordinates of a restricted root on the simple roots."""
        if key in self._coefficients:
            return self._coefficients[key]
        columns = [{m: v for m, v in enumerate(s) if v} for s in self.simple]
        solution = ExactArith.solve_particular(ExactArith.from_columns(columns, len(self.torus)), {m: v for m, v in enumerate(key) if v})
        if solution is None:
            raise ConsistencyError("restricted root outside the span of the simple roots")
        self._coefficients[key] = solution
        return solution

    def _ideal_bases(self) -> List[List[LieElement]]:
        model = self.tools.model
        members: List[List[LieElement]] = [[] for _ in self.components]
        owner = {k: c for c, comp in enumerate(self.components) for k in comp}
        for key, vector in self.roots.items():
            coeffs = self.simple_coefficients(key)
            comps = {owner[k] for k in coeffs}
            if len(comps) != 1:
                raise ConsistencyError("root meets two simple components")
            members[comps.pop()].append(vector)
        for c, comp in enumerate(self.components):
            for k in comp:
                coroot = self.coroots[self.simple[k]]
                members[c].append(LieElement({model.CARTAN_OFFSET + i: v for i, v in coroot.items()}))
        return members

    def _positive_values(self, comp: Sequence[int], labels: Sequence[int]) -> List[int]:
        values = []
        for key in self.positive:
            coeffs = self.simple_coefficients(key)
            if not set(coeffs) <= set(comp):
                continue
            total = sum(_as_number(coeffs.get(k, ZERO)) * labels[n] for n, k in enumerate(comp))
            if total:
                values.append(total)
        return sorted(values)

    def characteristic(self, h: LieElement) -> Characteristic:
        """
        Dominant characteristic of a semisimple h in K relative to the torus.

        Each simple component is matched through the spectrum of ad on its ideal;
        ties between diagram orientations are broken by the spectrum on g1.

        Raises:
            ValueError: If h is not in K or has non-integral root values.
            ConsistencyError: If no dominant torus element matches.
        """
        tools, model = self.tools, self.tools.model
        if model.bracket(self.base, h):
            raise ValueError("h does not commute with the base element")
        ideals = self._ideal_bases()
        centre = [LieElement({model.CARTAN_OFFSET + i: v for i, v in c.items()}) for c in self.center]
        flat = [b for ideal in ideals for b in ideal] + centre
        solution = ExactArith.solve_particular(ExactArith.from_columns([b.coords for b in flat], model.DIM), h.coords)
        if solution is None:
            raise ValueError("h is not in the centralizer of the base element")
        centre_coords = tuple(solution.get(len(flat) - len(centre) + k, ZERO) for k in range(len(centre)))

        options: List[List[Tuple[int, ...]]] = []
        start = 0
        for comp, ideal in zip(self.components, ideals):
            part = LieElement.combination((solution.get(start + j, ZERO), b) for j, b in enumerate(ideal))
            start += len(ideal)
            tracker = EchelonBasis.spanning((b.coords for b in ideal), track=True)
            columns = []
            for b in ideal:
                coords = tracker.coordinates(model.bracket(part, b).coords)
                if coords is None:
                    raise ConsistencyError("ideal is not stable under h")
                columns.append(coords)
            spectrum = rational_eigenvalues(ExactArith.from_columns(columns, len(ideal)))
            wanted = []
            for value in spectrum:
                q = _real(value)
                if q.denominator != 1:
                    raise ValueError("h has non-integral root values")
                if q > 0:
                    wanted.append(int(q.numerator))
            top = max(wanted, default=0)
            found = [
                labels
                for labels in itertools.product(range(top + 1), repeat=len(comp))
                if self._positive_values(comp, labels) == sorted(wanted)
            ]
            if not found:
                raise ConsistencyError("no dominant labels reproduce the spectrum of a simple component")
            options.append(found)

        g1 = tools.component_basis(1)
        dims: Dict[Any, int] = {}
        for combo in itertools.product(*options):
            labels = tuple(v for part in combo for v in part)
            candidate = self._torus_element(labels, centre_coords)
            spectrum = Counter(tools.root_value(model.roots[i], candidate) for i in model.components[1])  # type: ignore[arg-type]
            if all(self._eigen_dim(h, value, g1, dims) == mult for value, mult in spectrum.items()):
                return Characteristic(labels, tuple(_as_number(c) for c in centre_coords))
        raise ConsistencyError("no dominant torus element has the g1 spectrum of h")

    def _eigen_dim(self, h: LieElement, value: GaussRat, basis: Sequence[LieElement], cache: Dict[Any, int]) -> int:
        if value not in cache:
            cache[value] = len(self.tools.eigenspace(h, value, basis))
        return cache[value]

    def _torus_element(self, labels: Sequence[int], centre_coords: Sequence[GaussRat]) -> Dict[int, GaussRat]:
        """Cartan coordinates of sum d_k coroot_k + centre with simple-root values ``labels``."""
        size = len(self.simple)
        columns = [{j: self.cartan_integers[k][j] for j in range(size) if self.cartan_integers[k][j]} for k in range(size)]
        rhs = {j: ExactArith.to_gauss(v) for j, v in enumerate(labels) if v}
        d = ExactArith.solve_particular(ExactArith.from_columns(columns, size), rhs) if size else {}
        if d is None:
            raise ConsistencyError("Cartan matrix of the centralizer is singular")
        cartan: Dict[int, GaussRat] = {}
        for k, coeff in d.items():
            ExactArith.axpy(cartan, coeff, self.coroots[self.simple[k]])
        for coeff, vector in zip(centre_coords, self.center):
            ExactArith.axpy(cartan, coeff, vector)
        return cartan
