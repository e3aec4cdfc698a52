#!/usr/bin/env python3
"""
The Lie algebra of type E8 in a Chevalley basis with its Z/4Z grading.

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

Basis order: the 120 positive roots sorted by (height, coordinates), then the
Cartan elements h_1..h_8, then the negative roots in the order of their
positives. Simple roots follow Bourbaki: chain 1-3-4-5-6-7-8 with node 2
attached to node 4. Structure constants use the bimultiplicative sign
eps(a, b) = (-1)^(sum a_i b_j c_ij) with c_ii = 1 and c_ij = 1 for connected
i < j, so that [E_a, E_b] = eps(a, b) E_(a+b) and [E_a, E_-a] = -a.
"""

from __future__ import annotations

import logging
import random
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from thetaspin.lib_exact_arith import ONE, ZERO, ConsistencyError, ExactArith, GaussRat, Vector

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]

CARTAN_E8: Tuple[Tuple[int, ...], ...] = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)
HIGHEST_ROOT: Root = (2, 3, 4, 6, 5, 4, 3, 2)
GRADING_NODE = 6
KILLING_SCALE = 60


class LieElement:
    """Sparse element of E8: basis index -> nonzero Gaussian rational."""

    __slots__ = ("coords",)

    def __init__(self, coords: Optional[Mapping[int, Any]] = None) -> None:
        self.coords: Vector = {k: v for k, v in (coords or {}).items() if v}

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coords)
        ExactArith.axpy(out, ONE, other.coords)
        return LieElement(out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coords)
        ExactArith.axpy(out, -ONE, other.coords)
        return LieElement(out)

    def __neg__(self) -> "LieElement":
        return LieElement({k: -v for k, v in self.coords.items()})

    def __rmul__(self, scalar: Any) -> "LieElement":
        return LieElement(ExactArith.scale(self.coords, ExactArith.to_gauss(scalar)))

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.coords == other.coords

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {ExactArith.format_gauss(v)}" for k, v in sorted(self.coords.items()))
        return f"LieElement({{{inner}}})"

    @classmethod
    def combination(cls, terms: Iterable[Tuple[Any, "LieElement"]]) -> "LieElement":
        """Return sum(c * x) over (c, x) pairs."""
        out: Vector = {}
        for coeff, element in terms:
            ExactArith.axpy(out, ExactArith.to_gauss(coeff), element.coords)
        return cls(out)


class E8Model:
    """
    Chevalley basis of E8, its bracket and Killing form, and the grading
    defined by the order-4 automorphism theta acting on E_r by i^(r_6).
    """

    DIM = 248
    RANK = 8
    NPOS = 120
    CARTAN_OFFSET = 120
    NEG_OFFSET = 128

    def __init__(self) -> None:
        """Build roots, bracket table and grading."""
        self.positive_roots = self._positive_roots()
        if len(self.positive_roots) != self.NPOS:
            raise ConsistencyError(f"expected 120 positive roots, found {len(self.positive_roots)}")
        self.roots: List[Optional[Root]] = list(self.positive_roots)
        self.roots += [None] * self.RANK
        self.roots += [tuple(-c for c in r) for r in self.positive_roots]
        self.root_index: Dict[Root, int] = {r: i for i, r in enumerate(self.roots) if r is not None}
        self.degrees = [self._degree_of_root(r) for r in self.roots]
        self.components: Tuple[List[int], ...] = tuple(
            [i for i in range(self.DIM) if self.degrees[i] == k] for k in range(4)
        )
        self._table = [[self._bracket_basis(a, b) for b in range(self.DIM)] for a in range(self.DIM)]
        logger.info(
            "E8 model built: %d roots, component dims %s",
            2 * self.NPOS,
            tuple(len(c) for c in self.components),
        )

    # -- root system -------------------------------------------------------

    @staticmethod
    def pairing(first: Sequence[int], second: Sequence[int]) -> int:
        """Root scalar product of two vectors in simple-root coordinates."""
        return sum(first[i] * CARTAN_E8[i][j] * second[j] for i in range(8) if first[i] for j in range(8) if second[j])

    @classmethod
    def _positive_roots(cls) -> List[Root]:
        simple = [tuple(1 if j == i else 0 for j in range(8)) for i in range(8)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt: List[Root] = []
            for root in frontier:
                for i in range(8):
                    if cls.pairing(root, simple[i]) == -1:
                        cand = tuple(c + (1 if j == i else 0) for j, c in enumerate(root))
                        if cand not in found:
                            found.add(cand)
                            nxt.append(cand)
            frontier = nxt
        return sorted(found, key=lambda r: (sum(r), r))

    @staticmethod
    def _degree_of_root(root: Optional[Root]) -> int:
        if root is None:
            return 0
        return root[GRADING_NODE - 1] % 4

    @staticmethod
    def _epsilon(first: Root, second: Root) -> int:
        total = 0
        for i in range(8):
            if not first[i]:
                continue
            total += first[i] * second[i]
            for j in range(i + 1, 8):
                if CARTAN_E8[i][j] == -1:
                    total += first[i] * second[j]
        return -1 if total % 2 else 1

    def _bracket_basis(self, a: int, b: int) -> Tuple[Tuple[int, int], ...]:
        ra, rb = self.roots[a], self.roots[b]
        if ra is None and rb is None:
            return ()
        if ra is None:
            assert rb is not None
            value = sum(rb[j] * CARTAN_E8[j][a - self.CARTAN_OFFSET] for j in range(8))
            return ((b, value),) if value else ()
        if rb is None:
            value = sum(ra[j] * CARTAN_E8[j][b - self.CARTAN_OFFSET] for j in range(8))
            return ((a, -value),) if value else ()
        total = tuple(x + y for x, y in zip(ra, rb))
        if not any(total):
            return tuple((self.CARTAN_OFFSET + j, -ra[j]) for j in range(8) if ra[j])
        idx = self.root_index.get(total)
        if idx is None:
            return ()
        return ((idx, self._epsilon(ra, rb)),)

    # -- named elements ----------------------------------------------------

    def basis(self, index: int) -> LieElement:
        """Basis element with the given index."""
        return LieElement({index: ONE})

    def root_vector(self, root: Sequence[int]) -> LieElement:
        """E_root."""
        return self.basis(self.root_index[tuple(root)])

    def e(self, i: int) -> LieElement:
        """Simple root vector e_i (i = 0 gives the lowest root vector)."""
        if i == 0:
            return self.root_vector(tuple(-c for c in HIGHEST_ROOT))
        return self.root_vector(tuple(1 if j == i - 1 else 0 for j in range(8)))

    def f(self, i: int) -> LieElement:
        """Opposite root vector f_i = -E_(-alpha_i), with [e_i, f_i] = h_i."""
        if i == 0:
            return -self.root_vector(HIGHEST_ROOT)
        return -self.root_vector(tuple(-1 if j == i - 1 else 0 for j in range(8)))

    def h(self, i: int) -> LieElement:
        """Cartan element h_i (i = 0 gives the coroot of the lowest root)."""
        if i == 0:
            return LieElement({self.CARTAN_OFFSET + j: QQ_I(-c) for j, c in enumerate(HIGHEST_ROOT)})
        return self.basis(self.CARTAN_OFFSET + i - 1)

    def coroot(self, root: Sequence[int]) -> LieElement:
        """The Cartan element identified with a root."""
        return LieElement({self.CARTAN_OFFSET + j: QQ_I(c) for j, c in enumerate(root) if c})

    def is_cartan(self, index: int) -> bool:
        """True for the indices of h_1..h_8."""
        return self.roots[index] is None

    def label(self, index: int) -> str:
        """Readable basis label."""
        root = self.roots[index]
        if root is None:
            return f"h{index - self.CARTAN_OFFSET + 1}"
        sign = "-" if any(c < 0 for c in root) else ""
        return f"E{sign}[{''.join(str(abs(c)) for c in root)}]"

    # -- bracket and derived maps -------------------------------------------

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        """Lie bracket [x, y]."""
        out: Vector = {}
        for a, ca in x.coords.items():
            row = self._table[a]
            for b, cb in y.coords.items():
                entries = row[b]
                if not entries:
                    continue
                prod = ca * cb
                for idx, k in entries:
                    value = out.get(idx, ZERO) + prod * k
                    if value:
                        out[idx] = value
                    else:
                        out.pop(idx, None)
        return LieElement(out)

    def bracket_basis(self, a: int, b: int) -> Tuple[Tuple[int, int], ...]:
        """Structure constants of [b_a, b_b] as (index, integer) pairs."""
        return self._table[a][b]

    def ad_columns(self, x: LieElement, domain: Sequence[int]) -> List[Vector]:
        """Images [x, b] for basis indices b in ``domain`` as sparse vectors."""
        return [self.bracket(x, self.basis(b)).coords for b in domain]

    def ad_matrix(self, x: LieElement, domain: Sequence[int], codomain: Sequence[int]) -> DomainMatrix:
        """
        Matrix of y -> [x, y] from span(domain) to span(codomain).

        Raises:
            ConsistencyError: If an image leaves the span of ``codomain``.
        """
        position = {b: i for i, b in enumerate(codomain)}
        columns: List[Vector] = []
        for image in self.ad_columns(x, domain):
            column: Vector = {}
            for idx, value in image.items():
                if idx not in position:
                    raise ConsistencyError(f"ad image leaves the codomain at {self.label(idx)}")
                column[position[idx]] = value
            columns.append(column)
        return ExactArith.from_columns(columns, len(codomain))

    def theta(self, x: LieElement) -> LieElement:
        """The grading automorphism: multiplies degree-k coordinates by i^k."""
        powers = (ONE, QQ_I(0, 1), QQ_I(-1), QQ_I(0, -1))
        return LieElement({k: v * powers[self.degrees[k]] for k, v in x.coords.items()})

    def degree(self, x: LieElement) -> Optional[int]:
        """Common degree of a homogeneous element, None if mixed or zero."""
        degrees = {self.degrees[k] for k in x.coords}
        return degrees.pop() if len(degrees) == 1 else None

    def project(self, x: LieElement, k: int) -> LieElement:
        """Degree-k component of x."""
        return LieElement({i: v for i, v in x.coords.items() if self.degrees[i] == k % 4})

    def _normalized_form(self, a: int, b: int) -> int:
        ra, rb = self.roots[a], self.roots[b]
        if ra is None and rb is None:
            return CARTAN_E8[a - self.CARTAN_OFFSET][b - self.CARTAN_OFFSET]
        if ra is None or rb is None:
            return 0
        return -1 if all(x == -y for x, y in zip(ra, rb)) else 0

    def killing(self, x: LieElement, y: LieElement) -> GaussRat:
        """Killing form, 60 times the normalized invariant form."""
        total = ZERO
        for a, ca in x.coords.items():
            for b, cb in y.coords.items():
                value = self._normalized_form(a, b)
                if value:
                    total += ca * cb * value
        return total * KILLING_SCALE

    def killing_trace(self, x: LieElement, y: LieElement) -> GaussRat:
        """Killing form computed literally as trace(ad x ad y)."""
        total = ZERO
        for b in range(self.DIM):
            image = self.bracket(x, self.bracket(y, self.basis(b)))
            total += image.coords.get(b, ZERO)
        return total

    # -- self-checks -----------------------------------------------------------

    def simple_relation_defects(self) -> List[int]:
        """Nodes i (0..8) where [e_i, f_i] != h_i or [h_i, e_i] != 2 e_i."""
        bad: List[int] = []
        for i in range(9):
            e, f, h = self.e(i), self.f(i), self.h(i)
            if self.bracket(e, f) != h or self.bracket(h, e) != 2 * e:
                bad.append(i)
        return bad

    def theta_defects(self) -> List[Tuple[int, int]]:
        """
        Basis pairs where theta fails to be an order-4 automorphism.

        A pair (a, a) records theta^4(b_a) != b_a; a pair (a, b) records
        theta([b_a, b_b]) != [theta b_a, theta b_b].
        """
        bad: List[Tuple[int, int]] = []
        for a in range(self.DIM):
            x = self.basis(a)
            if self.theta(self.theta(self.theta(self.theta(x)))) != x:
                bad.append((a, a))
        images = [self.theta(self.basis(a)) for a in range(self.DIM)]
        for a in range(self.DIM):
            for b in range(a + 1, self.DIM):
                if not self._table[a][b]:
                    continue
                lhs = self.theta(self.bracket(self.basis(a), self.basis(b)))
                if lhs != self.bracket(images[a], images[b]):
                    bad.append((a, b))
        return bad

    def grading_defects(self) -> List[Tuple[int, int]]:
        """Basis pairs whose bracket leaves degree deg(a) + deg(b) mod 4."""
        bad: List[Tuple[int, int]] = []
        for a in range(self.DIM):
            for b in range(self.DIM):
                target = (self.degrees[a] + self.degrees[b]) % 4
                if any(self.degrees[idx] != target for idx, _ in self._table[a][b]):
                    bad.append((a, b))
        return bad

    def jacobi_defects(self, seed: int, samples: int = 10_000) -> List[Tuple[int, int, int]]:
        """Seeded random basis triples violating the Jacobi identity."""
        rng = random.Random(seed)
        bad: List[Tuple[int, int, int]] = []
        for _ in range(samples):
            a, b, c = (rng.randrange(self.DIM) for _ in range(3))
            x, y, z = self.basis(a), self.basis(b), self.basis(c)
            total = self.bracket(x, self.bracket(y, z)) + self.bracket(y, self.bracket(z, x)) + self.bracket(z, self.bracket(x, y))
            if total:
                bad.append((a, b, c))
        if bad:
            logger.debug("Jacobi fails on %d of %d triples", len(bad), samples)
        return bad

    def invariance_defects(self, seed: int, samples: int = 200) -> int:
        """Count seeded basis triples with kappa([x, y], z) != kappa(x, [y, z])."""
        rng = random.Random(seed)
        failures = 0
        for _ in range(samples):
            x, y, z = (self.basis(rng.randrange(self.DIM)) for _ in range(3))
            if self.killing(self.bracket(x, y), z) != self.killing(x, self.bracket(y, z)):
                failures += 1
        return failures

    # -- g0 root system ------------------------------------------------------

    def g0_roots(self) -> List[Root]:
        """Roots of degree 0."""
        return [r for r in self.roots if r is not None and self._degree_of_root(r) == 0]

    def g0_simple_roots(self) -> List[Root]:
        """
        Simple system of the degree-0 roots.

        Positivity is taken from the functional sum(c_i * 13**i), which is nonzero
        on every root since root coefficients lie in -6..6.
        """
        roots = self.g0_roots()
        positive = {r for r in roots if sum(c * 13**i for i, c in enumerate(r)) > 0}
        simple = [
            r for r in positive if not any(tuple(x - y for x, y in zip(r, a)) in positive for a in positive if a != r)
        ]
        return sorted(simple)

    def is_g0_simple_system(self, roots: Sequence[Root]) -> bool:
        """True iff roots are degree-0 roots forming a simple system of the same type as g0."""
        degree_zero = set(self.g0_roots())
        if len(roots) != len(self.g0_simple_roots()) or not all(tuple(r) in degree_zero for r in roots):
            return False
        cartan = [[self.pairing(a, b) for b in roots] for a in roots]
        if any(cartan[i][j] > 0 for i in range(len(roots)) for j in range(len(roots)) if i != j):
            return False
        return "+".join(self.dynkin_type(cartan)) == self.g0_type()

    @staticmethod
    def dynkin_type(cartan: Sequence[Sequence[int]]) -> List[str]:
        """
        Types of the connected components of a simply-laced Cartan matrix.

        Returns:
            list: Sorted component types such as ["A3", "D5"].
        """
        size = len(cartan)
        unseen = set(range(size))
        types: List[str] = []
        while unseen:
            stack = [unseen.pop()]
            comp = set(stack)
            while stack:
                node = stack.pop()
                for other in range(size):
                    if other in unseen and cartan[node][other]:
                        unseen.discard(other)
                        comp.add(other)
                        stack.append(other)
            valence = {n: sum(1 for m in comp if m != n and cartan[n][m]) for n in comp}
            rank = len(comp)
            branch = [n for n, v in valence.items() if v == 3]
            if not branch:
                types.append(f"A{rank}")
            elif len(branch) == 1 and rank >= 4:
                arms = sorted(E8Model._arm_length(cartan, comp, branch[0], start) for start in comp if cartan[branch[0]][start] and start != branch[0])
                types.append(f"D{rank}" if arms[:2] == [1, 1] else f"E{rank}")
            else:
                types.append(f"?{rank}")
        return sorted(types)

    @staticmethod
    def _arm_length(cartan: Sequence[Sequence[int]], comp: Iterable[int], center: int, start: int) -> int:
        length, prev, node = 1, center, start
        nodes = list(comp)
        while True:
            nxt = [m for m in nodes if m not in (node, prev) and cartan[node][m]]
            if not nxt:
                return length
            prev, node = node, nxt[0]
            length += 1

    def g0_type(self) -> str:
        """Type of the degree-0 root subsystem, e.g. 'A3+D5'."""
        simple = self.g0_simple_roots()
        cartan = [[self.pairing(a, b) for b in simple] for a in simple]
        return "+".join(self.dynkin_type(cartan))

    def dump_grading(self) -> List[Tuple[str, int, int]]:
        """Rows (root label, height, degree) for every positive root."""
        return [(self.label(i), sum(r), self.degrees[i]) for i, r in enumerate(self.positive_roots)]
