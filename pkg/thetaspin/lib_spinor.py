#!/usr/bin/env python3
"""
Half-spin module of o(10) tensored with C^4, built from the Clifford algebra.

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
    CliffordModel: lambda operators on the exterior algebra E of U = span(u_1..u_5),
        the o(10) basis and the representation rho.
    SpinorTensor: sparse combination of labels (i_1,...,i_k) x j, with text I/O.
    SpinorDictionary(model).build(): g0-equivariant identification of the
        labels with root vectors of g1.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from sympy import QQ

from thetaspin.lib_e8_graded import HIGHEST_ROOT, E8Model, LieElement, Root
from thetaspin.lib_exact_arith import ONE, ZERO, ConsistencyError, ExactArith, GaussRat

logger = logging.getLogger(__name__)

RANK = 5
SIZE = 2 * RANK
Subset = Tuple[int, ...]
Label = Tuple[Subset, int]
ExtVector = Dict[Subset, Any]
SquareMatrix = Dict[Tuple[int, int], Any]

EVEN_SUBSETS: Tuple[Subset, ...] = tuple(
    sorted(s for k in (0, 2, 4) for s in itertools.combinations(range(1, RANK + 1), k))
)
ALL_SUBSETS: Tuple[Subset, ...] = tuple(
    sorted(s for k in range(RANK + 1) for s in itertools.combinations(range(1, RANK + 1), k))
)
LABELS: Tuple[Label, ...] = tuple(sorted((s, j) for s in EVEN_SUBSETS for j in range(1, 5)))

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\([^()]*[i/][^()]*\)|\d+(?:/\d+)?\*?i|\d+(?:/\d+)?|i)\s*\*?\s*)?"
    r"\((?P<subset>[\d,\s]*)\)\s*(?:x|⊗|\\otimes)\s*(?P<j>\d)\s*"
)


class CliffordModel:
    """
    Clifford operators on E and the spin representation of o(10).

    The symmetric form is Psi(v_a, v_b) = 1 iff a + b = 11, and u_i = v_(5+i).
    """

    @staticmethod
    def psi(first: int, second: int) -> int:
        """Psi on standard basis vectors of C^10."""
        return 1 if first + second == SIZE + 1 else 0

    @staticmethod
    def gamma_action(index: int, vector: Mapping[Subset, Any]) -> ExtVector:
        """
        lambda(v_index) applied to an element of E.

        Indices 1..5 are the contractions lambda(v_1..v_5), indices 6..10 the
        wedge operators lambda(u_1..u_5).

        Raises:
            ValueError: For an index outside 1..10.
        """
        if not 1 <= index <= SIZE:
            raise ValueError(f"generator index must be in 1..{SIZE}, got {index}")
        out: ExtVector = {}
        for subset, coeff in vector.items():
            if index > RANK:
                m = index - RANK
                if m in subset:
                    continue
                sign = -1 if sum(1 for s in subset if s < m) % 2 else 1
                image = tuple(sorted(subset + (m,)))
            else:
                target = RANK + 1 - index
                if target not in subset:
                    continue
                pos = subset.index(target)
                sign = -1 if pos % 2 else 1
                image = subset[:pos] + subset[pos + 1 :]
            value = out.get(image, ZERO) + coeff * sign
            if value:
                out[image] = value
            else:
                out.pop(image, None)
        return out

    @classmethod
    def clifford_defect(cls) -> List[Tuple[int, int]]:
        """Generator pairs violating lambda(a)lambda(b) + lambda(b)lambda(a) = Psi(a, b)."""
        bad: List[Tuple[int, int]] = []
        for a in range(1, SIZE + 1):
            for b in range(1, SIZE + 1):
                expected = cls.psi(a, b)
                for subset in ALL_SUBSETS:
                    basis = {subset: ONE}
                    total = cls.gamma_action(a, cls.gamma_action(b, basis))
                    ExactArith.axpy(total, ONE, cls.gamma_action(b, cls.gamma_action(a, basis)))
                    if expected:
                        ExactArith.axpy(total, -ONE, basis)
                    if total:
                        bad.append((a, b))
                        break
        return bad

    # -- o(10) ---------------------------------------------------------------

    @staticmethod
    def o10_basis() -> List[SquareMatrix]:
        """The 45 matrices E_ab - E_(11-b,11-a) with a + b <= 10."""
        basis: List[SquareMatrix] = []
        for a in range(1, SIZE + 1):
            for b in range(1, SIZE + 1):
                if a + b <= SIZE:
                    basis.append({(a, b): ONE, (SIZE + 1 - b, SIZE + 1 - a): -ONE})
        return basis

    @staticmethod
    def in_o10(matrix: Mapping[Tuple[int, int], Any]) -> bool:
        """True iff a^T A + A a = 0 for the antidiagonal A."""
        for i in range(1, SIZE + 1):
            for j in range(1, SIZE + 1):
                total = matrix.get((SIZE + 1 - j, i), ZERO) + matrix.get((SIZE + 1 - i, j), ZERO)
                if total:
                    return False
        return True

    @staticmethod
    def commutator(first: Mapping[Tuple[int, int], Any], second: Mapping[Tuple[int, int], Any]) -> SquareMatrix:
        """Matrix commutator [a, b] = ab - ba."""
        out: SquareMatrix = {}
        for (i, k), x in first.items():
            for (k2, j), y in second.items():
                if k == k2:
                    out[(i, j)] = out.get((i, j), ZERO) + x * y
        for (i, k), x in second.items():
            for (k2, j), y in first.items():
                if k == k2:
                    out[(i, j)] = out.get((i, j), ZERO) - x * y
        return {key: value for key, value in out.items() if value}

    @classmethod
    def rho(cls, matrix: Mapping[Tuple[int, int], Any]) -> Dict[Subset, ExtVector]:
        """
        rho(a) = lambda(f(a)) with f(a) = 1/2 sum_i (a v_i) v_(11-i).

        Returns:
            dict: Image of every basis subset of E.

        Raises:
            ValueError: If the matrix is not in o(10).
        """
        if not cls.in_o10(matrix):
            raise ValueError("matrix is not in o(10)")
        half = ONE / 2
        images: Dict[Subset, ExtVector] = {}
        for subset in ALL_SUBSETS:
            out: ExtVector = {}
            for (k, i), coeff in matrix.items():
                term = cls.gamma_action(k, cls.gamma_action(SIZE + 1 - i, {subset: ONE}))
                ExactArith.axpy(out, coeff * half, term)
            images[subset] = out
        return images

    @staticmethod
    def apply_operator(operator: Mapping[Subset, ExtVector], vector: Mapping[Subset, Any]) -> ExtVector:
        """Apply an operator given by basis images."""
        out: ExtVector = {}
        for subset, coeff in vector.items():
            ExactArith.axpy(out, coeff, operator[subset])
        return out

    @classmethod
    def rho_homomorphism_defect(cls) -> List[Tuple[int, int]]:
        """Basis pairs (a, b) of o(10) with rho([a, b]) != [rho(a), rho(b)]."""
        basis = cls.o10_basis()
        reps = [cls.rho(a) for a in basis]
        bad: List[Tuple[int, int]] = []
        for x, y in itertools.product(range(len(basis)), repeat=2):
            lhs = cls.rho(cls.commutator(basis[x], basis[y]))
            for subset in ALL_SUBSETS:
                rhs = cls.apply_operator(reps[x], reps[y][subset])
                ExactArith.axpy(rhs, -ONE, cls.apply_operator(reps[y], reps[x][subset]))
                ExactArith.axpy(rhs, -ONE, lhs[subset])
                if rhs:
                    bad.append((x, y))
                    break
        return bad

    @classmethod
    def delta_plus_invariant(cls) -> bool:
        """True iff every rho(a) maps even wedges to even wedges."""
        for matrix in cls.o10_basis():
            images = cls.rho(matrix)
            for subset in EVEN_SUBSETS:
                if any(len(s) % 2 for s in images[subset]):
                    return False
        return True

    # -- simple root vectors ---------------------------------------------------

    @staticmethod
    def d5_raising(k: int) -> SquareMatrix:
        """Root vector of eps_k - eps_(k+1) (k <= 4) or eps_4 + eps_5 (k = 5)."""
        if k == RANK:
            return {(9, 1): ONE, (10, 2): -ONE}
        return {(RANK + k, RANK + 1 + k): ONE, (RANK - k, RANK + 1 - k): -ONE}

    @classmethod
    def d5_lowering(cls, k: int) -> SquareMatrix:
        """Transpose of :meth:`d5_raising`; the pair brackets to the simple coroot."""
        return {(j, i): v for (i, j), v in cls.d5_raising(k).items()}

    @classmethod
    def highest_weight_labels(cls) -> List[Subset]:
        """Even wedges killed by every D5 raising operator."""
        raising = [cls.rho(cls.d5_raising(k)) for k in range(1, RANK + 1)]
        return [s for s in EVEN_SUBSETS if all(not op[s] for op in raising)]


class SpinorTensor:
    """Sparse element of Delta+ (x) C^4 keyed by labels ((i_1..i_k), j)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Optional[Mapping[Label, Any]] = None) -> None:
        self.coords: Dict[Label, GaussRat] = {}
        for label, value in (coords or {}).items():
            self.validate_label(label)
            value = ExactArith.to_gauss(value)
            if value:
                self.coords[label] = value

    @staticmethod
    def validate_label(label: Label) -> None:
        """
        Raises:
            ValueError: Unless the label indexes Delta+ (x) C^4.
        """
        subset, j = label
        if (
            len(subset) not in (0, 2, 4)
            or any(not 1 <= i <= RANK for i in subset)
            or list(subset) != sorted(set(subset))
            or not 1 <= j <= 4
        ):
            raise ValueError(f"invalid label {label!r}")

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinorTensor):
            return NotImplemented
        return self.coords == other.coords

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "SpinorTensor") -> "SpinorTensor":
        out = dict(self.coords)
        for label, value in other.coords.items():
            out[label] = out.get(label, ZERO) + value
        return SpinorTensor(out)

    def __rmul__(self, scalar: Any) -> "SpinorTensor":
        coeff = ExactArith.to_gauss(scalar)
        return SpinorTensor({k: v * coeff for k, v in self.coords.items()})

    def labels(self) -> List[Label]:
        """Support labels in sorted order."""
        return sorted(self.coords)

    @classmethod
    def parse(cls, text: str) -> "SpinorTensor":
        """
        Parse text such as ``-(3,5)x1+(1,2,4,5)x2-2(1,3)x4``.

        Coefficients may be integers, rationals ``a/b`` or Gaussian
        rationals in parentheses, optionally followed by ``*``.

        Raises:
            ValueError: For malformed text or invalid labels.
        """
        body = text.strip()
        if not body:
            raise ValueError("empty spinor text")
        coords: Dict[Label, GaussRat] = {}
        pos = 0
        while pos < len(body):
            match = _TERM_RE.match(body, pos)
            if match is None or match.end() == pos:
                raise ValueError(f"cannot parse spinor text at offset {pos}: {body[pos:pos + 20]!r}")
            if pos > 0 and not match.group("sign"):
                raise ValueError(f"missing sign before term at offset {pos}")
            coeff = ExactArith.parse_gauss(match.group("coeff")) if match.group("coeff") else ONE
            if match.group("sign") == "-":
                coeff = -coeff
            inner = match.group("subset").replace(" ", "")
            subset = tuple(int(part) for part in inner.split(",")) if inner else ()
            label = (subset, int(match.group("j")))
            cls.validate_label(label)
            coords[label] = coords.get(label, ZERO) + coeff
            pos = match.end()
        return cls(coords)

    def format(self) -> str:
        """Canonical text form, terms in label order."""
        if not self.coords:
            return "0"
        pieces: List[str] = []
        for label in self.labels():
            coeff = self.coords[label]
            subset, j = label
            body = f"({','.join(str(i) for i in subset)})x{j}"
            negative = not coeff.y and coeff.x < 0
            magnitude = -coeff if negative else coeff
            if magnitude != ONE:
                text = ExactArith.format_gauss(magnitude)
                body = f"({text})*{body}" if magnitude.y else f"{text}*{body}"
            sign = "-" if negative else ("+" if pieces else "")
            pieces.append(f"{sign}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"SpinorTensor({self.format()!r})"


class Weight(NamedTuple):
    """Weight of a label: D5 part in eps coordinates and the index j of e_j."""

    d5_part: Tuple[Any, ...]
    a3_part: int


@dataclass
class DynkinScheme:
    """Graph on the weights of a support: solid edge for -1, dashed for +1."""

    nodes: List[Label]
    edges: List[Tuple[Label, Label, str]] = field(default_factory=lambda: [])

    @staticmethod
    def node_name(label: Label) -> str:
        """Text name of a node."""
        subset, j = label
        return f"({','.join(str(i) for i in subset)})x{j}"

    def to_dot(self) -> str:
        """Render in DOT format."""
        lines = ["graph scheme {"]
        for node in self.nodes:
            lines.append(f'  "{self.node_name(node)}";')
        for first, second, style in self.edges:
            attr = " [style=dashed]" if style == "dashed" else ""
            lines.append(f'  "{self.node_name(first)}" -- "{self.node_name(second)}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def is_square(self) -> bool:
        """True for a 4-cycle of solid edges (extended A3)."""
        if len(self.nodes) != 4 or len(self.edges) != 4:
            return False
        if any(style != "solid" for _, _, style in self.edges):
            return False
        degree = {n: 0 for n in self.nodes}
        for first, second, _ in self.edges:
            degree[first] += 1
            degree[second] += 1
        return all(d == 2 for d in degree.values())


class SpinorWeights:
    """Weights, their scalar products and Dynkin schemes."""

    @staticmethod
    def weight_of(label: Label) -> Weight:
        """
        eps_(i_1) + ... + eps_(i_k) - (eps_1 + ... + eps_5)/2, paired with e_j.

        Raises:
            ValueError: For an invalid label.
        """
        SpinorTensor.validate_label(label)
        subset, j = label
        half = QQ(1, 2)
        return Weight(tuple(QQ(1) - half if i in subset else -half for i in range(1, RANK + 1)), j)

    @staticmethod
    def weight_dot(first: Weight, second: Weight) -> int:
        """Scalar product; D5 part is the standard one, (e_i, e_j) = 3/4 or -1/4."""
        total = sum((a * b for a, b in zip(first.d5_part, second.d5_part)), QQ(0))
        total += QQ(3, 4) if first.a3_part == second.a3_part else QQ(-1, 4)
        if total.denominator != 1:
            raise ConsistencyError(f"non-integral weight product {total}")
        return int(total.numerator)

    @classmethod
    def label_dot(cls, first: Label, second: Label) -> int:
        """weight_dot of two labels."""
        return cls.weight_dot(cls.weight_of(first), cls.weight_of(second))

    @classmethod
    def dynkin_scheme(cls, tensor: SpinorTensor) -> DynkinScheme:
        """
        Dynkin scheme of the support of a nonzero tensor.

        Raises:
            ValueError: For the zero tensor.
        """
        if not tensor:
            raise ValueError("Dynkin scheme of the zero vector")
        nodes = tensor.labels()
        edges: List[Tuple[Label, Label, str]] = []
        for a, b in itertools.combinations(nodes, 2):
            dot = cls.label_dot(a, b)
            if dot == -1:
                edges.append((a, b, "solid"))
            elif dot == 1:
                edges.append((a, b, "dashed"))
        return DynkinScheme(nodes, edges)


class SpinorDictionary:
    """
    Equivariant identification of Delta+ (x) C^4 with g1.

    Attributes after :meth:`build`:
        label_to_element (dict): label -> scaled root vector in g1.
        index_to_label (dict): E8 basis index -> (label, inverse scale).
        g0_simple_roots (list): E8 roots of the g0 simple roots in node order
            1..5 (D5, node 3 is the branch, node 4 the lower fork end) and 6..8 (A3).
        g0_simple_elements (list): (e, f) pairs in g0 matching the Clifford generators.
    """

    def __init__(self, model: E8Model) -> None:
        self.model = model
        self.label_to_element: Dict[Label, LieElement] = {}
        self.index_to_label: Dict[int, Tuple[Label, GaussRat]] = {}
        self.label_root: Dict[Label, Root] = {}
        self.g0_simple_roots: List[Root] = []
        self.g0_simple_elements: List[Tuple[LieElement, LieElement]] = []
        self.node_map: Tuple[int, ...] = ()
        self._ops: Dict[Tuple[str, int], Dict[Subset, ExtVector]] = {}

    # -- spin-side generator actions ---------------------------------------------

    @staticmethod
    def _spin_generators() -> List[Tuple[str, int, bool]]:
        return [("d5", k, up) for k in range(1, RANK + 1) for up in (True, False)] + [
            ("a3", k, up) for k in range(1, 4) for up in (True, False)
        ]

    def _d5_operator(self, kind: str, k: int) -> Dict[Subset, ExtVector]:
        key = (kind, k)
        if key not in self._ops:
            raising, lowering = CliffordModel.d5_raising(k), CliffordModel.d5_lowering(k)
            matrix = {"up": raising, "down": lowering}.get(kind)
            if matrix is None:
                matrix = CliffordModel.commutator(raising, lowering)
            self._ops[key] = CliffordModel.rho(matrix)
        return self._ops[key]

    def _act(self, kind: str, k: int, raising: bool, label: Label) -> Dict[Label, GaussRat]:
        subset, j = label
        if kind == "a3":
            if raising:
                return {(subset, j - 1): ONE} if j == k + 1 else {}
            return {(subset, j + 1): ONE} if j == k else {}
        operator = self._d5_operator("up" if raising else "down", k)
        return {(s, j): v for s, v in operator[subset].items()}

    def _spin_dynkin_labels(self, label: Label) -> Tuple[int, ...]:
        subset, j = label
        values: List[int] = []
        for k in range(1, RANK + 1):
            value = self._d5_operator("coroot", k)[subset].get(subset, ZERO)
            values.append(int(value.x))
        for k in range(1, 4):
            values.append((1 if j == k else 0) - (1 if j == k + 1 else 0))
        return tuple(values)

    # -- E8 side -------------------------------------------------------------------

    def _node_roots(self, fork_swap: bool, a3_reverse: bool) -> List[Root]:
        unit = [tuple(1 if j == i else 0 for j in range(8)) for i in range(8)]
        lowest = tuple(-c for c in HIGHEST_ROOT)
        d5 = [unit[0], unit[2], unit[3]] + ([unit[4], unit[1]] if fork_swap else [unit[1], unit[4]])
        a3 = [unit[6], unit[7], lowest]
        if a3_reverse:
            a3 = a3[::-1]
        return d5 + a3

    def _root_element_pair(self, root: Root) -> Tuple[LieElement, LieElement]:
        neg = tuple(-c for c in root)
        return self.model.root_vector(root), -self.model.root_vector(neg)

    def build(self) -> "SpinorDictionary":
        """
        Solve the equivariance system for each admissible node map.

        Raises:
            ConsistencyError: If no node map gives a weight bijection with a
                one-dimensional space of equivariant maps.
        """
        spin_labels = {label: self._spin_dynkin_labels(label) for label in LABELS}
        g1 = self.model.components[1]
        for fork_swap, a3_reverse in itertools.product((False, True), repeat=2):
            roots = self._node_roots(fork_swap, a3_reverse)
            by_weight: Dict[Tuple[int, ...], int] = {}
            for idx in g1:
                root = self.model.roots[idx]
                assert root is not None
                by_weight[tuple(self.model.pairing(root, beta) for beta in roots)] = idx
            if sorted(by_weight) != sorted(spin_labels.values()) or len(by_weight) != len(LABELS):
                logger.debug("node map fork_swap=%s a3_reverse=%s: weights do not match", fork_swap, a3_reverse)
                continue
            matched = {label: by_weight[w] for label, w in spin_labels.items()}
            scales = self._solve_equivariance(roots, matched)
            if scales is None:
                logger.debug("node map fork_swap=%s a3_reverse=%s: no equivariant map", fork_swap, a3_reverse)
                continue
            self._install(roots, matched, scales)
            self.node_map = (int(fork_swap), int(a3_reverse))
            logger.info("Spinor dictionary built (fork_swap=%s, a3_reverse=%s)", fork_swap, a3_reverse)
            return self
        raise ConsistencyError("no equivariant identification of Delta+ (x) C^4 with g1")

    def _solve_equivariance(
        self, roots: Sequence[Root], matched: Mapping[Label, int]
    ) -> Optional[Dict[Label, GaussRat]]:
        column = {label: n for n, label in enumerate(LABELS)}
        rows: List[Dict[int, GaussRat]] = []
        generators = self._spin_generators()
        pairs = [self._root_element_pair(root) for root in roots]
        for kind, k, raising in generators:
            node = k - 1 if kind == "d5" else RANK + k - 1
            element = pairs[node][0] if raising else pairs[node][1]
            for label in LABELS:
                spin_image = self._act(kind, k, raising, label)
                lie_image = self.model.bracket(element, self.model.basis(matched[label])).coords
                equations: Dict[int, Dict[int, GaussRat]] = {}
                for target, coeff in spin_image.items():
                    equations.setdefault(matched[target], {})[column[target]] = coeff
                for idx, coeff in lie_image.items():
                    row = equations.setdefault(idx, {})
                    row[column[label]] = row.get(column[label], ZERO) - coeff
                for row in equations.values():
                    cleaned = {c: v for c, v in row.items() if v}
                    if cleaned:
                        rows.append(cleaned)
        kernel = ExactArith.kernel_basis(ExactArith.from_rows(rows, len(LABELS)))
        if len(kernel) != 1:
            return None
        vector = kernel[0]
        if len(vector) != len(LABELS):
            return None
        return {label: vector[column[label]] for label in LABELS}

    def _install(self, roots: Sequence[Root], matched: Mapping[Label, int], scales: Mapping[Label, GaussRat]) -> None:
        self.g0_simple_roots = list(roots)
        self.g0_simple_elements = [self._root_element_pair(root) for root in roots]
        for label in LABELS:
            idx = matched[label]
            scale = scales[label]
            self.label_to_element[label] = LieElement({idx: scale})
            self.index_to_label[idx] = (label, ONE / scale)
            root = self.model.roots[idx]
            assert root is not None
            self.label_root[label] = root

    # -- conversions -------------------------------------------------------------

    def to_lie(self, tensor: SpinorTensor) -> LieElement:
        """Image of a tensor in g1."""
        return LieElement.combination((coeff, self.label_to_element[label]) for label, coeff in tensor.coords.items())

    def parse(self, text: str) -> LieElement:
        """Parse spinor text straight into g1."""
        return self.to_lie(SpinorTensor.parse(text))

    def from_lie(self, element: LieElement) -> SpinorTensor:
        """
        Preimage of an element of g1.

        Raises:
            ValueError: If the element has components outside g1.
        """
        coords: Dict[Label, GaussRat] = {}
        for idx, value in element.coords.items():
            if idx not in self.index_to_label:
                raise ValueError(f"{self.model.label(idx)} is not in g1")
            label, inverse = self.index_to_label[idx]
            coords[label] = value * inverse
        return SpinorTensor(coords)

    def scheme_of(self, element: LieElement) -> DynkinScheme:
        """Dynkin scheme of an element of g1."""
        return SpinorWeights.dynkin_scheme(self.from_lie(element))

    # -- checks --------------------------------------------------------------------

    def weight_multisets_agree(self) -> bool:
        """Dynkin labels of the 64 labels and of the 64 g1 roots agree as multisets."""
        spin = sorted(self._spin_dynkin_labels(label) for label in LABELS)
        lie: List[Tuple[int, ...]] = []
        for idx in self.model.components[1]:
            root = self.model.roots[idx]
            assert root is not None
            lie.append(tuple(self.model.pairing(root, beta) for beta in self.g0_simple_roots))
        return spin == sorted(lie)

    def single_root_lines(self) -> bool:
        """Every label maps to a multiple of one root vector."""
        return all(len(element.coords) == 1 for element in self.label_to_element.values())

    def pairing_mismatches(self) -> List[Tuple[Label, Label]]:
        """Label pairs where the E8 root product differs from weight_dot."""
        bad: List[Tuple[Label, Label]] = []
        for a, b in itertools.product(LABELS, repeat=2):
            if self.model.pairing(self.label_root[a], self.label_root[b]) != SpinorWeights.label_dot(a, b):
                bad.append((a, b))
        return bad

    def iter_labels(self) -> Iterator[Label]:
        """All 64 labels in order."""
        return iter(LABELS)
