#!/usr/bin/env python3
"""
Exact Gaussian-rational arithmetic and linear algebra for thetaspin.

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

Scalars are elements of sympy's QQ_I, matrices are sparse DomainMatrix
objects over QQ_I and polynomials are PolyElements of grlex rings over QQ_I.
Sparse vectors are plain dicts from basis index to nonzero scalar.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)

GaussRat = Any
Vector = Dict[int, Any]

X_RING, *X_GENS = ring("x1,x2,x3,x4", QQ_I, grlex)
Z_RING, *Z_GENS = ring("z1,z2,z3,z4", QQ_I, grlex)
T_RING, T = ring("t", QQ_I, grlex)

ZERO = QQ_I(0)
ONE = QQ_I(1)
I_UNIT = QQ_I(0, 1)


class ConsistencyError(RuntimeError):
    """Raised when an exact computation contradicts the model it is built on."""


class EchelonBasis:
    """
    Incremental echelon basis of a subspace of sparse vectors.

    Every stored row has a distinct pivot with coefficient 1. Rows are reduced
    in insertion order, so later rows vanish at the pivots of earlier rows.
    With ``track=True`` each row also remembers its expression in terms of the
    vectors passed to :meth:`add`, which gives coordinates for free.
    """

    def __init__(self, track: bool = False) -> None:
        self.rows: List[Tuple[int, Vector]] = []
        self.track = track
        self.combos: List[Vector] = []
        self.added = 0

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Vector) -> Tuple[Vector, Vector]:
        """
        Reduce a vector against the stored rows.

        Args:
            vector (dict): Sparse vector.

        Returns:
            tuple: (remainder, combo) with vector = remainder + sum(combo[k] * added_k).
                ``combo`` is empty unless tracking is enabled.
        """
        rem = dict(vector)
        combo: Vector = {}
        for idx, (pivot, row) in enumerate(self.rows):
            coeff = rem.get(pivot)
            if not coeff:
                continue
            ExactArith.axpy(rem, -coeff, row)
            if self.track:
                ExactArith.axpy(combo, coeff, self.combos[idx])
        return rem, combo

    def contains(self, vector: Vector) -> bool:
        """Return True if the vector lies in the span."""
        rem, _ = self.reduce(vector)
        return not rem

    def add(self, vector: Vector) -> bool:
        """
        Add a vector to the span.

        Returns:
            bool: True if the span grew.
        """
        rem, combo = self.reduce(vector)
        index = self.added
        self.added += 1
        if not rem:
            return False
        pivot = min(rem)
        inv = ONE / rem[pivot]
        row = {k: v * inv for k, v in rem.items()}
        self.rows.append((pivot, row))
        if self.track:
            # row = (vector - combo) / lead
            own: Vector = {index: inv}
            ExactArith.axpy(own, -inv, combo)
            self.combos.append(own)
        return True

    def coordinates(self, vector: Vector) -> Optional[Vector]:
        """
        Express a vector in terms of the independent vectors added so far.

        Returns:
            dict or None: Coefficients keyed by insertion index, None if outside the span.
        """
        if not self.track:
            raise ValueError("coordinates require a tracking echelon basis")
        rem, combo = self.reduce(vector)
        if rem:
            return None
        return combo

    def basis(self) -> List[Vector]:
        """Return the stored echelon rows."""
        return [row for _, row in self.rows]

    def pivots(self) -> List[int]:
        """Return the pivot indices of the stored rows."""
        return [pivot for pivot, _ in self.rows]

    @classmethod
    def spanning(cls, vectors: Iterable[Vector], track: bool = False) -> "EchelonBasis":
        """Build an echelon basis of the span of the given vectors."""
        basis = cls(track=track)
        for vector in vectors:
            basis.add(vector)
        return basis


class ExactArith:
    """Static helpers for Q(i) scalars, sparse matrices and polynomials."""

    @staticmethod
    def _parse_rational(text: str) -> Any:
        """
        Parse an integer or ``a/b`` into a QQ element.

        Raises:
            ValueError: For malformed input or a zero denominator.
        """
        text = text.strip()
        if not text:
            raise ValueError("empty rational")
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) == 0:
                raise ValueError(f"zero denominator in '{text}'")
            return QQ(int(num), int(den))
        return QQ(int(text))

    @staticmethod
    def gauss(re: Any = 0, im: Any = 0) -> GaussRat:
        """
        Build a Gaussian rational from its real and imaginary parts.

        Args:
            re (int, str or QQ): Real part. Strings may be ``a/b``.
            im (int, str or QQ): Imaginary part.

        Returns:
            GaussRat: The element re + im*i of QQ_I.
        """
        parts = []
        for part in (re, im):
            if isinstance(part, str):
                parts.append(ExactArith._parse_rational(part))
            elif isinstance(part, tuple):
                num, den = cast_pair(part)
                parts.append(QQ(num, den))
            else:
                parts.append(QQ.convert(part))
        return QQ_I(parts[0], parts[1])

    @classmethod
    def to_gauss(cls, value: Any) -> GaussRat:
        """Convert int, str, (re, im) or a QQ_I element into QQ_I."""
        if isinstance(value, QQ_I.dtype):
            return value
        if isinstance(value, str):
            return cls.parse_gauss(value)
        if isinstance(value, tuple):
            re, im = cast_pair(value)
            return cls.gauss(re, im)
        return QQ_I.convert(value)

    @classmethod
    def parse_gauss(cls, text: str) -> GaussRat:
        """
        Parse a Gaussian rational written as ``a/b+c/d*i``.

        Accepted forms include ``3``, ``-1/2``, ``i``, ``-2*i``, ``1/2-1/3*i``
        and the same wrapped in parentheses.

        Raises:
            ValueError: For malformed input.
        """
        body = text.replace(" ", "")
        while body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if not body:
            raise ValueError("empty coefficient")
        if not body.endswith("i"):
            return cls.gauss(cls._parse_rational(body), 0)
        body = body[:-1]
        if body.endswith("*"):
            body = body[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            real_text, imag_text = body[:split], body[split:]
        else:
            real_text, imag_text = "0", body
        if imag_text in ("", "+"):
            imag = QQ(1)
        elif imag_text == "-":
            imag = QQ(-1)
        else:
            imag = cls._parse_rational(imag_text)
        return cls.gauss(cls._parse_rational(real_text), imag)

    @staticmethod
    def _format_rational(value: Any) -> str:
        num, den = int(value.numerator), int(value.denominator)
        return str(num) if den == 1 else f"{num}/{den}"

    @classmethod
    def format_gauss(cls, value: GaussRat) -> str:
        """Format a Gaussian rational canonically as ``a/b+c/d*i``."""
        re, im = value.x, value.y
        if not im:
            return cls._format_rational(re)
        magnitude = abs(im)
        imag = "i" if magnitude == 1 else f"{cls._format_rational(magnitude)}*i"
        if not re:
            return imag if im > 0 else f"-{imag}"
        sign = "+" if im > 0 else "-"
        return f"{cls._format_rational(re)}{sign}{imag}"

    @staticmethod
    def axpy(target: Dict[Any, Any], coeff: GaussRat, source: Mapping[Any, Any]) -> None:
        """In place ``target += coeff * source`` dropping zero entries."""
        if not coeff:
            return
        for key, value in source.items():
            new = target.get(key, ZERO) + coeff * value
            if new:
                target[key] = new
            else:
                target.pop(key, None)

    @staticmethod
    def scale(vector: Vector, coeff: GaussRat) -> Vector:
        """Return ``coeff * vector``."""
        if not coeff:
            return {}
        return {key: coeff * value for key, value in vector.items()}

    @classmethod
    def matrix(cls, rows: Sequence[Sequence[Any]]) -> DomainMatrix:
        """
        Build a sparse QQ_I matrix from nested rows.

        Entries may be anything :meth:`to_gauss` accepts.
        """
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        dod: Dict[int, Dict[int, Any]] = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
            entries = {j: cls.to_gauss(v) for j, v in enumerate(row)}
            entries = {j: v for j, v in entries.items() if v}
            if entries:
                dod[i] = entries
        return DomainMatrix.from_dod(dod, (nrows, ncols), QQ_I)

    @staticmethod
    def from_columns(columns: Sequence[Vector], nrows: int) -> DomainMatrix:
        """Build a sparse matrix whose j-th column is ``columns[j]``."""
        dod: Dict[int, Dict[int, Any]] = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                if i >= nrows:
                    raise ValueError(f"row index {i} out of bounds for {nrows} rows")
                dod.setdefault(i, {})[j] = value
        return DomainMatrix.from_dod(dod, (nrows, len(columns)), QQ_I)

    @staticmethod
    def from_rows(rows: Sequence[Vector], ncols: int) -> DomainMatrix:
        """Build a sparse matrix whose i-th row is ``rows[i]``."""
        dod = {i: dict(row) for i, row in enumerate(rows) if row}
        return DomainMatrix.from_dod(dod, (len(rows), ncols), QQ_I)

    @staticmethod
    def columns_of(matrix: DomainMatrix) -> List[Vector]:
        """Return the columns of a matrix as sparse vectors."""
        ncols = matrix.shape[1]
        columns: List[Vector] = [{} for _ in range(ncols)]
        for i, row in matrix.to_dod().items():
            for j, value in row.items():
                columns[j][i] = value
        return columns

    @staticmethod
    def rref(matrix: DomainMatrix) -> Tuple[DomainMatrix, int, List[int]]:
        """
        Reduced row echelon form.

        Returns:
            tuple: (echelon, rank, pivot_cols)
        """
        echelon, pivots = matrix.rref()
        return echelon, len(pivots), list(pivots)

    @classmethod
    def rank(cls, matrix: DomainMatrix) -> int:
        """Rank of a matrix."""
        if matrix.shape[0] == 0 or matrix.shape[1] == 0:
            return 0
        return cls.rref(matrix)[1]

    @staticmethod
    def normalize(vector: Vector) -> Vector:
        """Scale a nonzero vector so that its first nonzero coordinate is 1."""
        if not vector:
            return {}
        inv = ONE / vector[min(vector)]
        return {k: v * inv for k, v in vector.items()}

    @classmethod
    def kernel_basis(cls, matrix: DomainMatrix) -> List[Vector]:
        """
        Basis of the right null space, each vector normalized.

        Returns:
            list: cols - rank sparse vectors v with matrix * v = 0.
        """
        nrows, ncols = matrix.shape
        if nrows == 0 or not matrix.to_dod():
            return [{j: ONE} for j in range(ncols)]
        null = matrix.nullspace()
        rows = null.to_dod()
        return [cls.normalize(rows[k]) for k in sorted(rows)]

    @classmethod
    def solve_particular(cls, matrix: DomainMatrix, rhs: Vector) -> Optional[Vector]:
        """
        One solution x of ``matrix * x = rhs`` with free variables set to 0.

        Returns:
            dict or None: Sparse solution, or None if the system is inconsistent.
        """
        nrows, ncols = matrix.shape
        dod = {i: dict(row) for i, row in matrix.to_dod().items()}
        for i, value in rhs.items():
            if value:
                dod.setdefault(i, {})[ncols] = value
        augmented = DomainMatrix.from_dod(dod, (nrows, ncols + 1), QQ_I)
        echelon, _, pivots = cls.rref(augmented)
        if ncols in pivots:
            return None
        rows = echelon.to_dod()
        solution: Vector = {}
        for r, pivot in enumerate(pivots):
            value = rows.get(r, {}).get(ncols)
            if value:
                solution[pivot] = value
        return solution

    @staticmethod
    def matvec(columns: Sequence[Vector], vector: Vector) -> Vector:
        """Multiply a matrix given by its columns with a sparse vector."""
        out: Vector = {}
        for j, coeff in vector.items():
            ExactArith.axpy(out, coeff, columns[j])
        return out

    @classmethod
    def apply(cls, matrix: DomainMatrix, vector: Vector) -> Vector:
        """Return ``matrix * vector``."""
        return cls.matvec(cls.columns_of(matrix), vector)

    @classmethod
    def min_poly(cls, matrix: DomainMatrix) -> Any:
        """
        Monic minimal polynomial in ``t`` via per-vector Krylov relations.

        Raises:
            ValueError: If the matrix is not square.
        """
        nrows, ncols = matrix.shape
        if nrows != ncols:
            raise ValueError(f"min_poly needs a square matrix, got {nrows}x{ncols}")
        return cls.min_poly_of_columns(cls.columns_of(matrix))

    @classmethod
    def min_poly_of_columns(cls, columns: Sequence[Vector]) -> Any:
        """Minimal polynomial of the square matrix given by its columns."""
        result = T_RING.one
        seen = EchelonBasis()
        for j in range(len(columns)):
            start = {j: ONE}
            if seen.contains(start):
                continue
            result = result.lcm(cls._local_min_poly(columns, start, seen))
        return result.monic()

    @classmethod
    def _local_min_poly(cls, columns: Sequence[Vector], start: Vector, seen: EchelonBasis) -> Any:
        """Minimal polynomial of ``start`` under the matrix; records the Krylov space in ``seen``."""
        rows: List[Tuple[int, Vector, Any]] = []
        vector, poly = dict(start), T_RING.one
        while True:
            for pivot, row, row_poly in rows:
                coeff = vector.get(pivot)
                if coeff:
                    cls.axpy(vector, -coeff, row)
                    poly = poly - row_poly.mul_ground(coeff)
            if not vector:
                return poly
            pivot = min(vector)
            inv = ONE / vector[pivot]
            vector = {k: v * inv for k, v in vector.items()}
            poly = poly.mul_ground(inv)
            rows.append((pivot, vector, poly))
            seen.add(vector)
            vector, poly = cls.matvec(columns, vector), poly * T

    @staticmethod
    def squarefree(poly: Any) -> bool:
        """
        True iff gcd(p, p') is constant.

        Raises:
            ValueError: For the zero polynomial.
        """
        if not poly:
            raise ValueError("squarefree test of the zero polynomial")
        gen = poly.ring.gens[0]
        return bool(poly.gcd(poly.diff(gen)).is_ground)

    @staticmethod
    def poly_substitute(poly: Any, matrix: DomainMatrix) -> Any:
        """
        Evaluate ``poly`` at the linear change of variables x -> matrix * x.

        Raises:
            ValueError: If the matrix size differs from the variable count.
        """
        poly_ring = poly.ring
        gens = poly_ring.gens
        size = len(gens)
        if matrix.shape != (size, size):
            raise ValueError(f"expected a {size}x{size} matrix, got {matrix.shape}")
        rows = matrix.to_dod()
        images = []
        for i in range(size):
            image = poly_ring.zero
            for j, value in rows.get(i, {}).items():
                image += gens[j].mul_ground(value)
            images.append(image)
        return poly.compose(list(zip(gens, images)))

    @staticmethod
    def poly_determinant(rows: Sequence[Sequence[Any]]) -> Any:
        """
        Exact determinant of a square matrix of polynomials (fraction-free Bareiss).

        Raises:
            ValueError: For a non-square or empty matrix.
        """
        size = len(rows)
        if size == 0 or any(len(row) != size for row in rows):
            raise ValueError("poly_determinant needs a non-empty square matrix")
        poly_ring = rows[0][0].ring
        domain = poly_ring.to_domain()
        entries = [[poly_ring(entry) for entry in row] for row in rows]
        return poly_ring(DomainMatrix(entries, (size, size), domain).to_dense().det())

    @staticmethod
    def total_degree(poly: Any) -> int:
        """Total degree of a nonzero polynomial, -1 for zero."""
        if not poly:
            return -1
        return max(sum(monom) for monom in poly.monoms())

    @classmethod
    def format_poly(cls, poly: Any) -> str:
        """
        Canonical text form: grlex order, coefficients ``a/b+c/d*i``.

        Non-real coefficients are parenthesized, unit coefficients dropped.
        """
        if not poly:
            return "0"
        names = [str(g) for g in poly.ring.symbols]
        pieces: List[str] = []
        for monom, coeff in poly.terms():
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e]
            negative = not coeff.y and coeff.x < 0
            magnitude = -coeff if negative else coeff
            text = cls.format_gauss(magnitude)
            if magnitude.y:
                text = f"({text})"
            if factors:
                body = "*".join(factors) if magnitude == ONE else f"{text}*{'*'.join(factors)}"
            else:
                body = text
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)


def cast_pair(value: Tuple[Any, ...]) -> Tuple[Any, Any]:
    """Unpack a 2-tuple, rejecting other lengths."""
    if len(value) != 2:
        raise ValueError(f"expected a pair, got {value!r}")
    return value[0], value[1]
