#!/usr/bin/env python3
"""
Invariants of W0: Klein quadrics, Maschke quartics and the fundamental invariants.

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
    InvariantCatalog: the polynomials, built once by ``InvariantTheory.build_catalog``.
    InvariantTheory(group): action tables, identities, z-coordinate forms,
        the Jacobian independence test and the quadric orbit.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from thetaspin.lib_exact_arith import ONE, X_GENS, X_RING, ZERO, ConsistencyError, ExactArith, GaussRat
from thetaspin.lib_reflgroup import LittleWeylGroup
from thetaspin.lib_tables import HESSIAN_SCALE, QUADRIC_ACTION, QUARTIC_ACTION, Z_CHANGE, Z_PRINTED_BASIS, Z_QUADRIC_SCALARS, TableData

logger = logging.getLogger(__name__)

Poly = Any


@dataclass
class InvariantCatalog:
    """Quadrics Q1..Q10, quartics A1..A6, the elementary symmetric functions and the invariants."""

    quadrics: List[Poly]
    quartics: List[Poly]
    sigma: List[Poly]
    f8: Poly
    f12: Poly
    f20: Poly
    pi20: Poly
    pi24: Poly
    f24: Optional[Poly] = None

    def named(self) -> Dict[str, Poly]:
        """Every polynomial by display name, in a fixed order."""
        out: Dict[str, Poly] = {f"Q{i}": q for i, q in enumerate(self.quadrics, start=1)}
        out.update({f"A{i}": a for i, a in enumerate(self.quartics, start=1)})
        out.update({"F8": self.f8, "F12": self.f12, "F20": self.f20, "Pi20": self.pi20, "Pi24": self.pi24})
        if self.f24 is not None:
            out["F24"] = self.f24
        return out


@dataclass
class IdentityCheck:
    """Named exact identities and the sign found for the Hessian invariant."""

    results: Dict[str, bool] = field(default_factory=dict)
    hessian_sign: int = 0

    @property
    def passed(self) -> bool:
        return all(self.results.values())


@dataclass
class ZFormCheck:
    """Comparison of the printed z-coordinate forms with the x-coordinate forms."""

    quadric_scalars: List[Optional[GaussRat]] = field(default_factory=list)
    expected_scalars: List[GaussRat] = field(default_factory=list)
    quartic_exact: List[bool] = field(default_factory=list)
    zero_sum: bool = False
    basis_order: List[Optional[int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        scalars_match = len(self.quadric_scalars) == len(self.expected_scalars) and all(
            c is not None and c == e for c, e in zip(self.quadric_scalars, self.expected_scalars)
        )
        return scalars_match and all(self.quartic_exact) and self.zero_sum


class InvariantTheory:
    """Invariant computations for the five generating reflections of W0."""

    def __init__(self, group: Optional[LittleWeylGroup] = None) -> None:
        self.group = group or LittleWeylGroup()
        self.generator_matrices = [g.matrix() for g in self.group.generators()]
        self.catalog: Optional[InvariantCatalog] = None

    @staticmethod
    def elementary_symmetric(values: Sequence[Poly]) -> List[Poly]:
        """sigma_0..sigma_n of the given polynomials."""
        sigma = [X_RING.one] + [X_RING.zero] * len(values)
        for value in values:
            for k in range(len(values), 0, -1):
                sigma[k] = sigma[k] + sigma[k - 1] * value
        return sigma

    @staticmethod
    def hessian(poly: Poly) -> List[List[Poly]]:
        return [[poly.diff(a).diff(b) for b in X_GENS] for a in X_GENS]

    def build_catalog(self, with_hessian: bool = True) -> InvariantCatalog:
        """
        Build every polynomial from the printed quadrics and quartics.

        F24 is the Hessian determinant of F8 divided by the printed constant; it is
        skipped when ``with_hessian`` is False.
        """
        quadrics = TableData.quadrics()
        quartics = TableData.quartics()
        sigma = self.elementary_symmetric(quartics)
        pi20 = X_RING.one
        for quadric in quadrics:
            pi20 = pi20 * quadric
        catalog = InvariantCatalog(
            quadrics=quadrics,
            quartics=quartics,
            sigma=sigma,
            f8=sigma[2].mul_ground(ExactArith.gauss((-1, 6))),
            f12=sigma[3].mul_ground(ExactArith.gauss((-1, 4))),
            f20=sigma[5].mul_ground(ExactArith.gauss((1, 12))),
            pi20=pi20,
            pi24=sigma[6],
        )
        if with_hessian:
            logger.info("Computing the Hessian determinant of F8")
            determinant = ExactArith.poly_determinant(self.hessian(catalog.f8))
            catalog.f24 = determinant.mul_ground(ExactArith.gauss((1, HESSIAN_SCALE)))
        self.catalog = catalog
        logger.info("Invariant catalog built (F24 %s)", "included" if with_hessian else "skipped")
        return catalog

    def _catalog(self) -> InvariantCatalog:
        if self.catalog is None:
            raise ValueError("build_catalog() must run first")
        return self.catalog

    @staticmethod
    def ratio(poly: Poly, reference: Poly) -> Optional[GaussRat]:
        """Scalar c with poly = c * reference, or None."""
        if not reference:
            return None
        monom = next(iter(reference.keys()))
        coeff = poly.get(monom)
        if not coeff:
            return None
        scalar = coeff / reference[monom]
        return scalar if poly == reference.mul_ground(scalar) else None

    def _check_generator(self, k: int) -> None:
        if not 1 <= k <= len(self.generator_matrices):
            raise ValueError(f"generator index {k} outside 1..{len(self.generator_matrices)}")

    def action_on_quadric(self, k: int, i: int) -> Tuple[int, GaussRat]:
        """
        (j, c) with Q_i o s_k = c * Q_j.

        Raises:
            ConsistencyError: If the image is proportional to no quadric.
        """
        self._check_generator(k)
        quadrics = self._catalog().quadrics
        image = ExactArith.poly_substitute(quadrics[i - 1], self.generator_matrices[k - 1])
        for j, quadric in enumerate(quadrics, start=1):
            scalar = self.ratio(image, quadric)
            if scalar is not None:
                return j, scalar
        raise ConsistencyError(f"Q{i} o s{k} is proportional to no quadric")

    def action_on_quartic(self, k: int, i: int) -> int:
        """
        j with A_i o s_k = A_j exactly.

        Raises:
            ConsistencyError: If the image is not a quartic with scalar 1.
        """
        self._check_generator(k)
        quartics = self._catalog().quartics
        image = ExactArith.poly_substitute(quartics[i - 1], self.generator_matrices[k - 1])
        for j, quartic in enumerate(quartics, start=1):
            scalar = self.ratio(image, quartic)
            if scalar is not None:
                if scalar != ONE:
                    raise ConsistencyError(f"A{i} o s{k} = {ExactArith.format_gauss(scalar)} * A{j}")
                return j
        raise ConsistencyError(f"A{i} o s{k} is proportional to no quartic")

    def quadric_table_mismatches(self) -> List[str]:
        """Cells of the printed quadric action table that differ from the computed action."""
        mismatches = []
        for i, row in enumerate(QUADRIC_ACTION, start=1):
            for k, (target, scalar_text) in enumerate(row, start=1):
                j, scalar = self.action_on_quadric(k, i)
                if (j, scalar) != (target, ExactArith.parse_gauss(scalar_text)):
                    mismatches.append(f"Q{i} o s{k}: computed {ExactArith.format_gauss(scalar)}*Q{j}")
        return mismatches

    def quartic_table_mismatches(self) -> List[str]:
        mismatches = []
        for i, row in enumerate(QUARTIC_ACTION, start=1):
            for k, target in enumerate(row, start=1):
                j = self.action_on_quartic(k, i)
                if j != target:
                    mismatches.append(f"A{i} o s{k}: computed A{j}")
        return mismatches

    def is_invariant(self, poly: Poly) -> bool:
        """True iff every generator fixes ``poly``."""
        return all(ExactArith.poly_substitute(poly, matrix) == poly for matrix in self.generator_matrices)

    def check_identities(self) -> IdentityCheck:
        """Exact identities, degrees and W0-invariance of the catalog."""
        catalog = self._catalog()
        check = IdentityCheck()
        results = check.results
        results["A1+...+A6 = 0"] = not catalog.sigma[1]
        results["F20 = F8*F12 + 81*Pi20"] = not (catalog.f20 - catalog.f8 * catalog.f12 - catalog.pi20.mul_ground(ExactArith.gauss(81)))
        degrees = {"F8": (catalog.f8, 8), "F12": (catalog.f12, 12), "Pi20": (catalog.pi20, 20), "Pi24": (catalog.pi24, 24)}
        for name, (poly, degree) in degrees.items():
            results[f"deg {name} = {degree}"] = ExactArith.total_degree(poly) == degree
            results[f"{name} is W0-invariant"] = self.is_invariant(poly)
        if catalog.f24 is not None:
            target = catalog.pi24 - (catalog.f12 * catalog.f12).mul_ground(ExactArith.gauss(4))
            if catalog.f24 == target:
                check.hessian_sign = 1
            elif -catalog.f24 == target:
                check.hessian_sign = -1
                logger.warning("Hessian invariant matches Pi24 - 4*F12^2 only after a sign flip")
            results["F24 = Pi24 - 4*F12^2"] = check.hessian_sign == 1
        return check

    def verify_identities(self) -> bool:
        return self.check_identities().passed

    @staticmethod
    def _x_form(z_poly: Poly, divisor: int) -> Poly:
        """Rewrite a z-form in x through sqrt(2) z = Z_CHANGE x, dividing out the sqrt(2) powers."""
        substituted = ExactArith.poly_substitute(z_poly, ExactArith.matrix(Z_CHANGE))
        return X_RING.from_dict(dict(substituted)).mul_ground(ExactArith.gauss((1, divisor)))

    @staticmethod
    def basis_order() -> List[Optional[int]]:
        """
        For each derived basis vector b_k (x = sum z_k b_k), the printed position it matches.

        sqrt(2) b_k is column k of 2 * Z_CHANGE^-1.
        """
        inverse = ExactArith.matrix(Z_CHANGE).to_field().inv()
        columns = ExactArith.columns_of(inverse)
        printed = [tuple(ExactArith.to_gauss(v) for v in row) for row in Z_PRINTED_BASIS]
        order: List[Optional[int]] = []
        for column in columns:
            vector = tuple(column.get(i, ZERO) * 2 for i in range(4))
            order.append(next((p for p, row in enumerate(printed, start=1) if row == vector), None))
        return order

    def z_basis_forms(self) -> ZFormCheck:
        """
        Compare the printed z-forms with the x-forms.

        Quadrics must agree up to the listed scalars; quartics must agree exactly.
        """
        catalog = self._catalog()
        check = ZFormCheck()
        check.expected_scalars = [ExactArith.to_gauss(value) for value in Z_QUADRIC_SCALARS]
        for z_form, quadric in zip(TableData.z_quadrics(), catalog.quadrics):
            check.quadric_scalars.append(self.ratio(self._x_form(z_form, 2), quadric))
        z_quartics = TableData.z_quartics()
        for z_form, quartic in zip(z_quartics, catalog.quartics):
            check.quartic_exact.append(self._x_form(z_form, 4) == quartic)
        power_sum = TableData.parse_poly("z1**4 + z2**4 + z3**4 + z4**4", z_quartics[0].ring)
        check.zero_sum = z_quartics[4] + z_quartics[5] == power_sum.mul_ground(ExactArith.gauss(-4))
        check.basis_order = self.basis_order()
        logger.info("Derived z-basis vectors match printed positions %s", check.basis_order)
        return check

    def jacobian_rank(self, seed: int) -> int:
        """Rank of the Jacobian of F8, F12, Pi20, Pi24 at a seeded random integer point."""
        catalog = self._catalog()
        rng = random.Random(seed)
        point = [ExactArith.gauss(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in X_GENS]
        rows = []
        for poly in (catalog.f8, catalog.f12, catalog.pi20, catalog.pi24):
            rows.append([poly.diff(gen).evaluate(list(zip(X_GENS, point))) for gen in X_GENS])
        return ExactArith.rank(ExactArith.matrix(rows))

    def quadric_orbit(self, start: int = 1) -> Set[int]:
        """Indices of the quadrics reached from Q_start under s1..s5, up to scalars."""
        seen = {start}
        frontier = [start]
        while frontier:
            fresh = []
            for i in frontier:
                for k in range(1, len(self.generator_matrices) + 1):
                    j, _ = self.action_on_quadric(k, i)
                    if j not in seen:
                        seen.add(j)
                        fresh.append(j)
            frontier = fresh
        return seen
