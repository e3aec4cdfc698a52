#!/usr/bin/env python3
"""
Unified CLI for thetaspin.

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

Subcommands:
  verify-all        every check below, one summary
  table1            stabilizer classes, normalizer quotients, presentation, stratum lists
  invariants        quadrics, quartics, fundamental invariants and their identities
  mixed-table I     rows of the mixed-element table over stratum I (2..8)
  dynkin-scheme     Dynkin scheme of --element, optionally as DOT (--dot)
  jordan            Jordan decomposition of --element
  characteristic    characteristic of --element, optionally relative to --relative-to
  dump-grading      degree of every positive root and the g0 simple roots

Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 internal consistency error.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
import time
from functools import cached_property
from typing import Callable, Dict, List, Optional, Tuple

from thetaspin.lib_e8_graded import E8Model, LieElement
from thetaspin.lib_exact_arith import ZERO, ConsistencyError, ExactArith, Vector
from thetaspin.lib_invariants import InvariantTheory
from thetaspin.lib_orbit_tools import DEFAULT_SEED, CentralizerSignature, OrbitTools
from thetaspin.lib_reflgroup import CARTAN_DIM, LittleWeylGroup, Point
from thetaspin.lib_report import Report
from thetaspin.lib_spinor import CliffordModel, SpinorDictionary, SpinorTensor, SpinorWeights
from thetaspin.lib_tables import CARTAN_BASIS, SCHEME_EXAMPLE, W0_ORDER, TableData
from thetaspin.version import get_version_for_argparse

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

MIXED_INDICES = tuple(range(2, 9))
REFLECTION_HYPERPLANES = 60

_P_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*p([1-4])")


def _read_env_int(name: str, default: int) -> Tuple[int, Optional[str]]:
    """Read int from environment; return (value, warning_message)."""

    raw = os.getenv(name)
    if raw is None:
        return default, None

    try:
        return int(raw), None
    except ValueError:
        return default, f"Invalid integer in {name}={raw!r}; using default {default}"


def parse_p_expr(text: str) -> Point:
    """
    Parse a point of the Cartan subspace such as ``p1``, ``p2+p3`` or ``2p1-p4``.

    Raises:
        ValueError: For any other text.
    """
    compact = text.replace(" ", "")
    coeffs = [0] * CARTAN_DIM
    pos = 0
    while pos < len(compact):
        match = _P_TERM_RE.match(compact, pos)
        if match is None or (pos > 0 and not match.group(1)):
            raise ValueError(f"cannot parse point {text!r}, expected terms like 2p1-p3")
        sign = -1 if match.group(1) == "-" else 1
        coeffs[int(match.group(3)) - 1] += sign * int(match.group(2) or 1)
        pos = match.end()
    if not compact:
        raise ValueError("empty point expression")
    return tuple(ExactArith.to_gauss(c) for c in coeffs)


def _format_vector(vector: Vector) -> str:
    return "(" + ", ".join(ExactArith.format_gauss(vector.get(k, ZERO)) for k in range(CARTAN_DIM)) + ")"


class Session:
    """
    Lazily built models shared by the commands of one invocation.

    Args:
        seed (int): Seed for every randomized check.
    """

    def __init__(self, seed: int = DEFAULT_SEED) -> None:
        self.seed = seed

    @cached_property
    def model(self) -> E8Model:
        return E8Model()

    @cached_property
    def dictionary(self) -> SpinorDictionary:
        return SpinorDictionary(self.model).build()

    @cached_property
    def group(self) -> LittleWeylGroup:
        return LittleWeylGroup()

    @cached_property
    def tools(self) -> OrbitTools:
        return OrbitTools(self.model, self.dictionary, self.seed)

    @cached_property
    def theory(self) -> InvariantTheory:
        return InvariantTheory(self.group)

    def element(self, text: str) -> LieElement:
        """Spinor text parsed into g1."""
        return self.dictionary.parse(text)


# -- check groups ----------------------------------------------------------------------


def grading_checks(session: Session, report: Report) -> None:
    """Root system, theta, grading and Killing form of the E8 model."""
    model = session.model
    anchor = "E8 grading"
    report.check("e8.roots", anchor, sum(1 for r in model.roots if r is not None) == 240)
    report.check("e8.dim", anchor, len(model.roots) == model.DIM == 248)
    bad_nodes = model.simple_relation_defects()
    report.check("e8.simple_relations", anchor, not bad_nodes, f"nodes {bad_nodes}" if bad_nodes else "")
    dims = tuple(len(c) for c in model.components)
    report.check("grading.dims", anchor, dims == (60, 64, 60, 64), f"{dims}")
    report.check("grading.theta_automorphism", anchor, not model.theta_defects())
    report.check("grading.closed", anchor, not model.grading_defects())
    report.check("grading.g0_type", anchor, model.g0_type() == "A3+D5", model.g0_type())
    jacobi = model.jacobi_defects(session.seed)
    report.check("e8.jacobi", anchor, not jacobi, f"{len(jacobi)} failing triples" if jacobi else "")
    report.check("killing.invariant", anchor, model.invariance_defects(session.seed) == 0)
    e1, f1 = model.e(1), model.f(1)
    report.check("killing.trace_form", anchor, bool(model.killing(e1, f1)) and model.killing(e1, f1) == model.killing_trace(e1, f1))


def spin_checks(session: Session, report: Report) -> None:
    """Clifford relations, the spin representation and the identification with g1."""
    anchor = "spin construction"
    report.check("spin.clifford_relations", anchor, not CliffordModel.clifford_defect())
    report.check("spin.rho_homomorphism", anchor, not CliffordModel.rho_homomorphism_defect())
    report.check("spin.delta_plus_invariant", anchor, CliffordModel.delta_plus_invariant())
    highest = CliffordModel.highest_weight_labels()
    report.check("spin.highest_weight", anchor, highest == [(1, 2, 3, 4)], f"{highest}")
    dictionary = session.dictionary
    anchor = "identification with g1"
    report.check("dictionary.weights", anchor, dictionary.weight_multisets_agree())
    report.check("dictionary.root_lines", anchor, dictionary.single_root_lines())
    mismatches = dictionary.pairing_mismatches()
    report.check("dictionary.pairing", anchor, not mismatches, f"{len(mismatches)} pairs differ" if mismatches else "")
    report.check("dictionary.g0_simple_roots", anchor, session.model.is_g0_simple_system(dictionary.g0_simple_roots))
    scheme = SpinorWeights.dynkin_scheme(SpinorTensor.parse(SCHEME_EXAMPLE))
    report.check("scheme.example", "Dynkin schemes", len(scheme.nodes) == 8, f"{len(scheme.edges)} edges")
    for number, text in enumerate(CARTAN_BASIS, start=1):
        square = SpinorWeights.dynkin_scheme(SpinorTensor.parse(text)).is_square()
        report.check(f"scheme.p{number}", "Dynkin schemes", square)


def cartan_checks(session: Session, report: Report) -> None:
    """The Cartan subspace c and the Cartan subalgebra z_g(c)."""
    result = session.tools.cartan_subspace_report()
    anchor = "Cartan subspace"
    report.check("cartan.commuting", anchor, result.commuting)
    report.check("cartan.semisimple", anchor, all(result.semisimple), f"{result.semisimple}")
    report.check("cartan.z_g1", anchor, result.z_g1_is_c, f"dim {result.z_g1_dim}")
    report.check("cartan.z_g_dim", anchor, result.z_g_dim == 8, f"dim {result.z_g_dim}")
    report.check("cartan.z_g_abelian", anchor, result.z_g_abelian)
    report.check("cartan.z_g_semisimple", anchor, result.z_g_semisimple)


def table1_checks(session: Session, report: Report, with_components: bool = True) -> None:
    """Stabilizer classes with sizes, fixed spaces, normalizer quotients and identity components."""
    group = session.group
    anchor = "stabilizer classes"
    report.check("w0.order", anchor, group.order == W0_ORDER, f"{group.order}")
    subgroups = group.table1_subgroups()
    for index, subgroup in enumerate(subgroups, start=1):
        row = TableData.table1_row(index)
        fixed = group.fixed_space(subgroup)
        gamma = group.normalizer_quotient_order(subgroup)
        report.text(
            f"M{index}  |M|={subgroup.order:<6} |Gamma|={gamma:<6} c_M=" + (", ".join(_format_vector(v) for v in fixed) or "0")
        )
        report.check(f"M{index}.size", anchor, subgroup.order == row.order, f"{subgroup.order} (printed {row.order})")
        report.check(f"M{index}.fixed_space", anchor, group.same_span(fixed, group.printed_fixed_space(index)))
        report.check(f"M{index}.gamma_order", anchor, gamma == row.gamma_order, f"{gamma} (printed {row.gamma_order})")
        report.info(f"M{index}.component_group", row.component_group)
        if index in range(2, 9):
            convention = group.gamma_convention(index)
            report.check(f"M{index}.gamma_generators", "normalizer quotients", convention is not None, convention or "no match")
    if with_components:
        for index, computed, printed in session.tools.identity_component_checks(group):
            report.check(
                f"M{index}.identity_component",
                anchor,
                computed == printed,
                f"{computed.format()} (printed {TableData.table1_row(index).identity_component})",
            )
    scalars = group.central_scalars()
    report.check("w0.minus_id", "central elements", scalars["-id"])
    report.check("w0.i_id", "central elements", scalars["i*id"])
    zero = (ZERO,) * CARTAN_DIM
    for text, expected in (("0", 9), ("p1", 8), ("p2+p3", 7)):
        point = zero if text == "0" else parse_p_expr(text)
        found = group.stratum_of(point)
        report.check(f"stratum_of.{text}", "strata", found == expected, f"{found}")
    presentation = group.check_presentation()
    anchor = "five-involution presentation"
    report.check("presentation.involutions", anchor, presentation.involutions)
    for relation, holds in presentation.relations.items():
        report.check(f"presentation.{relation}", anchor, holds)
    report.check("presentation.generates", anchor, presentation.generates)
    report.check("presentation.roots", anchor, presentation.reflections and presentation.root_convention is not None)
    report.info("presentation.root_convention", str(presentation.root_convention))
    for index in range(1, 6):
        result = group.stratum_polynomial_check(index)
        anchor = f"polynomial list of stratum {index}"
        report.check(f"stratum{index}.factors", anchor, all(result.factored), f"{result.restricted_lines} restricted lines")
        report.check(f"stratum{index}.covered", anchor, result.covered)
        report.check(f"stratum{index}.generic_stabilizer", anchor, result.generic_stabilizer)
        if index == 1:
            hyperplanes = len(group.reflections())
            report.check(
                "stratum1.degree", anchor, result.degree_sum == hyperplanes == REFLECTION_HYPERPLANES, f"{result.degree_sum} vs {hyperplanes}"
            )


def invariant_checks(session: Session, report: Report, show_polys: bool = True) -> None:
    """Catalog, action tables, identities, z-forms and independence."""
    theory = session.theory
    catalog = theory.build_catalog()
    if show_polys:
        for name, poly in catalog.named().items():
            report.text(f"{name} = {ExactArith.format_poly(poly)}")
    anchor = "invariants"
    identities = theory.check_identities()
    for name, holds in identities.results.items():
        report.check(f"identity: {name}", anchor, holds)
    report.info("hessian.sign", str(identities.hessian_sign))
    quadric = theory.quadric_table_mismatches()
    report.check("action.quadrics", "quadric action table", not quadric, "; ".join(quadric))
    quartic = theory.quartic_table_mismatches()
    report.check("action.quartics", "quartic action table", not quartic, "; ".join(quartic))
    z_forms = theory.z_basis_forms()
    for number, (scalar, expected) in enumerate(zip(z_forms.quadric_scalars, z_forms.expected_scalars), start=1):
        shown = ExactArith.format_gauss(scalar) if scalar is not None else "not proportional"
        detail = f"scalar {shown}, listed {ExactArith.format_gauss(expected)}"
        report.check(f"z_form.Q{number}", "z-coordinate forms", scalar is not None and scalar == expected, detail)
    for number, exact in enumerate(z_forms.quartic_exact, start=1):
        report.check(f"z_form.A{number}", "z-coordinate forms", exact)
    report.check("z_form.zero_sum", "z-coordinate forms", z_forms.zero_sum)
    report.info("z_basis.order", str(z_forms.basis_order))
    rank = theory.jacobian_rank(session.seed)
    report.check("invariants.independent", anchor, rank == 4, f"Jacobian rank {rank}")
    orbit = theory.quadric_orbit()
    report.check("quadrics.orbit", anchor, orbit == set(range(1, 11)), f"{sorted(orbit)}")


def mixed_checks(session: Session, report: Report, index: int) -> None:
    """Every row of the mixed-element table over stratum ``index``."""
    result = session.tools.verify_mixed_table(index, session.group)
    anchor = f"mixed elements over stratum {index}"
    for row in result.rows:
        for name, ok in row.checks.items():
            report.check(f"mixed{index}.row{row.row}.{name}", anchor, ok, row.details.get(name, ""))
        if row.continued:
            report.info(f"mixed{index}.row{row.row}.continued", row.details.get("continued", ""))
    report.info(f"mixed{index}.signs", str(result.signs))
    if result.convention:
        hits, listed = result.convention_fit
        report.check(f"mixed{index}.convention", anchor, hits == listed, f"{result.convention}; fits {hits}/{listed} rows")


def jordan_suite(session: Session, report: Report) -> None:
    failures = session.tools.jordan_round_trip()
    report.check("jordan.round_trip", "Jordan decomposition", not failures, "; ".join(failures[:3]))


# -- commands --------------------------------------------------------------------------


def _cmd_verify_all(session: Session, _: argparse.Namespace) -> Report:
    report = Report("verify-all")
    grading_checks(session, report)
    spin_checks(session, report)
    cartan_checks(session, report)
    table1_checks(session, report)
    invariant_checks(session, report, show_polys=False)
    for index in MIXED_INDICES:
        mixed_checks(session, report, index)
    jordan_suite(session, report)
    return report


def _cmd_table1(session: Session, _: argparse.Namespace) -> Report:
    report = Report("table1")
    table1_checks(session, report)
    return report


def _cmd_invariants(session: Session, _: argparse.Namespace) -> Report:
    report = Report("invariants")
    invariant_checks(session, report)
    return report


def _cmd_mixed_table(session: Session, args: argparse.Namespace) -> Report:
    report = Report(f"mixed-table {args.index}")
    for number, row in enumerate(TableData.mixed_rows(args.index), start=1):
        report.text(f"row {number}: {row.element}  dim {row.dim}  z {row.centralizer}")
    mixed_checks(session, report, args.index)
    return report


def _cmd_dynkin_scheme(_: Session, args: argparse.Namespace) -> Report:
    report = Report("dynkin-scheme")
    tensor = SpinorTensor.parse(args.element or SCHEME_EXAMPLE)
    scheme = SpinorWeights.dynkin_scheme(tensor)
    report.text(f"nodes {len(scheme.nodes)}, edges {len(scheme.edges)}")
    for first, second, style in scheme.edges:
        report.text(f"  {scheme.node_name(first)} -- {scheme.node_name(second)} ({style})")
    report.check("scheme.nodes", "Dynkin schemes", len(scheme.nodes) == len(tensor.coords))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(scheme.to_dot())
        logger.info("DOT file written to %s", args.dot)
    return report


def _cmd_jordan(session: Session, args: argparse.Namespace) -> Report:
    report = Report("jordan")
    x = session.element(args.element)
    s, n = session.tools.jordan_g1(x)
    report.text(f"s = {session.dictionary.from_lie(s).format()}")
    report.text(f"n = {session.dictionary.from_lie(n).format()}")
    anchor = "Jordan decomposition"
    report.check("jordan.sum", anchor, s + n == x)
    report.check("jordan.commute", anchor, not session.model.bracket(s, n))
    report.check("jordan.semisimple", anchor, session.tools.is_semisimple(s))
    report.check("jordan.nilpotent", anchor, session.tools.is_nilpotent(n))
    return report


def _cmd_characteristic(session: Session, args: argparse.Namespace) -> Report:
    report = Report("characteristic")
    tools = session.tools
    e = session.element(args.element)
    base: Optional[LieElement] = None
    if args.relative_to:
        base = tools.point_element(parse_p_expr(args.relative_to))
        if session.model.bracket(base, e):
            raise ValueError("--element does not commute with --relative-to")
    triple = tools.sl2_complete(e, within=base)
    defects = triple.defects(session.model)
    report.check("sl2.relations", "homogeneous sl2-triples", not defects, ", ".join(defects))
    report.check("sl2.open_orbit", "openness criterion", tools.open_orbit_check(e, triple.h, within=base))
    if base is None:
        value = tools.characteristic(triple.h)
        report.text(f"characteristic {value.format()}")
    else:
        setting = tools.relative_setting(base)
        value = setting.characteristic(triple.h)
        report.text(f"relative characteristic {value.format()}")
        report.text(f"dim {tools.orbit_dim_in_centralizer(base, e)}")
        signature: CentralizerSignature = tools.signature(tools.centralizer_in(base + e, session.model.components[0]))
        report.text(f"centralizer {signature.format()}")
    return report


def _cmd_dump_grading(session: Session, _: argparse.Namespace) -> Report:
    report = Report("dump-grading")
    model = session.model
    for label, height, degree in model.dump_grading():
        report.text(f"{label}\theight {height}\tdegree {degree}")
    for node, root in enumerate(session.dictionary.g0_simple_roots, start=1):
        report.text(f"g0 node {node}: {','.join(str(c) for c in root)}")
    dims = tuple(len(c) for c in model.components)
    report.check("grading.dims", "E8 grading", dims == (60, 64, 60, 64), f"{dims}")
    return report


COMMANDS: Dict[str, Callable[[Session, argparse.Namespace], Report]] = {
    "verify-all": _cmd_verify_all,
    "table1": _cmd_table1,
    "invariants": _cmd_invariants,
    "mixed-table": _cmd_mixed_table,
    "dynkin-scheme": _cmd_dynkin_scheme,
    "jordan": _cmd_jordan,
    "characteristic": _cmd_characteristic,
    "dump-grading": _cmd_dump_grading,
}

ELEMENT_REQUIRED = ("jordan", "characteristic")


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse CLI arguments with env fallbacks."""

    seed_default, seed_warning = _read_env_int("THETASPIN_SEED", DEFAULT_SEED)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=seed_default, help="Seed for randomized checks (env THETASPIN_SEED)")
    common.add_argument("--json", help="Write the report as JSON to this path")
    common.add_argument(
        "--metrics-file",
        default=os.getenv("THETASPIN_METRICS_FILE"),
        help="Write Prometheus text-format metrics to this path (env THETASPIN_METRICS_FILE)",
    )
    common.add_argument(
        "--log-level",
        default=os.getenv("THETASPIN_LOG_LEVEL", "INFO"),
        help="Logging level (env THETASPIN_LOG_LEVEL)",
    )

    parser = argparse.ArgumentParser(description="Exact re-verification of the Spin(10)xSL(4) theta-group tables")
    parser.add_argument("--version", action="version", version=get_version_for_argparse("thetaspin"))
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-all", parents=[common], help="Run every check")
    sub.add_parser("table1", parents=[common], help="Stabilizer classes and strata")
    sub.add_parser("invariants", parents=[common], help="Invariant catalog and identities")
    mixed = sub.add_parser("mixed-table", parents=[common], help="Mixed elements over one stratum")
    mixed.add_argument("index", type=int, choices=MIXED_INDICES, help="Stratum index 2..8")
    scheme = sub.add_parser("dynkin-scheme", parents=[common], help="Dynkin scheme of a spinor element")
    scheme.add_argument("--element", help="Spinor text; defaults to the eight-node example")
    scheme.add_argument("--dot", help="Write the scheme in DOT format to this path")
    jordan = sub.add_parser("jordan", parents=[common], help="Jordan decomposition of an element of g1")
    jordan.add_argument("--element", help="Spinor text")
    char = sub.add_parser("characteristic", parents=[common], help="Characteristic of a nilpotent element")
    char.add_argument("--element", help="Spinor text")
    char.add_argument("--relative-to", help="Semisimple base point such as p1, for relative characteristics")
    sub.add_parser("dump-grading", parents=[common], help="Degrees of the positive roots")

    args = parser.parse_args(argv)
    if args.command in ELEMENT_REQUIRED and not args.element:
        parser.error(f"{args.command} requires --element")

    setattr(args, "env_seed_warning", seed_warning)
    return args


def _configure_logging(level_name: str) -> None:
    """Configure root logger format and level."""

    level = getattr(logging, level_name.upper(), logging.INFO)
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def run(args: argparse.Namespace) -> int:
    """
    Execute one parsed command and write its outputs.

    Returns:
        int: EXIT_OK if every check passed, EXIT_FAILED otherwise.
    """
    started = time.perf_counter()
    session = Session(args.seed)
    report = COMMANDS[args.command](session, args)
    elapsed = time.perf_counter() - started
    sys.stdout.write(report.render_text())
    if args.json:
        report.write_json(args.json)
    if args.metrics_file:
        report.write_metrics(args.metrics_file, elapsed)
    logger.info("%s finished in %.1f s: %d/%d checks passed", args.command, elapsed, report.total - report.failed, report.total)
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    """CLI entry point."""

    args = parse_args()
    _configure_logging(args.log_level)

    seed_warning = getattr(args, "env_seed_warning", None)
    if seed_warning:
        logger.warning(seed_warning)

    try:
        code = run(args)
    except ConsistencyError as exc:
        logger.error("Internal consistency error: %s", exc)
        raise SystemExit(EXIT_INCONSISTENT) from exc
    except ValueError as exc:
        logger.error("Invalid input: %s", exc)
        raise SystemExit(EXIT_USAGE) from exc
    raise SystemExit(code)


if __name__ == "__main__":  # pragma: no cover
    main()
