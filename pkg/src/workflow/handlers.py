"""
Command handlers: build monoids from spec strings and turn invariant
results into reports
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from models.constructions import MabcSpec
from models.errors import InputError, InvalidSpec, TagMismatch
from models.group import ZeroSumSequence
from models.invariants import LdSearchReport, LengthStats
from models.monoid import (
    AffineSemigroup,
    BlockMonoid,
    DirectSum,
    NumericalSemigroup,
    PuiseuxTruncation,
)
from models.report import Invocation, Report, ReportFlags
from engines.block_monoid import BlockMonoidUtils
from engines.constructions import NOASYM_BASE, ConstructionFactory
from engines.factor_engine import FactorEngine
from engines.invariants import InvariantCalculator
from engines.monoid_core import MonoidBuilder
from utils.parsing_utils import SpecParser
from utils.rational_utils import RationalUtils

logger = logging.getLogger(__name__)

KINDS = ("ns", "affine", "puiseux", "block")


class CommandHandlers:
    """Utility class mapping CLI subcommands onto engine operations"""

    # --- parsing ----------------------------------------------------------

    @staticmethod
    def build_monoid(kind: str, spec: str, restrict: Optional[str] = None, budget: Optional[int] = None):
        if kind == "ns":
            return MonoidBuilder.make_numerical(SpecParser.parse_int_list(spec))
        if kind == "affine":
            return MonoidBuilder.make_affine(SpecParser.parse_vector_list(spec))
        if kind == "puiseux":
            return MonoidBuilder.make_puiseux(SpecParser.parse_rational_list(spec))
        if kind == "block":
            group = SpecParser.parse_group(spec)
            subset = SpecParser.parse_vector_list(restrict) if restrict else None
            if budget:
                return BlockMonoidUtils.block_presentation(group, subset, budget)
            return BlockMonoidUtils.block_presentation(group, subset)
        raise InvalidSpec(f"Unknown monoid kind {kind!r}; expected one of {', '.join(KINDS)}")

    @staticmethod
    def parse_element(monoid, text: str):
        if isinstance(monoid, NumericalSemigroup):
            return SpecParser.parse_int(text)
        if isinstance(monoid, PuiseuxTruncation):
            return RationalUtils.parse(text)
        if isinstance(monoid, AffineSemigroup):
            return SpecParser.parse_vector(text)
        if isinstance(monoid, BlockMonoid):
            return BlockMonoidUtils.parse_sequence(monoid, text)
        raise TagMismatch(f"Elements of {monoid.label()} cannot be given on the command line")

    # --- rendering helpers ------------------------------------------------

    @staticmethod
    def render_element(monoid, x) -> Any:
        if isinstance(x, Fraction):
            return RationalUtils.to_str(x)
        if isinstance(monoid, BlockMonoid):
            return ZeroSumSequence.over(monoid.group, monoid.support, x).render()
        if isinstance(monoid, DirectSum):
            return [CommandHandlers.render_element(c, part) for c, part in zip(monoid.components, x)]
        if isinstance(x, tuple):
            return list(x)
        return x

    @staticmethod
    def stats_results(stats: LengthStats) -> Dict[str, Any]:
        return {
            "length_set": list(stats.lengths),
            "min_length": stats.min_len,
            "max_length": stats.max_len,
            "elasticity": RationalUtils.to_str(stats.elasticity),
            "delta": list(stats.delta),
            "ld": RationalUtils.to_str(stats.ld),
        }

    @staticmethod
    def search_results(monoid, report: LdSearchReport) -> Dict[str, Any]:
        return {
            "bound": report.bound,
            "min_ld": RationalUtils.to_str(report.minimum_ld),
            "witness": CommandHandlers.render_element(monoid, report.witness),
            "witness_length_set": list(report.witness_lengths),
            "max_delta_seen": report.max_delta_seen,
            "lower_bound_certificate": RationalUtils.to_str(report.lower_bound_certificate),
            "accepted_within_scan": report.accepted_within_scan,
            "scanned": report.scanned,
        }

    @staticmethod
    def _report(request: Invocation, monoid, results: Dict[str, Any], **flags) -> Report:
        return Report(
            command=request.command,
            input=request.spec,
            monoid=monoid.label(),
            results=results,
            flags=ReportFlags(**flags),
        )

    # --- subcommands ------------------------------------------------------

    @staticmethod
    def describe(request: Invocation) -> Report:
        """ns, affine, block and puiseux: one element, or a scan of the monoid"""
        monoid = request.monoid
        if request.element is not None:
            stats = InvariantCalculator.element_stats(monoid, request.element, request.budget)
            results = {"element": CommandHandlers.render_element(monoid, request.element)}
            results.update(CommandHandlers.stats_results(stats))
            return CommandHandlers._report(request, monoid, results)

        results: Dict[str, Any] = {}
        if isinstance(monoid, NumericalSemigroup):
            results["generators"] = list(monoid.generators)
            results["frobenius_number"] = MonoidBuilder.frobenius_number(monoid)
        elif isinstance(monoid, AffineSemigroup):
            results["generators"] = [list(g) for g in monoid.generators]
        elif isinstance(monoid, PuiseuxTruncation):
            results["atoms"] = [RationalUtils.to_str(a) for a in monoid.atoms]
        elif isinstance(monoid, BlockMonoid):
            results["group"] = monoid.group.label()
            results["davenport"] = monoid.davenport
            results["atom_count"] = monoid.atom_count
            results["atoms"] = [
                ZeroSumSequence.over(monoid.group, monoid.support, a).render()
                for a in monoid.atoms
            ]
        return CommandHandlers._report(request, monoid, results)

    @staticmethod
    def search(request: Invocation) -> Report:
        monoid = request.monoid
        deltas = InvariantCalculator.delta_scan(monoid, request.bound, request.budget, request.workers)
        report = InvariantCalculator.ld_search(monoid, request.bound, request.budget, request.workers)
        results = {"delta_scan": list(deltas.delta)}
        results.update(CommandHandlers.search_results(monoid, report))
        return CommandHandlers._report(request, monoid, results, under_approximation=True)

    @staticmethod
    def betti(request: Invocation) -> Report:
        monoid = request.monoid
        outcome = InvariantCalculator.betti_ld_test(monoid, request.bound, request.budget, request.workers)
        results = {
            "bound": request.bound,
            "betti_elements": [
                CommandHandlers.render_element(monoid, b) for b in outcome.betti_elements
            ],
            "betti_length_sets": [
                list(FactorEngine.length_set(monoid, b, request.budget).lengths)
                for b in outcome.betti_elements
            ],
            "betti_lds": [RationalUtils.to_str(ld) for ld in outcome.betti_lds],
            "min_ld": RationalUtils.to_str(outcome.minimum_ld),
            "lower_bound_certificate": RationalUtils.to_str(outcome.certificate),
            "min_ld_is_certificate": outcome.minimum_is_certificate,
            "attained_at_betti": outcome.attained_at_betti,
            "betti_witness": CommandHandlers.render_element(monoid, outcome.betti_witness),
        }
        return CommandHandlers._report(request, monoid, results, under_approximation=True)

    @staticmethod
    def catenary(request: Invocation) -> Report:
        monoid = request.monoid
        if request.element is None:
            raise InputError("catenary needs --element")
        fs = FactorEngine.factorizations(monoid, request.element, request.budget)
        results = {
            "element": CommandHandlers.render_element(monoid, request.element),
            "factorization_count": len(fs),
            "catenary_degree": InvariantCalculator.catenary_of_set(fs),
            "betti": FactorEngine.graph_components(fs).is_disconnected,
        }
        tame = request.options.get("tame")
        if tame:
            sub = SpecParser.parse_vector(tame)
            tame_result = InvariantCalculator.tame_degree_result(
                monoid, request.element, sub, request.budget
            )
            results["tame_degree"] = tame_result.value
            results["tame_degree_adjusted"] = tame_result.adjusted
        return CommandHandlers._report(request, monoid, results, complete=fs.complete)

    @staticmethod
    def asym(request: Invocation) -> Report:
        monoid = request.monoid
        if request.element is None:
            raise InputError("asym needs --element")
        options = request.options
        tolerance = RationalUtils.parse(options.get("tol") or "1/10")
        outcome = InvariantCalculator.asymptotic_ld(
            monoid, request.element, options["terms"], tolerance, request.budget
        )
        report = CommandHandlers._report(
            request,
            monoid,
            {
                "element": CommandHandlers.render_element(monoid, request.element),
                "terms": options["terms"],
                "min_delta": outcome.min_delta,
                "predicted_limit": RationalUtils.to_str(outcome.predicted_limit),
                "tolerance": RationalUtils.to_str(outcome.tolerance),
                "converged": outcome.converged,
            },
            under_approximation=outcome.under_approximation,
        )
        report.series = [[t.n, RationalUtils.to_str(t.ld)] for t in outcome.terms]
        return report

    @staticmethod
    def puiseux(request: Invocation) -> Report:
        checkpoints: Optional[List[int]] = request.options.get("series")
        if not checkpoints:
            return CommandHandlers.describe(request)
        monoid = request.monoid
        base = request.element if request.element is not None else NOASYM_BASE
        points = ConstructionFactory.multiple_series(
            monoid, base, checkpoints, request.budget, request.workers
        )
        report = CommandHandlers._report(
            request,
            monoid,
            {
                "base": CommandHandlers.render_element(monoid, base),
                "checkpoints": [
                    {
                        "n": p.n,
                        "ld": RationalUtils.to_str(p.ld),
                        "min_length": p.min_len,
                        "max_length": p.max_len,
                        "size": p.size,
                    }
                    for p in points
                ],
            },
        )
        report.series = [[p.n, RationalUtils.to_str(p.ld)] for p in points]
        return report

    @staticmethod
    def mabc(request: Invocation) -> Report:
        options = request.options
        spec: MabcSpec = options["spec"]
        i, t = options["index"], options["power"]
        monoid = request.monoid
        lengths = ConstructionFactory.mabc_power_lengthset(spec, i, t, request.budget)
        closed = ConstructionFactory.mabc_closed_form(spec, i, t)
        stats = InvariantCalculator.length_stats(lengths)
        results = {"index": i, "power": t, "k": spec.k(i), "atom_count": monoid.atom_count}
        results.update(CommandHandlers.stats_results(stats))
        results["closed_form_matches"] = lengths.lengths == closed.lengths
        return CommandHandlers._report(request, monoid, results)

    @staticmethod
    def chain(request: Invocation) -> Report:
        i = request.options["index"]
        monoid = request.monoid
        element = tuple(3 if n == 0 else 0 for n in range(i))
        stats = InvariantCalculator.element_stats(monoid, element, request.budget)
        results = {"exponents": list(ConstructionFactory.chain_exponents(i)), "weights": list(monoid.weights)}
        results.update(CommandHandlers.stats_results(stats))
        if request.bound:
            deltas = InvariantCalculator.delta_scan(monoid, request.bound, request.budget, request.workers)
            results["bound"] = request.bound
            results["delta_scan"] = list(deltas.delta)
        return CommandHandlers._report(request, monoid, results, under_approximation=bool(request.bound))

    @staticmethod
    def infdelta(request: Invocation) -> Report:
        i = request.options["index"]
        monoid = request.monoid
        witness = ConstructionFactory.infinite_delta_witness(i)
        stats = InvariantCalculator.element_stats(monoid, witness, request.budget)
        report = InvariantCalculator.ld_search(monoid, request.bound, request.budget, request.workers)
        results = {"generators": list(monoid.generators), "element": witness}
        results.update(CommandHandlers.stats_results(stats))
        results.update(CommandHandlers.search_results(monoid, report))
        return CommandHandlers._report(request, monoid, results, under_approximation=True)

    @staticmethod
    def dispatch(command: str) -> Callable[[Invocation], Report]:
        table = {
            "ns": CommandHandlers.describe,
            "affine": CommandHandlers.describe,
            "block": CommandHandlers.describe,
            "puiseux": CommandHandlers.puiseux,
            "mabc": CommandHandlers.mabc,
            "chain": CommandHandlers.chain,
            "infdelta": CommandHandlers.infdelta,
            "asym": CommandHandlers.asym,
            "search": CommandHandlers.search,
            "betti": CommandHandlers.betti,
            "catenary": CommandHandlers.catenary,
        }
        return table[command]
