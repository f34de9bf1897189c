"""
CLI orchestration using LangGraph: parse the request, compute, render
"""

import logging
import time
from typing import Any, Literal, Optional, TypedDict

from langgraph.graph import StateGraph, END

from models.config import ToolkitConfig
from models.constructions import MabcSpec, NoasymSpec
from models.errors import BudgetExceeded, IncompleteSet, InputError
from models.report import Invocation, Report
from engines.constructions import ConstructionFactory
from utils.config_utils import ConfigManager
from utils.parsing_utils import SpecParser
from utils.rational_utils import RationalUtils
from workflow.handlers import CommandHandlers
from workflow.renderers import ReportRenderer

logger = logging.getLogger(__name__)

# Subcommands whose positional spec names the monoid kind directly
DIRECT_KINDS = {"ns": "ns", "affine": "affine", "block": "block", "puiseux": "puiseux"}
SCAN_COMMANDS = ("search", "betti", "infdelta")

EXIT_CODES = {"input": 2, "budget": 3, "internal": 1}


class WorkflowState(TypedDict):
    """State for the invariant workflow graph"""

    args: Any
    request: Optional[Invocation]
    report: Optional[Report]
    output: Optional[str]
    error: Optional[str]
    error_kind: Optional[str]
    exit_code: int


class InvariantWorkflow:
    """LangGraph pipeline behind every CLI subcommand"""

    def __init__(self, config: Optional[ToolkitConfig] = None):
        self.config = config or ConfigManager.override_from_environment(
            ConfigManager.load_toolkit_config()
        )
        logger.debug(f"Configuration: {ConfigManager.get_config_summary(self.config)}")
        self.graph = None
        self._build_graph()

    def _build_graph(self):
        """Build the LangGraph workflow"""
        workflow = StateGraph(WorkflowState)

        workflow.add_node("parse_input", self._parse_input_node)
        workflow.add_node("compute", self._compute_node)
        workflow.add_node("render", self._render_node)
        workflow.add_node("error_handler", self._error_handler_node)

        workflow.set_entry_point("parse_input")

        workflow.add_conditional_edges(
            "parse_input",
            self._route_on_error("compute"),
            {"next": "compute", "error": "error_handler"},
        )
        workflow.add_conditional_edges(
            "compute",
            self._route_on_error("render"),
            {"next": "render", "error": "error_handler"},
        )
        workflow.add_conditional_edges(
            "render",
            self._route_on_error("end"),
            {"next": END, "error": "error_handler"},
        )
        workflow.add_edge("error_handler", END)

        self.graph = workflow.compile()

    @staticmethod
    def _classify(error: Exception) -> str:
        if isinstance(error, InputError):
            return "input"
        if isinstance(error, (BudgetExceeded, IncompleteSet)):
            return "budget"
        return "internal"

    def _fail(self, state: WorkflowState, stage: str, error: Exception) -> WorkflowState:
        kind = self._classify(error)
        if kind == "internal":
            logger.exception(f"Error in {stage}: {error}")
        else:
            logger.error(f"Error in {stage}: {error}")
        state["error"] = f"{type(error).__name__}: {error}"
        state["error_kind"] = kind
        return state

    def _parse_input_node(self, state: WorkflowState) -> WorkflowState:
        """Turn parsed CLI arguments into an Invocation with a built monoid"""
        try:
            state["request"] = self._build_request(state["args"])
        except Exception as e:
            return self._fail(state, "parse_input", e)
        return state

    def _build_request(self, args) -> Invocation:
        config = self.config
        command = args.command
        budget = args.budget or config.budget
        options = {}
        spec_text = getattr(args, "spec", None) or ""

        if command == "puiseux" and args.level is not None:
            monoid = ConstructionFactory.noasym_monoid(NoasymSpec(level=args.level))
            spec_text = spec_text or f"level {args.level}"
        elif command in DIRECT_KINDS:
            if not spec_text:
                raise InputError(f"{command} needs a monoid spec")
            monoid = CommandHandlers.build_monoid(
                DIRECT_KINDS[command], spec_text, getattr(args, "restrict", None), budget
            )
        elif command in ("search", "betti", "catenary", "asym"):
            monoid = CommandHandlers.build_monoid(args.kind, spec_text, args.restrict, budget)
            spec_text = f"{args.kind} {spec_text}"
        elif command == "mabc":
            spec = MabcSpec(
                a=args.a,
                b=args.b,
                c=RationalUtils.parse(args.c),
                truncation=max(args.truncation or args.index, args.index),
            )
            monoid = ConstructionFactory.mabc_presentation(spec)
            options.update(spec=spec, index=args.index, power=args.power)
            spec_text = f"{args.a} {args.b} {args.c}"
        elif command == "chain":
            monoid = ConstructionFactory.chain_monoid(args.index)
            options["index"] = args.index
            spec_text = str(args.index)
        elif command == "infdelta":
            monoid = ConstructionFactory.infinite_delta_member(args.index)
            options["index"] = args.index
            spec_text = str(args.index)
        else:
            raise InputError(f"Unknown command {command!r}")

        if command == "puiseux":
            options["series"] = SpecParser.parse_int_list(args.series) if args.series else None
        if command == "catenary":
            options["tame"] = args.tame
        if command == "asym":
            options["terms"] = args.terms or config.asymptotic.terms
            options["tol"] = args.tol or config.asymptotic.tolerance

        element = None
        if getattr(args, "element", None):
            element = CommandHandlers.parse_element(monoid, args.element)

        bound = args.bound
        if bound is None and command in SCAN_COMMANDS:
            bound = ConfigManager.default_bound(config, monoid)

        output_format = "json" if args.json else "csv" if args.csv else "table"
        request = Invocation(
            command=command,
            spec=spec_text,
            kind=getattr(args, "kind", None),
            monoid=monoid,
            element=element,
            bound=bound,
            budget=budget,
            workers=args.workers or config.workers,
            output_format=output_format,
            timing=args.timing,
            options=options,
        )
        logger.debug(f"Parsed {command} request for {monoid.label()} (bound {bound})")
        return request

    def _compute_node(self, state: WorkflowState) -> WorkflowState:
        """Run the invariant computation for the request"""
        try:
            request = state["request"]
            started = time.perf_counter()
            report = CommandHandlers.dispatch(request.command)(request)
            if request.timing:
                report.timing = round(time.perf_counter() - started, 6)
            state["report"] = report
        except Exception as e:
            return self._fail(state, "compute", e)
        return state

    def _render_node(self, state: WorkflowState) -> WorkflowState:
        """Format the report for standard output"""
        try:
            state["output"] = ReportRenderer.render(
                state["report"], state["request"].output_format
            )
            state["exit_code"] = 0
        except Exception as e:
            return self._fail(state, "render", e)
        return state

    def _error_handler_node(self, state: WorkflowState) -> WorkflowState:
        """Map the recorded error to an exit code"""
        kind = state.get("error_kind") or "internal"
        state["exit_code"] = EXIT_CODES[kind]
        state["output"] = None
        logger.error(f"Handling {kind} error: {state.get('error')}")
        return state

    @staticmethod
    def _route_on_error(target: str):
        def route(state: WorkflowState) -> Literal["next", "error"]:
            return "error" if state.get("error") else "next"

        route.__name__ = f"route_to_{target}"
        return route

    def run(self, args) -> WorkflowState:
        """Run the graph for one parsed argument namespace"""
        initial_state = WorkflowState(
            args=args,
            request=None,
            report=None,
            output=None,
            error=None,
            error_kind=None,
            exit_code=1,
        )
        return self.graph.invoke(initial_state)
