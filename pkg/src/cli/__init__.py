"""
Command-line surface: parse argv, run the invariant workflow, print the report
"""

import json
import logging
import sys
from typing import List, Optional

from models.report import Report
from workflow.invariant_workflow import InvariantWorkflow
from .parser import build_parser

logger = logging.getLogger(__name__)

USAGE_EXIT = 2


def run(argv: Optional[List[str]] = None) -> int:
    """Run one invocation and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return e.code if isinstance(e.code, int) else USAGE_EXIT

    if args.print_schema:
        print(json.dumps(Report.model_json_schema(), indent=2))
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return USAGE_EXIT

    state = InvariantWorkflow().run(args)
    if state.get("error"):
        print(state["error"], file=sys.stderr)
    elif state.get("output") is not None:
        print(state["output"])
    return state["exit_code"]


__all__ = ["build_parser", "run"]
