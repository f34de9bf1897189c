"""
Package initialization for workflow
"""

from .handlers import CommandHandlers
from .renderers import ReportRenderer
from .invariant_workflow import InvariantWorkflow, WorkflowState

__all__ = ["CommandHandlers", "ReportRenderer", "InvariantWorkflow", "WorkflowState"]
