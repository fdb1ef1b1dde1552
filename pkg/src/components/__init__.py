"""Command implementations behind the ``raman-cp`` CLI."""

from src.components.common import CommandResult, Status, load_entry, parse_gate, parse_shape
from src.components.reports import cmd_catalog, cmd_oracle_check, cmd_order, cmd_propagate
from src.components.sweep import cmd_sweep

__all__ = [
    "CommandResult",
    "Status",
    "cmd_catalog",
    "cmd_oracle_check",
    "cmd_order",
    "cmd_propagate",
    "cmd_sweep",
    "load_entry",
    "parse_gate",
    "parse_shape",
]
