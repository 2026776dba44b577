"""Repair corrupt inputs using three-valued parser feedback."""

from .core import RepairConfig, RepairThread, repair
from .ddmax import ddmax
from .oracle import COMPLETE, INCOMPLETE, INCORRECT, OracleSession, Verdict

__all__ = [
    "COMPLETE",
    "INCOMPLETE",
    "INCORRECT",
    "OracleSession",
    "RepairConfig",
    "RepairThread",
    "Verdict",
    "ddmax",
    "repair",
]
__version__ = "0.1.0"
