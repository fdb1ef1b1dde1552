"""Expression parsing, infidelity analysis, sweeps and sequence files."""

from src.utils.expressions import format_pi_multiple, parse_angle, parse_list, parse_range
from src.utils.validators import SequenceFile, load_sequence_file

__all__ = [
    "SequenceFile",
    "format_pi_multiple",
    "load_sequence_file",
    "parse_angle",
    "parse_list",
    "parse_range",
]
