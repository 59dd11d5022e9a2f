"""
Interfaz de línea de comandos: run, power, optimize y simulate.
"""

from .commands import RunRequest, build_parser, cmd_optimize, cmd_power, cmd_run, cmd_simulate, main
from .exceptions import InputFormatError
from .io import format_json, parse_grid, read_dataset, read_table, write_json, write_table

__all__ = [
    'InputFormatError',
    'RunRequest',
    'build_parser',
    'cmd_optimize',
    'cmd_power',
    'cmd_run',
    'cmd_simulate',
    'format_json',
    'main',
    'parse_grid',
    'read_dataset',
    'read_table',
    'write_json',
    'write_table',
]
