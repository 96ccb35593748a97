"""Hall subgroup criteria and their brute-force oracles.

Thin wrapper over the compiled core. Every call returns plain Python data
decoded from the same JSON layout the command-line tool prints.
"""

import json

from . import _core
from ._core import CapacityError, HallmarkError, MalformedInput, ParseError, PreconditionError

__version__ = _core.version()

__all__ = [
    "CapacityError",
    "HallmarkError",
    "MalformedInput",
    "ParseError",
    "PreconditionError",
    "catalog",
    "check",
    "classes",
    "group_order",
    "hall",
    "lie_class_size",
    "lie_divisibility",
    "lie_grid",
    "shipped_tables",
    "suite",
    "table_analyze",
    "table_blocks",
]


def catalog():
    return json.loads(_core.catalog())


def group_order(group, extended=False):
    """Order of a group source ("catalog:NAME" or a group file) as an int."""
    return int(_core.group_order(group, extended))


def classes(group, extended=False):
    return json.loads(_core.classes(group, extended))


def hall(group, pi, extended=False):
    return json.loads(_core.hall(group, sorted(pi), extended))


def check(theorem, group, pi, table=None, extended=False):
    """One theorem check: criterion, oracle and whether they agree."""
    return json.loads(_core.check(theorem, group, list(pi), table, extended))


def shipped_tables():
    return list(_core.shipped_tables())


def table_blocks(table, p):
    return json.loads(_core.table_blocks(table, p))


def table_analyze(table, pi):
    return json.loads(_core.table_analyze(table, sorted(pi)))


def lie_class_size(family, n, q, r, case=""):
    return json.loads(_core.lie_class_size(family, n, q, r, case))


def lie_divisibility(family, n, q, r, s):
    return json.loads(_core.lie_divisibility(family, n, q, r, s))


def lie_grid():
    return json.loads(_core.lie_grid())


def suite(sections=(), extended=False):
    return json.loads(_core.suite(list(sections), extended))
