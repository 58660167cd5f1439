"""Nilpotentizers, nonnilpotent graphs and clique numbers of finite groups."""

import json

from . import _core
from ._core import (
    IntegrityError,
    InvalidArgument,
    ResourceLimit,
    is_ac_group,
    is_semisimple,
    order,
    suzuki_nilp_count,
    suzuki_omega_formula,
)

__all__ = [
    "IntegrityError",
    "InvalidArgument",
    "ResourceLimit",
    "export_graph",
    "info",
    "is_ac_group",
    "is_semisimple",
    "omega",
    "order",
    "suzuki_nilp_count",
    "suzuki_omega_formula",
    "table",
    "verify",
]


def info(spec, cache_dir=None):
    """Order, class count, centre size and structural flags of a group."""
    return json.loads(_core.info(spec, cache_dir))


def omega(spec, graph="nonnilpotent", jobs=1, cache_dir=None, budget=None):
    """Clique number of the nonnilpotent (or noncommuting) graph, with a witness."""
    kwargs = {} if budget is None else {"budget": budget}
    return json.loads(_core.omega(spec, graph, jobs, cache_dir, **kwargs))


def table(spec, graph="nonnilpotent", jobs=1, cache_dir=None):
    """Distinct nilpotentizers (or centralizers) with members and flags."""
    return json.loads(_core.table(spec, graph, jobs, cache_dir))


def export_graph(spec, graph="nonnilpotent", quotient=False, jobs=1):
    """DIMACS text of the full or quotient graph."""
    return _core.export_graph(spec, graph, quotient, jobs)


def verify(suite, q=None, corpus=None, jobs=1, cache_dir=None, with_timing=True):
    """Run a verification suite; returns the report as a dict."""
    return json.loads(_core.verify(suite, q, corpus, jobs, cache_dir, with_timing))
