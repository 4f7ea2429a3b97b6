"""Interaction-topology recovery for sparsely coupled dynamical networks."""

try:
    from netrecon._netrecon import *  # noqa: F401,F403  (installed layout)
    from netrecon._netrecon import __doc__ as _doc
except ImportError:  # build-tree layout: extension sits beside the package dir
    from _netrecon import *  # noqa: F401,F403
    from _netrecon import __doc__ as _doc

__doc__ = _doc
__all__ = [
    "fixture_names",
    "fixture_truth",
    "simulate",
    "infer",
    "infer_fixture",
    "oracle",
    "oracle_gap",
    "baseline_edges",
    "sweep",
    "relative_error",
    "UsageError",
    "DataError",
    "NumericalError",
]
