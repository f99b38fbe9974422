"""Exact solver for covering DAG nodes with node-disjoint paths that each
traverse a mandatory arc."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # build-tree layout: the extension sits next to the package
    from _core import *  # noqa: F401,F403
