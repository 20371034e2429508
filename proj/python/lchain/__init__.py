"""Exact chain-level surgery arithmetic.

Thin re-export of the compiled core; all integers are exact (Python ints of
any size round-trip through the C++ side unchanged).
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: _core sits next to the package dir
    from _core import *  # noqa: F401,F403
