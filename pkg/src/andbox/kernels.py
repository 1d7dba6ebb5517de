"""Backend selection for the ordering search kernel.

The compiled kernel (Cython, uint64 masks, n <= 64) is used when it built
successfully; the pure-Python twin covers missing builds, the environment
override ANDBOX_PURE_PYTHON=1, and graphs with more than 64 vertices.
Both implement the same traversal with identical node accounting, so
results and budgets are backend-independent.
"""

from __future__ import annotations

import os

from . import _kernels_py

FOUND = _kernels_py.FOUND
NOT_MEMBER = _kernels_py.NOT_MEMBER
EXHAUSTED = _kernels_py.EXHAUSTED

_compiled = None
if os.environ.get("ANDBOX_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on build environment
        _compiled = None


def backend_name() -> str:
    return "compiled" if _compiled is not None else "pure-python"


def search_order(nbr_masks, budget):
    """Dispatch to the best available backend.  See _kernels_py."""
    if _compiled is not None and len(nbr_masks) <= 64:
        return _compiled.search_order(nbr_masks, budget)
    return _kernels_py.search_order(nbr_masks, budget)


def search_order_pure(nbr_masks, budget):
    """Always use the pure-Python kernel (benchmarks, equivalence tests)."""
    return _kernels_py.search_order(nbr_masks, budget)


def search_order_compiled(nbr_masks, budget):
    """Always use the compiled kernel; None if it is not available."""
    if _compiled is None:
        return None
    return _compiled.search_order(nbr_masks, budget)
