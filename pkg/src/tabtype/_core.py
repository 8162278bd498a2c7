"""Kernel backend selection.

The compiled extension is used when it imports and the type fits in 64 boxes;
otherwise, and whenever ``TABTYPE_PURE`` is set, the pure-Python kernels run.
"""

from __future__ import annotations

import os

from tabtype import _kernels_py as _py
from tabtype.errors import StateLimitExceeded

_compiled = None
if not os.environ.get("TABTYPE_PURE"):
    try:
        from tabtype import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _py.BACKEND

__all__ = [
    "BACKEND", "StateLimitExceeded", "erasable_mask", "count_fillings",
    "count_fillings_dfs", "sst_check", "sst_terms", "python_kernels",
    "compiled_kernels",
]


def python_kernels():
    return _py


def compiled_kernels():
    """The compiled module, or None when it is unavailable."""
    return _compiled


def _fits(theta) -> bool:
    return _compiled is not None and len(theta) <= 64


def erasable_mask(theta, hook, over, erased: int) -> int:
    if _fits(theta):
        return _compiled.erasable_mask(theta, hook, over, erased)
    return _py.erasable_mask(theta, hook, over, erased)


def count_fillings(theta, hook, over, start: int = 0, state_limit: int = 0) -> int:
    if _fits(theta):
        try:
            return _compiled.count_fillings(theta, hook, over, start, state_limit)
        except OverflowError:
            pass
    return _py.count_fillings(theta, hook, over, start, state_limit)


count_fillings_dfs = _py.count_fillings_dfs


def sst_check(theta, hook, over, cols, labels) -> bool:
    if _fits(theta) and max(cols, default=0) < 64:
        return _compiled.sst_check(theta, hook, over, cols, labels)
    return _py.sst_check(theta, hook, over, cols, labels)


def sst_terms(theta, hook, over, cols, m: int) -> dict[tuple[int, ...], int]:
    if _fits(theta) and max(cols, default=0) < 64:
        return _compiled.sst_terms(theta, hook, over, cols, m)
    return _py.sst_terms(theta, hook, over, cols, m)
