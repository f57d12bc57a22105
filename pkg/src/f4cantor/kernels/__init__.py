"""Enumeration kernel backends.

The compiled extension is used when its build artifact is importable;
otherwise the pure-Python reference implementation takes over.  Both expose
the same functions and are fed the same integer tables, so results are
identical (the test suite runs the pair against each other).
"""

from __future__ import annotations

from ._tables import build_tables
from . import _pure

TABLES = build_tables()
_pure.init(TABLES)

try:
    from . import _fast  # compiled; absent on source-only installs

    _fast.init(TABLES)
    BACKEND = "compiled"
except ImportError:
    _fast = None
    BACKEND = "pure"


def backend_name() -> str:
    return BACKEND


def available_backends() -> dict:
    out = {"pure": _pure}
    if _fast is not None:
        out["compiled"] = _fast
    return out


def _pick(length: int, backend):
    """The compiled kernel owns lengths within its 64-bit safety bound."""
    if backend is not None:
        return backend
    if _fast is not None and length <= _fast.max_len():
        return _fast
    return _pure


def scan_cylinders(length: int, backend=None) -> dict:
    return _pick(length, backend).scan_cylinders(length)


def scan_nested(length: int, backend=None) -> dict:
    return _pick(length, backend).scan_nested(length)


def containment_scan(word_len: int, backend=None) -> dict:
    return _pick(word_len, backend).containment_scan(word_len)


def iter_cylinders(length: int, backend=None):
    return _pick(length, backend).iter_cylinders(length)


def iter_rule_leaves(word_len: int, backend=None):
    return _pick(word_len, backend).iter_rule_leaves(word_len)
