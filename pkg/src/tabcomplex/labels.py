"""Canonical ordering and rendering of opaque point/value labels.

Labels may be ints, strings, or (nested) tuples of those, so plain ``<``
comparison is not always defined between them.
"""

from __future__ import annotations

from typing import Any, Hashable


def label_key(obj: Any) -> tuple:
    """Total-order sort key for heterogeneous labels."""
    if isinstance(obj, bool):
        return (0, int(obj))
    if isinstance(obj, int):
        return (0, obj)
    if isinstance(obj, str):
        return (1, obj)
    if isinstance(obj, tuple):
        return (2, tuple(label_key(o) for o in obj))
    return (3, repr(obj))


def label_str(obj: Hashable) -> str:
    if isinstance(obj, tuple):
        return "(" + ",".join(label_str(o) for o in obj) + ")"
    return str(obj)


def freeze(obj: Any) -> Any:
    """Turn JSON-ish lists into hashable tuples, recursively."""
    if isinstance(obj, list):
        return tuple(freeze(o) for o in obj)
    return obj


def thaw(obj: Any) -> Any:
    """Inverse of :func:`freeze` for JSON output."""
    if isinstance(obj, tuple):
        return [thaw(o) for o in obj]
    return obj
