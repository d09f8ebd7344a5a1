"""Shared internals."""

from __future__ import annotations

import sys
from contextlib import contextmanager


@contextmanager
def deep_recursion(limit: int = 20000):
    """Temporarily raise the interpreter recursion limit; derivation trees for
    hard instances are deeper than the default limit."""
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)
