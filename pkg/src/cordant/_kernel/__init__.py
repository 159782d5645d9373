"""Search kernel backends.

Two interchangeable implementations of the same four kernels live here:
``pure`` (plain Python, always available) and ``_speed`` (Cython).  The
compiled one is picked at import time when present; set the environment
variable ``CORDANT_BACKEND`` to ``pure`` or ``compiled`` to force a
choice.  Both return identical results, including node counts.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _speed as compiled
except ImportError:
    compiled = None

FOUND = pure.FOUND
EXHAUSTED = pure.EXHAUSTED
BUDGET = pure.BUDGET

_forced = os.environ.get("CORDANT_BACKEND", "").strip().lower()
if _forced == "pure":
    _active = pure
elif _forced == "compiled":
    if compiled is None:
        raise ImportError(
            "CORDANT_BACKEND=compiled but the _speed extension is not built"
        )
    _active = compiled
elif _forced:
    raise ImportError(f"unknown CORDANT_BACKEND value {_forced!r}")
else:
    _active = compiled if compiled is not None else pure


def active_backend():
    """The kernel module selected for this process."""
    return _active


def backend_name() -> str:
    return "compiled" if _active is compiled and compiled is not None else "pure"
