"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SL2Q_KERNEL=pure to force the Python implementation, SL2Q_KERNEL=c to
require the compiled one (ImportError if it was not built).  Default is to
prefer the compiled kernel and fall back silently.

``IMPLEMENTATION`` reports which one is active ("c" or "pure").
"""
import os

from . import poly as _pure

_choice = os.environ.get("SL2Q_KERNEL", "auto").strip().lower() or "auto"

if _choice in ("pure", "py", "python"):
    mul_reduce = _pure.mul_reduce
    IMPLEMENTATION = "pure"
elif _choice in ("auto", "c", "compiled"):
    try:
        from . import _poly_c as _compiled
    except ImportError:
        if _choice != "auto":
            raise
        mul_reduce = _pure.mul_reduce
        IMPLEMENTATION = "pure"
    else:
        mul_reduce = _compiled.mul_reduce
        IMPLEMENTATION = "c"
else:
    raise ValueError(
        f"SL2Q_KERNEL={_choice!r}: expected 'auto', 'c' or 'pure'")
