"""Arithmetic backend selection.

The compiled extension ``zkaudit._fast`` implements the hot kernels
(field towers, curve arithmetic, Miller loop) in C; ``zkaudit._pure``
is the interchangeable pure-Python fallback.  Selection happens once at
import.  Set ZKAUDIT_BACKEND=pure to force the fallback.
"""

import os

_forced = os.environ.get("ZKAUDIT_BACKEND", "").strip().lower()

if _forced == "pure":
    from . import _pure as impl
elif _forced in ("fast", "compiled"):
    from . import _fast as impl  # ImportError here is deliberate: user asked for it
else:
    try:
        from . import _fast as impl
    except ImportError:
        from . import _pure as impl

BACKEND = impl.BACKEND_NAME
