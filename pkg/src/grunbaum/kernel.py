"""Select the search kernel at import time.

The compiled ``_kernel`` extension is preferred; if it is not built (or
``GRUNBAUM_PURE_PYTHON`` is set to a non-empty value) the pure-Python
implementation is used.  Both expose ``solve``, ``enumerate_all`` and
``IMPLEMENTATION``.
"""

import os

from . import _kernel_py

if os.environ.get("GRUNBAUM_PURE_PYTHON"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

solve = _impl.solve
enumerate_all = _impl.enumerate_all
IMPLEMENTATION = _impl.IMPLEMENTATION


def available():
    """Kernel modules importable in this environment, compiled first."""
    mods = []
    try:
        from . import _kernel  # type: ignore[attr-defined]
        mods.append(_kernel)
    except ImportError:
        pass
    mods.append(_kernel_py)
    return mods
