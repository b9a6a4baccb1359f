"""Select the kernel implementation at import time.

The compiled ``qtfa._kernels`` extension is used when it was built;
set ``QTFA_PURE_PYTHON=1`` to force the numpy fallback.
"""

import logging
import os

from . import _kernels_py

log = logging.getLogger(__name__)

BACKEND = "python"
kernels = _kernels_py

if not os.environ.get("QTFA_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        log.debug("compiled kernels unavailable; using numpy fallback")
    else:
        kernels = _compiled
        BACKEND = "compiled"


def get_kernels(name: str | None = None):
    """Return a kernel module by name ('compiled' or 'python'), default the active one."""
    if name is None:
        return kernels
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels as mod  # type: ignore[attr-defined]

        return mod
    raise ValueError(f"unknown backend {name!r}")
