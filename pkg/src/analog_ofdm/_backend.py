"""Select the kernel implementation once, at import.

The compiled extension is preferred. Set ``ANALOG_OFDM_BACKEND=python`` to
force the numpy fallback (useful for benchmarking and debugging).
"""

import os

from . import _pykernels

kernels = _pykernels
BACKEND = "python"

if os.environ.get("ANALOG_OFDM_BACKEND", "").lower() != "python":
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"


def available_backends():
    """Return ``{name: module}`` for every backend importable in this process."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        return found
    found["cython"] = _ckernels
    return found
