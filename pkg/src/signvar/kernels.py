"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used. Setting ``SIGNVAR_PURE_PYTHON=1``
forces the fallback.
"""

import os

from signvar import _pykernels

if os.environ.get("SIGNVAR_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from signvar import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

sign_variations = _impl.sign_variations
taylor_shift = _impl.taylor_shift
scaled_shift = _impl.scaled_shift
horner = _impl.horner
mul = _impl.mul


def available_backends():
    """Map of backend name to kernel module for every backend that imports."""
    out = {"python": _pykernels}
    try:
        from signvar import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
