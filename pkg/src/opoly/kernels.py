"""Kernel dispatch: compiled extension when importable, NumPy fallback otherwise.

Set ``OPOLY_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("OPOLY_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

loggamma = _impl.loggamma
horner = _impl.horner
aberth = _impl.aberth

__all__ = ["BACKEND", "aberth", "horner", "loggamma"]
