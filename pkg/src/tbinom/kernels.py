"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``TBINOM_PURE`` is set to a non-empty value, the
pure-Python module is used.  Both expose ``convolve``, ``horner`` and
``add_scaled`` with identical semantics.
"""

import os

from . import _kernels_py as pure

if os.environ.get("TBINOM_PURE"):
    _impl = pure
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = pure
        BACKEND = "python"

convolve = _impl.convolve
horner = _impl.horner
add_scaled = _impl.add_scaled

__all__ = ["BACKEND", "convolve", "horner", "add_scaled", "pure"]
