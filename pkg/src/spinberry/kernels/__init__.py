"""Numerical kernel selection: compiled core with a pure-numpy fallback.

The compiled extension (``_core``, Cython) is preferred when importable;
otherwise the numpy twin (``_numpy``) is used transparently.  Set the
environment variable ``SPINBERRY_KERNELS=numpy`` (or ``cython``) before
import to force a backend; forcing ``cython`` raises if the extension is
missing.  ``BACKEND`` records which implementation is live.
"""

import os

from . import _numpy

_forced = os.environ.get("SPINBERRY_KERNELS", "").strip().lower()

if _forced == "numpy":
    _impl = _numpy
    BACKEND = "numpy"
elif _forced == "cython":
    from . import _core as _impl  # noqa: F401 -- ImportError is the contract here

    BACKEND = "cython"
elif _forced == "":
    try:
        from . import _core as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _numpy
        BACKEND = "numpy"
else:
    raise RuntimeError(
        f"SPINBERRY_KERNELS={_forced!r} is not a backend (use 'numpy' or 'cython')"
    )

hubbard_apply = _impl.hubbard_apply
cross_overlap_sum = _impl.cross_overlap_sum
sector_weights = _impl.sector_weights

__all__ = ["BACKEND", "hubbard_apply", "cross_overlap_sum", "sector_weights"]
