"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``KARPELEVIC_NUMBA`` is not set to ``0``/``false``/``off``.
Both implementations are importable directly as ``kernels._numba`` and
``kernels._numpy`` for comparison and benchmarking.
"""

import os

from . import _numpy

_FLAG = os.environ.get("KARPELEVIC_NUMBA", "1").strip().lower()

BACKEND = "numpy"
_impl = _numpy
if _FLAG not in ("0", "false", "off", "no"):
    try:
        from . import _numba
    except ImportError:  # pragma: no cover - numba missing
        pass
    else:
        BACKEND = "numba"
        _impl = _numba

horner = _impl.horner
durand_kerner = _impl.durand_kerner
durand_kerner_batch = _impl.durand_kerner_batch
faddeev_leverrier = _impl.faddeev_leverrier
faddeev_leverrier_batch = _impl.faddeev_leverrier_batch
bisect_boundary = _impl.bisect_boundary

__all__ = [
    "BACKEND",
    "horner",
    "durand_kerner",
    "durand_kerner_batch",
    "faddeev_leverrier",
    "faddeev_leverrier_batch",
    "bisect_boundary",
]
