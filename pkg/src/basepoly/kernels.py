"""Kernel dispatch: the compiled extension when importable, numpy otherwise.

Set ``BASEPOLY_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
implementation in use.
"""

import os

from . import _pykernels

if os.environ.get("BASEPOLY_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

exchange_violation = _impl.exchange_violation
intersection_closure = _impl.intersection_closure
subset_matrix = _impl.subset_matrix
flag_f_vector = _impl.flag_f_vector
eulerian_violation = _impl.eulerian_violation

IMPLEMENTATIONS = {"python": _pykernels}
try:
    from . import _ckernels

    IMPLEMENTATIONS["cython"] = _ckernels
except ImportError:
    pass
