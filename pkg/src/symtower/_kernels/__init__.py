"""Hot kernels: compiled core when built, numpy/Python fallback otherwise.

Set ``SYMTOWER_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _fallback

fallback = _fallback

if os.environ.get("SYMTOWER_PURE_PYTHON"):
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

_impl = compiled if compiled is not None else _fallback
BACKEND = _impl.BACKEND


def map_encode(rows, flat_table, offsets, radix, sort_rows=False):
    return _impl.map_encode(rows, flat_table, offsets, radix, sort_rows)


def smith_diagonal(matrix):
    """Invariant factors of ``matrix``; exact for any input size."""
    if _impl is _fallback:
        return _fallback.smith_diagonal(matrix)
    try:
        return _impl.smith_diagonal(matrix)
    except OverflowError:
        return _fallback.smith_diagonal(matrix)
