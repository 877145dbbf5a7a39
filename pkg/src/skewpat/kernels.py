"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
implementation takes over.  Setting ``SKEWPAT_PURE=1`` forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("SKEWPAT_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.NAME

lis_length = _impl.lis_length
lds_length = _impl.lds_length
contains_pattern = _impl.contains_pattern
count_extensions = _impl.count_extensions
count_signature_123 = _impl.count_signature_123

__all__ = [
    "BACKEND",
    "lis_length",
    "lds_length",
    "contains_pattern",
    "count_extensions",
    "count_signature_123",
]
