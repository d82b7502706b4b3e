"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HCLAB_PURE=1 to force the fallback (used by the benchmark and tests).
"""

from __future__ import annotations

import os

if os.environ.get("HCLAB_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _speed as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
bernoulli_extend = _impl.bernoulli_extend
harmonic_sum = _impl.harmonic_sum
harmonic_mod_sum = _impl.harmonic_mod_sum
