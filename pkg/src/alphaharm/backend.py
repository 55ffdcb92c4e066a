"""Series-kernel backend selection.

The compiled Cython kernel is preferred; the NumPy fallback is used when the
extension is missing or when ``ALPHAHARM_PURE_PYTHON`` is set (any non-empty
value). Both expose the same ``hyp2f1_series`` contract and produce
bit-identical results.
"""

import os

if os.environ.get("ALPHAHARM_PURE_PYTHON"):
    from . import _series_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _series as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _series_py as _impl

        BACKEND = "python"

hyp2f1_series = _impl.hyp2f1_series
