"""Hot kernels. The compiled extension is used when importable; setting
``BICYCL_PURE=1`` forces the numpy fallback."""

import os

from . import _fallback

BACKEND = "python"
_compiled = None
if not os.environ.get("BICYCL_PURE"):
    try:
        from . import _minweight as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None


def backends():
    out = {"python": _fallback.min_weight}
    if _compiled is not None:
        out["cython"] = _compiled.min_weight
    return out


def min_weight(rows, p: int, e: int = 1, stop_at: int = 1, backend: str | None = None) -> int:
    """Smallest nonzero symbol weight over the F_p-span of ``rows``.

    ``rows`` holds F_p digits, ``e`` consecutive digits per F_q symbol.
    Returns -1 when the span has no nonzero vector.
    """
    fn = backends()[backend or BACKEND]
    return int(fn(rows, p, e, stop_at))
