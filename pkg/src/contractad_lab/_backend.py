"""Kernel selection: compiled module when importable, pure Python otherwise.

Set ``CONTRACTAD_LAB_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

NAMES = (
    "hp_table",
    "hp_count",
    "hc_count",
    "is_planeq",
    "planeq_count",
    "planeq_filter_count",
    "is_cyceq",
    "cyceq_count",
)

kernels = _pykernels
BACKEND = "python"

if os.environ.get("CONTRACTAD_LAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"


def available():
    """Mapping of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
