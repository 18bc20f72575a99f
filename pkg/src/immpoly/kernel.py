"""Backend selection for the cycle-type class-sum kernel.

The compiled extension is used when it imports; set ``IMMPOLY_PURE_PYTHON=1``
to force the Python fallback.  Integer overflow inside the compiled kernel
transparently reruns the computation in Python.
"""

from __future__ import annotations

import os
from typing import Dict, Optional, Sequence, Tuple

from . import _kernel_py

try:
    from . import _kernel as _compiled  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _compiled = None

Partition = Tuple[int, ...]

if _compiled is not None and not os.environ.get("IMMPOLY_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"


def available_backends() -> Tuple[str, ...]:
    return ("cython", "python") if _compiled is not None else ("python",)


def class_sums(
    rows: Sequence[Sequence[int]], partial: bool, backend: Optional[str] = None
) -> Dict[Partition, int]:
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            return _compiled.class_sums(rows, partial)
        except OverflowError:
            pass
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _kernel_py.class_sums(rows, partial)
