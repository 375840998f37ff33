"""Backend selection for the hot kernels.

The compiled extension ``fnforest._kernels`` is used when it imports; the
pure-Python ``fnforest._kernels_py`` otherwise.  Setting ``FNFOREST_PURE=1``
forces the pure backend.
"""

import os

from . import _kernels_py as pure

compiled = None
if os.environ.get("FNFOREST_PURE") != "1":
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:
        compiled = None

_FUNCTIONS = ("apply_letter", "length_parts", "labels", "leaf_start", "split_children")


def use(backend: str) -> None:
    """Switch every caller of this module to ``"compiled"`` or ``"pure"``."""
    global BACKEND
    if backend == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernels are not available")
        impl = compiled
    elif backend == "pure":
        impl = pure
    else:
        raise ValueError(f"unknown backend {backend!r}")
    for name in _FUNCTIONS:
        globals()[name] = getattr(impl, name)
    BACKEND = backend


use("compiled" if compiled is not None else "pure")

LEAF = pure.LEAF
L, N, R, I, UNLABELLED = pure.L, pure.N, pure.R, pure.I, pure.UNLABELLED
WEIGHTS = pure.WEIGHTS
