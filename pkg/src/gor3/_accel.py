"""Backend selection for the row-reduction kernels.

The compiled extension is preferred when it imported cleanly; setting
GOR3_PURE=1 in the environment forces the pure-Python fallback.  Both
backends produce identical output (the reduced forms are canonical).
"""

import os

if os.environ.get("GOR3_PURE"):
    from . import _rowred_py as backend

    BACKEND = "python"
else:
    try:
        from . import _rowred as backend  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _rowred_py as backend

        BACKEND = "python"

rref_int = backend.rref_int
rref_mod = backend.rref_mod
