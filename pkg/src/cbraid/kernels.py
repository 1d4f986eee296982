"""Pick the compiled reduction kernels when they were built, else the Python ones.

Set CBRAID_PURE_PYTHON=1 to force the Python kernels.
"""
import os

from . import _kernels_py

BACKEND = "python"
find_reducer = _kernels_py.find_reducer
heap_key = _kernels_py.heap_key
reduce_exact = _kernels_py.reduce_exact
reduce_mod_p = _kernels_py.reduce_mod_p

if os.environ.get("CBRAID_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        BACKEND = "cython"
        find_reducer = _compiled.find_reducer
        heap_key = _compiled.heap_key
        reduce_exact = _compiled.reduce_exact

        def reduce_mod_p(poly, rules, lengths, p):
            # the compiled kernel multiplies in 64-bit integers
            if p < 2 ** 31:
                return _compiled.reduce_mod_p(poly, rules, lengths, p)
            return _kernels_py.reduce_mod_p(poly, rules, lengths, p)

__all__ = ["BACKEND", "find_reducer", "heap_key", "reduce_exact", "reduce_mod_p"]
