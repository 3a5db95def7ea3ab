"""Hot-kernel dispatch: compiled Cython core if importable, else pure Python.

Set ``EQCENTERS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
match_permutations = _pykernels.match_permutations
perm_group_closed = _pykernels.perm_group_closed

if not os.environ.get("EQCENTERS_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        match_permutations = _ckernels.match_permutations
        perm_group_closed = _ckernels.perm_group_closed
