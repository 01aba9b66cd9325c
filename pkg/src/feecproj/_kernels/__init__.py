"""Hot evaluation kernels with a compiled core and a pure-Python fallback.

The compiled extension (Cython) is preferred; set FEECPROJ_BACKEND=python
to force the numpy fallback, or FEECPROJ_BACKEND=cython to insist on the
extension (raising if it is unavailable).  Both backends implement the
same array contract and are exercised against each other in the tests.
"""

import os

from . import _fallback

_requested = os.environ.get("FEECPROJ_BACKEND", "").strip().lower()

if _requested == "python":
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        _impl = _fallback
        BACKEND = "python"

locate_points = _impl.locate_points
eval_monomials = _impl.eval_monomials
eval_forms = _impl.eval_forms
eval_local_basis = _impl.eval_local_basis


def get_backend(name: str):
    """Return the named backend module ('python' or 'cython')."""
    if name == "python":
        return _fallback
    if name == "cython":
        from . import _core  # type: ignore[attr-defined]

        return _core
    raise ValueError(f"unknown backend {name!r}")
