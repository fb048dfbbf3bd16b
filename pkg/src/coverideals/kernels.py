"""Backend selection for the monomial antichain kernels.

The compiled backend (Cython + numpy) is used when the extension imports;
otherwise the pure-Python implementation in :mod:`._pykernels` takes over.
Both expose ``minimalize``, ``multiply``, ``intersect``, ``intersect_irreducible``,
``contains`` and ``colon`` with identical semantics and output ordering.
"""

from . import _pykernels as python_backend

try:
    from . import _accel as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

if compiled_backend is not None:
    _impl = compiled_backend
    BACKEND = "cython"
else:
    _impl = python_backend
    BACKEND = "python"

minimalize = _impl.minimalize
multiply = _impl.multiply
intersect = _impl.intersect
contains = _impl.contains
colon = _impl.colon
intersect_irreducible = _impl.intersect_irreducible

__all__ = ["BACKEND", "minimalize", "multiply", "intersect", "contains", "colon",
           "intersect_irreducible",
           "python_backend", "compiled_backend"]
