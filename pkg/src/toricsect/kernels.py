"""Backend selection for the canonical-form kernel.

The compiled ``_canon_fast`` extension is used when it was built; otherwise
the pure-Python ``_canon_py`` fallback is used.  Inputs whose coordinates
exceed the 64-bit-safe bound always take the Python path.
"""
from . import _canon_py

try:
    from . import _canon_fast
except ImportError:  # extension not built
    _canon_fast = None

BACKEND = "cython" if _canon_fast is not None else "python"

_FAST_BOUND = 1 << 30


def canonical_key(reps, dihedral, backend=None):
    backend = backend or BACKEND
    if backend == "cython":
        if _canon_fast is None:
            raise RuntimeError("compiled kernel is not available")
        if all(-_FAST_BOUND < a < _FAST_BOUND and -_FAST_BOUND < b < _FAST_BOUND for a, b in reps):
            return _canon_fast.canonical_key(reps, dihedral)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _canon_py.canonical_key(reps, dihedral)


def available_backends():
    return ["python"] + (["cython"] if _canon_fast is not None else [])
