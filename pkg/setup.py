"""Optional build of the compiled canonical-form kernel.

If Cython or a C compiler is unavailable the package installs without the
extension and falls back to the pure-Python kernel at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    try:
        ext_modules = cythonize(
            ["src/toricsect/_canon_fast.pyx"],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
            quiet=True,
        )
    except Exception:  # noqa: BLE001 - any cythonize failure means "no extension"
        ext_modules = []

setup(ext_modules=ext_modules)
