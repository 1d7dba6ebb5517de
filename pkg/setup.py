"""Build script.

The compiled search kernel is optional: if Cython or a C compiler is
unavailable the package installs anyway and falls back to the pure-Python
kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/andbox/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print("andbox: skipping compiled kernel (%s)" % exc)

setup(ext_modules=ext_modules)
