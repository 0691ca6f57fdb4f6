"""Build script: compiles the optional C extension for the hot counting loops.

The package works without the extension (a pure-Python implementation of the
same kernels is selected at import time), so a failed compile only costs
speed.  ``SIGNEDPATHS_NO_EXT=1`` skips the compile step entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SIGNEDPATHS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/signedpaths/_kernels.pyx"],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover - build-environment dependent
        print(f"signedpaths: skipping C extension ({exc}); pure-Python kernels will be used")

setup(ext_modules=ext_modules)
