"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python twin of the kernels
is selected at import time), so the build is allowed to fail soft.  Set
GEODE4_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GEODE4_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "geode4._kernels",
                    ["src/geode4/_kernels.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
