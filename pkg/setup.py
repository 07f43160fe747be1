"""Builds the optional compiled table kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set COINSLIDE_SKIP_EXT=1 to skip
compiling it.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("COINSLIDE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/coinslide/_ctables.pyx"],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
