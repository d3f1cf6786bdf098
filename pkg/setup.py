"""Build script: compiles the optional finite-field scan kernel.

The package works without the extension (a NumPy fallback is selected at
import time); set G2DESC_NO_EXT=1 to skip compilation explicitly.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("G2DESC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/g2desc/_scan.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
