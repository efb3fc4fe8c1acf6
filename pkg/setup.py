"""Build script: compiles the optional Cython distance kernel.

The package works without the compiled extension (a pure-Python kernel is
selected at import time); the extension only accelerates exhaustive
minimum-distance enumeration.  Set DUADIC_NO_EXTENSION=1 to skip the build.
"""

import os

from setuptools import setup

PYX = "src/duadic/_kernels/_distance_cy.pyx"

ext_modules = []
if not os.environ.get("DUADIC_NO_EXTENSION") and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext = Extension("duadic._kernels._distance_cy", sources=[PYX])
        ext.optional = True  # a failed build must not fail the install
        ext_modules = cythonize([ext], language_level=3)
    except ImportError:
        pass

setup(ext_modules=ext_modules)
