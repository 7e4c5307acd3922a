"""Build script for the optional compiled roof-objective kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the Cython build is attempted and
skipped with a warning if the toolchain is unavailable.
Set ERAE_SKIP_CYTHON=1 to force a pure-Python install.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("ERAE_SKIP_CYTHON"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext = Extension(
            "erae._roof_cy",
            sources=["src/erae/_roof_cy.pyx"],
            include_dirs=[numpy.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )
        ext_modules = cythonize([ext], compiler_directives={"language_level": 3})
    except ImportError as exc:
        print(f"warning: Cython/numpy unavailable ({exc}); "
              "building without the compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules)
