"""Build script: compiles the optional enumeration kernel when Cython is available.

The package is fully functional without the extension; `f4cantor.kernels`
falls back to the pure-Python implementation at import time.
"""

import os

from setuptools import setup

PYX = "src/f4cantor/kernels/_fast.pyx"

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("f4cantor.kernels._fast", [PYX], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
