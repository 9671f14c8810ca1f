"""Build script: compiles the convolution kernel when Cython is available.

The package is fully functional without the extension; hyperoct.kernels
falls back to a pure-Python implementation selected at import time.
Set HYPEROCT_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HYPEROCT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "hyperoct._kernels",
                    ["src/hyperoct/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
