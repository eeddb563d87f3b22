"""Build script; compiles the optional search-kernel extension.

The package is fully functional without the extension (a pure-Python twin of
the kernel module is selected at import time), so compilation failures only
cost speed. Set POTGRAPH_NO_EXTENSION=1 to skip the build deliberately.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POTGRAPH_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "potgraph._kernels_c",
                    ["src/potgraph/_kernels_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
