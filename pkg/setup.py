import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DFW_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "dfw._kernels._speed",
                    ["src/dfw/_kernels/_speed.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: the pure backend is selected at import time instead.
        ext_modules = []

setup(ext_modules=ext_modules)
