"""Build script for the compiled search kernel.

The package works without the extension (a pure Python kernel is selected at
import time), but the compiled kernel is what makes the exhaustive searches
comfortable at desk scale.  Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # plain source install without Cython
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "cordant._kernel._speed",
                ["src/cordant/_kernel/_speed.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=extensions)
