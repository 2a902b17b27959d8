"""Build script for the optional compiled range-coder kernel.

The package works without the extension (a pure-Python coder is selected at
import time); building it just makes entropy coding much faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "adanerv.codec._coder_cy",
                ["src/adanerv/codec/_coder_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
