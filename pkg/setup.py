"""Build the optional C kernel.

The package is fully functional without it (a pure-Python twin of the
kernel is selected at import time when the extension is absent), so a
missing compiler or Cython only costs speed, not correctness.
"""
import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("sl2q: Cython not available, building without the C kernel", file=sys.stderr)
        return []
    ext = Extension(
        "sl2q._kernel._poly_c",
        sources=["src/sl2q/_kernel/_poly_c.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
