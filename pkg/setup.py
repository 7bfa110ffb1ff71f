"""Builds the optional Cython enumeration kernel.

The package works without it (a NumPy fallback is selected at import time),
so a missing compiler or Cython only costs speed, never functionality.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rademacher_tails._enum_cy",
                ["src/rademacher_tails/_enum_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
