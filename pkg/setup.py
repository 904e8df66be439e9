"""Build script: compiles the optional Cython kernel core.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a missing compiler or Cython must never abort
the install.  Build in place for development with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "spinberry.kernels._core",
                sources=["src/spinberry/kernels/_core.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    extensions = []

setup(ext_modules=extensions)
