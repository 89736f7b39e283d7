"""Build the optional compiled kernels.

The package runs fine without them (a pure-Python fallback is selected at
import time); building them makes the benchmark CLI and the acceptance
suite considerably faster:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [Extension("dyckq._speedups", sources=["src/dyckq/_speedups.pyx"])],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )

setup(ext_modules=extensions)
