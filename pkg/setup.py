"""Build script: compiles the optional enumeration kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile is downgraded to a warning.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pasep._speedups",
                ["src/pasep/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
