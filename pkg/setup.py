"""Build script: compiles the optional row-reduction extension.

The package is fully functional without the extension (a pure-Python
twin is selected at import time), so a failed compile falls back to a
source-only build rather than aborting the install.
"""

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("e8jacobi._rowreduce_c",
                   ["src/e8jacobi/_rowreduce_c.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions())
