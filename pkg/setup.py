"""Build script: compiles the optional insertion speedup extension.

The package works without the extension; kssbij.kernels falls back to the
pure-Python implementation if the compiled module is missing.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("kssbij._speedups", ["src/kssbij/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    # No Cython or no compiler: install pure-Python only.
    ext_modules = []

setup(ext_modules=ext_modules)
