"""Build script: compiles the series kernel when Cython is available.

The package is fully functional without the extension; `alphaharm.backend`
falls back to the NumPy implementation if the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "alphaharm._series",
                ["src/alphaharm/_series.pyx"],
                # -ffp-contract=off keeps results bit-identical with the
                # NumPy fallback (no FMA contraction).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
