"""Builds the optional compiled resampling kernels.

The package works without the extension (a NumPy fallback is selected at
import time), so a failed build only costs speed.
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
                "prmcount.kernels._fast",
                ["src/prmcount/kernels/_fast.pyx"],
                # -ffp-contract=off: no FMA contraction, so results stay
                # bit-identical to the NumPy fallback.
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
