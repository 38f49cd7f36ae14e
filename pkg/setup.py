"""Build script: compiles the optional Cython integrator core.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile only costs speed.
"""
import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "specdet._kernel_c",
                ["src/specdet/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
                language="c",
            )
        ],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001 - any build-chain failure degrades to pure Python
    print(f"specdet: Cython core not built ({exc}); using pure-Python kernel",
          file=sys.stderr)

setup(ext_modules=ext_modules)
