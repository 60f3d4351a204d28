"""Build script: compiles the optional enumeration-kernel extension.

The package is fully functional without the extension (a numpy fallback
is selected at import time), so any failure here downgrades to a warning
instead of aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # compile/link failure
            warnings.warn(f"skipping compiled kernels: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; using the numpy fallback kernels")
        return []
    return cythonize(
        [
            Extension(
                "parcensus._kernels",
                ["src/parcensus/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
