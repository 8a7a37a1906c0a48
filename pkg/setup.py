"""Build script: compiles the optional fast-kernel extension when Cython and a
C compiler are available, falling back to the pure-Python kernels otherwise."""

import os
import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Best-effort extension build; the package works without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            warnings.warn(f"skipping compiled kernels ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            warnings.warn(f"skipping {ext.name} ({exc}); using pure-Python fallback")


ext_modules = []
cmdclass = {}
if not os.environ.get("OKBODIES_PURE"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "okbodies.kernels._fastkernels",
                    ["src/okbodies/kernels/_fastkernels.pyx"],
                )
            ],
            language_level="3",
        )
        cmdclass["build_ext"] = OptionalBuildExt
    except ImportError:  # pragma: no cover - toolchain dependent
        warnings.warn("Cython not available; building without compiled kernels")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
