"""Build script.  The Cython accelerator is optional: if it cannot be
compiled the package installs anyway and falls back to the pure-Python
kernels at import time."""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a warning instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"skipping compiled kernels ({exc}); "
                          "pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name} ({exc}); "
                          "pure-Python fallback will be used")


try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("hookgh._speedups", ["src/hookgh/_speedups.pyx"])],
        compiler_directives={"language_level": "3",
                             "boundscheck": False,
                             "wraparound": False},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
