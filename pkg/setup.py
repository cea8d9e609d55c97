"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-numpy fallback is selected
at import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the extension (with a warning) if the toolchain is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or cython missing
            warnings.warn(f"skipping compiled kernels, using pure-python fallback: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name}: {exc}")


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "sigfac._kernels._fast",
                ["src/sigfac/_kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
