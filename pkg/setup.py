"""Build script: compiles the optional path-counting extension.

The package is pure Python except for one hot kernel (exhaustive
transposition-walk enumeration).  If Cython or a C compiler is missing,
or QHURWITZ_PURE=1 is set, the extension is skipped and the pure-Python
fallback is used at import time.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as non-fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: building the qhurwitz._pathcount extension failed; "
            "falling back to the pure-Python kernel (%s)" % exc,
            file=sys.stderr,
        )


ext_modules = []
if os.environ.get("QHURWITZ_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "qhurwitz._pathcount",
                    ["src/qhurwitz/_pathcount.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        print(
            "warning: Cython not available; installing without the "
            "compiled path-counting kernel",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
