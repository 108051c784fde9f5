"""Build script: compiles the optional rank kernel extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing Cython or a failed compile should not block
installation of the rest.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bannerlab._rankcore",
                ["src/bannerlab/_rankcore.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
