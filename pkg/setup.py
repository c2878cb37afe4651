"""Build script: compiles the optional coefficient-kernel extension.

The package is fully functional without the extension (qcatalan.kernels
falls back to the pure-Python twin); the extension is marked optional so
a missing compiler or Cython never blocks installation.
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
                "qcatalan._kernels_cy",
                ["src/qcatalan/_kernels_cy.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
