"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("idemfree._ckernels", ["src/idemfree/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
