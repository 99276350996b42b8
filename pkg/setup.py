"""Build script: compiles the optional counting kernel when Cython is present.

The package is fully functional without the extension; `neutroset._kernels`
falls back to the pure-Python implementation at import time.
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
                "neutroset._kernels._volume_cy",
                ["src/neutroset/_kernels/_volume_cy.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
