"""Build script: compiles the optional Cython kernels when Cython is available."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HOPFBRACE_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("hopfbrace._kernels", ["src/hopfbrace/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
