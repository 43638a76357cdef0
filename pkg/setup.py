import os

import numpy as np
from setuptools import Extension, setup

extensions = []
if os.environ.get("OPOLY_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:  # fall back to the pure-Python kernels
        cythonize = None
    if cythonize is not None:
        extensions = cythonize(
            [
                Extension(
                    "opoly._ckernels",
                    ["src/opoly/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=extensions)
