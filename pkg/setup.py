import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RANDIC_INCIDENCE_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "randic_incidence._kernels._jacobi",
                    ["src/randic_incidence/_kernels/_jacobi.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
