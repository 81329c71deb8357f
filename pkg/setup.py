import os

from setuptools import setup

ext_modules = []
if os.environ.get("INVSEQ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "invseq.kernels._fast",
                    ["src/invseq/kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
