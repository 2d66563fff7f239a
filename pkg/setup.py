import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernels are an optional accelerator; the package falls back to
# bohrineq._kernels._fallback when the extension is missing.  Set
# BOHRINEQ_PURE_PYTHON=1 to skip the build entirely.
if cythonize is not None and not os.environ.get("BOHRINEQ_PURE_PYTHON"):
    ext_modules = cythonize(
        [
            Extension(
                "bohrineq._kernels._core",
                ["src/bohrineq/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
