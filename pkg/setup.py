from setuptools import setup

# The compiled kernel is optional: the package falls back to the pure-Python
# twin in hclab._kernels.pure when the extension cannot be built.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hclab/_kernels/_speed.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
