from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext = Extension(
    "sortnet16._kernels",
    sources=["src/sortnet16/_kernels.pyx"],
    extra_compile_args=["-O3"],
)
# The package is fully functional on the pure-Python path; a failed
# extension build must not fail the install.
ext.optional = True

setup(
    ext_modules=cythonize([ext], compiler_directives={"language_level": "3"})
    if cythonize is not None
    else [],
)
