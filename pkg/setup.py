"""Optional compiled kernels; the package falls back to pure Python without them."""
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension
except ImportError:  # no Cython: pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("apollonian._ckernels", ["src/apollonian/_ckernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
