"""Builds the optional compiled kernels; the package works without them."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(["src/cbraid/_kernels.pyx"], language_level=3, quiet=True)
except ImportError:
    pass

setup(ext_modules=ext_modules)
