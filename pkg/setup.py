from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("bicycl._kernels._minweight", ["src/bicycl/_kernels/_minweight.pyx"])],
        language_level=3,
    ),
)
