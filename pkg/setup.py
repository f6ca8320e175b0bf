from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gor3._rowred", ["src/gor3/_rowred.pyx"],
                   extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: the pure-Python kernels are selected at import
    ext_modules = []

setup(ext_modules=ext_modules)
