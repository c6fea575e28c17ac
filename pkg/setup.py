from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "zkaudit._fast",
                ["src/zkaudit/_fast.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
else:
    # No Cython available: install with the pure-Python group arithmetic only.
    ext_modules = []

setup(ext_modules=ext_modules)
