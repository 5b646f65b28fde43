"""Build hook: compile the arithmetic kernel extension when Cython and a C
toolchain are available, otherwise install with the pure-Python fallback."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ffmin._core.speedups", ["src/ffmin/_core/speedups.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
