from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# elimination routines in exlat._fppure when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("exlat._fpcore", ["src/exlat/_fpcore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
