import os

from setuptools import setup

# The compiled correlation kernel is optional: without it the package falls
# back to the pure-Python kernel at import time.  Set OOCKIT_PURE=1 to skip
# building the extension entirely.
ext_modules = []
if not os.environ.get("OOCKIT_PURE"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("oockit._corr", ["src/oockit/_corr.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
