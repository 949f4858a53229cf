import os

from setuptools import setup

ext_modules = []
if not os.environ.get("BORRAYS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("borrays._homsearch", ["src/borrays/_homsearch.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python kernel is used when the extension is unavailable.
        ext_modules = []

setup(ext_modules=ext_modules)
