"""Build script. Compiles the optional BFS extension; the package works without it."""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("COORDLAT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/coordlat/latticeenum/_bfs.pyx"],
            language_level=3,
        )
    except Exception:
        # no Cython / no compiler: fall back to the pure-Python enumerator
        ext_modules = []

setup(ext_modules=ext_modules)
