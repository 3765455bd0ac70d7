"""Builds the fishburn._core extension with setuptools + pybind11 helpers.

The CMake build produces the same module for development; this script exists
so `pip install .` works without CMake.  Metadata lives in pyproject.toml.
"""

from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).parent
VENDOR = ROOT / "vendor" if (ROOT / "vendor" / "json.hpp").exists() else Path(
    "/opt/vendor")

# setuptools requires sources as /-separated paths relative to this file.
SOURCES = sorted(p.relative_to(ROOT).as_posix()
                 for p in (ROOT / "src").glob("*.cpp"))
SOURCES.append("bindings/pymodule.cpp")

ext = Pybind11Extension(
    "fishburn._core",
    sources=SOURCES,
    include_dirs=["include", str(VENDOR)],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
