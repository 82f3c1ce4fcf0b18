from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS", default=4).install()

sources = ["python/covertex/_core.cpp"] + sorted(
    s for s in glob("src/*.cpp") if not s.endswith("main.cpp")
)

setup(
    ext_modules=[
        Pybind11Extension(
            "covertex._core",
            sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
