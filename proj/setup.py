import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        import pybind11

        source_dir = Path(__file__).parent.resolve()
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_temp),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DGRANDSOFT_PYTHON=ON",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_core", "-j"],
            check=True,
        )
        dest = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        dest.mkdir(parents=True, exist_ok=True)
        for so in (build_temp / "python" / "grandsoft").glob("_core.*"):
            shutil.copy2(so, dest / so.name)


setup(
    packages=["grandsoft"],
    package_dir={"grandsoft": "python/grandsoft"},
    ext_modules=[CMakeExtension("grandsoft._core")],
    cmdclass={"build_ext": CMakeBuild},
)
