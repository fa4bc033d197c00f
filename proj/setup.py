# Copyright 2026 The hampen developers
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Builds the pybind11 extension through the project's CMake tree."""

import pathlib
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = pathlib.Path(__file__).parent.resolve()
        build_dir = pathlib.Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = pathlib.Path(self.get_ext_fullpath(ext.name)).parent.resolve()

        subprocess.run(
            [
                "cmake",
                f"-S{source_dir}",
                f"-B{build_dir}",
                "-DCMAKE_BUILD_TYPE=Release",
                "-DHAMPEN_BUILD_CLI=OFF",
                "-DHAMPEN_BUILD_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", build_dir, "--target", "_core"], check=True
        )

        # The CMake tree stages the whole package (sources plus extension)
        # into <module dir>/hampen.
        staged = next((build_dir / "python").glob("hampen/_core*.so"))
        self.copy_file(staged, out_dir / staged.name)


setup(
    packages=["hampen"],
    package_dir={"hampen": "python/hampen"},
    ext_modules=[CMakeExtension("hampen._core")],
    cmdclass={"build_ext": CMakeBuild},
)
