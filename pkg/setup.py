"""Build hook for the optional compiled kernels.

bibcollab is pure Python plus one Cython extension (bibcollab._kernels)
holding the hot counting loops. When Cython or a C toolchain is missing
the extension is skipped and the package falls back to the pure-Python
kernels in bibcollab._kernels_py.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bibcollab._kernels",
                ["src/bibcollab/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
