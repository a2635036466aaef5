"""Build script: compiles the optional kernel extension when Cython is present.

The package works without the extension (a pure-Python fallback is selected
at import), so any build failure here downgrades to a source-only install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension(
            "matchsticks._kernels._speedups",
            ["src/matchsticks/_kernels/_speedups.pyx"],
            extra_compile_args=["-O3"],
        )],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"matchsticks: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
