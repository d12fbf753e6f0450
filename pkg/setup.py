"""Build hook for the optional compiled elimination kernel.

The extension is marked optional: if Cython or a C compiler is missing the
package still installs and falls back to the pure-Python kernel at import.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build without Cython
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "nhomlie._rref_cy",
                ["src/nhomlie/_rref_cy.pyx"],
                optional=True,
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
