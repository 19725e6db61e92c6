from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package works without the compiled kernels; spvote.kernels falls
    # back to the numpy implementation at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("spvote.kernels._ckernels", ["src/spvote/kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
