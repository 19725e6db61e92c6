"""Hot per-trial counting kernels, with a compiled core and a numpy fallback.

The compiled Cython module is used when it was built; otherwise the numpy
implementation takes over transparently. ``SPVOTE_BACKEND=pure`` forces the
fallback, ``SPVOTE_BACKEND=cython`` makes a missing compiled module an error.
``benchmarks/bench_kernels.py`` compares the two.
"""

import os

_choice = os.environ.get("SPVOTE_BACKEND", "auto").strip().lower()

if _choice in ("auto", "", "c", "cython"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _choice in ("c", "cython"):
            raise
        from . import pure as _impl
elif _choice in ("pure", "python", "numpy"):
    from . import pure as _impl
else:
    raise RuntimeError(f"unknown SPVOTE_BACKEND value {_choice!r}")

BACKEND = _impl.BACKEND
bloc_votes = _impl.bloc_votes
pairwise_counts = _impl.pairwise_counts
block_sizes = _impl.block_sizes


def available_backends() -> list[str]:
    names = []
    try:
        from . import _ckernels  # noqa: F401

        names.append("cython")
    except ImportError:
        pass
    names.append("pure")
    return names
