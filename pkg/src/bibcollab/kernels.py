"""Kernel backend selection.

Prefers the compiled extension and falls back to the pure-Python module
when it is missing (source checkout without a build step, unsupported
platform). Both expose the same functions and return identical arrays;
``BACKEND`` reports which one is live. Set ``BIBCOLLAB_NO_EXT=1`` to force
the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os

if os.environ.get("BIBCOLLAB_NO_EXT"):
    from ._kernels_py import (  # noqa: F401
        BACKEND,
        BILATERAL,
        FOCAL_ABSENT,
        INDIGENOUS,
        OTHER,
        classify_labels,
        pair_matrix,
        pair_matrix_by_year,
    )
else:
    try:
        from ._kernels import (  # noqa: F401
            BACKEND,
            BILATERAL,
            FOCAL_ABSENT,
            INDIGENOUS,
            OTHER,
            classify_labels,
            pair_matrix,
            pair_matrix_by_year,
        )
    except ImportError:
        from ._kernels_py import (  # noqa: F401
            BACKEND,
            BILATERAL,
            FOCAL_ABSENT,
            INDIGENOUS,
            OTHER,
            classify_labels,
            pair_matrix,
            pair_matrix_by_year,
        )
