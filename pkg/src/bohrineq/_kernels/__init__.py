"""Kernel backend selection.

The hot inner loops (series convolution, majorant sums, DFT extraction,
circle-grid evaluation) live in the compiled extension ``_core`` when it was
built, with a drop-in pure-Python fallback otherwise.  Set
BOHRINEQ_PURE_PYTHON=1 to force the fallback.  ``benchmarks/bench_kernels.py``
compares the two.
"""

import os

if os.environ.get("BOHRINEQ_PURE_PYTHON"):
    from . import _fallback as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _fallback as _impl

        BACKEND = "python"

abs_values = _impl.abs_values
blaschke_circle_samples = _impl.blaschke_circle_samples
cauchy_product = _impl.cauchy_product
circle_nodes = _impl.circle_nodes
dft_coefficients = _impl.dft_coefficients
max_abs_on_circle = _impl.max_abs_on_circle
power_sum = _impl.power_sum

__all__ = [
    "BACKEND",
    "abs_values",
    "blaschke_circle_samples",
    "cauchy_product",
    "circle_nodes",
    "dft_coefficients",
    "max_abs_on_circle",
    "power_sum",
]
