"""Kernel backend selection.

Imports the compiled coefficient kernels when available, otherwise the
pure-Python twin. Set QCATALAN_KERNELS=python to force the fallback (used
by the benchmark and the backend-parity tests); any other value, or none,
means "compiled if possible".
"""

import os

from qcatalan import _kernels_py

_forced = os.environ.get("QCATALAN_KERNELS", "").strip().lower()

if _forced in {"python", "py", "pure"}:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from qcatalan import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

mul_dense = _impl.mul_dense
add_shifted_scaled = _impl.add_shifted_scaled
acc_scaled = _impl.acc_scaled
mul_two_term = _impl.mul_two_term
divexact_two_term = _impl.divexact_two_term
divexact_dense = _impl.divexact_dense
series_div_binomial = _impl.series_div_binomial
unimodal_violation = _impl.unimodal_violation
first_negative = _impl.first_negative
