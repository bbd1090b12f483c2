"""Select the integer kernel implementation at import time."""

try:
    from spgen import _kernels as kernels
    BACKEND = "cython"
except ImportError:  # extension not built
    from spgen import _kernels_py as kernels
    BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
