"""Hot inner loops over F_p residues.

The numba path is used when numba imports cleanly and the environment
variable ``WITTSTACK_NUMBA`` is not set to ``0``.  Both backends are
importable directly (``numpy_backend``, ``numba_backend``) so tests and
the benchmark can compare them.
"""
import os

import numpy as np

from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # pragma: no cover - numba is optional
    numba_backend = None


def _pick():
    flag = os.environ.get("WITTSTACK_NUMBA", "1").strip().lower()
    if numba_backend is not None and flag not in ("0", "false", "no", "off"):
        return numba_backend
    return numpy_backend


backend = _pick()
USING_NUMBA = backend is numba_backend


def as_residues(values, p):
    return np.asarray(values, dtype=np.int64) % p


def poly_mul(a, b, p):
    """Product of two coefficient arrays mod p."""
    return backend.poly_mul(as_residues(a, p), as_residues(b, p), p)


def series_inv(a, n, p):
    """First ``n`` coefficients of ``1/a`` for a power series with ``a[0] != 0``."""
    a = as_residues(a, p)
    if a.size == 0 or a[0] == 0:
        raise ZeroDivisionError("series is not a unit")
    return backend.series_inv(a, int(n), p)


def rank_mod_p(m, p):
    m = np.asarray(m, dtype=np.int64)
    if m.ndim != 2 or 0 in m.shape:
        return 0
    return backend.rank_mod_p(m, p)


def eval_polys(exps, coeffs, owner, npolys, x, p):
    """Evaluate a packed family of polynomials mod p on a batch of points.

    ``exps[t]`` is the exponent row of term ``t``, which belongs to
    polynomial ``owner[t]``; ``x`` has one row per evaluation point.
    """
    return backend.eval_polys(
        np.ascontiguousarray(exps, dtype=np.int64),
        np.ascontiguousarray(coeffs, dtype=np.int64),
        np.ascontiguousarray(owner, dtype=np.int64),
        int(npolys),
        np.ascontiguousarray(x, dtype=np.int64) % p,
        p,
    )


__all__ = [
    "USING_NUMBA", "backend", "numba_backend", "numpy_backend",
    "poly_mul", "series_inv", "rank_mod_p", "eval_polys",
]
