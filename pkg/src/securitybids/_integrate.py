"""Quadrature backends.

Two routes are kept deliberately separate:

* :func:`adaptive_quad` wraps QUADPACK and returns a genuine error bound;
  the public expectation operations are built on it.
* :func:`piecewise_gauss` is a vectorized fixed-order Gauss-Legendre rule
  applied per smooth segment.  It is used inside grid loops (root solving,
  revenue tensors) where the integrands are piecewise smooth with known
  breakpoints, and is cross-checked against the adaptive route in the tests.
"""

from __future__ import annotations

import warnings
from functools import lru_cache

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import NumericalError

# Absolute-error ceiling for a single conditional expectation.
QUAD_ABS_TOL = 1e-9


@lru_cache(maxsize=None)
def gauss_nodes(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def adaptive_quad(fn, lo, hi, breakpoints=(), target=QUAD_ABS_TOL):
    """Integrate ``fn`` over ``[lo, hi]`` with absolute error <= ``target``.

    ``breakpoints`` lists interior abscissae where the integrand may kink.
    Returns ``(value, error_bound)``; raises :class:`NumericalError` carrying
    the best estimate when the bound cannot be met.
    """
    pts = sorted({float(p) for p in breakpoints if lo < p < hi})
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, err = quad(
            fn, lo, hi,
            points=pts or None,
            epsabs=min(target * 1e-3, 1e-12),
            epsrel=1e-12,
            limit=200,
        )
    if err > target:
        raise NumericalError(
            f"quadrature error estimate {err:.3e} exceeds target {target:.1e}",
            best_estimate=value,
            error_estimate=err,
        )
    return value, err


def piecewise_gauss(values_fn, lo, hi, row_breaks=None, n_rows=None, n_nodes=24):
    """Vectorized per-row integration of a piecewise-smooth integrand.

    ``row_breaks`` is an ``(R, K)`` array of interior breakpoints per row
    (entries outside ``(lo, hi)`` are clipped into degenerate segments and
    contribute nothing).  ``values_fn`` maps an ``(R, M)`` matrix of nodes to
    integrand values of the same shape.  Returns the ``(R,)`` integrals.
    """
    lo = float(lo)
    hi = float(hi)
    if row_breaks is None:
        if n_rows is None:
            raise ValueError("need row_breaks or n_rows")
        row_breaks = np.empty((n_rows, 0))
    row_breaks = np.atleast_2d(np.asarray(row_breaks, dtype=float))
    n_r = row_breaks.shape[0]
    clipped = np.sort(np.clip(row_breaks, lo, hi), axis=1)
    edges = np.concatenate(
        [np.full((n_r, 1), lo), clipped, np.full((n_r, 1), hi)], axis=1
    )
    half = 0.5 * np.diff(edges, axis=1)
    mid = edges[:, :-1] + half
    gx, gw = gauss_nodes(n_nodes)
    nodes = (mid[:, :, None] + half[:, :, None] * gx).reshape(n_r, -1)
    weights = (half[:, :, None] * gw).reshape(n_r, -1)
    vals = np.asarray(values_fn(nodes), dtype=float)
    return np.einsum("rm,rm->r", weights, vals)


def tile_breaks(constant_breaks, n_rows, extra=None):
    """Stack model-level breakpoints (same for every row) with per-row ones."""
    parts = []
    if constant_breaks:
        parts.append(np.tile(np.asarray(constant_breaks, dtype=float), (n_rows, 1)))
    if extra is not None:
        extra = np.asarray(extra, dtype=float)
        if extra.ndim == 1:
            extra = extra[:, None]
        parts.append(extra)
    if not parts:
        return np.empty((n_rows, 0))
    return np.concatenate(parts, axis=1)
