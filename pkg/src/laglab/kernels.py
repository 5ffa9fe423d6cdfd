"""Hot numeric kernels for the simplex ascent.

Two interchangeable backends:

* ``numba`` -- @njit compiled loops (default when numba imports cleanly);
* ``numpy`` -- vectorized fallback, selected with ``LAGLAB_BACKEND=numpy``.

Both compute the edge polynomial p(w) = sum_e prod_{x in e} w(x), its
gradient (grad_x = weight of the link of x), and run the multiplicative
growth-transform update  w(x) <- w(x) * grad_x / (r * p),  which preserves
the simplex exactly (Euler: sum_x w(x) grad_x = r p) and never decreases p.
"""
from __future__ import annotations

import os

import numpy as np

ZERO_CLAMP = 1e-15  # weights below this are frozen to 0 and the rest renormalized

_env = os.environ.get("LAGLAB_BACKEND", "auto").lower()
if _env not in ("auto", "numba", "numpy"):
    raise ValueError(f"LAGLAB_BACKEND must be auto|numba|numpy, got {_env!r}")

_HAVE_NUMBA = False
if _env != "numpy":
    try:
        from numba import njit as _njit
        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        if _env == "numba":
            raise


def backend_name() -> str:
    return "numba" if _HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _poly_grad_numpy(edges: np.ndarray, w: np.ndarray):
    m, r = edges.shape
    grad = np.zeros_like(w)
    if m == 0:
        return 0.0, grad
    cols = w[edges]  # (m, r)
    p = float(np.prod(cols, axis=1).sum())
    for j in range(r):
        others = np.prod(np.delete(cols, j, axis=1), axis=1)
        np.add.at(grad, edges[:, j], others)
    return p, grad


def _ascend_numpy(edges: np.ndarray, w: np.ndarray, r: int,
                  max_iters: int, tol: float):
    t = w.shape[0]
    uniform = 1.0 / t
    iters = 0
    converged = False
    p = 0.0
    for iters in range(1, max_iters + 1):
        p, grad = _poly_grad_numpy(edges, w)
        if not np.isfinite(p):
            raise FloatingPointError("non-finite polynomial value in ascent")
        if p <= 0.0:
            # deterministic fallback: tiny uniform mix to leave a dead region
            w *= 1.0 - 1e-3
            w += 1e-3 * uniform
            continue
        res = np.abs(grad - r * p)
        res[w <= 0.0] = 0.0
        if float(res.max()) <= tol:
            converged = True
            break
        w *= grad / (r * p)
        w[w < ZERO_CLAMP] = 0.0
        s = w.sum()
        if s <= 0.0:
            w[:] = uniform
        else:
            w /= s
    return p, iters, converged


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if _HAVE_NUMBA:

    @_njit(cache=True)
    def _poly_grad_numba(edges, w):  # pragma: no cover - compiled
        m, r = edges.shape
        grad = np.zeros_like(w)
        p = 0.0
        pref = np.empty(r + 1)
        suff = np.empty(r + 1)
        for i in range(m):
            pref[0] = 1.0
            for j in range(r):
                pref[j + 1] = pref[j] * w[edges[i, j]]
            suff[r] = 1.0
            for j in range(r - 1, -1, -1):
                suff[j] = suff[j + 1] * w[edges[i, j]]
            p += pref[r]
            for j in range(r):
                grad[edges[i, j]] += pref[j] * suff[j + 1]
        return p, grad

    @_njit(cache=True)
    def _ascend_numba(edges, w, r, max_iters, tol):  # pragma: no cover - compiled
        t = w.shape[0]
        uniform = 1.0 / t
        iters = 0
        converged = False
        p = 0.0
        for it in range(1, max_iters + 1):
            iters = it
            p, grad = _poly_grad_numba(edges, w)
            if not np.isfinite(p):
                raise FloatingPointError("non-finite polynomial value in ascent")
            if p <= 0.0:
                for x in range(t):
                    w[x] = w[x] * (1.0 - 1e-3) + 1e-3 * uniform
                continue
            res = 0.0
            for x in range(t):
                if w[x] > 0.0:
                    d = abs(grad[x] - r * p)
                    if d > res:
                        res = d
            if res <= tol:
                converged = True
                break
            s = 0.0
            for x in range(t):
                w[x] = w[x] * grad[x] / (r * p)
                if w[x] < ZERO_CLAMP:
                    w[x] = 0.0
                s += w[x]
            if s <= 0.0:
                for x in range(t):
                    w[x] = uniform
            else:
                for x in range(t):
                    w[x] /= s
        return p, iters, converged


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def poly_and_grad(edges: np.ndarray, w: np.ndarray):
    """Return (p(w), grad) where grad_x is the weight of the link of x."""
    w = np.asarray(w, dtype=np.float64)
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    if _HAVE_NUMBA and edges.shape[0] > 0:
        return _poly_grad_numba(edges, w)
    return _poly_grad_numpy(edges, w)


def ascend_inplace(edges: np.ndarray, w: np.ndarray, r: int,
                   max_iters: int, tol: float):
    """Run the growth transform in place; return (p, iterations, converged)."""
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    if edges.shape[0] == 0:
        return 0.0, 0, True
    if _HAVE_NUMBA:
        return _ascend_numba(edges, w, r, max_iters, tol)
    return _ascend_numpy(edges, w, r, max_iters, tol)


def pair_link_matrix(edges: np.ndarray, w: np.ndarray, t: int) -> np.ndarray:
    """H[x, y] = weight of the joint link N(x, y); diagonal is zero.

    This is the Hessian of the multilinear edge polynomial.  Not a hot
    path (used by the Newton polish and KKT checks only).
    """
    H = np.zeros((t, t))
    m, r = edges.shape
    for i in range(m):
        e = edges[i]
        vals = w[e]
        for a in range(r):
            for b in range(a + 1, r):
                prod = 1.0
                for c in range(r):
                    if c != a and c != b:
                        prod *= vals[c]
                H[e[a], e[b]] += prod
                H[e[b], e[a]] += prod
    return H
