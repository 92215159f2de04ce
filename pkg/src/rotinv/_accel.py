"""Hot numeric kernels: numba-jitted with a pure-numpy fallback.

Three inner loops dominate the package's numeric runtime: the componentwise
domination sieve of the completion search, raw moment accumulation over
points/pixels, and bilinear image rotation.  Each ships in two equivalent
implementations; the active backend is chosen at import from the
``ROTINV_DISABLE_NUMBA`` environment variable (set to ``1`` to force the
numpy path) and can be switched at runtime with ``set_backend``.

The integer kernel is bit-identical across backends; the float kernels may
differ in the last bits because the summation orders differ.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def deco(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return deco


_ENV_DISABLED = os.environ.get("ROTINV_DISABLE_NUMBA", "").strip().lower() in (
    "1",
    "true",
    "yes",
)

_BACKEND = "numba" if (HAVE_NUMBA and not _ENV_DISABLED) else "numpy"


def active_backend() -> str:
    return _BACKEND


def set_backend(name: str):
    """Switch between 'numba' and 'numpy' kernels (used by the benchmark)."""
    global _BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise ValueError("numba is not importable in this environment")
    _BACKEND = name


# ----------------------------------------------------------------------
# domination sieve: mask[i] = any row b of basis with cand[i] >= b
# ----------------------------------------------------------------------

def dominated_mask_numpy(cand, basis):
    cand = np.ascontiguousarray(cand, dtype=np.int64)
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    mask = np.zeros(len(cand), dtype=np.bool_)
    for b in basis:
        mask |= (cand >= b).all(axis=1)
    return mask


@njit(cache=True)
def _dominated_kernel(cand, basis, out):
    m, n = cand.shape
    k = basis.shape[0]
    for i in range(m):
        for b in range(k):
            ok = True
            for c in range(n):
                if cand[i, c] < basis[b, c]:
                    ok = False
                    break
            if ok:
                out[i] = True
                break


def dominated_mask_numba(cand, basis):
    cand = np.ascontiguousarray(cand, dtype=np.int64)
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    out = np.zeros(len(cand), dtype=np.bool_)
    if len(cand) and len(basis):
        _dominated_kernel(cand, basis, out)
    return out


def dominated_mask(cand, basis):
    """Boolean mask of candidate rows componentwise >= some basis row."""
    if len(cand) == 0 or len(basis) == 0:
        return np.zeros(len(cand), dtype=np.bool_)
    if _BACKEND == "numba":
        return dominated_mask_numba(cand, basis)
    return dominated_mask_numpy(cand, basis)


# ----------------------------------------------------------------------
# raw moment sums: out[p, q] = sum_i w_i x_i^p y_i^q for p, q <= order
# ----------------------------------------------------------------------

def raw_moments_numpy(x, y, w, order):
    xp = np.vander(x, order + 1, increasing=True)  # xp[:, p] = x^p
    yp = np.vander(y, order + 1, increasing=True)
    return (xp * w[:, None]).T @ yp


@njit(cache=True)
def _raw_moments_kernel(x, y, w, order, out):
    n = x.shape[0]
    for i in range(n):
        xp = 1.0
        for p in range(order + 1):
            v = w[i] * xp
            for q in range(order + 1):
                out[p, q] += v
                v *= y[i]
            xp *= x[i]


def raw_moments_numba(x, y, w, order):
    out = np.zeros((order + 1, order + 1), dtype=np.float64)
    _raw_moments_kernel(
        np.ascontiguousarray(x, dtype=np.float64),
        np.ascontiguousarray(y, dtype=np.float64),
        np.ascontiguousarray(w, dtype=np.float64),
        order,
        out,
    )
    return out


def raw_moments(x, y, w, order):
    """Weighted power sums over a flat point list, all p, q up to order."""
    if _BACKEND == "numba":
        return raw_moments_numba(x, y, w, order)
    return raw_moments_numpy(x, y, w, order)


# ----------------------------------------------------------------------
# bilinear rotation of an image about its center, zero fill outside
# ----------------------------------------------------------------------

def bilinear_rotate_numpy(img, theta):
    h, w = img.shape
    cr, cc = (h - 1) / 2.0, (w - 1) / 2.0
    rr, cc_idx = np.meshgrid(np.arange(h), np.arange(w), indexing="ij")
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    dr = rr - cr
    dc = cc_idx - cc
    src_r = cos_t * dr + sin_t * dc + cr
    src_c = -sin_t * dr + cos_t * dc + cc
    r0 = np.floor(src_r).astype(np.int64)
    c0 = np.floor(src_c).astype(np.int64)
    fr = src_r - r0
    fc = src_c - c0
    out = np.zeros_like(img)
    for dr0, dc0, wgt in (
        (0, 0, (1 - fr) * (1 - fc)),
        (0, 1, (1 - fr) * fc),
        (1, 0, fr * (1 - fc)),
        (1, 1, fr * fc),
    ):
        ri = r0 + dr0
        ci = c0 + dc0
        ok = (ri >= 0) & (ri < h) & (ci >= 0) & (ci < w)
        vals = np.zeros_like(img)
        vals[ok] = img[ri[ok], ci[ok]]
        out += wgt * vals
    return out


@njit(cache=True)
def _bilinear_kernel(img, cos_t, sin_t, out):
    h, w = img.shape
    cr = (h - 1) / 2.0
    cc = (w - 1) / 2.0
    for r in range(h):
        for c in range(w):
            dr = r - cr
            dc = c - cc
            src_r = cos_t * dr + sin_t * dc + cr
            src_c = -sin_t * dr + cos_t * dc + cc
            r0 = int(np.floor(src_r))
            c0 = int(np.floor(src_c))
            fr = src_r - r0
            fc = src_c - c0
            acc = 0.0
            for dr0 in range(2):
                for dc0 in range(2):
                    ri = r0 + dr0
                    ci = c0 + dc0
                    if 0 <= ri < h and 0 <= ci < w:
                        wr = fr if dr0 == 1 else 1.0 - fr
                        wc = fc if dc0 == 1 else 1.0 - fc
                        acc += wr * wc * img[ri, ci]
            out[r, c] = acc


def bilinear_rotate_numba(img, theta):
    img = np.ascontiguousarray(img, dtype=np.float64)
    out = np.zeros_like(img)
    _bilinear_kernel(img, float(np.cos(theta)), float(np.sin(theta)), out)
    return out


def bilinear_rotate(img, theta):
    """Rotate an image by theta about its center with bilinear resampling."""
    if _BACKEND == "numba":
        return bilinear_rotate_numba(img, theta)
    return bilinear_rotate_numpy(img, theta)
