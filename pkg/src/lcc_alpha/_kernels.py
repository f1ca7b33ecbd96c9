"""Hot integer kernels with a numba path and a pure-numpy fallback.

Set ``LCC_ALPHA_DISABLE_NUMBA=1`` to force the numpy implementations.  Both
paths are always importable so tests and benchmarks can compare them.
"""
import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

DISABLE_ENV = "LCC_ALPHA_DISABLE_NUMBA"
NUMBA_AVAILABLE = njit is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get(DISABLE_ENV, "") not in ("1", "true", "yes")


# -- modular Gaussian elimination -------------------------------------------
# Entries are reduced into [0, p) with p < 2**31, so every product fits int64.

def _rank_mod_p_py(a, p):
    a = a.copy()
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(col, ncols):
                tmp = a[rank, k]
                a[rank, k] = a[piv, k]
                a[piv, k] = tmp
        # inverse by Fermat, square-and-multiply
        inv = 1
        base = a[rank, col]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for k in range(col, ncols):
            a[rank, k] = (a[rank, k] * inv) % p
        for i in range(rank + 1, nrows):
            f = a[i, col]
            if f != 0:
                for k in range(col, ncols):
                    a[i, k] = (a[i, k] - f * a[rank, k]) % p
        rank += 1
    return rank


def rank_mod_p_numpy(a, p):
    """Rank of ``a`` over GF(p); row operations vectorized with numpy."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        below = a[rank + 1:, col].copy()
        mask = below != 0
        if mask.any():
            rows = np.flatnonzero(mask) + rank + 1
            a[rows, col:] = (a[rows, col:] - (below[mask, None] * a[rank, col:]) % p) % p
        rank += 1
    return rank


# -- key-case scan -----------------------------------------------------------

def _phi_table_py(ell, t):
    n = ell * t
    out = np.empty(n, dtype=np.int64)
    for j in range(1, n + 1):
        s = 0
        for b in range(1, t + 1):
            if j < b * ell:
                s += j // b
            else:
                s += ell
        out[j - 1] = s - j
    return out


def phi_table_numpy(ell, t):
    """Values Phi(j) for j = 1..ell*t as an int64 array (index j-1)."""
    j = np.arange(1, ell * t + 1, dtype=np.int64)[:, None]
    b = np.arange(1, t + 1, dtype=np.int64)[None, :]
    chi = np.where(j < b * ell, j // b, ell)
    return chi.sum(axis=1) - j[:, 0]


if NUMBA_AVAILABLE:
    rank_mod_p_numba = njit(cache=True)(_rank_mod_p_py)
    phi_table_numba = njit(cache=True)(_phi_table_py)
else:  # pragma: no cover
    rank_mod_p_numba = None
    phi_table_numba = None


def rank_mod_p(a, p):
    """Rank of an integer matrix modulo the prime ``p`` (``p < 2**31``)."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    if USE_NUMBA:
        return int(rank_mod_p_numba(np.ascontiguousarray(a % p, dtype=np.int64), p))
    return rank_mod_p_numpy(a, p)


def phi_table(ell, t):
    if USE_NUMBA:
        return phi_table_numba(ell, t)
    return phi_table_numpy(ell, t)


def backend():
    return "numba" if USE_NUMBA else "numpy"
