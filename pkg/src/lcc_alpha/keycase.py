"""The key case ``d = (ell, ..., ell) * (1, 2, ..., t)``.

``sigma(j)`` counts entries of ``d`` that are at most ``j`` and
``phi(j) = sigma(j) - j``.  The maximum of ``phi`` over ``1 <= j <= ell*t``
equals ``S(d)``, and the bounds on it are checked exhaustively here.
Half-integer bounds are carried doubled so every comparison is integral.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InputError
from .seqcomb import s_of, star


@dataclass(frozen=True)
class KeyCaseParams:
    ell: int
    t: int

    def __post_init__(self):
        if self.ell < 1 or self.t < 1:
            raise InputError(f"ell and t must be >= 1, got ell={self.ell}, t={self.t}")

    @property
    def d(self):
        return star((self.ell,) * self.t, range(1, self.t + 1))


@dataclass(frozen=True)
class DoubledBound:
    twice_value: int

    def admits(self, value):
        return 2 * value <= self.twice_value

    def __str__(self):
        q, r = divmod(self.twice_value, 2)
        return str(q) if r == 0 else f"{self.twice_value}/2"


@dataclass(frozen=True)
class ClaimReport:
    params: KeyCaseParams
    holds: bool
    max_phi: int
    witness_j: int
    bound: DoubledBound


def chi(b, j, ell):
    """Size of ``{a*b : 1 <= a <= ell}`` intersected with ``{1, ..., j}``."""
    if b < 1 or j < 1 or ell < 1:
        raise InputError("chi requires b, j, ell >= 1")
    return j // b if j < b * ell else ell


def sigma(j, params):
    return sum(chi(b, j, params.ell) for b in range(1, params.t + 1))


def phi(j, params):
    return sigma(j, params) - j


def phi_values(params):
    """``phi(j)`` for ``j = 1..ell*t`` (array index ``j - 1``)."""
    return _kernels.phi_table(params.ell, params.t)


def s_keycase(params):
    return max(0, int(phi_values(params).max()))


def claim_bound(params):
    ell, t = params.ell, params.t
    if (t == 2 and ell % 2 == 0) or (ell == 2 and t % 2 == 0):
        return DoubledBound(ell * (t - 1))
    return DoubledBound((ell - 1) * (t - 1))


def verify_claim(params):
    """Scan ``phi`` over ``[1, ell*t]`` against :func:`claim_bound`.

    For ``j >= ell*t`` every ``chi`` saturates and ``phi(j) = ell*t - j <= 0``;
    that closed form is asserted at three tail points instead of scanning.
    """
    n = params.ell * params.t
    for j in (n, n + 1, 2 * n):
        tail = phi(j, params)
        if tail != n - j or tail > 0:
            raise AssertionError(f"tail formula broken at j={j} for {params}")
    vals = phi_values(params)
    k = int(np.argmax(vals))
    bound = claim_bound(params)
    max_phi = int(vals[k])
    holds = bool((2 * vals <= bound.twice_value).all())
    return ClaimReport(params, holds, max_phi, k + 1, bound)


def _verify_cell(cell):
    return verify_claim(KeyCaseParams(*cell))


def sweep(ell_max, t_max, jobs=1):
    """``verify_claim`` over the grid ``1..ell_max x 1..t_max``, sorted by key."""
    cells = [(ell, t) for ell in range(1, ell_max + 1) for t in range(1, t_max + 1)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_cell, cells, chunksize=64))
    else:
        reports = [_verify_cell(c) for c in cells]
    return sorted(reports, key=lambda r: (r.params.ell, r.params.t))


def s_keycase_direct(params):
    """``S`` of the key-case vector computed from the sorted vector itself."""
    return s_of(params.d)
