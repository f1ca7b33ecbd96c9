"""Hilbert functions of fat point schemes from exact ranks.

In characteristic 0 a form of degree ``t`` vanishes to order ``m`` at ``P``
iff its partial derivatives of order ``< m`` vanish there.  Taking only the
derivatives in the two variables other than the first non-zero coordinate
``x_k`` of ``P`` is the same condition in the affine chart ``x_k = 1`` and
gives exactly ``C(m + 1, 2)`` conditions, so ``H(Y, t)`` is the rank of a
matrix with ``degree(Y)`` rows.  That rank is computed exactly over the
integers, or modulo two primes.
"""
import warnings
from dataclasses import dataclass
from math import comb, prod

import numpy as np

try:
    from flint import fmpz_mat
except ImportError:  # pragma: no cover - exercised when python-flint is absent
    fmpz_mat = None

from . import _kernels
from .errors import InputError
from .fatpoints import FatPointScheme
from .seqcomb import CONSTANT, DegreeSequence

# Two primes below 2**31 so residue products stay inside int64.
PRIMES = (2147483647, 2147483629)

RATIONAL = "rational-exact"
MODULAR = "modular-certified"


def monomial_basis(t):
    """Exponent triples of degree ``t`` in graded-lex order.

    ``x0^t`` first, then decreasing ``x0`` power, ties broken by decreasing
    ``x1`` power.
    """
    if t < 0:
        raise InputError("degree must be >= 0")
    return tuple((i, j, t - i - j) for i in range(t, -1, -1) for j in range(t - i, -1, -1))


def _falling(g, b):
    out = 1
    for k in range(b):
        out *= g - k
    return out


def condition_entry(beta, gamma, coords):
    """``d^beta (x^gamma)`` evaluated at ``coords``."""
    if any(g < b for g, b in zip(gamma, beta)):
        return 0
    coef = prod(_falling(g, b) for g, b in zip(gamma, beta))
    return coef * prod(x ** (g - b) for x, g, b in zip(coords, gamma, beta))


@dataclass(frozen=True)
class ConditionMatrix:
    rows: tuple
    row_labels: tuple
    col_labels: tuple

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)


def derivative_indices(m, chart=0):
    """Multi-indices ``beta`` with ``|beta| <= m - 1`` and ``beta[chart] == 0``."""
    return tuple(b for s in range(m) for b in monomial_basis(s) if b[chart] == 0)


def chart_of(p):
    return next(k for k, x in enumerate(p.coords) if x != 0)


def condition_matrix(Y, t):
    cols = monomial_basis(t)
    rows, labels = [], []
    for p, m in Y.items:
        for beta in derivative_indices(m, chart_of(p)):
            rows.append(tuple(condition_entry(beta, g, p.coords) for g in cols))
            labels.append((p, beta))
    return ConditionMatrix(tuple(rows), tuple(labels), cols)


def bareiss_rank(rows):
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        pv = prow[col]
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[col]
            for k in range(col + 1, ncols):
                row[k] = (pv * row[k] - f * prow[k]) // prev
            row[col] = 0
        prev = pv
        rank += 1
    return rank


def _integer_rank(rows):
    if fmpz_mat is None:
        return bareiss_rank(rows)
    return fmpz_mat([list(r) for r in rows]).rank()


def rank_mod(rows, p):
    if not rows:
        return 0
    arr = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    return _kernels.rank_mod_p(arr, p)


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str
    primes_used: tuple


def rank_exact(M, method=RATIONAL):
    """Exact rank of a condition matrix (or any integer row list).

    ``rational-exact``: a rank mod one prime that already equals
    ``min(rows, cols)`` is a certificate (reduction never raises rank);
    otherwise the integer rank is computed exactly (FLINT when available,
    else :func:`bareiss_rank`).  ``modular-certified``: ranks modulo both
    primes; agreement is accepted, disagreement falls back to the integer
    rank.
    """
    rows = M.rows if isinstance(M, ConditionMatrix) else tuple(tuple(r) for r in M)
    nz = [r for r in rows if any(r)]
    if not nz:
        return RankResult(0, method, ())
    full = min(len(nz), len(nz[0]))
    if method == RATIONAL:
        r = rank_mod(nz, PRIMES[0])
        if r == full:
            return RankResult(r, RATIONAL, ())
        return RankResult(_integer_rank(nz), RATIONAL, ())
    if method == MODULAR:
        r1 = rank_mod(nz, PRIMES[0])
        r2 = rank_mod(nz, PRIMES[1])
        if r1 == r2:
            return RankResult(r1, MODULAR, PRIMES)
        return RankResult(_integer_rank(nz), RATIONAL, PRIMES)
    raise InputError(f"unknown rank method {method!r}")


@dataclass(frozen=True)
class HilbertFunctionResult:
    values: DegreeSequence
    alpha: int
    method: str
    primes_used: tuple

    def to_dict(self):
        return {
            "values": list(self.values.prefix),
            "tail": self.values.tail,
            "alpha": self.alpha,
            "method": self.method,
            "primes_used": list(self.primes_used),
        }


def hilbert_value(Y, t, method=RATIONAL):
    return rank_exact(condition_matrix(Y, t), method).rank


def hilbert_exact(Y, t_max=0, method=RATIONAL):
    """``H(Y, t)`` for ``0 <= t <= max(t_max, sum of multiplicities)``.

    Once a degree reaches ``degree(Y)`` every later value equals it (``H`` is
    non-decreasing and bounded by the number of conditions), so the remaining
    ranks are filled in rather than recomputed.
    """
    t_max = max(int(t_max), Y.total_multiplicity)
    deg = Y.degree
    values = []
    for t in range(t_max + 1):
        if values and values[-1] == deg:
            values.append(deg)
            continue
        values.append(hilbert_value(Y, t, method))
    if values[-1] != deg:
        raise AssertionError(f"Hilbert function did not reach degree {deg} by t={t_max}")
    if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
        raise AssertionError("Hilbert function is not weakly increasing")
    alpha = next(t for t, h in enumerate(values) if h < comb(t + 2, 2))
    primes = PRIMES if method == MODULAR else ()
    return HilbertFunctionResult(DegreeSequence(values, CONSTANT), alpha, method, primes)


def alpha_exact(Y, method=RATIONAL):
    """Least degree carrying a non-zero form vanishing on ``Y``."""
    if Y.is_empty():
        warnings.warn("alpha of the empty scheme is 0 by convention", stacklevel=2)
        return 0
    # a product of one line per point, taken m_i times, has degree sum(m_i)
    for t in range(Y.total_multiplicity + 1):
        if hilbert_value(Y, t, method) < comb(t + 2, 2):
            return t
    raise AssertionError("no form found up to the sum of multiplicities")


def extract_generic_subset(B, method=RATIONAL):
    """Subset ``A`` of a reduced set ``B`` with ``alpha(A) = alpha(B)`` and
    generic Hilbert function.

    With ``a = alpha(B)``, no form of degree ``a - 1`` vanishes on ``B``, so
    its points impose ``C(a + 1, 2)`` independent conditions in that degree.
    Points are scanned in canonical order and kept when they raise the
    rank in degree ``a - 1``; the scan stops at ``C(a + 1, 2)`` points.
    """
    if not isinstance(B, FatPointScheme) or B.is_empty():
        raise InputError("B must be a non-empty scheme")
    if not B.is_reduced():
        raise InputError("B must be reduced (all multiplicities 1)")
    a = alpha_exact(B, method)
    target = comb(a + 1, 2)
    cols = monomial_basis(a - 1)
    chosen, rows = [], []
    for p in B.support:
        row = tuple(condition_entry((0, 0, 0), g, p.coords) for g in cols)
        if rank_exact(rows + [row], method).rank == len(rows) + 1:
            chosen.append(p)
            rows.append(row)
            if len(chosen) == target:
                break
    if len(chosen) != target:
        raise AssertionError(f"only {len(chosen)} independent points in degree {a - 1}")
    return B.subscheme(chosen)
