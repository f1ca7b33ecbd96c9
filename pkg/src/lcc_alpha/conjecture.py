"""Initial-degree conjectures for line count configurations.

For ``W`` of type ``c`` and ``ell = 2r - 1`` (odd) or ``ell = 2r`` (even) the
reduction vector ``v = (ell, ..., ell) * c`` gives
``alpha(ell W) >= ell*t - S(v)``.  The conjectured bound therefore follows
from ``S(v) <= (r - 1)(t - 1)`` (odd) or ``S(v) <= r(t - 1)`` (even).  That
condition is only sufficient: a failing ``S`` says nothing about the
conjecture itself.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import NamedTuple

from .errors import InputError
from .keycase import DoubledBound
from .seqcomb import is_nondecreasing, pi, s_of, star

ODD = "odd"
EVEN = "even"


class Outcome(str, Enum):
    BOUND_HOLDS = "BOUND_HOLDS"
    BOUND_FAILS = "BOUND_FAILS"

    @property
    def note(self):
        if self is Outcome.BOUND_FAILS:
            return "inconclusive: the S bound is only a sufficient condition"
        return "conjectured inequality follows"


def _check_parity(parity):
    if parity not in (ODD, EVEN):
        raise InputError(f"parity must be 'odd' or 'even', got {parity!r}")


def ell_for(r, parity):
    _check_parity(parity)
    if r < 1:
        raise InputError("r must be >= 1")
    return 2 * r - 1 if parity == ODD else 2 * r


def r_for(ell, parity):
    """Inverse of :func:`ell_for`; rejects an ``ell`` of the wrong parity."""
    _check_parity(parity)
    if ell < 1 or (ell % 2 == 1) != (parity == ODD):
        raise InputError(f"ell={ell} is not consistent with parity {parity}")
    return (ell + 1) // 2 if parity == ODD else ell // 2


def conjecture_rhs(n, r, alpha_w, parity):
    """Right-hand side of the conjectured lower bound on ``alpha``."""
    _check_parity(parity)
    if parity == EVEN:
        return r * alpha_w + r * (n - 1)
    return r * alpha_w + (r - 1) * (n - 1)


def doubled_bound(t, r, parity):
    _check_parity(parity)
    half = (r - 1) * (t - 1) if parity == ODD else r * (t - 1)
    return DoubledBound(2 * half)


@dataclass(frozen=True)
class ConjectureReport:
    c: tuple
    t: int
    r: int
    parity: str
    s_value: int
    bound: DoubledBound
    outcome: Outcome
    witness_index: int

    @property
    def ell(self):
        return ell_for(self.r, self.parity)

    @property
    def alpha_lower(self):
        """``ell*t - S``, the combinatorial lower bound on ``alpha(ell W)``."""
        return self.ell * self.t - self.s_value

    CSV_HEADER = ("c", "ell", "r", "parity", "S", "doubled_bound", "outcome")

    def csv_row(self):
        return (
            " ".join(map(str, self.c)),
            self.ell,
            self.r,
            self.parity,
            self.s_value,
            self.bound.twice_value,
            self.outcome.value,
        )

    def to_dict(self):
        return {
            "c": list(self.c),
            "t": self.t,
            "ell": self.ell,
            "r": self.r,
            "parity": self.parity,
            "S": self.s_value,
            "doubled_bound": self.bound.twice_value,
            "bound": str(self.bound),
            "outcome": self.outcome.value,
            "note": self.outcome.note,
            "witness_index": self.witness_index,
            "alpha_lower_bound": self.alpha_lower,
        }


def _s_and_witness(v):
    """``S(v)`` and the smallest index attaining it (0 when ``S`` is the floor 0)."""
    best, where = 0, 0
    for i, x in enumerate(v, start=1):
        if i - x > best:
            best, where = i - x, i
    return best, where


def _check_type(c):
    c = tuple(int(x) for x in c)
    if not c:
        raise InputError("type vector c must be non-empty")
    if any(x < 1 for x in c):
        raise InputError(f"entries of c must be >= 1: {c}")
    if not is_nondecreasing(c):
        raise InputError(f"type vector must be non-decreasing: {c}")
    return c


def verify_lcc_conjecture(c, r, parity):
    c = _check_type(c)
    ell = ell_for(r, parity)
    v = star((ell,) * len(c), c)
    s, where = _s_and_witness(v)
    bound = doubled_bound(len(c), r, parity)
    outcome = Outcome.BOUND_HOLDS if bound.admits(s) else Outcome.BOUND_FAILS
    return ConjectureReport(c, len(c), r, parity, s, bound, outcome, where)


class Dominance(NamedTuple):
    holds: bool
    s_v: int
    s_w: int


def dominance_check(v, w):
    """Compare ``S(v)`` with ``S(pi(w))`` for ``w <= v`` entrywise."""
    v, w = tuple(v), tuple(w)
    if len(v) != len(w):
        raise InputError("v and w must have equal length")
    if not is_nondecreasing(v):
        raise InputError(f"v must be non-decreasing: {v}")
    if any(b > a for a, b in zip(v, w)):
        raise InputError("w must be entrywise <= v")
    s_v, s_w = s_of(v), s_of(pi(w))
    return Dominance(s_v <= s_w, s_v, s_w)


@dataclass(frozen=True)
class SearchResult:
    ell: int
    t: int
    cap: int
    parity: str
    failing: tuple
    maximal_failing: tuple
    scanned_count: int

    def to_dict(self):
        return {
            "params": {"ell": self.ell, "t": self.t, "cap": self.cap, "parity": self.parity},
            "window": f"non-decreasing c in [1, {self.cap}]^{self.t}; maximality is relative to this box",
            "scanned_count": self.scanned_count,
            "failing_count": len(self.failing),
            "failing": [list(c) for c in self.failing],
            "maximal_failing": [list(c) for c in self.maximal_failing],
            "determinism": "exhaustive lexicographic scan; no randomness",
        }


def candidates(t, cap):
    """Non-decreasing vectors in ``[1, cap]^t`` in lexicographic order."""
    return combinations_with_replacement(range(1, cap + 1), t)


def covers(c, cap):
    """Vectors above ``c`` by one unit in one entry, staying non-decreasing and in the box."""
    out = []
    for i, x in enumerate(c):
        if x < cap and (i + 1 == len(c) or x + 1 <= c[i + 1]):
            out.append(c[:i] + (x + 1,) + c[i + 1:])
    return out


def _fails(args):
    c, r, parity = args
    return verify_lcc_conjecture(c, r, parity).outcome is Outcome.BOUND_FAILS


def search_failures(ell, t, cap, parity, jobs=1):
    """All type vectors in the box whose ``S`` bound fails, plus the maximal ones.

    Failures are closed downward (raising entries of ``c`` can only lower
    ``S``), so a failing vector is maximal exactly when none of its covers
    fails.
    """
    if cap < 1 or t < 1:
        raise InputError("cap and t must be >= 1")
    r = r_for(ell, parity)
    cands = list(candidates(t, cap))
    work = [(c, r, parity) for c in cands]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(_fails, work, chunksize=256))
    else:
        flags = [_fails(w) for w in work]
    failing = tuple(c for c, f in zip(cands, flags) if f)
    fail_set = set(failing)
    maximal = tuple(c for c in failing if not any(u in fail_set for u in covers(c, cap)))
    return SearchResult(ell, t, cap, parity, failing, maximal, len(cands))
