"""Integer-vector and degree-sequence combinatorics.

Vectors are plain tuples of ints, documented 1-indexed (``v_1..v_m``).
Degree sequences are :class:`DegreeSequence` values indexed from ``t = 0``.
"""
from dataclasses import dataclass
from itertools import accumulate

from .errors import InputError

ZERO = "zero"
CONSTANT = "constant"


def as_vector(v):
    """Coerce an iterable to a tuple of non-negative ints."""
    out = tuple(int(x) for x in v)
    if any(x < 0 for x in out):
        raise InputError(f"negative entry in {out}")
    return out


def is_nondecreasing(v):
    return all(v[i] <= v[i + 1] for i in range(len(v) - 1))


def _require_nondecreasing(v):
    v = tuple(v)
    if not is_nondecreasing(v):
        raise InputError(f"vector is not non-decreasing: {v}")
    return v


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """Sequence ``w_0, w_1, ...`` given by a finite prefix and a tail rule.

    ``tail`` is ``"zero"`` (zeros after the prefix) or ``"constant"`` (the
    last prefix value repeats forever).
    """

    prefix: tuple
    tail: str = ZERO

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(x) for x in self.prefix))
        if self.tail not in (ZERO, CONSTANT):
            raise InputError(f"unknown tail rule {self.tail!r}")
        if any(x < 0 for x in self.prefix):
            raise InputError("degree sequences are non-negative")

    @property
    def tail_value(self):
        if self.tail == CONSTANT and self.prefix:
            return self.prefix[-1]
        return 0

    def __getitem__(self, t):
        if t < 0:
            raise IndexError(t)
        if t < len(self.prefix):
            return self.prefix[t]
        return self.tail_value

    def values(self, n):
        """First ``n`` terms as a tuple."""
        return tuple(self[t] for t in range(n))

    def _key(self):
        vals = list(self.prefix)
        while vals and vals[-1] == self.tail_value:
            vals.pop()
        return tuple(vals), self.tail_value

    def __eq__(self, other):
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def first_difference(self):
        p = self.prefix
        diff = [p[0]] if p else []
        diff += [p[i] - p[i - 1] for i in range(1, len(p))]
        if self.tail == ZERO and p and p[-1] != 0:
            diff.append(-p[-1])
        if any(x < 0 for x in diff):
            raise InputError("first difference is negative; sequence is not weakly increasing")
        return DegreeSequence(diff, ZERO)

    def __repr__(self):
        suffix = "0, ..." if self.tail_value == 0 else f"{self.tail_value}, ..."
        body = ", ".join(map(str, self.prefix))
        return f"DegreeSequence({body}{', ' if body else ''}{suffix})"


def pi(v):
    """Entries of ``v`` sorted into non-decreasing order."""
    return tuple(sorted(v))


def _check_positive_pair(a, m):
    a, m = tuple(a), tuple(m)
    if len(a) != len(m):
        raise InputError(f"length mismatch: {len(a)} vs {len(m)}")
    if any(x < 1 for x in a) or any(x < 1 for x in m):
        raise InputError("circ/star require positive entries")
    return a, m


def circ(a, m):
    """``(1*m_1, ..., a_1*m_1, 1*m_2, ..., a_2*m_2, ...)``."""
    a, m = _check_positive_pair(a, m)
    return tuple(k * mi for ai, mi in zip(a, m) for k in range(1, ai + 1))


def star(a, m):
    return pi(circ(a, m))


def delta(v):
    v = tuple(v)
    return tuple(v[i] - (v[i - 1] if i else 0) for i in range(len(v)))


def is_gms(v):
    """Generalized monotone sequence test.

    Between any two zero entries of ``delta(v)`` some entry must exceed 1.
    """
    v = _require_nondecreasing(v)
    last_zero = None
    big_since = False
    for k, x in enumerate(delta(v)):
        if x == 0:
            if last_zero is not None and not big_since:
                return False
            last_zero, big_since = k, False
        elif x > 1:
            big_since = True
    return True


def standard_config(v):
    """Lattice points ``(i, j)`` with ``0 <= j < m`` and ``i < v_{m-j}``."""
    v = tuple(v)
    m = len(v)
    return frozenset((i, j) for j in range(m) for i in range(v[m - 1 - j]))


def diag(v):
    """Anti-diagonal counts of the standard configuration of ``v``."""
    v = tuple(v)
    m = len(v)
    if m == 0 or max(v) == 0:
        return DegreeSequence((), ZERO)
    # row j holds v_{m-j} points and meets diagonals j .. j + v_{m-j} - 1
    top = max(j + v[m - 1 - j] for j in range(m))
    counts = [0] * top
    for j in range(m):
        for i in range(v[m - 1 - j]):
            counts[i + j] += 1
    return DegreeSequence(counts, ZERO)


def alpha_seq(w):
    """Least ``t`` with ``w_t < t + 1``."""
    t = 0
    while True:
        if w[t] < t + 1:
            return t
        if t >= len(w.prefix) and w.tail == CONSTANT:
            # constant tail: w_t is fixed from here, so the answer is w_t
            return max(t, w.tail_value)
        t += 1


def alpha_diag_closed(d):
    """``s + min(0, d_1 - 1, ..., d_s - s)`` for non-decreasing ``d``."""
    d = _require_nondecreasing(d)
    return len(d) + min([0] + [x - i for i, x in enumerate(d, start=1)])


def f_of(d):
    """Partial sums of ``diag(d)``; the tail is constant at ``sum(d)``."""
    dg = diag(d)
    return DegreeSequence(tuple(accumulate(dg.prefix)) or (0,), CONSTANT)


def s_of(v):
    """``max(0, 1 - v_1, 2 - v_2, ..., m - v_m)``."""
    v = _require_nondecreasing(v)
    return max([0] + [i - x for i, x in enumerate(v, start=1)])
