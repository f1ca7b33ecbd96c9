"""Exact plane geometry for fat point schemes and their reduction vectors."""
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import InputError, RealizationError, ScheduleError
from .seqcomb import alpha_diag_closed, f_of, is_nondecreasing, star


def parse_rational(s):
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {s!r}") from exc


def _canonical_triple(values):
    fr = [v if isinstance(v, Fraction) else Fraction(v) for v in values]
    if len(fr) != 3:
        raise InputError(f"expected 3 coordinates, got {len(fr)}")
    if all(x == 0 for x in fr):
        raise InputError("all-zero homogeneous coordinates")
    den = reduce(lambda x, y: x * y // gcd(x, y), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Point of the projective plane in canonical integer coordinates."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", _canonical_triple(self.coords))

    def to_json(self):
        return [str(x) for x in self.coords]


@dataclass(frozen=True, order=True)
class ProjLine:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical_triple(self.coeffs))

    def contains(self, p):
        return sum(a * x for a, x in zip(self.coeffs, p.coords)) == 0

    def intersection(self, other):
        a, b = self.coeffs, other.coeffs
        cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
        if cross == (0, 0, 0):
            raise InputError("identical lines have no unique intersection")
        return ProjPoint(cross)

    def to_json(self):
        return [str(x) for x in self.coeffs]


def line_through(p, q):
    """The line spanned by two distinct points."""
    return ProjLine(ProjLine(p.coords).intersection(ProjLine(q.coords)).coords)


class FatPointScheme:
    """``m_1 P_1 + ... + m_q P_q`` with distinct points; zero multiplicities dropped.

    Equality ignores point order.
    """

    __slots__ = ("_mults",)

    def __init__(self, items=()):
        mults = {}
        for point, m in items:
            if not isinstance(point, ProjPoint):
                point = ProjPoint(point)
            m = int(m)
            if m < 0:
                raise InputError(f"negative multiplicity {m}")
            if point in mults:
                raise InputError(f"repeated point {point.coords}")
            mults[point] = m
        self._mults = {p: m for p, m in sorted(mults.items()) if m > 0}

    @property
    def items(self):
        return tuple(self._mults.items())

    @property
    def support(self):
        return tuple(self._mults)

    def multiplicity(self, p):
        return self._mults.get(p, 0)

    @property
    def degree(self):
        return sum(m * (m + 1) // 2 for m in self._mults.values())

    @property
    def total_multiplicity(self):
        return sum(self._mults.values())

    def is_empty(self):
        return not self._mults

    def is_reduced(self):
        return all(m == 1 for m in self._mults.values())

    def __len__(self):
        return len(self._mults)

    def __eq__(self, other):
        if not isinstance(other, FatPointScheme):
            return NotImplemented
        return self._mults == other._mults

    def __hash__(self):
        return hash(frozenset(self._mults.items()))

    def __repr__(self):
        body = " + ".join(f"{m}{p.coords}" for p, m in self._mults.items())
        return f"FatPointScheme({body or 'empty'})"

    def scaled(self, k):
        """The scheme with every multiplicity multiplied by ``k``."""
        return FatPointScheme((p, k * m) for p, m in self._mults.items())

    def subscheme(self, points):
        return FatPointScheme((p, self._mults[p]) for p in points)


def residual(Y, L):
    """Drop the multiplicity of every point on ``L`` by one."""
    return FatPointScheme((p, m - 1 if L.contains(p) else m) for p, m in Y.items)


def line_weight(Y, L):
    return sum(m for p, m in Y.items if L.contains(p))


@dataclass(frozen=True)
class ReductionTrace:
    """Result of residuating ``Y`` by a sequence of lines.

    ``lines_applied`` is in application order.  ``d`` and ``steps`` use the
    reverse indexing: the first line applied is ``L_n`` and contributes ``d_n``;
    ``steps[k]`` is ``Y_k`` so ``steps[n]`` is the input scheme and
    ``steps[0]`` what is left at the end.
    """

    lines_applied: tuple
    d: tuple
    steps: tuple
    totally_reduced: bool

    @property
    def indexed_lines(self):
        """``(L_1, ..., L_n)``."""
        return tuple(reversed(self.lines_applied))


def reduce_by_sequence(Y, seq):
    seq = tuple(seq)
    current = Y
    weights, states = [], [Y]
    for L in seq:
        weights.append(line_weight(current, L))
        current = residual(current, L)
        states.append(current)
    return ReductionTrace(
        lines_applied=seq,
        d=tuple(reversed(weights)),
        steps=tuple(reversed(states)),
        totally_reduced=current.is_empty(),
    )


@dataclass(frozen=True)
class GeometricLCC:
    """Line count configuration realized over the rationals.

    ``groups[i]`` are the ``c[i]`` points on ``lines[i]``; each gets
    multiplicity ``a[i]`` in :meth:`scheme`.
    """

    lines: tuple
    groups: tuple
    c: tuple
    a: tuple = field(default=None)

    def __post_init__(self):
        if self.a is None:
            object.__setattr__(self, "a", (1,) * len(self.c))
        self.validate()

    def validate(self):
        if not (len(self.lines) == len(self.groups) == len(self.c) == len(self.a)):
            raise InputError("lines, groups, c and a must have equal length")
        if len(set(self.lines)) != len(self.lines):
            raise InputError("lines are not pairwise distinct")
        seen = set()
        for i, (L, grp) in enumerate(zip(self.lines, self.groups)):
            if len(grp) != self.c[i]:
                raise InputError(f"group {i} has {len(grp)} points, expected {self.c[i]}")
            for p in grp:
                if not L.contains(p):
                    raise InputError(f"point {p.coords} is not on line {i}")
                if any(M.contains(p) for k, M in enumerate(self.lines) if k != i):
                    raise InputError(f"point {p.coords} lies where two lines meet")
                if p in seen:
                    raise InputError(f"point {p.coords} repeated")
                seen.add(p)

    def scheme(self, a=None):
        a = self.a if a is None else tuple(a)
        return FatPointScheme((p, a[i]) for i, grp in enumerate(self.groups) for p in grp)

    @property
    def points(self):
        return tuple(p for grp in self.groups for p in grp)


def _points_spanning(L):
    """Two independent integer points on ``L``."""
    a = L.coeffs
    cands = [(0, -a[2], a[1]), (a[2], 0, -a[0]), (-a[1], a[0], 0)]
    cands = [c for c in cands if c != (0, 0, 0)]
    u = cands[0]
    for v in cands[1:]:
        cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        if cross != (0, 0, 0):
            return u, v
    raise AssertionError("a line always contains two independent points")


def build_lcc(c, a=None, seed=0, bound=1000, budget=10_000):
    """Random rational realization of a line count configuration of type ``c``.

    Uses ``random.Random(seed)`` (Mersenne Twister); line coefficients and the
    two parameters placing each point on its line are integers in
    ``[-bound, bound]``.  Draws violating distinctness or landing on another
    line are rejected; more than ``budget`` rejections raise
    :class:`RealizationError`.
    """
    c = tuple(int(x) for x in c)
    a = (1,) * len(c) if a is None else tuple(int(x) for x in a)
    if not c:
        raise InputError("type vector c must be non-empty")
    if len(a) != len(c):
        raise InputError(f"length mismatch: c has {len(c)} entries, a has {len(a)}")
    if any(x < 1 for x in c) or any(x < 1 for x in a):
        raise InputError("entries of c and a must be >= 1")
    if not is_nondecreasing(c):
        raise InputError(f"type vector must be non-decreasing: {c}")

    rng = random.Random(seed)
    rejects = 0

    def reject():
        nonlocal rejects
        rejects += 1
        if rejects > budget:
            raise RealizationError(f"rejection budget {budget} exhausted; raise the coordinate bound")

    def draw():
        return rng.randint(-bound, bound)

    lines = []
    while len(lines) < len(c):
        coeffs = (draw(), draw(), draw())
        if coeffs == (0, 0, 0):
            reject()
            continue
        L = ProjLine(coeffs)
        if L in lines:
            reject()
            continue
        lines.append(L)

    groups = []
    taken = set()
    for i, (L, ci) in enumerate(zip(lines, c)):
        u, v = _points_spanning(L)
        grp = []
        while len(grp) < ci:
            s, w = draw(), draw()
            coords = tuple(s * x + w * y for x, y in zip(u, v))
            if coords == (0, 0, 0):
                reject()
                continue
            p = ProjPoint(coords)
            if p in taken or any(M.contains(p) for k, M in enumerate(lines) if k != i):
                reject()
                continue
            taken.add(p)
            grp.append(p)
        groups.append(tuple(grp))
    return GeometricLCC(tuple(lines), tuple(groups), c, a)


def _multiset_orders(counts):
    """All sequences using index ``i`` exactly ``counts[i]`` times."""
    total = sum(counts)
    counts = list(counts)
    seq = []

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for i, k in enumerate(counts):
            if k:
                counts[i] -= 1
                seq.append(i)
                yield from rec()
                seq.pop()
                counts[i] += 1

    yield from rec()


def schedule_star(T, exhaustive_limit=10):
    """Totally reducing line order for ``T(a, c)`` whose vector is ``a * c``.

    Greedy: apply the configuration line of largest current weight, ties to
    the smallest index, each line ``i`` exactly ``a[i]`` times.  If that does
    not reproduce ``star(a, c)``, every application order is tried when there
    are at most ``exhaustive_limit`` applications.
    """
    Y = T.scheme()
    target = star(T.a, T.c)

    remaining = list(T.a)
    current = Y
    order = []
    for _ in range(sum(T.a)):
        best = max(
            (i for i in range(len(T.lines)) if remaining[i]),
            key=lambda i: (line_weight(current, T.lines[i]), -i),
        )
        remaining[best] -= 1
        order.append(T.lines[best])
        current = residual(current, T.lines[best])
    trace = reduce_by_sequence(Y, order)
    if trace.totally_reduced and trace.d == target:
        return trace

    achieved = trace.d
    if sum(T.a) <= exhaustive_limit:
        for idx in _multiset_orders(T.a):
            trial = reduce_by_sequence(Y, (T.lines[i] for i in idx))
            if trial.totally_reduced and trial.d == target:
                return trial
    raise ScheduleError(f"could not realize star vector {target}; greedy gave {achieved}", achieved)


def hilbert_lower_bound(d):
    return f_of(d)


def alpha_lower_bound(d):
    return alpha_diag_closed(d)


# -- scheme files ------------------------------------------------------------

def load_scheme(source):
    """Parse the scheme JSON format.

    ``source`` is a path, a JSON string or an already-decoded dict.  Returns
    ``(scheme, lines)`` where ``lines`` maps names to :class:`ProjLine` in
    file order.
    """
    if isinstance(source, dict):
        data = source
    else:
        text = str(source)
        if not text.lstrip().startswith("{"):
            with open(text) as fh:
                text = fh.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid scheme JSON: {exc}") from exc
    try:
        items = [
            (ProjPoint([parse_rational(x) for x in pt["coords"]]), int(pt.get("mult", 1)))
            for pt in data.get("points", [])
        ]
        lines = {}
        for k, ln in enumerate(data.get("lines", [])):
            name = ln.get("name", f"L{k + 1}")
            if name in lines:
                raise InputError(f"duplicate line name {name!r}")
            lines[name] = ProjLine([parse_rational(x) for x in ln["coeffs"]])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed scheme JSON: {exc}") from exc
    return FatPointScheme(items), lines


def scheme_to_dict(Y, lines=None):
    out = {"points": [{"coords": p.to_json(), "mult": m} for p, m in Y.items]}
    if lines:
        out["lines"] = [{"coeffs": L.to_json(), "name": name} for name, L in lines.items()]
    return out


def lcc_to_dict(T):
    lines = {f"L{i + 1}": L for i, L in enumerate(T.lines)}
    out = scheme_to_dict(T.scheme(), lines)
    out["type"] = list(T.c)
    out["mults"] = list(T.a)
    return out
