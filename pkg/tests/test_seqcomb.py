from itertools import accumulate, combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcc_alpha.errors import InputError
from lcc_alpha.seqcomb import (
    CONSTANT, ZERO, DegreeSequence, alpha_diag_closed, alpha_seq, circ, delta, diag, f_of,
    is_gms, pi, s_of, standard_config, star,
)

vectors = st.lists(st.integers(0, 15), max_size=20)
nondec = vectors.map(sorted).map(tuple)
positive = st.lists(st.integers(1, 6), min_size=1, max_size=6)


def diag_by_lattice(v):
    """Count anti-diagonals of the standard configuration point by point."""
    pts = standard_config(v)
    if not pts:
        return []
    top = max(i + j for i, j in pts)
    return [sum(1 for i, j in pts if i + j == t) for t in range(top + 1)]


def diag_by_formula(v):
    n = len(v)
    top = max((j + v[n - 1 - j] for j in range(n)), default=0)
    return [sum(1 for j in range(n) if 0 <= t - j < v[n - 1 - j]) for t in range(top)]


def alpha_by_scan(w):
    t = 0
    while w[t] >= t + 1:
        t += 1
    return t


class TestOperators:
    def test_pi(self):
        assert pi((2, 4, 6, 4, 8, 12, 5, 10, 15)) == (2, 4, 4, 5, 6, 8, 10, 12, 15)
        assert pi((1, 2, 3)) == (1, 2, 3)
        assert pi(()) == ()

    def test_circ(self):
        assert circ((3, 3, 3), (2, 4, 5)) == (2, 4, 6, 4, 8, 12, 5, 10, 15)
        assert circ((1,), (7,)) == (7,)
        assert circ((2, 2), (1, 1)) == (1, 2, 1, 2)

    def test_star(self):
        assert star((3, 3, 3), (2, 4, 5)) == (2, 4, 4, 5, 6, 8, 10, 12, 15)
        # expanded by hand: 1-4, 1-4, 2-8 step 2 (twice), 3-12 step 3
        assert star((4,) * 5, (1, 1, 2, 2, 3)) == (
            1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 6, 6, 6, 8, 8, 9, 12)
        assert star((1,), (1,)) == (1,)

    @pytest.mark.parametrize("a, m", [((1, 2), (1,)), ((0, 1), (1, 1)), ((1, 1), (1, 0))])
    def test_circ_rejects(self, a, m):
        with pytest.raises(InputError):
            circ(a, m)
        with pytest.raises(InputError):
            star(a, m)

    def test_delta(self):
        assert delta((2, 3, 4, 8)) == (2, 1, 1, 4)
        assert delta((1, 1)) == (1, 0)
        assert delta(()) == ()
        assert delta((3, 1)) == (3, -2)

    @pytest.mark.parametrize("v, expected", [
        ((2, 3, 4, 8), True),
        ((2, 2, 3, 3), False),
        ((1,), True),
        ((), True),
        ((2, 2, 4, 4), True),
        ((0, 0), False),
    ])
    def test_is_gms(self, v, expected):
        assert is_gms(v) is expected

    def test_is_gms_requires_sorted(self):
        with pytest.raises(InputError):
            is_gms((3, 1))

    def test_standard_config(self):
        c = standard_config((1, 3, 4, 5))
        assert len(c) == 13
        assert sum(1 for _, j in c if j == 0) == 5
        assert standard_config((1,)) == {(0, 0)}
        assert standard_config((2, 2)) == {(0, 0), (1, 0), (0, 1), (1, 1)}

    def test_diag(self):
        assert diag((1, 3, 4, 5)) == DegreeSequence((1, 2, 3, 4, 3, 0))
        assert diag((1, 3, 4, 5)).values(7) == (1, 2, 3, 4, 3, 0, 0)
        assert diag((2, 3, 4, 8)).values(10) == (1, 2, 3, 4, 4, 1, 1, 1, 0, 0)
        assert diag(()) == DegreeSequence(())

    def test_alpha_seq(self):
        assert alpha_seq(DegreeSequence((1, 2, 3, 4, 4, 1, 1, 1))) == 4
        assert alpha_seq(DegreeSequence(())) == 0
        assert alpha_seq(DegreeSequence((1, 2, 3))) == 3
        # constant tails: answer is the tail value once the prefix is exhausted
        assert alpha_seq(DegreeSequence((1, 2, 5), CONSTANT)) == 5
        assert alpha_seq(DegreeSequence((1, 3, 6), CONSTANT)) == 6
        assert alpha_seq(DegreeSequence((1, 1), CONSTANT)) == 1

    def test_alpha_diag_closed(self):
        assert alpha_diag_closed((2, 3, 4, 8)) == 4
        assert alpha_diag_closed(tuple(range(1, 8))) == 7
        assert alpha_diag_closed((1,)) == 1
        assert alpha_diag_closed(()) == 0

    def test_f_of(self):
        assert f_of((2, 3, 4, 8)).values(10) == (1, 3, 6, 10, 14, 15, 16, 17, 17, 17)
        assert f_of((1, 2)) == DegreeSequence((1, 3), CONSTANT)
        assert f_of(()) == DegreeSequence(())

    def test_s_of(self):
        assert s_of((1, 2, 3)) == 0
        assert s_of(star((4,) * 5, (1, 1, 2, 2, 3))) == 10
        assert s_of((2, 2)) == 0
        assert s_of(()) == 0


class TestDegreeSequence:
    def test_equality_ignores_representation(self):
        assert DegreeSequence((1, 3), CONSTANT) == DegreeSequence((1, 3, 3, 3), CONSTANT)
        assert DegreeSequence((1, 0, 0)) == DegreeSequence((1,))
        assert DegreeSequence((0,), CONSTANT) == DegreeSequence(())
        assert DegreeSequence((1, 3), CONSTANT) != DegreeSequence((1, 3))
        assert hash(DegreeSequence((2, 2), CONSTANT)) == hash(DegreeSequence((2,), CONSTANT))

    def test_evaluation(self):
        w = DegreeSequence((1, 3, 5), CONSTANT)
        assert w[0] == 1 and w[2] == 5 and w[100] == 5
        assert DegreeSequence((1, 3))[7] == 0

    def test_first_difference(self):
        assert f_of((2, 3, 4, 8)).first_difference() == diag((2, 3, 4, 8))

    def test_rejects(self):
        with pytest.raises(InputError):
            DegreeSequence((1, -1))
        with pytest.raises(InputError):
            DegreeSequence((1,), "linear")


class TestProperties:
    @given(vectors)
    def test_pi_idempotent_and_multiset(self, v):
        assert pi(pi(v)) == pi(v)
        assert sorted(pi(v)) == sorted(v)

    @given(positive, st.data())
    def test_star_sorted_length(self, a, data):
        m = data.draw(st.lists(st.integers(1, 6), min_size=len(a), max_size=len(a)))
        s = star(a, m)
        assert len(s) == sum(a)
        assert list(s) == sorted(s)

    @given(vectors)
    def test_diag_conserves_points(self, v):
        assert sum(diag(v).prefix) == sum(v)

    @given(vectors)
    def test_diag_matches_lattice_and_formula(self, v):
        dg = diag(v)
        brute = diag_by_lattice(v)
        assert DegreeSequence(brute) == dg
        assert DegreeSequence(diag_by_formula(v)) == dg

    @given(nondec)
    def test_f_of_difference_is_diag(self, d):
        f = f_of(d)
        n = len(diag(d).prefix) + 2
        vals = f.values(n)
        assert list(accumulate(diag(d).values(n))) == list(vals)
        assert f.first_difference() == diag(d)

    @given(st.lists(st.integers(1, 30), max_size=12, unique=True).map(sorted))
    def test_strictly_increasing_is_gms(self, v):
        assert is_gms(tuple(v))


@pytest.mark.parametrize("length", range(0, 7))
def test_alpha_identities_exhaustive(length):
    """alpha closed form = alpha of diag by scan = |d| - S(d) on all small sorted vectors."""
    for d in combinations_with_replacement(range(0, 9), length):
        a = alpha_diag_closed(d)
        assert a == alpha_by_scan(diag(d)) == alpha_seq(diag(d))
        assert a == len(d) - s_of(d)


@given(st.lists(st.integers(0, 15), max_size=12).map(sorted).map(tuple))
def test_alpha_identities_sampled(d):
    assert alpha_diag_closed(d) == alpha_by_scan(diag(d)) == len(d) - s_of(d)
