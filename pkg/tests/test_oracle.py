import random
import warnings
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from lcc_alpha import oracle
from lcc_alpha.errors import InputError
from lcc_alpha.fatpoints import FatPointScheme, ProjPoint, build_lcc
from lcc_alpha.oracle import (
    MODULAR, PRIMES, RATIONAL, alpha_exact, bareiss_rank, condition_entry, condition_matrix,
    extract_generic_subset, hilbert_exact, monomial_basis, rank_exact,
)
from lcc_alpha.seqcomb import CONSTANT, DegreeSequence

X = sympy.symbols("x0 x1 x2")


def full_derivative_rows(Y, t):
    """All partials of order < m in all three variables, by sympy differentiation."""
    rows = []
    for p, m in Y.items:
        subs = dict(zip(X, p.coords))
        for s in range(m):
            for beta in monomial_basis(s):
                row = []
                for g in monomial_basis(t):
                    f = X[0] ** g[0] * X[1] ** g[1] * X[2] ** g[2]
                    for v, b in zip(X, beta):
                        f = sympy.diff(f, v, b) if b else f
                    row.append(int(f.subs(subs)))
                rows.append(row)
    return rows


def random_points(rng, n, bound=30):
    pts = set()
    while len(pts) < n:
        pts.add(ProjPoint((rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(1, bound))))
    return sorted(pts)


class TestMatrix:
    @pytest.mark.parametrize("t, n", [(0, 1), (2, 6), (5, 21)])
    def test_monomial_basis(self, t, n):
        basis = monomial_basis(t)
        assert len(basis) == n == comb(t + 2, 2)
        assert all(sum(g) == t for g in basis)
        assert basis == tuple(sorted(basis, reverse=True))

    def test_shapes(self):
        Y = FatPointScheme([((1, 0, 0), 2)])
        assert condition_matrix(Y, 1).shape == (3, 3)
        Y1 = FatPointScheme([((1, 2, 3), 1)])
        assert condition_matrix(Y1, 4).shape == (1, 15)
        Y0 = FatPointScheme([((1, 2, 3), 0)])
        assert condition_matrix(Y0, 2).shape == (0, 6)

    def test_row_count_is_degree(self):
        Y = FatPointScheme([((1, 0, 0), 4), ((0, 1, 2), 3), ((0, 0, 1), 1)])
        for t in range(6):
            assert condition_matrix(Y, t).shape == (Y.degree, comb(t + 2, 2))

    @given(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
           st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
           st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)))
    def test_entry_matches_sympy(self, pt, beta, gamma):
        f = X[0] ** gamma[0] * X[1] ** gamma[1] * X[2] ** gamma[2]
        for v, b in zip(X, beta):
            if b:
                f = sympy.diff(f, v, b)
        assert condition_entry(beta, gamma, pt) == int(f.subs(dict(zip(X, pt))))

    @pytest.mark.parametrize("seed", range(6))
    def test_chart_rows_span_all_derivatives(self, seed):
        rng = random.Random(seed)
        pts = random_points(rng, rng.randint(1, 3), bound=5)
        if seed % 2:
            pts.append(ProjPoint((1, 0, 0)))
            pts.append(ProjPoint((0, 1, 0)))
        Y = FatPointScheme((p, rng.randint(1, 3)) for p in pts)
        for t in range(0, 6):
            full = full_derivative_rows(Y, t)
            ours = [list(r) for r in condition_matrix(Y, t).rows]
            r_full = sympy.Matrix(full).rank() if full else 0
            r_ours = sympy.Matrix(ours).rank() if ours else 0
            r_both = sympy.Matrix(full + ours).rank()
            assert r_ours == r_full == r_both


class TestRank:
    def test_trivial(self):
        assert rank_exact([[0, 0], [0, 0]]).rank == 0
        assert rank_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank == 3
        assert rank_exact([]).rank == 0

    @given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
    def test_bareiss_against_sympy(self, r, c, seed):
        rng = random.Random(seed)
        rows = [[rng.randint(-10**12, 10**12) * rng.randint(0, 1) for _ in range(c)] for _ in range(r)]
        if r > 2:
            rows[-1] = [x + 3 * y for x, y in zip(rows[0], rows[1])]
        expected = sympy.Matrix(rows).rank()
        assert bareiss_rank(rows) == expected
        assert oracle._integer_rank(rows) == expected
        assert rank_exact(rows).rank == expected

    def test_three_lines_degree_5(self, three_lines):
        Y, _ = three_lines
        M = condition_matrix(Y, 5)
        for method in (RATIONAL, MODULAR):
            assert rank_exact(M, method).rank == 15

    def test_modular_is_lower_bound(self):
        rows = [[PRIMES[0], 0], [0, 1]]
        assert oracle.rank_mod(rows, PRIMES[0]) == 1
        assert rank_exact(rows, RATIONAL).rank == 2
        # the two primes disagree, so the rational route decides
        res = rank_exact(rows, MODULAR)
        assert res.rank == 2 and res.method == RATIONAL

    def test_modular_agreement_accepted(self):
        res = rank_exact([[1, 2], [2, 4]], MODULAR)
        assert res.rank == 1 and res.method == MODULAR and res.primes_used == PRIMES

    def test_unknown_method(self):
        with pytest.raises(InputError):
            rank_exact([[1]], "floating")

    def test_bareiss_fallback(self, monkeypatch, three_lines):
        Y, _ = three_lines
        expected = hilbert_exact(Y).values
        monkeypatch.setattr(oracle, "fmpz_mat", None)
        assert hilbert_exact(Y).values == expected


class TestHilbert:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_single_fat_point(self, m):
        Y = FatPointScheme([((2, -1, 3), m)])
        res = hilbert_exact(Y)
        deg = comb(m + 1, 2)
        assert res.values.values(m + 3) == tuple(min(comb(t + 2, 2), deg) for t in range(m + 3))
        assert res.values == DegreeSequence([min(comb(t + 2, 2), deg) for t in range(m)] + [deg], CONSTANT)
        assert res.alpha == m

    def test_three_lines(self, three_lines):
        Y, _ = three_lines
        for method in (RATIONAL, MODULAR):
            res = hilbert_exact(Y, method=method)
            assert res.values == DegreeSequence((1, 3, 6, 10, 14, 15, 16, 17), CONSTANT)
            assert res.alpha == 4
            assert res.method == method
        assert hilbert_exact(Y, method=MODULAR).primes_used == PRIMES
        assert hilbert_exact(Y).primes_used == ()

    def test_generic_points(self):
        Y = FatPointScheme((p, 1) for p in random_points(random.Random(1), 5))
        assert hilbert_exact(Y).values == DegreeSequence((1, 3, 5), CONSTANT)

    def test_t_max_raised(self):
        Y = FatPointScheme([((1, 1, 1), 3)])
        assert len(hilbert_exact(Y, t_max=1).values.prefix) == 4
        assert len(hilbert_exact(Y, t_max=9).values.prefix) == 10

    def test_to_dict(self, three_lines):
        d = hilbert_exact(three_lines[0]).to_dict()
        assert set(d) == {"values", "tail", "alpha", "method", "primes_used"}

    def test_nested_sets_monotone(self):
        rng = random.Random(7)
        for _ in range(5):
            T = build_lcc((2, 3, 3), seed=rng.randint(0, 10**6), bound=20)
            pts = list(T.points) + random_points(rng, 3)
            pts = sorted(set(pts))
            k = rng.randint(1, len(pts) - 1)
            A = FatPointScheme((p, 1) for p in pts[:k])
            B = FatPointScheme((p, 1) for p in pts)
            hA, hB = hilbert_exact(A, t_max=len(pts)), hilbert_exact(B)
            assert all(hA.values[t] <= hB.values[t] for t in range(len(pts) + 1))
            assert hA.alpha <= hB.alpha


class TestAlpha:
    def test_examples(self, three_lines):
        assert alpha_exact(FatPointScheme([((0, 0, 1), 1)])) == 1
        assert alpha_exact(FatPointScheme([((0, 0, 1), 3)])) == 3
        assert alpha_exact(three_lines[0]) == 4

    def test_empty_flagged(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter("always")
            assert alpha_exact(FatPointScheme()) == 0
        assert w


class TestSubset:
    def test_lcc_123(self):
        T = build_lcc((1, 2, 3), seed=2)
        B = T.scheme()
        assert hilbert_exact(B).values == DegreeSequence((1, 3, 6), CONSTANT)
        assert extract_generic_subset(B) == B

    def test_generic_already(self):
        B = FatPointScheme((p, 1) for p in random_points(random.Random(3), 10))
        assert alpha_exact(B) == 4
        assert extract_generic_subset(B) == B

    def test_collinear_plus_one(self):
        B = FatPointScheme([((i, 0, 1), 1) for i in range(4)] + [((0, 1, 1), 1)])
        A = extract_generic_subset(B)
        assert alpha_exact(B) == 2 == alpha_exact(A)
        assert len(A) == 3
        assert hilbert_exact(A).values.first_difference() == DegreeSequence((1, 2))

    def test_rejects(self):
        with pytest.raises(InputError):
            extract_generic_subset(FatPointScheme([((0, 0, 1), 2)]))
        with pytest.raises(InputError):
            extract_generic_subset(FatPointScheme())
