from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from conftest import random_column, random_matrix
from opreduce import (
    Matrix,
    MinorDescriptor,
    column_of,
    delta_k,
    delta_k_i,
    delta_k_i_coeffs,
    delta_vec,
    det,
    identity,
    mat_vec,
)
from opreduce.minors import principal_submatrix


def anchored_minor_sum(m, k, i):
    """In-test enumeration: sum of order-k principal minors of m containing column i."""
    return sum(
        (
            det(principal_submatrix(m, s))
            for s in combinations(range(m.n), k)
            if (i - 1) in s
        ),
        Fraction(0),
    )


class TestDeltaK:
    def test_order_one_is_trace(self, rng):
        for n in (1, 2, 3, 5):
            m = random_matrix(rng, n)
            assert delta_k(m, 1) == m.trace()

    def test_identity_counts_subsets(self):
        for n in range(1, 6):
            for k in range(0, n + 1):
                assert delta_k(identity(n), k) == comb(n, k)

    def test_two_by_two_full_order(self):
        assert delta_k(Matrix([[1, 2], [3, 4]]), 2) == -2

    def test_conventions(self, rng):
        m = random_matrix(rng, 3)
        assert delta_k(m, 0) == 1
        assert delta_k(m, 4) == 0
        with pytest.raises(ValueError):
            delta_k(m, -1)


class TestDeltaKI:
    def test_order_one_picks_entry(self, rng):
        for n in (1, 2, 4):
            m = random_matrix(rng, n)
            v = random_column(rng, n)
            for i in range(1, n + 1):
                assert delta_k_i(m, 1, i, v) == v[i - 1]

    def test_two_by_two_by_hand(self):
        # det([[1, 2], [0, 4]]) = 4
        assert delta_k_i(Matrix([[1, 2], [3, 4]]), 2, 1, [1, 0]) == 4

    def test_self_substitution_restricts_to_anchored_minors(self, rng):
        for n in (2, 3, 4):
            m = random_matrix(rng, n)
            for k in range(1, n + 1):
                for i in range(1, n + 1):
                    assert delta_k_i(m, k, i, column_of(m, i)) == anchored_minor_sum(m, k, i)

    def test_above_order_n_vanishes(self, rng):
        m = random_matrix(rng, 3)
        assert delta_k_i(m, 4, 2, random_column(rng, 3)) == 0

    def test_linearity_in_column(self, rng):
        m = random_matrix(rng, 4)
        u = random_column(rng, 4)
        w = random_column(rng, 4)
        a, b = Fraction(2, 3), Fraction(-5)
        mixed = tuple(a * x + b * y for x, y in zip(u, w))
        for k in range(1, 5):
            for i in range(1, 5):
                assert delta_k_i(m, k, i, mixed) == a * delta_k_i(m, k, i, u) + b * delta_k_i(
                    m, k, i, w
                )

    def test_errors(self, rng):
        m = random_matrix(rng, 3)
        v = random_column(rng, 3)
        with pytest.raises(ValueError):
            delta_k_i(m, 0, 1, v)
        with pytest.raises(IndexError):
            delta_k_i(m, 1, 0, v)
        with pytest.raises(IndexError):
            delta_k_i(m, 1, 4, v)
        with pytest.raises(ValueError):
            delta_k_i(m, 1, 1, (1, 2))


class TestDeltaVec:
    def test_order_one_is_identity(self, rng):
        m = random_matrix(rng, 3)
        v = random_column(rng, 3)
        assert delta_vec(m, 1, v) == v

    def test_two_by_two_by_hand(self):
        # det([[1,2],[0,4]]) = 4 and det([[1,1],[3,0]]) = -3
        assert delta_vec(Matrix([[1, 2], [3, 4]]), 2, (1, 0)) == (4, -3)

    def test_beyond_order_n_is_zero_column(self, rng):
        m = random_matrix(rng, 3)
        v = random_column(rng, 3)
        assert delta_vec(m, 4, v) == (0, 0, 0)


class TestCouplingIdentity:
    def test_componentwise(self, rng):
        # delta_k^i(M; Mv) + delta_{k+1}^i(M; v) = delta_k(M) * v_i, k = 1..n
        for n in range(1, 7):
            m = random_matrix(rng, n)
            v = random_column(rng, n)
            mv = mat_vec(m, v)
            for k in range(1, n + 1):
                scale = delta_k(m, k)
                for i in range(1, n + 1):
                    left = delta_k_i(m, k, i, mv) + delta_k_i(m, k + 1, i, v)
                    assert left == scale * v[i - 1]

    def test_each_minor_counted_order_times(self, rng):
        # summing the self-substituted anchored sums over i counts every
        # order-k principal minor exactly k times
        for n in (2, 3, 4, 5):
            m = random_matrix(rng, n)
            for k in range(1, n + 1):
                total = sum(
                    (delta_k_i(m, k, i, column_of(m, i)) for i in range(1, n + 1)),
                    Fraction(0),
                )
                assert total == k * delta_k(m, k)


class TestCoefficientFunctional:
    def test_matches_enumeration_on_basis_vectors(self, rng):
        for n in (1, 2, 3, 4):
            m = random_matrix(rng, n)
            for k in range(1, n + 1):
                for i in range(1, n + 1):
                    coeffs = delta_k_i_coeffs(m, k, i)
                    for s in range(n):
                        basis = tuple(Fraction(int(t == s)) for t in range(n))
                        assert coeffs[s] == delta_k_i(m, k, i, basis)

    def test_functional_reproduces_general_columns(self, rng):
        for n in (2, 3, 5):
            m = random_matrix(rng, n)
            v = random_column(rng, n)
            for k in range(1, n + 1):
                for i in range(1, n + 1):
                    coeffs = delta_k_i_coeffs(m, k, i)
                    value = sum((c * x for c, x in zip(coeffs, v)), Fraction(0))
                    assert value == delta_k_i(m, k, i, v)

    def test_beyond_order_n_is_zero(self, rng):
        m = random_matrix(rng, 2)
        assert delta_k_i_coeffs(m, 3, 1) == (0, 0)


def test_minor_descriptor_validation():
    d = MinorDescriptor(order=2, anchor=1, substituted=True)
    assert d.order == 2
    with pytest.raises(ValueError):
        MinorDescriptor(order=0)
    with pytest.raises(ValueError):
        MinorDescriptor(order=1, anchor=0)
