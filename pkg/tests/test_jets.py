import random

import pytest
from hypothesis import given, settings, strategies as st

from contactloci import make
from contactloci import jets
from contactloci.errors import BadReduction, BudgetExceeded
from contactloci.jets import (
    JetPoint,
    count_contact,
    count_contact_bruteforce,
    count_restricted,
    formal_derivative_eval,
    good_reduction_check,
    leibniz_derivative_eval,
)
from contactloci.lattice import char_poly

from suite import CENTRAL3, LINE, MULTI, SUITE, TRIANGLE
from test_arrangement import arrangements


def jet(rows, p):
    return JetPoint(tuple(tuple(r) for r in rows), p)


def test_count_examples():
    assert count_contact(LINE, 2, 5) == 4
    assert count_contact(CENTRAL3, 1, 5) == 240
    assert count_contact(TRIANGLE, 0, 5) == 13
    assert count_restricted(LINE, 2, 5) == 1
    assert count_restricted(LINE, 0, 5) == 1
    assert count_restricted(CENTRAL3, 1, 5) == 60


def test_derivative_examples():
    p = 7
    boolean = make(2, [[1, 0, 0], [0, 1, 0]])
    a = jet([[2, 3], [4, 5]], p)  # x = 2 + 3t, y = 4 + 5t
    assert formal_derivative_eval(boolean, 1, a) == (2 * 5 + 3 * 4) % p
    shifted = make(1, [[1, 1]])
    assert formal_derivative_eval(shifted, 1, jet([[6, 3]], p)) == 3
    square = make(1, [[1, 0]], [2])
    b = jet([[2, 3, 5]], p)
    assert formal_derivative_eval(square, 2, b) == (2 * 2 * 5 + 2 * 3 * 3) % p
    with pytest.raises(ValueError):
        formal_derivative_eval(square, 3, b)


@pytest.mark.parametrize("name", sorted(SUITE))
def test_leibniz_agrees_with_multinomial(name):
    A = SUITE[name]
    p = 7
    rng = random.Random(name)
    for _ in range(100):
        m = rng.randint(0, 4)
        a = jet([[rng.randrange(p) for _ in range(m + 1)] for _ in range(A.dim)], p)
        for k in range(m + 1):
            assert formal_derivative_eval(A, k, a) == leibniz_derivative_eval(A, k, a)


@pytest.mark.parametrize("name", sorted(SUITE))
@pytest.mark.parametrize("p", [5, 7])
def test_m0_count_is_characteristic_polynomial(name, p):
    A = SUITE[name]
    assert count_contact(A, 0, p) == char_poly(A)(p)
    assert count_contact_bruteforce(A, 0, p) == char_poly(A)(p)


@pytest.mark.parametrize("name", sorted(SUITE))
def test_pattern_count_matches_series_expansion(name):
    A = SUITE[name]
    for m in range(1, 3):
        assert count_contact(A, m, 5) == count_contact_bruteforce(A, m, 5)


@settings(max_examples=25, deadline=None)
@given(arrangements(n_max=2, d_max=3), st.integers(0, 2))
def test_pattern_count_matches_series_expansion_random(A, m):
    if not good_reduction_check(A, 5):
        return
    assert count_contact(A, m, 5) == count_contact_bruteforce(A, m, 5)


def test_blocks_do_not_change_counts(monkeypatch):
    whole = count_restricted(MULTI, 2, 5), count_contact_bruteforce(CENTRAL3, 2, 5)
    monkeypatch.setattr(jets, "_CHUNK", 7)
    assert (count_restricted(MULTI, 2, 5), count_contact_bruteforce(CENTRAL3, 2, 5)) == whole


def test_good_reduction():
    assert good_reduction_check(TRIANGLE, 5)
    assert not good_reduction_check(make(2, [[1, 0, 0], [1, 0, -5]]), 5)
    assert not good_reduction_check(make(1, [[1, 0], [1, -5]]), 5)
    # x, y, x + 2y - 5 is fine over Q but concurrent mod 5
    assert not good_reduction_check(make(2, [[1, 0, 0], [0, 1, 0], [1, 2, -5]]), 5)
    # homogeneous parts collide mod 3 (x + y and x - 2y)
    assert not good_reduction_check(make(2, [[1, 1, 0], [1, -2, -1]]), 3)
    assert good_reduction_check(CENTRAL3, 101)
    with pytest.raises(ValueError):
        good_reduction_check(TRIANGLE, 4)


def test_errors():
    with pytest.raises(ValueError):
        count_contact(LINE, 5, 5)
    with pytest.raises(ValueError):
        count_contact(LINE, 1, 9)
    with pytest.raises(BadReduction):
        count_contact(make(1, [[1, 0], [1, -5]]), 1, 5)
    with pytest.raises(BudgetExceeded):
        count_restricted(CENTRAL3, 2, 7, budget=100)
    with pytest.raises(BudgetExceeded):
        count_contact(CENTRAL3, 2, 7, budget=10)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("CONTACTLOCI_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        count_restricted(CENTRAL3, 1, 5)
    monkeypatch.setenv("CONTACTLOCI_BUDGET", "oops")
    with pytest.raises(Exception, match="integer"):
        count_restricted(CENTRAL3, 1, 5)
