from itertools import product
from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from dtknots.bridge import RangeError
from dtknots.diophantine import (condition_a, condition_b, condition_c, condition_d, form_values, is_square,
                                 is_sum_of_two_squares, modular_unsolvable, solve_quad, solve_triple_system,
                                 three_square_vectors, two_squares, x_search_bound)


def brute_quad(r, s, extra):
    # generous window: the bound plus a unit margin
    lim = x_search_bound(r, s) + 1
    ylim = isqrt(r + 2 * lim) + 1
    for x in range(-lim, lim + 1):
        for ys in product(range(ylim + 1), repeat=extra):
            if s * x * x + 2 * x + sum(y * y for y in ys) == r:
                return True
    return False


def test_solve_quad_examples():
    sol = solve_quad(8, 3, 1)
    assert (sol.x, sol.squares) == (-2, (0,))
    assert solve_quad(5, 14, 1) is None
    assert solve_quad(22, 62, 2) is None


@settings(max_examples=150)
@given(st.integers(1, 80), st.integers(1, 40), st.sampled_from([1, 2]))
def test_solve_quad_agrees_with_brute_force(r, s, extra):
    sol = solve_quad(r, s, extra)
    assert (sol is not None) == brute_quad(r, s, extra)
    if sol is not None:
        assert sol.evaluate(s) == r


def test_solve_quad_validates():
    with pytest.raises(ValueError):
        solve_quad(0, 3)
    with pytest.raises(RangeError):
        solve_quad(2**100, 2**100)


def test_conditions_ab():
    assert condition_a(5, 14)
    assert not condition_b(3, 8)
    assert condition_a(12, 12)


def brute_triple(m, n_abs):
    a_vecs = three_square_vectors(m)
    b_vecs = three_square_vectors(n_abs)
    return any(sum(x * y for x, y in zip(a, b)) == -1 for a in a_vecs for b in b_vecs)


@pytest.mark.parametrize("m, n_abs, unsolvable", [(5, 2, False), (2, 18, True), (13, 10, True)])
def test_condition_c_examples(m, n_abs, unsolvable):
    assert condition_c(m, n_abs) is unsolvable


def test_triple_system_agrees_with_brute_force():
    for m in range(1, 30):
        for n_abs in range(1, 30):
            sol = solve_triple_system(m, n_abs)
            assert (sol is not None) == brute_triple(m, n_abs)
            if sol:
                assert sum(v * v for v in sol.row1) == m
                assert sum(v * v for v in sol.row2) == n_abs
                assert sum(a * b for a, b in zip(sol.row1, sol.row2)) == -1


@pytest.mark.parametrize("m, n, value", [(7, -12, True), (4, -10, False), (5, -2, False)])
def test_condition_d(m, n, value):
    assert condition_d(m, n) is value


@pytest.mark.parametrize("form, target, modulus, value", [
    ("x^2+(x+1)^2+z^2", 18, 25, True),
    ("x^2+(3x+1)^2+y^2", 4, 9, True),
    ("x^2+x+2y^2", 0, 25, False),
])
def test_modular_unsolvable(form, target, modulus, value):
    assert modular_unsolvable(form, target, modulus) is value


def test_modular_unsolvable_rejects_unknown_form():
    with pytest.raises(KeyError):
        modular_unsolvable("x^3", 1, 5)


def test_form_values_brute_force():
    for t in (9, 25, 12):
        expected = {(x * x + x + 2 * y * y) % t for x in range(t) for y in range(t)}
        assert form_values("x^2+x+2y^2", t) == expected


def test_modular_certificate_implies_no_integer_solution():
    # C(2, -(18 + 100k)): the three-squares system has no solution, as the mod 25 certificate predicts
    assert modular_unsolvable("x^2+(x+1)^2+z^2", 18, 25)
    for k in range(5):
        assert condition_c(2, 18 + 100 * k)


def test_sum_of_two_squares():
    for v in range(200):
        brute = any(is_square(v - a * a) for a in range(isqrt(v) + 1))
        assert is_sum_of_two_squares(v) == brute
        pair = two_squares(v)
        assert (pair is not None) == brute
        if pair:
            assert pair[0] ** 2 + pair[1] ** 2 == v
