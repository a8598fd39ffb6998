"""
Tests for the integer homology actions: x_ij matrices, push actions and
correction twists.
"""
import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import params_and_member, params_and_word, words_for
from errors import ConstraintError, IndexRangeError, ParityError
from homology import (
    act,
    action_from_multiples,
    basis_labels,
    basis_vector,
    compose,
    correction_from_matrix,
    correction_twists,
    db_class,
    db_multiples,
    identity,
    is_identity,
    push_action,
    rank,
    twist_power,
    xij_matrix,
)
from quotient import nf
from surface import SurfaceParams, in_gamma, in_plus, position_counts
from utils import random_vector
from words import concat, parse_word

WORKED_EXAMPLE = "x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1"


@pytest.mark.parametrize("g, b, expected", [(2, 2, [-2, -2, -1]), (1, 1, [-2]), (3, 1, [-2, -2, -2])])
def test_db_class(g, b, expected):
    assert db_class(SurfaceParams(g, b)).tolist() == expected


def test_basis():
    params = SurfaceParams(3, 3)
    assert rank(params) == 5
    assert basis_labels(params) == ["c1", "c2", "c3", "d1", "d2"]
    assert basis_vector("d2", params).tolist() == [0, 0, 0, 0, 1]
    with pytest.raises(IndexRangeError):
        basis_vector("d3", params)


def test_xij_matrix_columns():
    params = SurfaceParams(3, 2)
    m = xij_matrix(1, 2, params)
    assert m[:, 0].tolist() == [3, 2, 2, 1]
    assert m[:, 1].tolist() == [-2, -1, -2, -1]
    assert m[:, 2].tolist() == [0, 0, 1, 0]
    assert m[:, 3].tolist() == [0, 0, 0, 1]


def test_xii_is_identity():
    params = SurfaceParams(4, 2)
    for i in range(1, 5):
        assert is_identity(xij_matrix(i, i, params))


def test_xij_inverse_pair():
    params = SurfaceParams(4, 3)
    assert is_identity(compose(xij_matrix(1, 2, params), xij_matrix(2, 1, params)))


def test_xij_fixes_boundary_classes():
    params = SurfaceParams(3, 3)
    d1 = basis_vector("d1", params)
    assert act(xij_matrix(1, 2, params), d1).tolist() == d1.tolist()
    assert act(identity(params), d1).tolist() == d1.tolist()


def test_xij_rejects_bad_index():
    with pytest.raises(IndexRangeError):
        xij_matrix(1, 4, SurfaceParams(3, 1))


def test_results_are_read_only():
    m = xij_matrix(1, 2, SurfaceParams(3, 2))
    with pytest.raises(ValueError):
        m[0, 0] = 7


def test_actions_commute_exhaustively():
    params = SurfaceParams(5, 2)
    pairs = list(itertools.product(range(1, 6), repeat=2))
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        left, right = xij_matrix(i, j, params), xij_matrix(k, l, params)
        assert np.array_equal(left @ right, right @ left)


@pytest.mark.parametrize("text", ["1", "x5 x5", "x1 x2 x2 x1"])
def test_push_action_identity(text):
    params = SurfaceParams(5, 2)
    assert is_identity(push_action(parse_word(text, params), params))


def test_push_action_worked_example():
    params = SurfaceParams(4, 6)
    assert is_identity(push_action(parse_word(WORKED_EXAMPLE, params), params))


def test_push_action_single_pair():
    params = SurfaceParams(3, 2)
    assert np.array_equal(push_action(parse_word("x1 x2"), params), xij_matrix(1, 2, params))


def test_push_action_needs_even_length():
    with pytest.raises(ParityError):
        push_action(parse_word("x1"), SurfaceParams(3, 2))


@given(params_and_word())
def test_push_action_kernel_is_gamma(pw):
    params, word = pw
    if in_plus(word, params):
        assert is_identity(push_action(word, params)) == in_gamma(word, params)


@given(params_and_word(), st.data())
def test_push_action_is_multiplicative(pw, data):
    params, w1 = pw
    w2 = data.draw(words_for(params))
    if in_plus(w1, params) and in_plus(w2, params):
        assert np.array_equal(push_action(concat(w1, w2), params),
                              push_action(w1, params) @ push_action(w2, params))


@given(params_and_member())
def test_members_act_trivially(pm):
    params, member = pm
    assert is_identity(push_action(member, params))


@given(params_and_word())
def test_push_action_decodes_to_position_counts(pw):
    params, word = pw
    if not in_plus(word, params):
        return
    n = db_multiples(push_action(word, params), params)
    counts = position_counts(word, params)
    assert sum(n) == 0
    assert n == tuple(e - o for o, e in zip(counts.odd, counts.even))
    assert n[:-1] == tuple(-v for v in nf(word, params).v)


def test_correction_example():
    params = SurfaceParams(3, 1)
    correction = correction_twists((1, -1, 0), params)
    assert correction.twists == ((2, -1), (1, 1))
    assert correction.verified


def test_correction_of_zero_vector():
    correction = correction_twists((0, 0, 0, 0), SurfaceParams(4, 2))
    assert correction.twists == ()
    assert correction.verified


def test_correction_skips_zero_exponents():
    correction = correction_twists((1, 0, -1), SurfaceParams(3, 1))
    assert correction.twists == ((1, 1),)
    assert correction.verified


@pytest.mark.parametrize("n", [(1, 0, 0, 0), (2, -1, 0, 0)])
def test_correction_rejects_nonzero_sum(n):
    with pytest.raises(ConstraintError):
        correction_twists(n, SurfaceParams(4, 1))


def test_correction_rejects_wrong_length():
    with pytest.raises(ConstraintError):
        correction_twists((1, -1), SurfaceParams(4, 1))


@pytest.mark.parametrize("g, b", [(4, 1), (5, 3)])
def test_random_corrections(g, b):
    params = SurfaceParams(g, b)
    rng = random.Random(f"corrections-{g}-{b}")
    for _ in range(200):
        n = random_vector(g, 5, rng)
        assert correction_twists(n, params).verified


def test_twist_power_is_xig_power():
    params = SurfaceParams(4, 2)
    assert np.array_equal(twist_power(1, 3, params), xij_matrix(1, 4, params) @ xij_matrix(1, 4, params) @ xij_matrix(1, 4, params))
    assert is_identity(twist_power(2, 0, params))
    assert is_identity(compose(twist_power(2, 2, params), twist_power(2, -2, params)))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_db_multiples_decodes(n):
    params = SurfaceParams(3, 3)
    assert db_multiples(action_from_multiples(n, params), params) == tuple(n)


def test_db_multiples_rejects_other_matrices():
    params = SurfaceParams(3, 2)
    m = np.array(identity(params))
    m[3, 3] = 2
    with pytest.raises(ConstraintError):
        db_multiples(m, params)
    m = np.array(identity(params))
    m[1, 0] = 1
    with pytest.raises(ConstraintError):
        db_multiples(m, params)


def test_correction_from_matrix():
    params = SurfaceParams(4, 2)
    correction = correction_from_matrix(action_from_multiples((2, -1, 0, -1), params), params)
    assert correction.verified
    assert correction.twists == ((2, -1), (1, 2))
