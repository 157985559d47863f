"""The weight functor and exact sparse linear algebra over Q(i)."""

import random

import pytest

from atlq import (
    GaussianRational,
    WeightMap,
    extremal_matrix,
    gen_cap,
    gen_cup,
    gen_d,
    gen_id,
    gen_u,
    phi,
)
from atlq.rep import rank_of_columns, sign_strings, solve_columns
from atlq.scalar import I, MINUS_ONE, ONE, TWO

from helpers import compose_word, random_word


# -- frozen generator images -------------------------------------------------


def test_sign_string_order():
    assert sign_strings(2) == ["++", "+-", "-+", "--"]
    assert sign_strings(0) == [""]


def test_rotation_is_diagonal_i():
    assert phi(gen_d(1, 1)) == WeightMap(1, 1, {("+", "+"): I, ("-", "-"): -I})
    assert phi(gen_d(1, -1)) == WeightMap(1, 1, {("+", "+"): -I, ("-", "-"): I})


def test_cap_cup_images():
    assert phi(gen_cap(2, 0)) == WeightMap(2, 0, {("", "+-"): MINUS_ONE, ("", "-+"): ONE})
    assert phi(gen_cup(0, 0)) == WeightMap(0, 2, {("+-", ""): ONE, ("-+", ""): MINUS_ONE})


def test_turnback_image():
    expected = WeightMap(2, 2, {
        ("+-", "+-"): MINUS_ONE,
        ("+-", "-+"): ONE,
        ("-+", "+-"): ONE,
        ("-+", "-+"): MINUS_ONE,
    })
    assert phi(gen_u(2, 1)) == expected
    assert expected.rank() == 1


def test_wrap_turnback_image_differs_from_interior():
    # U_0 is conjugate to U_1 by the rotation, so same rank, different map.
    m = phi(gen_u(2, 0))
    assert m != phi(gen_u(2, 1))
    assert m.rank() == 1
    d = phi(gen_d(2, 1))
    assert d * m == phi(gen_u(2, 1)) * d


# -- algebra -----------------------------------------------------------------


def test_identity_and_zero():
    assert phi(gen_id(3)) == WeightMap.identity(3)
    assert WeightMap.identity(2) == WeightMap.identity(1).tensor(WeightMap.identity(1))
    assert WeightMap.zero(2, 2).is_zero()
    assert (phi(gen_u(2, 1)) + phi(gen_u(2, 1)).scale(MINUS_ONE)).is_zero()


def test_functorial_on_seeded_words():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randrange(1, 4)
        word = random_word(rng, n, 5)
        x = compose_word(word, n)
        prod = WeightMap.identity(n)
        for letter in word:
            prod = prod * phi(letter)
        assert phi(x) == prod


def test_mul_shape_check():
    with pytest.raises(ValueError):
        phi(gen_u(2, 1)) * WeightMap.identity(3)


def test_apply_and_columns():
    cap = phi(gen_cap(2, 0))
    assert cap.apply("+-") == {"": MINUS_ONE}
    assert cap.apply("++") == {}
    cols = cap.columns()
    assert set(cols) == {"+-", "-+"}


def test_swap_signs_conjugates_rotation():
    assert phi(gen_d(1, 1)).swap_signs() == phi(gen_d(1, -1))
    assert phi(gen_u(3, 1)).swap_signs() == phi(gen_u(3, 1))


def test_rank_of_identity():
    assert WeightMap.identity(3).rank() == 8


# -- hand-written projector target -------------------------------------------


def test_extremal_matrix_shape():
    assert extremal_matrix(0) == WeightMap(0, 0, {("", ""): TWO})
    assert extremal_matrix(2) == WeightMap(
        2, 2, {("++", "++"): ONE, ("--", "--"): ONE}
    )
    assert extremal_matrix(5).rank() == 2
    assert extremal_matrix(3).swap_signs() == extremal_matrix(3)
    with pytest.raises(ValueError):
        extremal_matrix(-1)


# -- sparse solving ----------------------------------------------------------


def test_rank_of_columns_small():
    one = GaussianRational(1)
    cols = [{"a": one}, {"a": one, "b": one}, {"b": one}]
    assert rank_of_columns(cols) == 2
    assert rank_of_columns([]) == 0
    assert rank_of_columns([{}]) == 0


def test_solve_columns_exact():
    one = GaussianRational(1)
    cols = [{"a": one}, {"b": one, "a": I}]
    sol = solve_columns(cols, {"a": GaussianRational(2) + I, "b": one})
    assert sol == [GaussianRational(2), ONE]
    assert solve_columns(cols, {"c": one}) is None


def test_solve_columns_rejects_dependent_family():
    one = GaussianRational(1)
    with pytest.raises(ValueError):
        solve_columns([{"a": one}, {"a": one + one}], {"a": one})


# -- serialization -----------------------------------------------------------


def test_json_round_trip():
    m = phi(gen_u(2, 0)).scale(GaussianRational(1, 2))
    text = m.dumps()
    assert WeightMap.loads(text) == m
    assert m.dumps() == text
