"""Strand insertion, tensor, partial trace, factorization, essential circles."""

import random

import pytest

from atlq import (
    WeightMap,
    configure,
    crossing,
    ess_equal,
    extremal,
    factorize,
    gen_cap,
    gen_cup,
    gen_d,
    gen_id,
    gen_u,
    iota,
    iota_prime,
    is_planar,
    nested_caps,
    nested_cups,
    partial_trace,
    phi,
    tensor,
)
from atlq.planar import ess_generator, recompose
from atlq.scalar import MINUS_ONE, MINUS_TWO, ONE

from helpers import random_single_diagram


def only_diagram(m):
    assert len(m.terms) == 1
    return next(iter(m.terms))


# -- factorization -----------------------------------------------------------


def test_factorize_wrap_turnback():
    word = factorize(only_diagram(gen_u(2, 0)))
    assert word == (("d", 2, -1), ("cap", 2, 0), ("cup", 0, 0), ("d", 2, -1))
    assert recompose(2, word) == gen_u(2, 0)


def test_factorize_identity_is_empty():
    assert factorize(only_diagram(gen_id(3))) == ()
    assert recompose(3, ()) == gen_id(3)


def test_factorize_round_trip_seeded():
    rng = random.Random(20260815)
    for _ in range(60):
        n = rng.randrange(1, 5)
        m = random_single_diagram(rng, n, 8)
        d = only_diagram(m)
        assert recompose(d.dom, factorize(d)).terms == {d: ONE}


def test_factorize_rejects_essential_circles():
    with pytest.raises(ValueError):
        factorize(only_diagram(ess_generator(0)))


def test_is_planar():
    assert is_planar(gen_u(2, 1))
    assert is_planar(gen_id(3) + gen_u(3, 2).scale(ONE))
    assert not is_planar(gen_u(2, 0))  # wraps the seam
    assert not is_planar(extremal(2))  # contains the wrap turnback
    with configure(mode="raw"):
        assert not is_planar(ess_generator(0))


# -- strand insertion --------------------------------------------------------


def test_iota_on_planar_diagram_is_planar():
    assert iota(gen_u(2, 1)) == gen_u(3, 1)
    assert iota_prime(gen_u(2, 1)) == gen_u(3, 2)
    assert iota(gen_id(2)) == gen_id(3)


def test_iota_resolves_seam_crossings():
    # Pushing a strand past the rotation needs both crossing resolutions.
    out = iota(gen_d(1, 1))
    assert len(out.terms) == 2
    parts = sorted(str(d) for d in out.terms)
    assert parts == ["{I0-L0, I1-O0, O1-R0}", "{I0-L0, I1-R0, O0-O1}"]

    out = iota_prime(gen_d(1, 1))
    parts = sorted(str(d) for d in out.terms)
    assert parts == ["{I0-I1, O0-L0, O1-R0}", "{I0-L0, I1-O0, O1-R0}"]


def test_iota_is_tensor_with_identity_on_weights():
    rng = random.Random(7)
    samples = [gen_d(2, 1), gen_u(3, 0), crossing(2, 0) * gen_d(2, 1)]
    samples += [random_single_diagram(rng, 3, 5) for _ in range(5)]
    for x in samples:
        assert phi(iota(x)) == phi(x).tensor(WeightMap.identity(1))
        assert phi(iota_prime(x)) == WeightMap.identity(1).tensor(phi(x))


def test_iota_functorial():
    a, b = gen_u(3, 0), gen_d(3, 1) * gen_u(3, 2)
    assert iota(a * b) == iota(a) * iota(b)
    assert iota_prime(a * b) == iota_prime(a) * iota_prime(b)


# -- tensor ------------------------------------------------------------------


def test_tensor_of_identities():
    assert tensor(gen_id(2), gen_id(3)) == gen_id(5)


def test_tensor_planar_fast_path_matches_insertion():
    # x (x) y = iota^{cod y}(x) . iota'^{dom x}(y)
    x, y = gen_u(2, 1), gen_cap(2, 0)
    assert tensor(x, y) == x * iota_prime(iota_prime(y))
    x2, y2 = gen_cap(2, 0), gen_u(2, 1)
    assert tensor(x2, y2) == iota(iota(x2)) * iota_prime(iota_prime(y2))


def test_tensor_shapes_and_matmul():
    t = gen_d(2, 1) @ gen_u(2, 1)
    assert (t.dom, t.cod) == (4, 4)
    assert t == tensor(gen_d(2, 1), gen_u(2, 1))


def test_tensor_weights_factor():
    for x, y in [(gen_d(1, 1), gen_u(2, 1)), (gen_u(2, 0), gen_d(1, -1))]:
        assert phi(tensor(x, y)) == phi(x).tensor(phi(y))


def test_tensor_interchange_up_to_essential_circles():
    # (x (x) id)(id (x) y) and (id (x) y)(x (x) id) agree in the quotient
    # but genuinely differ as raw annular diagrams when both factors wind.
    x, y = gen_d(2, 1), gen_d(1, -1) * gen_d(1, -1)
    first = tensor(x, gen_id(1)) * tensor(gen_id(2), y)
    second = tensor(gen_id(2), y) * tensor(x, gen_id(1))
    assert first != second
    assert ess_equal(first, second)


# -- partial trace -----------------------------------------------------------


def test_partial_trace_of_identity():
    assert partial_trace(gen_id(3)) == gen_id(2).scale(MINUS_TWO)


def test_partial_trace_of_last_turnback():
    assert partial_trace(gen_u(3, 2)) == gen_id(2)
    assert partial_trace(gen_u(2, 1)) == gen_id(1)


def test_partial_trace_of_rotation():
    # Closing the last strand of the two-strand rotation leaves the
    # one-strand rotation with a sign, not a circle.
    assert partial_trace(gen_d(2, 1)) == gen_d(1, 1).scale(MINUS_ONE)


def test_partial_trace_needs_a_strand():
    with pytest.raises(ValueError):
        partial_trace(gen_id(0))


# -- essential circles -------------------------------------------------------


def test_floating_circle_is_essential():
    e0 = ess_generator(0)
    d = only_diagram(e0)
    assert (d.dom, d.cod, d.ess) == (0, 0, 1)
    with configure(mode="raw"):
        sq = e0 * e0
        assert only_diagram(sq).ess == 2


def test_circle_under_strands_resolves_to_rotations():
    assert ess_generator(1) == gen_d(1, 1) + gen_d(1, -1)
    e2 = ess_generator(2)
    assert e2 == iota(gen_d(1, 1) + gen_d(1, -1))
    assert len(e2.terms) == 4


def test_essential_circles_vanish_on_weights():
    for k in range(4):
        assert phi(ess_generator(k)).is_zero()


# -- nested cups and caps ----------------------------------------------------


def test_nested_caps_cups_close_to_circles():
    for k in range(1, 4):
        caps, cups = nested_caps(k), nested_cups(k)
        assert (cups.dom, cups.cod) == (0, 2 * k)
        assert caps * cups == gen_id(0).scale(MINUS_TWO**k)
    assert str(only_diagram(nested_cups(2))) == "{O0-O3, O1-O2}"
