"""Jones-Wenzl and extremal weight projectors, splittings, isomorphisms."""

from fractions import Fraction

import pytest

from atlq import (
    WeightMap,
    ess_equal,
    extremal,
    extremal_by_recursion,
    extremal_matrix,
    gen_d,
    gen_id,
    gen_u,
    highest_weight,
    iota,
    iso_diff,
    iso_diff_maps,
    iso_equal,
    jones_wenzl,
    jw_k0_check,
    jw_pair,
    jw_partial_trace_check,
    kariso_contract,
    linked_check,
    lowest_weight,
    nested_form_check,
    overlap_check,
    partial_trace,
    phi,
    split_idempotent,
    split_idempotent_nested,
    verify_properties,
    weight_tensor,
)
from atlq.projectors import embedded_extremal, phi_extremal, phi_split
from atlq.scalar import HALF, I, ONE


# -- Jones-Wenzl -------------------------------------------------------------


def test_jw_small_closed_forms():
    assert jones_wenzl(1) == gen_id(1)
    assert jones_wenzl(2) == gen_id(2) + gen_u(2, 1).scale(HALF)
    u1, u2 = gen_u(3, 1), gen_u(3, 2)
    expected = (
        gen_id(3)
        + (u1 + u2).scale(Fraction(2, 3))
        + (u1 * u2 + u2 * u1).scale(Fraction(1, 3))
    )
    assert jones_wenzl(3) == expected
    with pytest.raises(ValueError):
        jones_wenzl(0)


def test_jw_idempotent_and_kills_turnbacks():
    for m in (2, 3, 4):
        p = jones_wenzl(m)
        assert p * p == p
        for i in range(1, m):
            assert (p * gen_u(m, i)).is_zero()
            assert (gen_u(m, i) * p).is_zero()
        # the wrap turnback is not killed: it is not planar
        assert not (p * gen_u(m, 0)).is_zero()


def test_jw_rank():
    for m in (1, 2, 3, 4):
        assert phi(jones_wenzl(m)).rank() == m + 1


def test_jw_partial_trace_ratio():
    for m in (2, 3, 4):
        assert jw_partial_trace_check(m)
    assert partial_trace(jones_wenzl(2)) == jones_wenzl(1).scale(Fraction(-3, 2))


def test_jw_pair_contracts():
    for m in (2, 3):
        pair = jw_pair(m)
        assert (pair.fwd.dom, pair.fwd.cod) == (m - 1, m + 1)
        assert pair.bwd * pair.fwd == pair.tgt_idem == jones_wenzl(m - 1)
        assert pair.fwd * pair.bwd == pair.src_idem
        assert pair.src_idem == iota(jones_wenzl(m)) - jones_wenzl(m + 1)
    assert jw_k0_check(2) and jw_k0_check(3)


# -- extremal projectors -----------------------------------------------------


def test_extremal_small_closed_forms():
    assert extremal(0) == gen_id(0).scale(2)
    assert extremal(1) == gen_id(1)
    assert extremal(2) == gen_id(2) + gen_u(2, 1).scale(HALF) + gen_u(2, 0).scale(HALF)
    with pytest.raises(ValueError):
        extremal(-1)


def test_extremal_term_growth():
    assert [len(extremal(m).terms) for m in (1, 2, 3, 4)] == [1, 3, 13, 56]


def test_extremal_weight_oracle():
    for m in range(5):
        assert phi_extremal(m) == extremal_matrix(m)


def test_extremal_idempotent_in_quotient():
    t = extremal(2)
    assert ess_equal(t * t, t)
    t3 = extremal(3)
    assert t3 * t3 != t3  # syntactically distinct before the quotient
    assert phi(t3 * t3) == phi_extremal(3)


def test_extremal_recursion_route_agrees():
    for m in (3, 4):
        assert ess_equal(extremal_by_recursion(m), extremal(m))


def test_extremal_properties_bundle():
    for m in (2, 3):
        assert verify_properties(m) == []


def test_extremal_rotation_invariance():
    t2 = extremal(2)
    assert gen_d(2, -1) * t2 * gen_d(2, 1) == t2
    t3 = extremal(3)
    assert ess_equal(gen_d(3, -1) * t3 * gen_d(3, 1), t3)


def test_extremal_absorbs_embedded_projector():
    t = extremal(3)
    emb = embedded_extremal(3, 2)
    assert emb == iota(extremal(2))
    assert ess_equal(t * emb, t)


# -- splitting idempotents and isomorphisms ----------------------------------


def test_split_idempotent_frozen():
    e = split_idempotent(1, 1)
    assert e == (gen_u(2, 1) + gen_u(2, 0)).scale(-HALF)
    assert len(split_idempotent(2, 1).terms) == 9


def test_tensor_decomposition():
    for m, n in ((1, 1), (2, 1), (2, 2)):
        w = weight_tensor(m, n)
        assert ess_equal(w, extremal(m + n) + split_idempotent(m, n))
        ps = phi_split(m, n)
        assert ps * ps == ps
        assert (ps * phi_extremal(m + n)).is_zero()
        assert ps.rank() == 2


def test_iso_diff_contracts():
    for m, n in ((2, 1), (1, 2), (3, 1)):
        pair = iso_diff(m, n)
        assert ess_equal(pair.bwd * pair.fwd, pair.tgt_idem)
        assert ess_equal(pair.fwd * pair.bwd, pair.src_idem)
        assert pair.tgt_idem == extremal(abs(m - n))
        pf, pg = iso_diff_maps(m, n)
        assert pf == phi(pair.fwd) and pg == phi(pair.bwd)
    with pytest.raises(ValueError):
        iso_diff(2, 2)


def test_iso_equal_contracts():
    p1, p2 = iso_equal(1)
    for pair in (p1, p2):
        assert ess_equal(pair.bwd * pair.fwd, gen_id(0))
        assert ess_equal(pair.fwd * pair.bwd, pair.src_idem)
    # cross contracts vanish and the summands recover the idempotent
    assert phi(p1.bwd * p2.fwd).is_zero()
    assert phi(p2.bwd * p1.fwd).is_zero()
    assert phi(p1.src_idem + p2.src_idem) == phi_split(1, 1)


def test_kariso_contract():
    assert ess_equal(kariso_contract(2, 1), extremal(1))
    assert ess_equal(kariso_contract(1, 1), extremal(0))
    assert ess_equal(kariso_contract(2, 2), extremal(0))
    with pytest.raises(ValueError):
        kariso_contract(1, 2)


def test_product_shape_checks():
    assert linked_check(2, 1)
    assert overlap_check(2, 2, 1)
    assert nested_form_check(2, 1, 1)
    assert nested_form_check(2, 2, 1)
    e = split_idempotent_nested(2, 1, 1)
    assert (e.dom, e.cod) == (3, 3)
    assert phi(e) == phi_split(2, 1)


# -- highest and lowest weight projectors ------------------------------------


def test_weight_projector_base_words():
    h = highest_weight(2)
    assert len(h.terms) == 6
    assert h.terms[next(iter(gen_id(2).terms))] == HALF
    assert h.terms[next(iter(gen_d(2, -1).terms))] == HALF * I
    assert highest_weight(1) == gen_id(1).scale(HALF) + gen_d(1, 1).scale(-HALF * I)


def test_weight_projector_matrices():
    for m in (1, 2, 3):
        plus, minus = "+" * m, "-" * m
        assert phi(highest_weight(m)) == WeightMap(m, m, {(plus, plus): ONE})
        assert phi(lowest_weight(m)) == WeightMap(m, m, {(minus, minus): ONE})


def test_weight_projectors_sum_to_extremal():
    for m in (2, 3):
        assert ess_equal(highest_weight(m) + lowest_weight(m), extremal(m))


def test_weight_projectors_swap_under_sign_flip():
    for m in (2, 3):
        assert phi(highest_weight(m)).swap_signs() == phi(lowest_weight(m))
