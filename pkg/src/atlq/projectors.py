"""Projectors: Jones-Wenzl, extremal weight, and their decompositions.

Everything here lives in the essential-circle quotient, where the weight
functor is faithful; the constructors force quotient mode so that results
are canonical linear combinations of circle-free diagrams regardless of
the ambient configuration.

The extremal weight projector T_m is the unique idempotent acting as the
identity on the two extreme weight spaces (all-plus and all-minus sign
strings) and killing every cap.  The defining recursion

    T_{m+1} = iota(T_m) s_m iota(T_m),    T_1 = id,  T_0 = 2 id_0

is quadratic in the term count, so for building we use the equivalent
overlap product

    T_m = (T_{m-1} (x) id_1) . (id_{m-2} (x) T_2),

equal to it in the quotient because both sides are idempotents with the
same weight action; the test suite checks the recursion against this for
small m directly.  The highest/lowest refinements T_m = H_m + L_m split
off the all-plus and all-minus projectors separately; they need the
rotation's fourth root of unity, so their coefficients live in Q(i)
proper.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import MODE_QUOTIENT, configure
from .diagram import Morphism, crossing, gen_cap, gen_cup, gen_d, gen_id, gen_u
from .planar import iota, iota_prime, nested_caps, nested_cups, partial_trace, tensor
from .scalar import GaussianRational, HALF, I, MINUS_I

_HALF_I = GaussianRational(0, Fraction(1, 2))
_MINUS_HALF_I = GaussianRational(0, Fraction(-1, 2))


@dataclass(frozen=True)
class IsoPair:
    """A split isomorphism between images of two idempotents.

    fwd maps the target idempotent's object into the source one's and bwd
    the other way around; the contracts are bwd . fwd == tgt_idem and
    fwd . bwd == src_idem, both up to essential-circle equality.
    """

    fwd: Morphism
    bwd: Morphism
    src_idem: Morphism
    tgt_idem: Morphism


@lru_cache(maxsize=None)
def jones_wenzl(m: int) -> Morphism:
    """The m-strand Jones-Wenzl projector (planar, kills all caps)."""
    if m < 1:
        raise ValueError("Jones-Wenzl projectors start at one strand")
    if m == 1:
        return gen_id(1)
    with configure(mode=MODE_QUOTIENT):
        prev = jones_wenzl(m - 1)
        lifted = iota(prev)
        correction = lifted * gen_u(m, m - 1) * lifted
        return lifted + correction.scale(Fraction(m - 1, m))


@lru_cache(maxsize=None)
def extremal(m: int) -> Morphism:
    """The extremal weight projector T_m; T_0 is twice the empty diagram."""
    if m < 0:
        raise ValueError("negative strand count")
    if m == 0:
        return gen_id(0).scale(2)
    if m == 1:
        return gen_id(1)
    with configure(mode=MODE_QUOTIENT):
        if m == 2:
            return gen_id(2) + gen_u(2, 1).scale(HALF) + gen_u(2, 0).scale(HALF)
        return iota(extremal(m - 1)) * _shifted_t2(m - 2)


@lru_cache(maxsize=None)
def _shifted_t2(k: int) -> Morphism:
    """id_k (x) T_2, the building block of the ascending product."""
    with configure(mode=MODE_QUOTIENT):
        if k == 0:
            return extremal(2)
        return iota_prime(_shifted_t2(k - 1))


def extremal_by_recursion(m: int) -> Morphism:
    """The defining recursion, kept as an independent cross-check.

    The recursion edge T_{m+1} = iota(T_m) s_m iota(T_m) only applies on
    top of the two-strand base; crossing a single strand with itself is
    not a thing.
    """
    if m < 1:
        raise ValueError("the recursion starts at one strand")
    if m <= 2:
        return extremal(m)
    with configure(mode=MODE_QUOTIENT):
        prev = iota(extremal_by_recursion(m - 1))
        return prev * crossing(m, m - 1) * prev


@lru_cache(maxsize=None)
def highest_weight(m: int) -> Morphism:
    """Projection onto the all-plus weight string, inside T_m."""
    if m < 1:
        raise ValueError("highest weight projectors start at one strand")
    with configure(mode=MODE_QUOTIENT):
        if m == 1:
            return gen_id(1).scale(HALF) + gen_d(1, 1).scale(_MINUS_HALF_I)
        if m == 2:
            return _weight_base(I)
        return iota(highest_weight(m - 1)) * _shifted_weight(m - 2, True)


@lru_cache(maxsize=None)
def lowest_weight(m: int) -> Morphism:
    """Projection onto the all-minus weight string, inside T_m."""
    if m < 1:
        raise ValueError("lowest weight projectors start at one strand")
    with configure(mode=MODE_QUOTIENT):
        if m == 1:
            return gen_id(1).scale(HALF) + gen_d(1, 1).scale(_HALF_I)
        if m == 2:
            return _weight_base(MINUS_I)
        return iota(lowest_weight(m - 1)) * _shifted_weight(m - 2, False)


def _weight_base(unit: GaussianRational) -> Morphism:
    """The two-strand weight projector with rotation phase +-i."""
    dinv = gen_d(2, -1)
    u1 = gen_u(2, 1)
    out = gen_id(2).scale(2) + dinv.scale(unit * GaussianRational(2))
    out = out + u1 + gen_u(2, 0)
    out = out + (dinv * u1).scale(unit) + (u1 * dinv).scale(unit)
    return out.scale(Fraction(1, 4))


@lru_cache(maxsize=None)
def _shifted_weight(k: int, high: bool) -> Morphism:
    base = highest_weight(2) if high else lowest_weight(2)
    with configure(mode=MODE_QUOTIENT):
        for _ in range(k):
            base = iota_prime(base)
        return base


@lru_cache(maxsize=None)
def _tensor_factors(m: int, n: int) -> tuple[Morphism, Morphism]:
    """(T_m (x) id_n, id_m (x) T_n); their product is T_m (x) T_n."""
    with configure(mode=MODE_QUOTIENT):
        a = extremal(m)
        for _ in range(n):
            a = iota(a)
        b = extremal(n)
        for _ in range(m):
            b = iota_prime(b)
        return a, b


@lru_cache(maxsize=None)
def weight_tensor(m: int, n: int) -> Morphism:
    """T_m (x) T_n, cached; the ambient projector of the product formula."""
    a, b = _tensor_factors(m, n)
    with configure(mode=MODE_QUOTIENT):
        return a * b


def split_idempotent(m: int, n: int) -> Morphism:
    """The complement e of T_{m+n} inside T_m (x) T_n.

    Computed as -(T_m (x) T_n) U_m (T_m (x) T_n), folded through the
    tensor factors so no intermediate product pairs two full copies of
    the big projector at once.
    """
    if m < 1 or n < 1:
        raise ValueError("both factors need at least one strand")
    with configure(mode=MODE_QUOTIENT):
        if (m, n) == (1, 1):
            return gen_u(2, 1).scale(Fraction(-1, 2)) + gen_u(2, 0).scale(Fraction(-1, 2))
        a, b = _tensor_factors(m, n)
        inner = b * gen_u(m + n, m) * a
        return -(a * inner * b)


def _maybe_extremal(k: int) -> Morphism:
    """T_k as a tensor factor; the empty factor is the empty diagram alone."""
    return gen_id(0) if k == 0 else extremal(k)


def split_idempotent_nested(m: int, n: int, r: int) -> Morphism:
    """e_{m,n} written with a depth-r cup/cap turnback between the factors."""
    if not (1 <= r <= min(m, n) and r < max(m, n)):
        raise ValueError("turnback depth out of range")
    with configure(mode=MODE_QUOTIENT):
        a, b = _tensor_factors(m, n)
        mid = tensor(
            tensor(_maybe_extremal(m - r), nested_cups(r) * nested_caps(r)),
            _maybe_extremal(n - r),
        )
        return (a * (b * mid * a) * b).scale((-1) ** r)


def iso_diff(m: int, n: int) -> IsoPair:
    """The isomorphism between e_{m,n} and T_{|m-n|} for m != n.

    fwd feeds T_{|m-n|} into the big tensor projector through nested cups
    on the min(m,n) matched strands; bwd is the capped mirror with the
    sign (-1)^min(m,n).
    """
    if m == n or m < 1 or n < 1:
        raise ValueError("need distinct strand counts, both positive")
    lo, diff = min(m, n), abs(m - n)
    with configure(mode=MODE_QUOTIENT):
        w = weight_tensor(m, n)
        if m > n:
            into = tensor(extremal(diff), nested_cups(lo))
            outof = tensor(extremal(diff), nested_caps(lo))
        else:
            into = tensor(nested_cups(lo), extremal(diff))
            outof = tensor(nested_caps(lo), extremal(diff))
        fwd = w * into
        bwd = (outof * w).scale((-1) ** lo)
        return IsoPair(fwd, bwd, split_idempotent(m, n), extremal(diff))


def iso_equal(m: int) -> tuple[IsoPair, IsoPair]:
    """The two maps splitting e_{m,m} into a pair of copies of id_0.

    Each pair contracts to id_0 one way; the other way gives one of the
    two rank-one summands, and the summands add up to e_{m,m} (checked in
    the verification suite, together with the cross contracts
    g_i f_j = 0 for i != j).
    """
    if m < 1:
        raise ValueError("need m >= 1")
    with configure(mode=MODE_QUOTIENT):
        w = weight_tensor(m, m)
        sign = (-1) ** m
        f1 = (w * nested_cups(m)).scale(sign)
        g1 = (nested_caps(m) * w).scale(HALF)
        bent = tensor(nested_cups(1), nested_cups(m - 1))
        unbent = tensor(nested_caps(1), nested_caps(m - 1))
        f2 = (w * gen_d(2 * m, 1) * bent).scale(sign)
        g2 = (unbent * gen_d(2 * m, -1) * w).scale(HALF)
        empty = gen_id(0)
        return (
            IsoPair(f1, g1, f1 * g1, empty),
            IsoPair(f2, g2, f2 * g2, empty),
        )


def kariso_contract(m: int, n: int) -> Morphism:
    """(id (x) caps) (T_m (x) T_n) (id (x) cups), scaled by (-1)^n.

    Equals T_{m-n}, with the convention T_0 = 2 id_0 at m = n.
    """
    if not m >= n >= 1:
        raise ValueError("need m >= n >= 1")
    with configure(mode=MODE_QUOTIENT):
        w = weight_tensor(m, n)
        caps = tensor(gen_id(m - n), nested_caps(n))
        cups = tensor(gen_id(m - n), nested_cups(n))
        return (caps * w * cups).scale((-1) ** n)


# -- structural checks -------------------------------------------------------
#
# Identity checks here hold in the essential-circle quotient, so they are
# decided through the weight functor.  Products whose diagrammatic
# expansion would pair too many terms are evaluated in matrix land
# instead: phi of each factor, then matrix products for composition and
# Kronecker products for tensors.  Functoriality and monoidality of the
# functor carry their own randomized and small-size checks, so the two
# evaluation routes are interchangeable wherever both are feasible.

_CHAIN_LIMIT = 120_000
_EXPAND_LIMIT = 6


@lru_cache(maxsize=None)
def phi_extremal(m: int):
    """The weight map of T_m.

    Up to six strands the projector is expanded and evaluated term by
    term.  Beyond that the expansion outgrows any sane budget (about six
    thousand terms at m = 7, five times that at m = 8), so the map is
    assembled from the ascending product instead:

        phi(T_m) = (phi(T_{m-1}) (x) id) . phi(id_{m-2} (x) T_2).
    """
    from .rep import WeightMap, phi

    if m <= _EXPAND_LIMIT:
        return phi(extremal(m))
    lifted = phi_extremal(m - 1).tensor(WeightMap.identity(1))
    return lifted * phi(_shifted_t2(m - 2))


@lru_cache(maxsize=None)
def phi_weight_tensor(m: int, n: int):
    """The weight map of T_m (x) T_n."""
    return phi_extremal(m).tensor(phi_extremal(n))


@lru_cache(maxsize=None)
def phi_split(m: int, n: int):
    """The weight map of e_{m,n}, assembled without expanding the product."""
    from .rep import phi

    if (m, n) == (1, 1):
        return phi(split_idempotent(1, 1))
    pw = phi_weight_tensor(m, n)
    with configure(mode=MODE_QUOTIENT):
        pu = phi(gen_u(m + n, m))
    return (pw * pu * pw).scale(GaussianRational(-1))


@lru_cache(maxsize=None)
def embedded_extremal(m: int, n: int) -> Morphism:
    """iota^(m-n)(T_n), the lower projector on the first n of m strands."""
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    with configure(mode=MODE_QUOTIENT):
        x = extremal(n)
        for _ in range(m - n):
            x = iota(x)
        return x


def _phi_product(x: Morphism, y: Morphism):
    from .canon import phi_chain
    from .rep import phi

    if len(x.terms) * len(y.terms) <= _CHAIN_LIMIT:
        with configure(mode=MODE_QUOTIENT):
            return phi(x * y)
    return phi_chain(x, y)


def verify_properties(m: int) -> list[str]:
    """Check the five structural identities of T_m; returns the failures.

    Idempotency, absorption of crossings, annihilation of cap-cups,
    absorption of embedded lower projectors, and rotation invariance,
    all as equalities in the quotient.
    """
    from .rep import phi

    if m < 2:
        raise ValueError("the properties concern m >= 2")
    failures: list[str] = []
    with configure(mode=MODE_QUOTIENT):
        t = extremal(m)
        pt = phi_extremal(m)
        if _phi_product(t, t) != pt:
            failures.append("idempotency")
        for i in range(m):
            s = crossing(m, i)
            if phi(t * s) != pt or phi(s * t) != pt:
                failures.append(f"crossing absorption at {i}")
            u = gen_u(m, i)
            if phi(t * u).entries or phi(u * t).entries:
                failures.append(f"cap-cup annihilation at {i}")
        for n in range(1, m):
            pad = embedded_extremal(m, n)
            if _phi_product(t, pad) != pt or _phi_product(pad, t) != pt:
                failures.append(f"absorption of T_{n}")
        if phi(gen_d(m, -1) * t * gen_d(m, 1)) != pt:
            failures.append("rotation invariance")
    return failures


def linked_check(m: int, n: int) -> bool:
    """(T_m (x) T_n) s_m (T_m (x) T_n) equals T_{m+n} in the quotient."""
    if m + n < 3 or m < 1 or n < 1:
        raise ValueError("need m + n >= 3")
    from .canon import phi_chain
    from .rep import phi

    with configure(mode=MODE_QUOTIENT):
        s = crossing(m + n, m)
        a, b = _tensor_factors(m, n)
        if len(a.terms) * len(b.terms) <= _CHAIN_LIMIT:
            lhs = phi_chain(weight_tensor(m, n), s, weight_tensor(m, n))
        else:
            pw = phi_weight_tensor(m, n)
            lhs = pw * phi(s) * pw
        return lhs == phi_extremal(m + n)


def overlap_check(m: int, n: int, r: int) -> bool:
    """Overlapping projectors combine: all four product orders give T_{m+r}.

    Small cells expand the shifted projectors as diagrams; larger ones
    build their weight maps directly as Kronecker products with the
    identity, which is what tensoring with id does under the functor.
    """
    from .rep import WeightMap

    if not (1 <= n <= m and 0 <= r < n):
        raise ValueError("need 1 <= n <= m and 0 <= r < n")
    with configure(mode=MODE_QUOTIENT):
        target = phi_extremal(m + r)
        if m + r <= 4:
            left = tensor(extremal(m), gen_id(r))
            right = tensor(gen_id(m - n + r), extremal(n))
            if _phi_product(left, right) != target or _phi_product(right, left) != target:
                return False
            left = tensor(gen_id(r), extremal(m))
            right = tensor(extremal(n), gen_id(m - n + r))
            return _phi_product(left, right) == target and _phi_product(right, left) == target
    pl = phi_extremal(m).tensor(WeightMap.identity(r))
    pr = WeightMap.identity(m - n + r).tensor(phi_extremal(n))
    if pl * pr != target or pr * pl != target:
        return False
    pl = WeightMap.identity(r).tensor(phi_extremal(m))
    pr = phi_extremal(n).tensor(WeightMap.identity(m - n + r))
    return pl * pr == target and pr * pl == target


def nested_form_check(m: int, n: int, r: int) -> bool:
    """The depth-r turnback form of e_{m,n} agrees with the U_m form.

    Beyond the expansion budget the middle factor's weight map is a
    Kronecker product of its three blocks, so the whole comparison runs
    on matrices.
    """
    from .rep import phi

    if not (1 <= r <= min(m, n) and r < max(m, n)):
        raise ValueError("turnback depth out of range")
    with configure(mode=MODE_QUOTIENT):
        a, b = _tensor_factors(m, n)
        if len(a.terms) * len(b.terms) * 4 <= _CHAIN_LIMIT:
            lhs = phi(split_idempotent_nested(m, n, r))
        else:
            pmid = (
                _phi_block(m - r)
                .tensor(phi(nested_cups(r) * nested_caps(r)))
                .tensor(_phi_block(n - r))
            )
            pw = phi_weight_tensor(m, n)
            lhs = (pw * pmid * pw).scale(GaussianRational((-1) ** r))
        return lhs == phi_split(m, n)


def _phi_block(k: int):
    from .rep import WeightMap

    return WeightMap.identity(0) if k == 0 else phi_extremal(k)


def iso_diff_maps(m: int, n: int):
    """The weight maps of the iso_diff pair, assembled factor by factor.

    Same contracts as iso_diff (bwd fwd gives T_{|m-n|}, fwd bwd gives
    e_{m,n}), for sizes where expanding the big tensor projector is out
    of the question.
    """
    from .rep import phi

    if m == n or m < 1 or n < 1:
        raise ValueError("need distinct strand counts, both positive")
    lo, diff = min(m, n), abs(m - n)
    pw = phi_weight_tensor(m, n)
    with configure(mode=MODE_QUOTIENT):
        if m > n:
            into = tensor(extremal(diff), nested_cups(lo))
            outof = tensor(extremal(diff), nested_caps(lo))
        else:
            into = tensor(nested_cups(lo), extremal(diff))
            outof = tensor(nested_caps(lo), extremal(diff))
        pf = pw * phi(into)
        pg = (phi(outof) * pw).scale(GaussianRational((-1) ** lo))
    return pf, pg


def jw_pair(m: int) -> IsoPair:
    """Witnesses P_{m-1} as the complementary summand of P_{m+1} in iota(P_m).

    bwd . fwd = P_{m-1} and fwd . bwd = iota(P_m) - P_{m+1}; on classes
    this is the product rule [P_m][P_1] = [P_{m+1}] + [P_{m-1}].
    """
    if m < 2:
        raise ValueError("need m >= 2")
    with configure(mode=MODE_QUOTIENT):
        lifted = iota(jones_wenzl(m))
        fwd = (lifted * gen_cup(m - 1, m - 1)).scale(Fraction(-m, m + 1))
        bwd = gen_cap(m + 1, m - 1) * lifted
        return IsoPair(fwd, bwd, lifted - jones_wenzl(m + 1), jones_wenzl(m - 1))


def jw_partial_trace_check(m: int) -> bool:
    """Closing the last strand of P_m gives -((m+1)/m) P_{m-1}."""
    if m < 2:
        raise ValueError("need m >= 2")
    with configure(mode=MODE_QUOTIENT):
        closed = partial_trace(jones_wenzl(m))
        return closed == jones_wenzl(m - 1).scale(Fraction(-(m + 1), m))


def jw_k0_check(m: int) -> bool:
    """Both jw_pair contracts hold on the nose, as planar morphisms.

    The complementary summand is also matched against its closed form
    -(m/(m+1)) iota(P_m) U_m iota(P_m) from the defining recursion.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    pair = jw_pair(m)
    with configure(mode=MODE_QUOTIENT):
        lifted = iota(jones_wenzl(m))
        comp = (lifted * gen_u(m + 1, m) * lifted).scale(Fraction(-m, m + 1))
        return (
            pair.bwd * pair.fwd == pair.tgt_idem
            and pair.fwd * pair.bwd == pair.src_idem
            and pair.src_idem == comp
        )
