"""Chebyshev-type polynomials mirroring the projector calculus.

Both families satisfy p_m = X p_{m-1} - p_{m-2}:

* renormalized first kind  L_0 = 2, L_1 = X   (extremal projectors),
* second kind              J_0 = 1, J_1 = X   (Jones-Wenzl projectors).

Splitting T_m (x) T_n into extremal projectors decategorifies to
L_m L_n = L_{m+n} + L_{|m-n|}, and the Jones-Wenzl fusion rule to
J_m J_n = J_{m+n} + J_{m+n-2} + ... + J_{|m-n|}.

Polynomials are integer coefficient tuples, ascending degree.
"""

from __future__ import annotations

from functools import lru_cache

Poly = tuple[int, ...]

X: Poly = (0, 1)


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, tuple(-c for c in q))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _trim(cs) -> Poly:
    while cs and cs[-1] == 0:
        cs = cs[:-1]
    return tuple(cs)


@lru_cache(maxsize=None)
def cheb_l(m: int) -> Poly:
    """Renormalized Chebyshev of the first kind: L_0 = 2, L_1 = X."""
    if m < 0:
        raise ValueError("negative index")
    if m == 0:
        return (2,)
    if m == 1:
        return X
    return poly_sub(poly_mul(X, cheb_l(m - 1)), cheb_l(m - 2))


@lru_cache(maxsize=None)
def cheb_j(m: int) -> Poly:
    """Chebyshev of the second kind: J_0 = 1, J_1 = X."""
    if m < 0:
        raise ValueError("negative index")
    if m == 0:
        return (1,)
    if m == 1:
        return X
    return poly_sub(poly_mul(X, cheb_j(m - 1)), cheb_j(m - 2))


def poly_str(p: Poly) -> str:
    """Human format, descending degree: "X^4-4X^2+2".

    >>> poly_str(cheb_l(4))
    'X^4-4X^2+2'
    """
    if not p:
        return "0"
    bits = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if bits else "")
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            xpow = "X" if deg == 1 else f"X^{deg}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        bits.append(sign + body)
    return "".join(bits)


def l_product_identity(m: int, n: int) -> bool:
    """L_m L_n = L_{m+n} + L_{|m-n|}."""
    return poly_mul(cheb_l(m), cheb_l(n)) == poly_add(
        cheb_l(m + n), cheb_l(abs(m - n))
    )


def j_product_identity(m: int, n: int) -> bool:
    """J_m J_n = sum of J_k for k from |m-n| to m+n in steps of 2."""
    rhs: Poly = ()
    for k in range(abs(m - n), m + n + 1, 2):
        rhs = poly_add(rhs, cheb_j(k))
    return poly_mul(cheb_j(m), cheb_j(n)) == rhs


def j_from_l_identity(m: int) -> bool:
    """J_m = L_m + J_{m-2} for m >= 2."""
    return cheb_j(m) == poly_add(cheb_l(m), cheb_j(m - 2))


def decat_check(m: int, n: int) -> bool:
    """Weight ranks mirror the first-kind product rule, 4 = 2 + 2.

    The product T_m (x) T_n splits as T_{m+n} plus a rank-2 complement,
    which is the categorified L_m L_n = L_{m+n} + L_{|m-n|}; on ranks
    each L contributes its two extremal weight lines.
    """
    from .projectors import phi_extremal, phi_split, phi_weight_tensor

    if m < 1 or n < 1:
        raise ValueError("both factors need at least one strand")
    return (
        phi_weight_tensor(m, n).rank() == 4
        and phi_extremal(m + n).rank() == 2
        and phi_split(m, n).rank() == 2
    )
