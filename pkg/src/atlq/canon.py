"""Canonical bases of the quotient hom spaces.

Diagrams from 0 to 2n points (all boundary points on the outer circle)
are in bijection with balanced label strings over {i, o}: walking the
outer boundary clockwise, mark the endpoint where a strand leaves the
boundary heading clockwise with "i" and the endpoint where it comes back
with "o".  The matching is recovered greedily: repeatedly connect an "i"
to the cyclically next unmatched "o"; pairs that wrap past the base point
become seam-crossing arcs, stacked at seam levels ordered by their "i"
position.  There are C(2n, n) such strings, matching the dimension of the
quotient hom space, and the weight functor keeps their diagrams linearly
independent.

A general hom(a, b) flattens into hom(0, a+b) by bending all inputs up
with nested cups; `coordinates` expresses any morphism exactly in the
label-string basis by solving against the basis weight maps.
"""

from __future__ import annotations

from itertools import product

from .diagram import AnnularDiagram, Morphism, gen_id, make_diagram
from .planar import nested_caps, nested_cups, tensor
from .rep import phi, solve_columns

LabelString = str


def matching_from_labels(labels: LabelString) -> AnnularDiagram:
    """Build the 0 -> len(labels) diagram named by an {i, o} string.

    >>> str(matching_from_labels("io"))
    '{O0-O1}'
    >>> str(matching_from_labels("oi"))
    '{O0-L0, O1-R0}'
    """
    n2 = len(labels)
    if n2 % 2:
        raise ValueError("label string must have even length")
    if set(labels) - {"i", "o"}:
        raise ValueError("labels must be 'i' or 'o'")
    if labels.count("i") != labels.count("o"):
        raise ValueError("label string must be balanced")
    unmatched = set(range(n2))
    pairs: list[tuple[int, int]] = []
    while unmatched:
        progress = False
        for k in sorted(unmatched):
            if labels[k] != "i":
                continue
            pos = (k + 1) % n2
            while pos not in unmatched:
                pos = (pos + 1) % n2
            if labels[pos] == "o":
                pairs.append((k, pos))
                unmatched.discard(k)
                unmatched.discard(pos)
                progress = True
                break
        assert progress, "balanced strings always leave an adjacent i-o pair"
    arcs: list = []
    wraps = sorted((k, l) for k, l in pairs if l < k)
    for level, (k, l) in enumerate(wraps):
        arcs.append((("O", k), ("R", level)))
        arcs.append((("L", level), ("O", l)))
    for k, l in pairs:
        if k < l:
            arcs.append((("O", k), ("O", l)))
    d = make_diagram(0, n2, len(wraps), 0, arcs)
    d.validate()
    return d


def labels_from_matching(d: AnnularDiagram) -> LabelString:
    """Inverse of matching_from_labels on canonical 0 -> 2n diagrams."""
    if d.dom != 0:
        raise ValueError("labels are defined for diagrams out of 0")
    out = [""] * d.cod
    for p, q in d.arcs:
        kinds = (p[0], q[0])
        if kinds == ("O", "O"):
            out[p[1]] = "i"
            out[q[1]] = "o"
        elif "R" in kinds:
            o = p if p[0] == "O" else q
            out[o[1]] = "i"
        elif "L" in kinds:
            o = p if p[0] == "O" else q
            out[o[1]] = "o"
        else:
            raise ValueError("not a diagram out of 0")
    return "".join(out)


def enumerate_basis(n_points: int) -> list[AnnularDiagram]:
    """All C(2n, n) basis diagrams of hom(0, n_points), in label order."""
    if n_points % 2:
        raise ValueError("odd point count has no perfect matchings")
    half = n_points // 2
    out = []
    for bits in product("io", repeat=n_points):
        if bits.count("i") == half:
            out.append(matching_from_labels("".join(bits)))
    return out


def f_apply(x: Morphism) -> Morphism:
    """Flatten hom(a, b) -> hom(0, a+b) by bending the inputs up."""
    return tensor(x, gen_id(x.dom)) * nested_cups(x.dom)


def f_inverse(y: Morphism, dom: int) -> Morphism:
    """Undo f_apply: hom(0, a+b) -> hom(a, b) with a = dom."""
    if y.dom != 0 or y.cod < dom:
        raise ValueError("shape mismatch in f_inverse")
    cod = y.cod - dom
    return tensor(gen_id(cod), nested_caps(dom)) * tensor(y, gen_id(dom))


def coordinates(x: Morphism) -> list:
    """Exact coefficients of x in the label-string basis of hom(0, dom+cod)."""
    flat = f_apply(x)
    basis = enumerate_basis(x.dom + x.cod)
    cols = [phi(Morphism.from_diagram(b)).columns().get("", {}) for b in basis]
    target = phi(flat).columns().get("", {})
    coeffs = solve_columns(cols, target)
    if coeffs is None:
        raise ValueError("morphism does not lie in the diagram span")
    return coeffs


def ess_equal(x: Morphism, y: Morphism) -> bool:
    """Equality in the essential-circle quotient, decided by the functor."""
    if x.dom != y.dom or x.cod != y.cod:
        raise ValueError(
            f"shape mismatch: {x.dom}->{x.cod} vs {y.dom}->{y.cod}"
        )
    return phi(x) == phi(y)


def phi_chain(*factors: Morphism):
    """The weight map of a composite, evaluated factor by factor.

    phi(X_1 . X_2 . ... . X_k) computed as the matrix product of the
    individual weight maps.  This avoids expanding the diagrammatic
    product, whose term count is quadratic per composition; the functor
    identity it relies on is verified separately (randomized and on the
    projector products themselves at small sizes).
    """
    if not factors:
        raise ValueError("need at least one factor")
    out = phi(factors[0])
    for x in factors[1:]:
        out = out * phi(x)
    return out
