"""Annular Temperley-Lieb diagrams in a cut-rectangle encoding.

An annular (m, n)-diagram is a crossingless tangle in an annulus with m
marked points on the inner boundary and n on the outer one, plus a fixed
radial ray ("seam") joining the two base points.  Cutting along the seam
unrolls the annulus into a rectangle:

        O_0  O_1  ...  O_{n-1}      outer boundary (top edge)
      +-----------------------+
   L_1|                       |R_1
   L_0|                       |R_0   seam levels 0..k-1, inner level first
      +-----------------------+
        I_0  I_1  ...  I_{m-1}      inner boundary (bottom edge)

A strand crossing the seam clockwise leaves through the right edge at some
level t (point R_t) and re-enters through the left edge at the same level
(point L_t).  A diagram is the perfect matching ("arcs") on the points
I_*, O_*, L_*, R_*, together with the number of seam levels and a count of
essential circles (closed curves encircling the annulus core, which cannot
be removed by isotopy).  Inessential closed curves never appear on a
diagram; they are converted to scalar factors of -2 during composition.

Crossingless means the matching is noncrossing on the boundary cycle of
the rectangle, read I_0..I_{m-1}, R_0..R_{k-1}, O_{n-1}..O_0, L_{k-1}..L_0.
Canonical diagrams are additionally seam-minimal: no arc joins L_t-L_{t+1},
R_t-R_{t+1}, or L_t-R_t.  The first two kinds can be isotoped off the seam
(splicing their partner arcs on the opposite edge), and a same-level arc
L_t-R_t closes into a circle that crosses the seam exactly once, i.e. an
essential circle.  `canonicalize` performs these reductions.  An essential
circle separates the two boundary components, so diagrams with ess > 0
cannot have through strands.

`Morphism` wraps a finite linear combination of diagrams with coefficients
in Q(i).  Composition stacks one annulus inside the other, traces strands
through the middle circle, counts the circles created, and reduces the
combined seam.  In quotient mode (the default) terms that acquire an
essential circle are dropped.
"""

from __future__ import annotations

import json
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import MODE_QUOTIENT, get_config
from .scalar import MINUS_TWO, ONE, ZERO, GaussianRational

Point = tuple[str, int]
Arc = tuple[Point, Point]

_KIND_ORDER = {"I": 0, "O": 1, "L": 2, "R": 3}


def point_key(p: Point) -> tuple[int, int]:
    return (_KIND_ORDER[p[0]], p[1])


def _norm_arcs(arcs) -> tuple[Arc, ...]:
    out = []
    for p, q in arcs:
        out.append((p, q) if point_key(p) <= point_key(q) else (q, p))
    out.sort(key=lambda a: (point_key(a[0]), point_key(a[1])))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class AnnularDiagram:
    dom: int
    cod: int
    seam: int
    ess: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((self.dom, self.cod, self.seam, self.ess, self.arcs))
        )

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, AnnularDiagram):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.dom == other.dom
            and self.cod == other.cod
            and self.seam == other.seam
            and self.ess == other.ess
            and self.arcs == other.arcs
        )

    def boundary_cycle(self) -> list[Point]:
        cycle = [("I", j) for j in range(self.dom)]
        cycle += [("R", t) for t in range(self.seam)]
        cycle += [("O", j) for j in reversed(range(self.cod))]
        cycle += [("L", t) for t in reversed(range(self.seam))]
        return cycle

    def partner_map(self) -> dict[Point, Point]:
        partner: dict[Point, Point] = {}
        for p, q in self.arcs:
            partner[p] = q
            partner[q] = p
        return partner

    def validate(self) -> None:
        """Raise ValueError unless this is a canonical diagram."""
        if min(self.dom, self.cod, self.seam, self.ess) < 0:
            raise ValueError("negative size field")
        cycle = self.boundary_cycle()
        expected = set(cycle)
        seen = set()
        for p, q in self.arcs:
            for x in (p, q):
                if x not in expected:
                    raise ValueError(f"point {x} out of range")
                if x in seen:
                    raise ValueError(f"point {x} used twice")
                seen.add(x)
            if p == q:
                raise ValueError("arc endpoints coincide")
        if seen != expected:
            raise ValueError("arcs are not a perfect matching on the boundary")
        partner = self.partner_map()
        # noncrossing check: arcs must nest properly along the boundary cycle
        pos = {p: idx for idx, p in enumerate(cycle)}
        stack: list[Point] = []
        for p in cycle:
            if stack and stack[-1] == partner[p]:
                stack.pop()
            elif pos[partner[p]] > pos[p]:
                stack.append(p)
            else:
                raise ValueError(f"arcs cross near {p}")
        if stack:
            raise ValueError("arcs cross")
        # seam minimality
        for t in range(self.seam):
            if partner.get(("L", t)) == ("R", t):
                raise ValueError(f"reducible: essential circle at level {t}")
            for kind in ("L", "R"):
                if partner.get((kind, t)) == (kind, t + 1):
                    raise ValueError(f"reducible: {kind}-edge arc at levels {t},{t + 1}")
        if self.ess:
            for p, q in self.arcs:
                if {p[0], q[0]} == {"I", "O"}:
                    raise ValueError("through strand coexists with an essential circle")

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "seam": self.seam,
            "ess": self.ess,
            "arcs": [[_point_str(p), _point_str(q)] for p, q in self.arcs],
        }

    def __str__(self) -> str:
        body = ", ".join(f"{_point_str(p)}-{_point_str(q)}" for p, q in self.arcs)
        extra = f" (ess={self.ess})" if self.ess else ""
        return "{" + body + "}" + extra


# diagrams recur heavily during composition; interning keeps one object per
# canonical form so hashing and equality usually reduce to identity checks
_POOL: dict[tuple, AnnularDiagram] = {}


def _intern(dom: int, cod: int, seam: int, ess: int, arcs: tuple[Arc, ...]) -> AnnularDiagram:
    key = (dom, cod, seam, ess, arcs)
    d = _POOL.get(key)
    if d is None:
        d = _POOL.setdefault(key, AnnularDiagram(dom, cod, seam, ess, arcs))
    return d


def make_diagram(dom: int, cod: int, seam: int, ess: int, arcs) -> AnnularDiagram:
    return _intern(dom, cod, seam, ess, _norm_arcs(arcs))


def _point_str(p: Point) -> str:
    return f"{p[0]}{p[1]}"


_POINT_RE = _re.compile(r"^([IOLR])(\d+)$")


def _point_parse(s: str) -> Point:
    m = _POINT_RE.match(s)
    if not m:
        raise ValueError(f"bad point name {s!r}")
    return (m.group(1), int(m.group(2)))


def diagram_from_json_obj(obj: dict, dom: int, cod: int) -> AnnularDiagram:
    arcs = [(_point_parse(p), _point_parse(q)) for p, q in obj["arcs"]]
    d = make_diagram(dom, cod, int(obj["seam"]), int(obj.get("ess", 0)), arcs)
    d.validate()
    return d


# -- seam reduction -------------------------------------------------------


def _renumber_levels(partner: dict[Point, Point], keep: list[int]) -> None:
    remap = {t: s for s, t in enumerate(keep)}
    items = list(partner.items())
    partner.clear()
    for p, q in items:
        if p[0] in ("L", "R"):
            p = (p[0], remap[p[1]])
        if q[0] in ("L", "R"):
            q = (q[0], remap[q[1]])
        partner[p] = q


def _reduce_seam(partner: dict[Point, Point], k: int, ess: int):
    """Make the matching seam-minimal in place.

    Returns (seam, inessential circles removed, essential circles total).
    The caller's `partner` dict is rewritten.  Levels are dropped lazily:
    adjacency means consecutive in the list of surviving levels, and the
    final renumbering happens once.
    """
    iness = 0
    levels = list(range(k))
    changed = True
    while changed and levels:
        changed = False
        # a same-level arc L_t - R_t closes into a curve crossing the seam
        # once: an essential circle
        for t in levels:
            if partner.get(("L", t)) == ("R", t):
                del partner[("L", t)]
                del partner[("R", t)]
                ess += 1
                levels.remove(t)
                changed = True
                break
        if changed:
            continue
        # an arc along one edge between adjacent surviving levels can be
        # pulled off the seam, splicing whatever meets the opposite edge
        for idx in range(len(levels) - 1):
            t, t1 = levels[idx], levels[idx + 1]
            for side in ("L", "R"):
                if partner.get((side, t)) != (side, t1):
                    continue
                other = "R" if side == "L" else "L"
                if partner[(other, t)] == (other, t1):
                    # both edges carry the same hairpin: together they close
                    # into a loop crossing the seam twice with opposite
                    # orientations, an inessential circle
                    iness += 1
                    for pt in ((side, t), (side, t1), (other, t), (other, t1)):
                        del partner[pt]
                else:
                    a = partner[(other, t)]
                    b = partner[(other, t1)]
                    for pt in ((side, t), (side, t1), (other, t), (other, t1)):
                        del partner[pt]
                    partner[a] = b
                    partner[b] = a
                del levels[idx : idx + 2]
                changed = True
                break
            if changed:
                break
    if levels != list(range(len(levels))):
        _renumber_levels(partner, levels)
    return len(levels), iness, ess


def _partner_to_arcs(partner: dict[Point, Point]) -> tuple[Arc, ...]:
    """Arcs in canonical sorted order (endpoints ordered, arcs sorted)."""
    keyed = []
    for p, q in partner.items():
        kp = (_KIND_ORDER[p[0]], p[1])
        kq = (_KIND_ORDER[q[0]], q[1])
        if kp < kq:
            keyed.append((kp, kq, (p, q)))
    keyed.sort()
    return tuple(a for _, _, a in keyed)


def canonicalize(dom: int, cod: int, seam: int, arcs, ess: int = 0):
    """Reduce a raw cut-rectangle matching to canonical form.

    Returns (diagram, inessential) where `inessential` counts circles
    removed by the reduction; each stands for a factor of -2.  Essential
    circles created by the reduction are added to the diagram's count.
    """
    probe = AnnularDiagram(dom, cod, seam, ess, _norm_arcs(arcs))
    cycle = probe.boundary_cycle()
    expected = set(cycle)
    partner: dict[Point, Point] = {}
    for p, q in probe.arcs:
        if p not in expected or q not in expected:
            raise ValueError(f"arc {p}-{q} out of range")
        partner[p] = q
        partner[q] = p
    if set(partner) != expected:
        raise ValueError("arcs are not a perfect matching on the boundary")
    pos = {p: idx for idx, p in enumerate(cycle)}
    stack: list[Point] = []
    for p in cycle:
        if stack and stack[-1] == partner[p]:
            stack.pop()
        elif pos[partner[p]] > pos[p]:
            stack.append(p)
        else:
            raise ValueError(f"arcs cross near {p}")
    k, iness, ess = _reduce_seam(partner, seam, ess)
    return _intern(dom, cod, k, ess, _partner_to_arcs(partner)), iness


# -- composition ----------------------------------------------------------


@lru_cache(maxsize=None)
def compose(inner: AnnularDiagram, outer: AnnularDiagram):
    """Glue `outer` around `inner` (inner.cod == outer.dom).

    Returns (diagram, inessential, essential): the canonical composite,
    the number of inessential circles produced (factors of -2), and the
    total essential circle count carried by the composite.
    """
    if inner.cod != outer.dom:
        raise ValueError(
            f"cannot glue: inner codomain {inner.cod} != outer domain {outer.dom}"
        )
    ka = inner.seam

    pa: dict[Point, Point] = {}
    pb: dict[Point, Point] = {}
    for p, q in inner.arcs:
        if p[0] == "O":
            p = ("M", p[1])
        if q[0] == "O":
            q = ("M", q[1])
        pa[p] = q
        pa[q] = p
    for p, q in outer.arcs:
        kind = p[0]
        if kind == "I":
            p = ("M", p[1])
        elif kind == "L" or kind == "R":
            p = (kind, ka + p[1])
        kind = q[0]
        if kind == "I":
            q = ("M", q[1])
        elif kind == "L" or kind == "R":
            q = (kind, ka + q[1])
        pb[p] = q
        pb[q] = p

    partner: dict[Point, Point] = {}
    seen_mid: set[Point] = set()
    for start in list(pa) + list(pb):
        if start[0] == "M" or start in partner:
            continue
        cur = start
        use = pa if start in pa else pb
        while True:
            nxt = use[cur]
            if nxt[0] != "M":
                partner[start] = nxt
                partner[nxt] = start
                break
            seen_mid.add(nxt)
            cur = nxt
            use = pb if use is pa else pa

    iness = 0
    for j in range(inner.cod):
        q = ("M", j)
        if q in seen_mid:
            continue
        # a component with no boundary endpoints: a closed loop confined
        # between the two seams, which cannot wind, hence inessential
        cur, use = q, pa
        while True:
            seen_mid.add(cur)
            cur = use[cur]
            use = pb if use is pa else pa
            if cur == q and use is pa:
                break
        iness += 1

    k, iness2, ess = _reduce_seam(partner, ka + outer.seam, inner.ess + outer.ess)
    diagram = _intern(inner.dom, outer.cod, k, ess, _partner_to_arcs(partner))
    return diagram, iness + iness2, ess


# -- diagram constructors -------------------------------------------------


def _guard(n: int) -> None:
    limit = get_config().max_strands
    if n > limit:
        raise ValueError(f"{n} strands exceeds the configured limit of {limit}")
    if n < 0:
        raise ValueError("negative strand count")


def id_diagram(n: int) -> AnnularDiagram:
    _guard(n)
    return make_diagram(n, n, 0, 0, [(("I", j), ("O", j)) for j in range(n)])


def u_diagram(n: int, i: int) -> AnnularDiagram:
    """Cap-cup U_i joining strands i-1 and i (1-based i, 1 <= i <= n-1)."""
    _guard(n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"U_{i} undefined on {n} strands")
    arcs = [(("I", i - 1), ("I", i)), (("O", i - 1), ("O", i))]
    arcs += [(("I", j), ("O", j)) for j in range(n) if j not in (i - 1, i)]
    return make_diagram(n, n, 0, 0, arcs)


def u0_diagram(n: int) -> AnnularDiagram:
    """Cap-cup between the last and first strands, around the seam."""
    _guard(n)
    if n < 2:
        raise ValueError("U_0 needs at least 2 strands")
    arcs = [
        (("I", 0), ("L", 0)),
        (("I", n - 1), ("R", 0)),
        (("L", 1), ("O", 0)),
        (("O", n - 1), ("R", 1)),
    ]
    arcs += [(("I", j), ("O", j)) for j in range(1, n - 1)]
    return make_diagram(n, n, 2, 0, arcs)


def cap_diagram(n: int, i: int) -> AnnularDiagram:
    """Cap joining inner points i, i+1 (0-based); maps n -> n-2 strands."""
    _guard(n)
    if not 0 <= i <= n - 2:
        raise ValueError(f"cap at {i} undefined on {n} strands")
    arcs = [(("I", i), ("I", i + 1))]
    arcs += [(("I", j), ("O", j if j < i else j - 2)) for j in range(n) if j not in (i, i + 1)]
    return make_diagram(n, n - 2, 0, 0, arcs)


def cup_diagram(n: int, i: int) -> AnnularDiagram:
    """Cup creating outer points i, i+1 (0-based); maps n -> n+2 strands."""
    _guard(n + 2)
    if not 0 <= i <= n:
        raise ValueError(f"cup at {i} undefined on {n} strands")
    arcs = [(("O", i), ("O", i + 1))]
    arcs += [(("I", j), ("O", j if j < i else j + 2)) for j in range(n)]
    return make_diagram(n, n + 2, 0, 0, arcs)


def d_diagram(n: int, e: int = 1) -> AnnularDiagram:
    """Rotation by one strand position; e = +1 sends strand 0 to n-1."""
    _guard(n)
    if e not in (1, -1):
        raise ValueError("rotation exponent must be +1 or -1")
    if n == 0:
        return id_diagram(0)
    if e == 1:
        arcs = [(("I", 0), ("L", 0)), (("R", 0), ("O", n - 1))]
        arcs += [(("I", j), ("O", j - 1)) for j in range(1, n)]
    else:
        arcs = [(("I", n - 1), ("R", 0)), (("L", 0), ("O", 0))]
        arcs += [(("I", j), ("O", j + 1)) for j in range(n - 1)]
    return make_diagram(n, n, 1, 0, arcs)


# -- morphisms ------------------------------------------------------------


class Morphism:
    """A Q(i)-linear combination of annular diagrams m -> n."""

    __slots__ = ("dom", "cod", "terms")

    def __init__(self, dom: int, cod: int, terms: dict[AnnularDiagram, GaussianRational] | None = None):
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        clean = {}
        for d, c in (terms or {}).items():
            if d.dom != dom or d.cod != cod:
                raise ValueError("diagram shape does not match morphism shape")
            if c:
                clean[d] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    @classmethod
    def from_diagram(cls, d: AnnularDiagram, coeff: GaussianRational = ONE) -> Morphism:
        return cls(d.dom, d.cod, {d: coeff})

    @classmethod
    def zero(cls, dom: int, cod: int) -> Morphism:
        return cls(dom, cod, {})

    # -- linear structure --------------------------------------------------

    def __add__(self, other: Morphism) -> Morphism:
        self._check_shape(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, ZERO) + c
        return Morphism(self.dom, self.cod, terms)

    def __sub__(self, other: Morphism) -> Morphism:
        return self + (-other)

    def __neg__(self) -> Morphism:
        return Morphism(self.dom, self.cod, {d: -c for d, c in self.terms.items()})

    def scale(self, c) -> Morphism:
        if not isinstance(c, GaussianRational):
            c = GaussianRational(Fraction(c))
        return Morphism(self.dom, self.cod, {d: v * c for d, v in self.terms.items()})

    def __rmul__(self, c) -> Morphism:
        if isinstance(c, (int, Fraction, GaussianRational)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> Morphism:
        if isinstance(other, Morphism):
            return mor_compose(self, other)
        return NotImplemented

    def __matmul__(self, other: Morphism) -> Morphism:
        from .planar import tensor

        return tensor(self, other)

    # -- predicates ---------------------------------------------------------

    def _check_shape(self, other: Morphism) -> None:
        if self.dom != other.dom or self.cod != other.cod:
            raise ValueError(
                f"shape mismatch: {self.dom}->{self.cod} vs {other.dom}->{other.cod}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dom, self.cod, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_identity(self) -> bool:
        if self.dom != self.cod or len(self.terms) != 1:
            return False
        ((d, c),) = self.terms.items()
        return c == ONE and d == id_diagram(self.dom)

    def sorted_terms(self) -> list[tuple[AnnularDiagram, GaussianRational]]:
        def key(item):
            d = item[0]
            return (d.seam, d.ess, tuple((point_key(p), point_key(q)) for p, q in d.arcs))

        return sorted(self.terms.items(), key=key)

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "dom": self.dom,
            "cod": self.cod,
            "terms": [
                {"coeff": str(c), "diagram": d.to_json_obj()}
                for d, c in self.sorted_terms()
            ],
        }

    def dumps(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json_obj(cls, obj: dict) -> Morphism:
        dom, cod = int(obj["dom"]), int(obj["cod"])
        terms: dict[AnnularDiagram, GaussianRational] = {}
        for t in obj["terms"]:
            d = diagram_from_json_obj(t["diagram"], dom, cod)
            c = GaussianRational.parse(t["coeff"])
            terms[d] = terms.get(d, ZERO) + c
        return cls(dom, cod, terms)

    @classmethod
    def loads(cls, text: str) -> Morphism:
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        if not self.terms:
            return f"0: {self.dom}->{self.cod}"
        bits = [f"({c}) {d}" for d, c in self.sorted_terms()]
        return f"{self.dom}->{self.cod}: " + " + ".join(bits)

    def __repr__(self) -> str:
        return f"<Morphism {self.dom}->{self.cod}, {len(self.terms)} terms>"


_MINUS_TWO_POW = [ONE, MINUS_TWO]


def _minus_two_pow(k: int) -> GaussianRational:
    while len(_MINUS_TWO_POW) <= k:
        _MINUS_TWO_POW.append(_MINUS_TWO_POW[-1] * MINUS_TWO)
    return _MINUS_TWO_POW[k]


def mor_compose(x: Morphism, y: Morphism) -> Morphism:
    """Categorical composition x after y."""
    if x.dom != y.cod:
        raise ValueError(f"cannot compose {x.dom}->{x.cod} after {y.dom}->{y.cod}")
    quotient = get_config().mode == MODE_QUOTIENT
    acc: dict[AnnularDiagram, GaussianRational] = {}
    for dy, cy in y.terms.items():
        for dx, cx in x.terms.items():
            d, iness, _ = compose(dy, dx)
            if quotient and d.ess:
                continue
            c = cx * cy
            if iness:
                c = c * _minus_two_pow(iness)
            prev = acc.get(d)
            acc[d] = c if prev is None else prev + c
    return Morphism(y.dom, x.cod, acc)


# -- generator morphisms ----------------------------------------------------


def gen_id(n: int) -> Morphism:
    return Morphism.from_diagram(id_diagram(n))


def gen_u(n: int, i: int) -> Morphism:
    if i == 0:
        return Morphism.from_diagram(u0_diagram(n))
    return Morphism.from_diagram(u_diagram(n, i))


def gen_cap(n: int, i: int) -> Morphism:
    return Morphism.from_diagram(cap_diagram(n, i))


def gen_cup(n: int, i: int) -> Morphism:
    return Morphism.from_diagram(cup_diagram(n, i))


def gen_d(n: int, e: int = 1) -> Morphism:
    return Morphism.from_diagram(d_diagram(n, e))


def crossing(n: int, i: int) -> Morphism:
    """The q=1 crossing of strands i-1, i: identity plus U_i."""
    return gen_id(n) + gen_u(n, i)
