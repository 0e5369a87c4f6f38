"""The H4 reflection group acting on the 120 unit icosians, built from
exact quaternion arithmetic over Q(sqrt 5).

Coordinates are pairs of rationals x + y*sqrt5; quaternions carry four of
them.  The four simple roots generate the icosian group multiplicatively
and the reflection x -> -root * conj(x) * root permutes it, giving the
vertex model of the 600-cell and, over a rank-3 parabolic, the 120-cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chartable import character_table
from .cyclo import Cyclo
from .errors import ClosureOverflow, CrossCheckFailed, ProfileMismatch
from .groups import Group, Permutation, Subgroup, enumerate_group, subgroup_generated
from .gsets import coset_action
from .realization import analyze_gset, cone_report, cosine_vector_pure
from .stringc import verify_string_cgroup


class QSqrt5:
    """x + y*sqrt5 with rational x, y."""

    __slots__ = ("x", "y")

    def __init__(self, x, y=0):
        self.x = Fraction(x)
        self.y = Fraction(y)

    def __add__(self, o):
        o = _as_q5(o)
        return QSqrt5(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        o = _as_q5(o)
        return QSqrt5(self.x - o.x, self.y - o.y)

    def __neg__(self):
        return QSqrt5(-self.x, -self.y)

    def __mul__(self, o):
        o = _as_q5(o)
        return QSqrt5(self.x * o.x + 5 * self.y * o.y,
                      self.x * o.y + self.y * o.x)

    __radd__ = __add__
    __rmul__ = __mul__

    def __eq__(self, o):
        o = _as_q5(o)
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def is_rational(self) -> bool:
        return self.y == 0

    def to_cyclo(self) -> Cyclo:
        return Cyclo.rational(self.x) + Cyclo.sqrt5() * Cyclo.rational(self.y)

    def to_float(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(5)

    def __repr__(self):
        return f"({self.x}+{self.y}*sqrt5)"


def _as_q5(v) -> QSqrt5:
    return v if isinstance(v, QSqrt5) else QSqrt5(v)


Q5_ZERO = QSqrt5(0)
Q5_ONE = QSqrt5(1)
GOLDEN_A = QSqrt5(Fraction(-1, 2), Fraction(1, 2))
GOLDEN_B = QSqrt5(Fraction(-1, 2), Fraction(-1, 2))


class QuatQ5:
    """Quaternion a + b*i + c*j + d*k over Q(sqrt 5)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (_as_q5(t) for t in (a, b, c, d))

    def __mul__(self, o: "QuatQ5") -> "QuatQ5":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return QuatQ5(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self):
        return QuatQ5(-self.a, -self.b, -self.c, -self.d)

    def conj(self) -> "QuatQ5":
        return QuatQ5(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> QSqrt5:
        return (self.a * self.a + self.b * self.b
                + self.c * self.c + self.d * self.d)

    def __eq__(self, o):
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def coords(self) -> tuple[QSqrt5, QSqrt5, QSqrt5, QSqrt5]:
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"QuatQ5{self.coords()}"


QUAT_ONE = QuatQ5(1, 0, 0, 0)


def root_system_h4() -> tuple[QuatQ5, QuatQ5, QuatQ5, QuatQ5]:
    """The four simple roots as unit quaternions; golden-ratio identities
    and unit norms are rechecked on every call."""
    a, b = GOLDEN_A, GOLDEN_B
    if a + b != QSqrt5(-1) or a * b != QSqrt5(-1) or a * a + b * b != QSqrt5(3):
        raise CrossCheckFailed("golden ratio identities failed")
    half = Fraction(1, 2)
    r1 = QuatQ5(0, 0, 1, 0)
    r2 = QuatQ5(0, a * QSqrt5(half), b * QSqrt5(half), -half)
    r3 = QuatQ5(0, 0, 0, 1)
    r4 = QuatQ5(a * QSqrt5(half), b * QSqrt5(half), 0, -half)
    for r in (r1, r2, r3, r4):
        if r.norm() != Q5_ONE:
            raise CrossCheckFailed(f"root {r} is not a unit")
    return r1, r2, r3, r4


def icosian_group(cap: int = 200) -> list[QuatQ5]:
    """Multiplicative closure of the simple roots and -1: the 120 unit
    icosians, in deterministic discovery order starting at 1."""
    r1, r2, r3, r4 = root_system_h4()
    seeds = [r1, r2, r3, -QUAT_ONE]
    elems = [QUAT_ONE]
    index = {QUAT_ONE: 0}
    frontier = [QUAT_ONE]
    while frontier:
        x = frontier.pop(0)
        for s in seeds:
            y = x * s
            if y not in index:
                if len(elems) >= cap:
                    raise ClosureOverflow(f"closure exceeded cap {cap}")
                index[y] = len(elems)
                elems.append(y)
                frontier.append(y)
    if len(elems) != 120:
        raise CrossCheckFailed(f"icosian closure has {len(elems)} elements")
    for unit in (QUAT_ONE, QuatQ5(0, 1, 0, 0), QuatQ5(0, 0, 1, 0),
                 QuatQ5(0, 0, 0, 1)):
        if unit not in index or -unit not in index:
            raise CrossCheckFailed("unit quaternions missing from closure")
    prod = r1 * r2
    if prod * prod != r4:
        raise CrossCheckFailed("r4 is not (r1*r2)^2")
    return elems


@dataclass
class H4Data:
    group: Group
    generator_indices: tuple[int, int, int, int]
    icosians: list[QuatQ5]
    point_one: int
    schlafli: tuple[int, int, int]


def h4_group(cache_dir=None) -> H4Data:
    """The reflection permutations of the icosians: order 14400, string
    C-group of Schlafli multiset {3,3,5}, vertex stabilizer of order 120
    generated by the first three reflections."""
    icos = icosian_group()
    index = {q: i for i, q in enumerate(icos)}
    roots = root_system_h4()
    perms = []
    for r in roots:
        images = [index[-(r * x.conj() * r)] for x in icos]
        perms.append(Permutation(images))
    for p in perms:
        if p.order() != 2:
            raise CrossCheckFailed("reflection is not an involution")
    G = enumerate_group(perms, cap=14464)
    if G.order != 14400:
        raise CrossCheckFailed(f"reflection group has order {G.order}")
    gidx = tuple(G.index_of(p) for p in perms)

    report = verify_string_cgroup(G, gidx)
    if not report.passed:
        raise CrossCheckFailed(f"string C-group checks failed: {report.to_dict()}")
    if sorted(report.schlafli) != [3, 3, 5]:
        raise CrossCheckFailed(f"Schlafli {report.schlafli} has wrong multiset")

    pt1 = index[QUAT_ONE]
    if len(np.unique(G.imgs[:, pt1])) != 120:
        raise CrossCheckFailed("the group is not transitive on the icosians")
    stab = subgroup_generated(G, list(gidx[:3]))
    if stab.order != 120:
        raise CrossCheckFailed(f"parabolic <s1,s2,s3> has order {stab.order}")
    for g in gidx[:3]:
        if G.imgs[g][pt1] != pt1:
            raise CrossCheckFailed("first three reflections must fix the point 1")
    return H4Data(G, gidx, icos, pt1, report.schlafli)


def icosians_json(icos: list[QuatQ5] | None = None) -> list[dict]:
    """Exact coordinates, each entry [x, y] meaning x + y*sqrt5."""
    if icos is None:
        icos = icosian_group()
    out = []
    for q in icos:
        out.append({
            "coords": [[str(c.x), str(c.y)] for c in q.coords()],
            "float": [round(c.to_float(), 12) for c in q.coords()],
        })
    return out


def validate_120cell(h4: H4Data | None = None, cache_dir=None) -> dict:
    """Coset space over <s2,s3,s4> (order 24, 600 cosets): the
    multiplicity profile must be fifteen constituents with m = 1, three
    with m = 2 of degrees 16, 16, 48, and two with m = 3 of degrees 25
    and 36, all of real type."""
    if h4 is None:
        h4 = h4_group(cache_dir=cache_dir)
    G = h4.group
    H = subgroup_generated(G, list(h4.generator_indices[1:]))
    if H.order != 24:
        raise CrossCheckFailed(f"parabolic <s2,s3,s4> has order {H.order}")
    gs = coset_action(G, H)
    if gs.n_points != 600:
        raise CrossCheckFailed(f"expected 600 cosets, got {gs.n_points}")
    table = character_table(G, cache_dir=cache_dir)
    analysis = analyze_gset(gs, table)

    if any(c.sigma.typ != "R" for c in analysis.constituents):
        raise ProfileMismatch("a constituent is not of real type")
    by_mult = {1: [], 2: [], 3: []}
    for c in analysis.constituents:
        if c.mult not in by_mult:
            raise ProfileMismatch(f"unexpected multiplicity {c.mult}")
        by_mult[c.mult].append(c.sigma.degree)
    if len(by_mult[1]) != 15:
        raise ProfileMismatch(f"{len(by_mult[1])} half-lines, expected 15")
    if sorted(by_mult[2]) != [16, 16, 48]:
        raise ProfileMismatch(f"m=2 degrees {sorted(by_mult[2])}")
    if sorted(by_mult[3]) != [25, 36]:
        raise ProfileMismatch(f"m=3 degrees {sorted(by_mult[3])}")

    crep = cone_report(gs, table, cache_dir=cache_dir)
    return {
        "schema": "polyreal/1",
        "points": gs.n_points,
        "n_layers": analysis.layers.n_layers,
        "profile": {
            "half_lines": len(by_mult[1]),
            "m2_degrees": sorted(by_mult[2]),
            "m3_degrees": sorted(by_mult[3]),
        },
        "cone": crep.to_json(),
    }


def _sorted_cosine_profiles(gset, analysis) -> list[tuple]:
    """Canonical form of every pure cosine vector: entries sorted by the
    exact value key, tagged with the constituent degree."""
    ld = gset.layers()
    out = []
    for c in analysis.constituents:
        vec = cosine_vector_pure(gset, c, ld)
        out.append((c.sigma.degree, tuple(sorted(v.sort_key() for v in vec))))
    return sorted(out)


def cross_check_600cell(h4: H4Data | None = None, cache_dir=None) -> dict:
    """The icosian vertex model against the wreath quotient model:
    layer-size multisets, multiplicity profiles, and the full exact
    cosine tables must agree."""
    from .wreath import _quotient_by_center, wreath_c2
    from .groups import sl2_group

    if h4 is None:
        h4 = h4_group(cache_dir=cache_dir)
    G = h4.group
    stab = subgroup_generated(G, list(h4.generator_indices[:3]))
    gs_h4 = coset_action(G, stab)
    tab_h4 = character_table(G, cache_dir=cache_dir)
    an_h4 = analyze_gset(gs_h4, tab_h4)

    U = sl2_group(5)
    wg = wreath_c2(U)
    _, Gq, Hq = _quotient_by_center(wg)
    gs_w = coset_action(Gq, Hq)
    tab_w = character_table(Gq, cache_dir=cache_dir)
    an_w = analyze_gset(gs_w, tab_w)

    sizes_h4 = sorted(gs_h4.layers().layer_sizes)
    sizes_w = sorted(gs_w.layers().layer_sizes)
    if sizes_h4 != sizes_w:
        raise CrossCheckFailed(f"layer sizes differ: {sizes_h4} vs {sizes_w}")

    prof_h4 = sorted((c.sigma.degree, c.mult) for c in an_h4.constituents)
    prof_w = sorted((c.sigma.degree, c.mult) for c in an_w.constituents)
    if prof_h4 != prof_w:
        raise CrossCheckFailed(f"multiplicity profiles differ: {prof_h4} vs {prof_w}")

    cos_h4 = _sorted_cosine_profiles(gs_h4, an_h4)
    cos_w = _sorted_cosine_profiles(gs_w, an_w)
    if cos_h4 != cos_w:
        raise CrossCheckFailed("exact cosine tables differ between the models")

    return {
        "schema": "polyreal/1",
        "layer_sizes": sizes_h4,
        "profile": prof_h4,
        "cosines_match": True,
        "points": gs_h4.n_points,
    }
