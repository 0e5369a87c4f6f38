"""Wreath products U wr C2, their character tables built from the base
group, and the 600-cell vertex model.

Elements are triples (flip, u, v) acting on two labelled copies of the
base group's points: (c, x) goes to (c xor flip, image of x under u or v
according to the destination copy).  The multiplication law is

    (e1,u1,v1)(e2,u2,v2) = (e1,      u1*u2, v1*v2)   if e2 = 0
                           (e1 xor 1, v1*u2, u1*v2)   if e2 = 1

and is cross-checked against the permutation composition on a sample of
triples at construction time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .chartable import (CharacterTable, character_table, frobenius_schur,
                        induced_trivial_character, inner_product_values,
                        verify_orthogonality)
from .cyclo import Cyclo
from .errors import (CapExceeded, CrossCheckFailed, MultiplicityMismatch)
from .groups import (DEFAULT_CAP, Group, Permutation, Subgroup,
                     enumerate_group, sl2_group, subgroup_generated)
from .gsets import GSet, coset_action
from .realization import analyze_gset, cone_report, cosine_vector_pure


class WreathElement(NamedTuple):
    flip: int
    u: int
    v: int


class WreathGroup:
    """U wr C2 as a permutation group on two copies of the base points,
    plus the distinguished subgroup generated by the diagonal and the
    copy swap, and the centre."""

    def __init__(self, base: Group, group: Group, hhat: Subgroup,
                 center: Subgroup):
        self.base = base
        self.group = group
        self.hhat = hhat
        self.center = center

    def encode(self, flip: int, u: int, v: int) -> int:
        n = self.base.order
        return flip * n * n + u * n + v

    def decode(self, i: int) -> WreathElement:
        n = self.base.order
        flip, uv = divmod(int(i), n * n)
        u, v = divmod(uv, n)
        return WreathElement(flip, u, v)

    def multiply(self, x: WreathElement, y: WreathElement) -> WreathElement:
        mul = self.base.mul_index
        if y.flip == 0:
            return WreathElement(x.flip, mul(x.u, y.u), mul(x.v, y.v))
        return WreathElement(x.flip ^ 1, mul(x.v, y.u), mul(x.u, y.v))

    def __repr__(self):
        return f"WreathGroup(base_order={self.base.order}, order={self.group.order})"


def wreath_c2(U: Group, cap: int = DEFAULT_CAP) -> WreathGroup:
    """Build U wr C2 with element index (flip, u, v) in lexicographic
    order, so no closure search is needed."""
    n, d = U.order, U.degree
    total = 2 * n * n
    if total > cap:
        raise CapExceeded(f"wreath order {total} exceeds cap {cap}")

    A = U.imgs.astype(np.int64)
    left0 = np.repeat(A, n, axis=0)
    right0 = d + np.tile(A, (n, 1))
    left1 = d + np.tile(A, (n, 1))
    right1 = np.repeat(A, n, axis=0)
    imgs = np.empty((total, 2 * d), dtype=np.int64)
    imgs[: n * n, :d] = left0
    imgs[: n * n, d:] = right0
    imgs[n * n:, :d] = left1
    imgs[n * n:, d:] = right1
    dtype = np.min_scalar_type(2 * d - 1)
    imgs = imgs.astype(dtype)

    gen_idx = [g * n for g in U.generator_indices] + [n * n]
    G = Group(imgs, gen_idx)
    if len(G._index) != total:
        raise CrossCheckFailed("wreath action is not faithful")

    wg = WreathGroup(U, G, None, None)
    rng = np.random.default_rng(12345)
    samples = [(WreathElement(int(e1), int(u1), int(v1)),
                WreathElement(int(e2), int(u2), int(v2)))
               for e1, u1, v1, e2, u2, v2 in zip(
                   rng.integers(0, 2, 40), rng.integers(0, n, 40),
                   rng.integers(0, n, 40), rng.integers(0, 2, 40),
                   rng.integers(0, n, 40), rng.integers(0, n, 40))]
    for x, y in samples:
        lhs = G.mul_index(wg.encode(*x), wg.encode(*y))
        if lhs != wg.encode(*wg.multiply(x, y)):
            raise CrossCheckFailed("wreath multiplication law mismatch")

    diag_gens = [wg.encode(0, g, g) for g in U.generator_indices]
    t = wg.encode(1, 0, 0)
    hhat = subgroup_generated(G, diag_gens + [t])
    expected = np.sort(np.asarray(
        [wg.encode(e, u, u) for e in (0, 1) for u in range(n)]))
    if hhat.order != 2 * n or not np.array_equal(hhat.members, expected):
        raise CrossCheckFailed("the diagonal-plus-swap subgroup is wrong")
    for g in diag_gens:
        if G.mul_index(t, g) != G.mul_index(g, t):
            raise CrossCheckFailed("swap does not centralize the diagonal")
    for g in diag_gens:
        for h in diag_gens:
            gu = wg.decode(g).u
            hu = wg.decode(h).u
            if G.mul_index(g, h) != wg.encode(0, U.mul_index(gu, hu), U.mul_index(gu, hu)):
                raise CrossCheckFailed("diagonal embedding is not a homomorphism")

    mask = np.ones(total, dtype=bool)
    for g in G.generator_indices:
        lhs = G.imgs[g][G.imgs]
        rhs = G.imgs[:, G.imgs[g]]
        mask &= (lhs == rhs).all(axis=1)
    center = Subgroup(G, np.nonzero(mask)[0].astype(np.int64), [])
    wg.hhat = hhat
    wg.center = center
    return wg


@dataclass(frozen=True)
class VertexConstituent:
    kind: str
    phi_rows: tuple[int, ...]
    sign: int | None
    row: int
    degree: int


def wreath_irreducibles(wg: WreathGroup, U_table: CharacterTable | None = None,
                        cache_dir=None) -> CharacterTable:
    """Character table of U wr C2 assembled from the base table: one
    induced character per unordered pair of distinct base characters and
    two extensions per base character.  The result is verified against
    exact row and column orthogonality and carries a ``descriptors``
    attribute aligned with its rows."""
    U = wg.base
    if U_table is None:
        U_table = character_table(U, cache_dir=cache_dir)
    if U_table.group is not U:
        raise CrossCheckFailed("base table does not belong to the base group")
    G = wg.group
    cd = G.conjugacy_classes()
    cdU = U.conjugacy_classes()
    r = U_table.k
    if cd.k != r * (r - 1) // 2 + 2 * r:
        raise CrossCheckFailed(
            f"class count {cd.k} differs from pair+extension count")

    reps = [wg.decode(cd.reps[j]) for j in range(cd.k)]
    zero = Cyclo.rational(0)

    def val(row: int, u: int) -> Cyclo:
        return U_table.values[row][cdU.class_of[u]]

    rows = []
    for p in range(r):
        for q in range(p + 1, r):
            vals = []
            for e, u, v in reps:
                if e:
                    vals.append(zero)
                else:
                    vals.append(val(p, u) * val(q, v) + val(p, v) * val(q, u))
            deg = 2 * U_table.degrees[p] * U_table.degrees[q]
            rows.append((deg, tuple(vals), ("induced", (p, q), None)))
    for p in range(r):
        for sign in (1, -1):
            vals = []
            for e, u, v in reps:
                if e:
                    w = val(p, U.mul_index(u, v))
                    vals.append(w if sign == 1 else -w)
                else:
                    vals.append(val(p, u) * val(p, v))
            rows.append((U_table.degrees[p] ** 2, tuple(vals),
                         ("extension", (p,), sign)))

    rows.sort(key=lambda t: (t[0], tuple(v.sort_key() for v in t[1])))
    degrees = tuple(t[0] for t in rows)
    values = tuple(t[1] for t in rows)
    table = CharacterTable(G, cd, 0, math.lcm(*cd.orders), degrees, values)
    table.descriptors = tuple(t[2] for t in rows)
    verify_orthogonality(table)
    return table


def wreath_vertex_constituents(wg: WreathGroup,
                               U_table: CharacterTable | None = None,
                               table: CharacterTable | None = None,
                               cache_dir=None) -> list[VertexConstituent]:
    """Constituents of the permutation character on the cosets of the
    diagonal-plus-swap subgroup: for each base character phi either its
    indicator-signed extension (phi real) or the character induced from
    phi x conj(phi); every one occurs with multiplicity exactly one."""
    U = wg.base
    if U_table is None:
        U_table = character_table(U, cache_dir=cache_dir)
    if table is None:
        table = wreath_irreducibles(wg, U_table)
    desc = {d: i for i, d in enumerate(table.descriptors)}
    claimed = []
    seen = set()
    for p in range(U_table.k):
        if p in seen:
            continue
        pbar = U_table.conjugate_row_index(p)
        seen.update({p, pbar})
        if pbar == p:
            nu = frobenius_schur(U_table, p)
            row = desc[("extension", (p,), nu)]
            claimed.append(VertexConstituent("extension", (p,), nu, row,
                                             table.degrees[row]))
        else:
            key = ("induced", (min(p, pbar), max(p, pbar)), None)
            row = desc[key]
            claimed.append(VertexConstituent("induced", key[1], None, row,
                                             table.degrees[row]))

    pi = induced_trivial_character(wg.group, wg.hhat)
    cd = table.classdata
    pivals = [Cyclo.rational(x) for x in pi]
    claimed_rows = {c.row for c in claimed}
    for row in range(table.k):
        m = inner_product_values(cd, pivals, table.values[row])
        if not m.is_rational():
            raise MultiplicityMismatch(f"non-rational multiplicity at row {row}")
        m = m.as_fraction()
        want = 1 if row in claimed_rows else 0
        if m != want:
            raise MultiplicityMismatch(
                f"row {row} has multiplicity {m}, expected {want}")
    if sum(c.degree for c in claimed) != U.order:
        raise CrossCheckFailed("constituent degrees do not sum to the index")
    return claimed


def wreath_cosine(U_table: CharacterTable, phi_row: int, class_index: int) -> Cyclo:
    """The cosine phi(u)/phi(1) attached to the layer whose double coset
    meets (u, 1) with u in the given base class."""
    return U_table.values[phi_row][class_index] / U_table.degrees[phi_row]


def _quotient_by_center(wg: WreathGroup):
    """Faithful image of the wreath group on the cosets of the
    diagonal-plus-swap subgroup; the kernel must be exactly the centre."""
    G = wg.group
    gs_hat = coset_action(G, wg.hhat)
    gen_perms = [Permutation(gs_hat.action_row(g).tolist())
                 for g in G.generator_indices]
    Gq = enumerate_group(gen_perms, cap=G.order)
    if Gq.order * wg.center.order != G.order:
        raise CrossCheckFailed("quotient order is not order/|centre|")
    ident = np.arange(gs_hat.n_points)
    for z in wg.center.members:
        if not np.array_equal(gs_hat.action_row(int(z)), ident):
            raise CrossCheckFailed("centre does not act trivially on cosets")
    h_perms = [Permutation(gs_hat.action_row(int(g)).tolist())
               for g in wg.hhat.generator_indices]
    Hq = subgroup_generated(Gq, h_perms)
    if Hq.order * wg.center.order != wg.hhat.order:
        raise CrossCheckFailed("subgroup image order mismatch")
    return gs_hat, Gq, Hq


def _layer_class_labels(wg: WreathGroup, gs_hat: GSet, n_layers: int):
    """Map each layer to the symmetrized base-group class of x^-1 y where
    (e, x, y) represents the layer's double coset."""
    U = wg.base
    cdU = U.conjugacy_classes()
    ld = gs_hat.layers()
    if ld.n_layers != n_layers:
        raise CrossCheckFailed("layer count differs between the two models")
    labels = []
    for li in range(ld.n_layers):
        t = int(gs_hat.reps[ld.layer_reps[li]])
        _, x, y = wg.decode(t)
        u = U.mul_index(U.inv_index(x), y)
        c = int(cdU.class_of[u])
        labels.append(min(c, cdU.inverse_class[c]))
    if len(set(labels)) != len(labels):
        raise CrossCheckFailed("two layers map to one symmetrized class")
    return labels


def sixhundred_cell_report(cache_dir=None) -> dict:
    """The 600-cell as the coset space of SL(2,5) wr C2 over its
    diagonal-plus-swap subgroup, pushed through both the generic pipeline
    (on the central quotient) and the wreath formulas, with the two
    cosine tables compared entry by entry."""
    U = sl2_group(5)
    U_table = character_table(U, cache_dir=cache_dir)
    wg = wreath_c2(U)
    if wg.group.order != 28800 or wg.center.order != 2:
        raise CrossCheckFailed("unexpected wreath or centre order")

    what = wreath_irreducibles(wg, U_table)
    constituents = wreath_vertex_constituents(wg, U_table, table=what)
    if len(constituents) != 9:
        raise CrossCheckFailed(f"expected 9 constituents, got {len(constituents)}")

    gs_hat, Gq, Hq = _quotient_by_center(wg)
    if Gq.order != 14400 or Hq.order != 120:
        raise CrossCheckFailed("quotient model has wrong orders")
    gsq = coset_action(Gq, Hq)
    if gsq.n_points != 120:
        raise CrossCheckFailed("vertex set is not 120 points")
    tabq = character_table(Gq, cache_dir=cache_dir)
    analysis = analyze_gset(gsq, tabq)
    ldq = gsq.layers()
    if not np.array_equal(gs_hat.layers().layer_of_point, ldq.layer_of_point):
        raise CrossCheckFailed("coset numbering differs between the models")

    labels = _layer_class_labels(wg, gs_hat, ldq.n_layers)
    dims = sorted(c.sigma.degree for c in analysis.constituents)
    if dims != [1, 4, 4, 9, 9, 16, 16, 25, 36] or sum(dims) != 120:
        raise CrossCheckFailed(f"dimension profile {dims} is wrong")
    if any(c.mult != 1 for c in analysis.constituents):
        raise CrossCheckFailed("a constituent has multiplicity above one")
    if analysis.gelfand != "gelfand":
        raise CrossCheckFailed("pair failed the multiplicity-free test")

    used = set()
    match = {}
    for c in analysis.constituents:
        vec = cosine_vector_pure(gsq, c, ldq)
        hits = []
        for phi in range(U_table.k):
            if U_table.degrees[phi] ** 2 != c.sigma.degree or phi in used:
                continue
            if all(vec[li] == wreath_cosine(U_table, phi, labels[li])
                   for li in range(ldq.n_layers)):
                hits.append(phi)
        if len(hits) != 1:
            raise CrossCheckFailed(
                f"cosine table of degree-{c.sigma.degree} constituent matched "
                f"base rows {hits}")
        used.add(hits[0])
        match[c.sigma.degree, hits[0]] = vec

    crep = cone_report(gsq, tabq, cache_dir=cache_dir)
    cosine_rows = []
    for (sdeg, phi), vec in sorted(match.items()):
        cosine_rows.append({
            "phi_degree": U_table.degrees[phi],
            "sigma_degree": sdeg,
            "entries": [{"exact": str(v), "float": v.to_float().real}
                        for v in vec],
        })
    return {
        "schema": "polyreal/1",
        "wreath_order": wg.group.order,
        "center_order": wg.center.order,
        "group_order": Gq.order,
        "points": gsq.n_points,
        "layer_sizes": list(ldq.layer_sizes),
        "gelfand": analysis.gelfand,
        "dimensions": dims,
        "cosine_table": cosine_rows,
        "cone": crep.to_json(),
        "checks": {"cosine_match": True, "constituents": len(constituents)},
    }
