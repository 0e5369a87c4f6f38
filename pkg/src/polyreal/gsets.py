"""Transitive actions on right cosets and their layer structure.

Points of a GSet are the right cosets Hx, the base point is H itself,
and the group acts on the right.  A layer is what a point pair cannot
escape under the combined moves that fix invariant symmetric matrices:
the H-orbit of a point fused with the H-orbit of its transversal
inverse.  Layers are exactly the diagonal classes (symmetrized double
cosets H x H union H x^-1 H), so a G-invariant symmetric matrix carries
one value per layer and nothing finer survives averaging.

The compressed product machinery lives here too: with rel(x, y) the
layer of the relative position, the counts N_ij = #{z : rel(base,z)=i,
rel(z,q)=j} at every suborbit representative q determine all entries of
a product of invariant matrices.
"""

from __future__ import annotations

import numpy as np

from .errors import CrossCheckFailed, InvalidParams
from .groups import Group, Subgroup


class GSet:
    """Right-coset action of a group on the cosets of a subgroup."""

    def __init__(self, group: Group, subgroup: Subgroup,
                 coset_of: np.ndarray, reps: np.ndarray):
        self.group = group
        self.subgroup = subgroup
        self.coset_of = coset_of
        self.reps = reps
        self.n_points = len(reps)
        self._layers = None

    def act(self, point: int, element: int) -> int:
        return int(self.coset_of[self.group.mul_index(int(self.reps[point]), element)])

    def action_row(self, element: int) -> np.ndarray:
        """Image of every point under one group element."""
        G = self.group
        composed = G.imgs[element][G.imgs[self.reps]]
        index = G._index
        return np.fromiter(
            (self.coset_of[index[composed[p].tobytes()]]
             for p in range(self.n_points)),
            dtype=np.int64, count=self.n_points)

    def layers(self) -> "LayerData":
        if self._layers is None:
            self._layers = LayerData(self)
        return self._layers

    def __repr__(self):
        return (f"GSet({self.n_points} points = cosets of order-"
                f"{self.subgroup.order} subgroup)")


def coset_action(G: Group, H: Subgroup) -> GSet:
    if H.parent is not G:
        raise InvalidParams("subgroup belongs to a different group")
    order = G.order
    coset_of = np.full(order, -1, dtype=np.int64)
    coset_of[H.members] = 0
    reps = [0]
    queue = [0]
    head = 0
    hmembers = [int(m) for m in H.members]
    while head < len(queue):
        c = queue[head]
        head += 1
        base = int(reps[c])
        for g in G.generator_indices:
            y = G.mul_index(base, g)
            if coset_of[y] >= 0:
                continue
            members = [G.mul_index(h, y) for h in hmembers]
            cid = len(reps)
            for m in members:
                coset_of[m] = cid
            reps.append(min(members))
            queue.append(cid)
    if int(coset_of.min()) < 0:
        raise CrossCheckFailed("coset table left elements unassigned")
    return GSet(G, H, coset_of, np.asarray(reps, dtype=np.int64))


class LayerData:
    """Suborbits (H-orbits on points) and their fusion into layers."""

    def __init__(self, gset: GSet):
        self.gset = gset
        n = gset.n_points
        G = gset.group
        H = gset.subgroup

        suborbit_of = np.full(n, -1, dtype=np.int64)
        suborbits = []
        hrows = [gset.action_row(int(g)) for g in H.generator_indices]
        for p in range(n):
            if suborbit_of[p] >= 0:
                continue
            sid = len(suborbits)
            orbit = [p]
            suborbit_of[p] = sid
            head = 0
            while head < len(orbit):
                x = orbit[head]
                head += 1
                for row in hrows:
                    y = int(row[x])
                    if suborbit_of[y] < 0:
                        suborbit_of[y] = sid
                        orbit.append(y)
            suborbits.append(np.sort(np.asarray(orbit, dtype=np.int64)))
        self.suborbits = suborbits
        self.suborbit_of = suborbit_of

        # pair each suborbit with the one holding the inverse transversal
        inv = G.inv
        pair = []
        for orb in suborbits:
            t = int(gset.reps[int(orb[0])])
            q = int(gset.coset_of[int(inv[t])])
            pair.append(int(suborbit_of[q]))
        for s, ps in enumerate(pair):
            if pair[ps] != s:
                raise CrossCheckFailed("suborbit pairing is not an involution")
        self.suborbit_pair = tuple(pair)

        # fuse into layers, label by least point
        fused = {}
        for s, ps in enumerate(pair):
            key = min(int(suborbits[s][0]), int(suborbits[ps][0]))
            fused.setdefault(key, set()).update((s, ps))
        order = sorted(fused)
        self.layer_suborbits = tuple(tuple(sorted(fused[key])) for key in order)
        layer_of_sub = {}
        for li, subs in enumerate(self.layer_suborbits):
            for s in subs:
                layer_of_sub[s] = li
        self.layer_of_point = np.asarray(
            [layer_of_sub[int(suborbit_of[p])] for p in range(n)], dtype=np.int64)
        self.n_layers = len(self.layer_suborbits)
        sizes = np.bincount(self.layer_of_point, minlength=self.n_layers)
        self.layer_sizes = tuple(int(x) for x in sizes)
        self.layer_reps = tuple(
            int(min(int(suborbits[s][0]) for s in subs))
            for subs in self.layer_suborbits)
        if self.layer_of_point[0] != 0 or self.layer_sizes[0] != 1:
            raise CrossCheckFailed("base layer is not the singleton layer 0")
        self._rel_rows: dict[int, np.ndarray] = {}
        self._tensors = None

    @property
    def suborbit_reps(self) -> tuple[int, ...]:
        return tuple(int(orb[0]) for orb in self.suborbits)

    def rel_row(self, point: int) -> np.ndarray:
        """Layer of the relative position (point -> every other point)."""
        if point not in self._rel_rows:
            gset = self.gset
            t = int(gset.reps[point])
            tinv = int(gset.group.inv[t])
            row = gset.action_row(tinv)
            self._rel_rows[point] = self.layer_of_point[row]
        return self._rel_rows[point]

    def intersection_tensors(self) -> list[tuple[int, np.ndarray]]:
        """(suborbit rep q, N) with N[i, j] = #{z : rel(base,z) = i and
        rel(z, q) = j}; enough to evaluate any product of invariant
        matrices on a full set of orbital representatives."""
        if self._tensors is None:
            L = self.n_layers
            rel0 = self.layer_of_point
            out = []
            for q in self.suborbit_reps:
                relq = self.rel_row(q)
                flat = np.bincount(rel0 * L + relq, minlength=L * L)
                out.append((q, flat.reshape(L, L)))
            self._tensors = out
        return self._tensors

    def __repr__(self):
        return (f"LayerData(points={self.gset.n_points}, "
                f"suborbits={len(self.suborbits)}, layers={self.n_layers})")
