"""Finite permutation groups stored as full element tables.

Every group here is a concrete set of permutations of {0..degree-1},
enumerated breadth-first from its generators (identity first, generator
order as given), so element indices are deterministic.  Points map on
the right: p^(gh) = (p^g)^h, and composing g*h means apply g first.

The element table is a numpy array of shape (order, degree) in the
smallest unsigned dtype that holds the degree; a bytes-keyed dict gives
index lookup.  This is comfortable up to the enumeration cap of 200000
elements, which covers everything this package targets.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import CapExceeded, CrossCheckFailed, DegreeMismatch, InvalidParams

DEFAULT_CAP = 200_000


def _min_dtype(degree: int):
    if degree <= 256:
        return np.uint8
    if degree <= 65536:
        return np.uint16
    return np.uint32


class Permutation:
    """Immutable permutation of {0..degree-1}, stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise InvalidParams(f"not a permutation: {imgs}")
        self.images = imgs

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Permutation":
        imgs = list(range(degree))
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            if any(c < 0 or c >= degree for c in cyc):
                raise InvalidParams(f"cycle {cyc} exceeds degree {degree}")
            if len(set(cyc)) != len(cyc):
                raise InvalidParams(f"repeated point in cycle {cyc}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a] = b
        return Permutation(imgs)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation(other.images[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = math.lcm(n, len(cyc))
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation{body}"


class Group:
    """Fully enumerated permutation group."""

    def __init__(self, imgs: np.ndarray, generator_indices: list[int]):
        self.imgs = imgs
        self.generator_indices = list(generator_indices)
        self._index = {imgs[i].tobytes(): i for i in range(len(imgs))}
        self._inv = None
        self._classes = None

    @property
    def order(self) -> int:
        return len(self.imgs)

    @property
    def degree(self) -> int:
        return self.imgs.shape[1]

    def element(self, i: int) -> Permutation:
        return Permutation(self.imgs[i])

    def find(self, perm) -> int | None:
        if isinstance(perm, Permutation):
            arr = np.asarray(perm.images, dtype=self.imgs.dtype)
        else:
            arr = np.asarray(perm, dtype=self.imgs.dtype)
        if arr.shape != (self.degree,):
            raise DegreeMismatch(f"expected degree {self.degree}")
        return self._index.get(arr.tobytes())

    def index_of(self, perm) -> int:
        i = self.find(perm)
        if i is None:
            raise InvalidParams("permutation not in group")
        return i

    def mul_index(self, i: int, j: int) -> int:
        row = self.imgs[j][self.imgs[i]]
        return self._index[row.tobytes()]

    def mul_row(self, row: np.ndarray, j: int) -> np.ndarray:
        return self.imgs[j][row]

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            order = np.argsort(self.imgs, axis=1).astype(self.imgs.dtype)
            self._inv = np.fromiter(
                (self._index[order[i].tobytes()] for i in range(self.order)),
                dtype=np.int64, count=self.order)
        return self._inv

    def inv_index(self, i: int) -> int:
        return int(self.inv[i])

    def power_index(self, i: int, k: int) -> int:
        if k < 0:
            return self.power_index(self.inv_index(i), -k)
        acc, base = 0, i
        while k:
            if k & 1:
                acc = self.mul_index(acc, base)
            k >>= 1
            if k:
                base = self.mul_index(base, base)
        return acc

    def element_order(self, i: int) -> int:
        n, cur = 1, i
        while cur != 0:
            cur = self.mul_index(cur, i)
            n += 1
        return n

    def conjugacy_classes(self) -> "ConjugacyClassData":
        if self._classes is None:
            self._classes = _conjugacy_classes(self)
        return self._classes

    def __repr__(self):
        return f"Group(order={self.order}, degree={self.degree})"


def enumerate_group(generators, cap: int = DEFAULT_CAP) -> Group:
    """Breadth-first closure of the generators, identity first."""
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    if not gens:
        raise InvalidParams("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise DegreeMismatch("generators act on different point sets")
    dtype = _min_dtype(degree)
    gen_rows = [np.asarray(g.images, dtype=dtype) for g in gens]
    identity = np.arange(degree, dtype=dtype)
    rows = [identity]
    index = {identity.tobytes(): 0}
    head = 0
    while head < len(rows):
        cur = rows[head]
        head += 1
        for gr in gen_rows:
            nxt = gr[cur]
            key = nxt.tobytes()
            if key not in index:
                index[key] = len(rows)
                rows.append(nxt)
                if len(rows) > cap:
                    raise CapExceeded(f"enumeration passed {cap} elements")
    imgs = np.vstack(rows)
    return Group(imgs, [index[g.tobytes()] for g in gen_rows])


class ConjugacyClassData:
    """Conjugacy classes in deterministic order: identity class first,
    then ascending size, ties by smallest member index."""

    def __init__(self, group: Group, reps, sizes, members, class_of):
        self.group = group
        self.reps = tuple(reps)
        self.sizes = tuple(sizes)
        self.members = members
        self.class_of = class_of
        self.k = len(reps)
        self.orders = tuple(group.element_order(r) for r in reps)
        self.inverse_class = tuple(
            int(class_of[group.inv_index(r)]) for r in reps)
        self._powers: dict[int, tuple[int, ...]] = {}
        self._families = None

    def centralizer_order(self, i: int) -> int:
        return self.group.order // self.sizes[i]

    def class_of_index(self, e: int) -> int:
        return int(self.class_of[e])

    def power_map(self, k: int) -> tuple[int, ...]:
        if k not in self._powers:
            out = []
            for i, r in enumerate(self.reps):
                e = self.group.power_index(r, k % self.orders[i])
                out.append(int(self.class_of[e]))
            self._powers[k] = tuple(out)
        return self._powers[k]

    def rational_families(self):
        """Partition of classes under g -> g^t for units t mod ord(g).
        Returns tuples (base_class, ((t, class), ...)) with one exponent
        per distinct class, t = 1 first."""
        if self._families is None:
            seen = [False] * self.k
            fams = []
            for i in range(self.k):
                if seen[i]:
                    continue
                n = self.orders[i]
                transversal = []
                hit = {}
                for t in range(1, n + 1):
                    if math.gcd(t, n) != 1:
                        continue
                    c = self.power_map(t)[i]
                    if c not in hit:
                        hit[c] = t
                        transversal.append((t, c))
                for c in hit:
                    seen[c] = True
                fams.append((i, tuple(transversal)))
            self._families = tuple(fams)
        return self._families


def _conjugacy_classes(G: Group) -> ConjugacyClassData:
    order = G.order
    inv = G.inv
    gens = G.generator_indices
    assigned = np.full(order, -1, dtype=np.int64)
    raw = []
    for e in range(order):
        if assigned[e] >= 0:
            continue
        cid = len(raw)
        orbit = [e]
        assigned[e] = cid
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for g in gens:
                y = G.mul_index(G.mul_index(int(inv[g]), x), g)
                if assigned[y] < 0:
                    assigned[y] = cid
                    orbit.append(y)
        raw.append(np.sort(np.asarray(orbit, dtype=np.int64)))
    perm = sorted(range(len(raw)),
                  key=lambda c: (0 if raw[c][0] == 0 else 1,
                                 len(raw[c]), int(raw[c][0])))
    members = [raw[c] for c in perm]
    relabel = np.empty(len(raw), dtype=np.int64)
    for new, old in enumerate(perm):
        relabel[old] = new
    class_of = relabel[assigned]
    reps = [int(m[0]) for m in members]
    sizes = [len(m) for m in members]
    return ConjugacyClassData(G, reps, sizes, members, class_of)


class Subgroup:
    """Subgroup of an enumerated group, held as sorted element indices."""

    def __init__(self, parent: Group, members: np.ndarray, generator_indices):
        self.parent = parent
        self.members = np.sort(np.asarray(members, dtype=np.int64))
        self.generator_indices = list(generator_indices)

    @property
    def order(self) -> int:
        return len(self.members)

    def contains_index(self, i: int) -> bool:
        pos = int(np.searchsorted(self.members, i))
        return pos < len(self.members) and self.members[pos] == i

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.order})"


def subgroup_generated(G: Group, generators) -> Subgroup:
    """Closure inside G of the given generators (Permutations or indices)."""
    gidx = []
    for g in generators:
        gidx.append(g if isinstance(g, int) else G.index_of(g))
    closure = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gidx:
            y = G.mul_index(x, g)
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    return Subgroup(G, np.asarray(sorted(closure)), gidx)


def element_order(G: Group, i: int) -> int:
    return G.element_order(i)


def double_cosets(G: Group, H: Subgroup, K: Subgroup) -> list[dict]:
    """Decompose G into H\\G/K blocks.  Each block reports its least
    element index and size; sizes are verified against the index formula
    |HxK| = |H||K| / |K meet x^-1 H x|."""
    order = G.order
    assigned = np.zeros(order, dtype=bool)
    hg = [int(g) for g in H.generator_indices]
    kg = [int(g) for g in K.generator_indices]
    blocks = []
    inv = G.inv
    for e in range(order):
        if assigned[e]:
            continue
        orbit = [e]
        assigned[e] = True
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for g in hg:
                y = G.mul_index(g, x)
                if not assigned[y]:
                    assigned[y] = True
                    orbit.append(y)
            for g in kg:
                y = G.mul_index(x, g)
                if not assigned[y]:
                    assigned[y] = True
                    orbit.append(y)
        size = len(orbit)
        xinv = int(inv[e])
        meet = 0
        for k in K.members:
            # x k x^-1 in H
            y = G.mul_index(G.mul_index(e, int(k)), xinv)
            if H.contains_index(y):
                meet += 1
        expected, rem = divmod(H.order * K.order, meet)
        if rem or expected != size:
            raise CrossCheckFailed(
                f"double coset at {e}: size {size}, formula {H.order}*{K.order}/{meet}")
        blocks.append({"rep": e, "size": size})
    return blocks


# ---------------------------------------------------------------------------
# standard constructions


def symmetric_group(n: int) -> Group:
    if n < 2:
        raise InvalidParams("symmetric group needs n >= 2")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return enumerate_group(gens)


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise InvalidParams("cyclic group needs n >= 1")
    if n == 1:
        return enumerate_group([Permutation.identity(1)])
    return enumerate_group([Permutation.from_cycles(n, [tuple(range(n))])])


def dihedral_group(n: int) -> Group:
    if n < 3:
        raise InvalidParams("dihedral group needs n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    ref = Permutation([(n - i) % n for i in range(n)])
    return enumerate_group([rot, ref])


def alternating_group(n: int) -> Group:
    if n < 3:
        raise InvalidParams("alternating group needs n >= 3")
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        if n % 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n))]))
    return enumerate_group(gens)


def quaternion_group() -> Group:
    """The eight unit quaternions acting on themselves by right
    multiplication; point order 1, -1, i, -i, j, -j, k, -k."""
    right_i = Permutation([2, 3, 1, 0, 7, 6, 4, 5])
    right_j = Permutation([4, 5, 6, 7, 1, 0, 3, 2])
    G = enumerate_group([right_i, right_j])
    if G.order != 8:
        raise CrossCheckFailed("quaternion table closure is not 8")
    return G


def sl2_group(p: int) -> Group:
    """SL(2,p) acting on the p^2-1 nonzero row vectors of F_p^2."""
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise InvalidParams(f"{p} is not prime")

    def idx(a, b):
        return a * p + b - 1

    def perm_of(m):
        imgs = [0] * (p * p - 1)
        for a in range(p):
            for b in range(p):
                if a == 0 and b == 0:
                    continue
                x = (a * m[0][0] + b * m[1][0]) % p
                y = (a * m[0][1] + b * m[1][1]) % p
                imgs[idx(a, b)] = idx(x, y)
        return Permutation(imgs)

    s = perm_of([[0, p - 1], [1, 0]])
    t = perm_of([[1, 1], [0, 1]])
    G = enumerate_group([s, t])
    expected = p * (p * p - 1)
    if G.order != expected:
        raise CrossCheckFailed(f"SL(2,{p}) closure gave {G.order}, want {expected}")
    return G
