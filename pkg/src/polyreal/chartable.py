"""Exact character tables of enumerated permutation groups.

The table is computed over a prime field F_ell with ell = 1 mod exp(G),
where every needed root of unity exists: simultaneous eigenvectors of
the class-sum matrices give the central characters, and the character
values are lifted back to exact cyclotomic numbers by discrete Fourier
inversion over the power classes.  The lifted table is then checked
against both orthogonality relations with exact arithmetic before it is
returned or cached.

Inner products of class functions run family by family: classes fused
by g -> g^t (t a unit mod the element order) contribute a Galois orbit
sum that lands in Q, so no computation ever leaves the small field
attached to a single element order.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from fractions import Fraction

import numpy as np

from .cyclo import Cyclo, reduce_power_vector
from .errors import CrossCheckFailed, InvalidParams, PrimeSearchFailed
from .groups import ConjugacyClassData, Group, Subgroup

CACHE_ENV = "POLYREAL_CACHE"
DEFAULT_CACHE = ".polyreal-cache"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _find_prime(exponent: int, group_order: int) -> int:
    lower = 2 * math.isqrt(group_order) + 1
    ell = exponent + 1
    while ell < 10 ** 8:
        if ell > lower and group_order % ell and _is_prime(ell):
            return ell
        ell += exponent
    raise PrimeSearchFailed(f"no prime = 1 mod {exponent} above {lower}")


def _primitive_root(ell: int) -> int:
    m = ell - 1
    factors = []
    t, p = m, 2
    while p * p <= t:
        if t % p == 0:
            factors.append(p)
            while t % p == 0:
                t //= p
        p += 1
    if t > 1:
        factors.append(t)
    for g in range(2, ell):
        if all(pow(g, m // q, ell) != 1 for q in factors):
            return g
    raise PrimeSearchFailed(f"no primitive root mod {ell}")


# ---------------------------------------------------------------------------
# linear algebra mod ell (int64 numpy; ell stays far below 2**26)


def _rref(mat: np.ndarray, ell: int):
    """Reduced row echelon form; returns (matrix, pivot_columns)."""
    m = mat % ell
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = None
        for rr in range(r, rows):
            if m[rr, c] % ell:
                hit = rr
                break
        if hit is None:
            continue
        if hit != r:
            m[[r, hit]] = m[[hit, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, ell) % ell
        for rr in range(rows):
            if rr != r and m[rr, c]:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % ell
        pivots.append(c)
        r += 1
    return m, pivots


def _kernel_basis(mat: np.ndarray, ell: int) -> np.ndarray:
    """Columns spanning the null space, deterministic order."""
    m, pivots = _rref(mat.copy(), ell)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-m[r, fc]) % ell
    return basis


def _restrict(M: np.ndarray, B: np.ndarray, ell: int) -> np.ndarray:
    """R with M B = B R (B has full column rank)."""
    T = M @ B % ell
    d = B.shape[1]
    aug = np.concatenate([B % ell, T], axis=1)
    m, pivots = _rref(aug, ell)
    if len([p for p in pivots if p < d]) != d:
        raise CrossCheckFailed("invariant subspace basis lost rank")
    return m[:d, d:] % ell


def _charpoly(M: np.ndarray, ell: int) -> list[int]:
    """Monic characteristic polynomial coefficients, highest power first."""
    d = M.shape[0]
    coeffs = [1]
    N = np.eye(d, dtype=np.int64)
    for k in range(1, d + 1):
        MN = M @ N % ell
        ck = (-int(np.trace(MN)) * pow(k, -1, ell)) % ell
        coeffs.append(ck)
        N = (MN + ck * np.eye(d, dtype=np.int64)) % ell
    return coeffs


def _poly_roots(coeffs: list[int], ell: int) -> list[int]:
    lam = np.arange(ell, dtype=np.int64)
    acc = np.full(ell, coeffs[0], dtype=np.int64)
    for c in coeffs[1:]:
        acc = (acc * lam + c) % ell
    return [int(x) for x in np.nonzero(acc == 0)[0]]


# ---------------------------------------------------------------------------
# Dixon lifting


def _class_matrix(G: Group, cd: ConjugacyClassData, i: int) -> np.ndarray:
    """Matrix A[j, m] counting x in class i with x^-1 * g_m in class j."""
    k = cd.k
    A = np.zeros((k, k), dtype=np.int64)
    rep_rows = G.imgs[np.asarray(cd.reps)]
    index = G._index
    class_of = cd.class_of
    for z in cd.members[cd.inverse_class[i]]:
        composed = rep_rows[:, G.imgs[int(z)]]
        for m in range(k):
            j = class_of[index[composed[m].tobytes()]]
            A[j, m] += 1
    return A


def _modular_omegas(G: Group, cd: ConjugacyClassData, ell: int) -> list[np.ndarray]:
    """Simultaneous eigenvectors of all class matrices, normalized so the
    identity coordinate is 1."""
    k = cd.k
    spaces = [np.eye(k, dtype=np.int64)]
    for i in range(1, k):
        if all(B.shape[1] == 1 for B in spaces):
            break
        Mi = _class_matrix(G, cd, i)
        nxt = []
        for B in spaces:
            if B.shape[1] == 1:
                nxt.append(B)
                continue
            R = _restrict(Mi, B, ell)
            roots = _poly_roots(_charpoly(R, ell), ell)
            for lam in roots:
                K = _kernel_basis((R - lam * np.eye(R.shape[0], dtype=np.int64)) % ell, ell)
                if K.shape[1]:
                    nxt.append(B @ K % ell)
        if sum(B.shape[1] for B in nxt) != k:
            raise CrossCheckFailed("eigenspace splitting lost dimensions")
        spaces = nxt
    if any(B.shape[1] != 1 for B in spaces):
        raise CrossCheckFailed("class matrices failed to separate characters")
    out = []
    for B in spaces:
        v = B[:, 0] % ell
        if v[0] == 0:
            raise CrossCheckFailed("central character vanished at identity")
        out.append(v * pow(int(v[0]), -1, ell) % ell)
    return out


def _lift_row(cd: ConjugacyClassData, theta: list[int], degree: int,
              ell: int, omega_root: int, exponent: int) -> tuple[Cyclo, ...]:
    values = []
    for j in range(cd.k):
        n = cd.orders[j]
        if n == 1:
            values.append(Cyclo.rational(degree))
            continue
        z = pow(omega_root, exponent // n, ell)
        zinv = pow(z, -1, ell)
        pcls = [cd.power_map(s)[j] for s in range(n)]
        ninv = pow(n, -1, ell)
        powers = {}
        for t in range(n):
            acc = 0
            for s in range(n):
                acc = (acc + theta[pcls[s]] * pow(zinv, s * t, ell)) % ell
            a = acc * ninv % ell
            if a > degree:
                raise CrossCheckFailed(
                    f"lifted multiplicity {a} exceeds degree {degree}")
            if a:
                powers[t] = a
        values.append(Cyclo.from_power_dict(n, powers))
    return tuple(values)


class CharacterTable:
    """Irreducible characters of a group, rows sorted by degree then by
    the value sequence."""

    def __init__(self, group: Group, classdata: ConjugacyClassData,
                 prime: int, exponent: int,
                 degrees: tuple[int, ...], values: tuple[tuple[Cyclo, ...], ...]):
        self.group = group
        self.classdata = classdata
        self.prime = prime
        self.exponent = exponent
        self.degrees = degrees
        self.values = values

    @property
    def k(self) -> int:
        return len(self.values)

    def row(self, r: int) -> tuple[Cyclo, ...]:
        return self.values[r]

    def conjugate_row_index(self, r: int) -> int:
        target = tuple(v.conj() for v in self.values[r])
        for s, row in enumerate(self.values):
            if row == target:
                return s
        raise CrossCheckFailed("conjugate character missing from table")

    def __repr__(self):
        return (f"CharacterTable(order={self.group.order}, k={self.k}, "
                f"prime={self.prime})")


def group_hash(G: Group) -> str:
    h = hashlib.sha256()
    h.update(f"{G.degree}:{G.order}:".encode())
    h.update(np.ascontiguousarray(G.imgs).tobytes())
    return h.hexdigest()


def _cache_path(cache_dir: str | None, ghash: str) -> str:
    base = cache_dir or os.environ.get(CACHE_ENV) or DEFAULT_CACHE
    return os.path.join(base, f"table-{ghash}.json")


def character_table(G: Group, cache_dir: str | None = None) -> CharacterTable:
    cd = G.conjugacy_classes()
    exponent = math.lcm(*cd.orders)
    ghash = group_hash(G)
    path = _cache_path(cache_dir, ghash)
    if os.path.exists(path):
        try:
            with open(path) as fh:
                blob = json.load(fh)
        except (OSError, ValueError):
            blob = None
        if blob and blob.get("group_hash") == ghash:
            degrees = tuple(int(r["degree"]) for r in blob["irreducibles"])
            values = tuple(
                tuple(Cyclo.from_json(v) for v in r["values"])
                for r in blob["irreducibles"])
            table = CharacterTable(G, cd, int(blob["prime"]),
                                   int(blob["exponent"]), degrees, values)
            verify_orthogonality(table)
            return table

    ell = _find_prime(exponent, G.order)
    omega_root = pow(_primitive_root(ell), (ell - 1) // exponent, ell)
    omegas = _modular_omegas(G, cd, ell)
    sizes = cd.sizes
    rows = []
    sqrt_bound = math.isqrt(G.order)
    for v in omegas:
        s = 0
        for j in range(cd.k):
            s = (s + int(v[j]) * int(v[cd.inverse_class[j]])
                 * pow(sizes[j], -1, ell)) % ell
        target = G.order % ell * pow(s, -1, ell) % ell
        cands = [d for d in range(1, sqrt_bound + 1) if d * d % ell == target]
        if len(cands) != 1:
            raise CrossCheckFailed(f"degree recovery ambiguous: {cands}")
        degree = cands[0]
        theta = [degree * int(v[j]) * pow(sizes[j], -1, ell) % ell
                 for j in range(cd.k)]
        rows.append((degree, _lift_row(cd, theta, degree, ell, omega_root, exponent)))
    rows.sort(key=lambda dr: (dr[0], tuple(v.sort_key() for v in dr[1])))
    degrees = tuple(d for d, _ in rows)
    values = tuple(vals for _, vals in rows)
    table = CharacterTable(G, cd, ell, exponent, degrees, values)
    verify_orthogonality(table)
    _cache_store(path, ghash, table)
    return table


def _cache_store(path: str, ghash: str, table: CharacterTable) -> None:
    blob = {
        "group_hash": ghash,
        "prime": table.prime,
        "exponent": table.exponent,
        "irreducibles": [
            {"degree": d, "values": [v.to_json() for v in row]}
            for d, row in zip(table.degrees, table.values)
        ],
    }
    try:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(blob, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        pass


# ---------------------------------------------------------------------------
# exact inner products and orthogonality checks


def _as_cyclo(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    return Cyclo.rational(x)


def galois_orbit_sum(P: Cyclo, ts) -> Cyclo:
    """Sum of tau_t(P) over the given exponents."""
    n = P.order
    if n == 1:
        return P * len(ts)
    vec = [0] * n
    for t in ts:
        for k, c in enumerate(P.nums):
            if c:
                vec[(k * t) % n] += c
    return reduce_power_vector(n, vec, den=P.den)


def _family_consistent(cd: ConjugacyClassData, vals) -> bool:
    for base, transversal in cd.rational_families():
        v = vals[base]
        for t, c in transversal:
            if c == base:
                continue
            if vals[c] != v.galois(t):
                return False
    return True


def inner_product_values(cd: ConjugacyClassData, a, b) -> Cyclo:
    """(1/|G|) sum over G of a(g) * conj(b(g)) for class functions given
    by their value per class.  Uses Galois family sums when both inputs
    respect them (characters always do); falls back to direct summation
    otherwise."""
    if len(a) != cd.k or len(b) != cd.k:
        raise InvalidParams("need one value per class")
    a = [_as_cyclo(x) for x in a]
    b = [_as_cyclo(x) for x in b]
    order = cd.group.order
    if _family_consistent(cd, a) and _family_consistent(cd, b):
        total = Fraction(0)
        for base, transversal in cd.rational_families():
            P = a[base] * b[base].conj()
            if P.is_zero():
                continue
            S = galois_orbit_sum(P, [t for t, _ in transversal])
            if not S.is_rational():
                raise CrossCheckFailed("family sum left the rationals")
            total += Fraction(cd.sizes[base]) * S.as_fraction()
        return Cyclo.rational(total / order)
    acc = Cyclo.zero()
    for i in range(cd.k):
        acc = acc + a[i] * b[i].conj() * cd.sizes[i]
    return acc / order


def inner_product(G: Group, a, b) -> Cyclo:
    return inner_product_values(G.conjugacy_classes(), a, b)


def verify_orthogonality(table: CharacterTable) -> None:
    """Exact first and second orthogonality on the whole table."""
    cd = table.classdata
    k = table.k
    if k != cd.k:
        raise CrossCheckFailed(f"{k} characters for {cd.k} classes")
    if sum(d * d for d in table.degrees) != table.group.order:
        raise CrossCheckFailed("degree squares do not sum to the group order")
    for r in range(k):
        if table.values[r][0] != Cyclo.rational(table.degrees[r]):
            raise CrossCheckFailed("identity column disagrees with degree")
    for r in range(k):
        for s in range(r, k):
            got = inner_product_values(cd, table.values[r], table.values[s])
            want = Cyclo.rational(1 if r == s else 0)
            if got != want:
                raise CrossCheckFailed(f"row orthogonality failed at ({r},{s})")
    _column_orthogonality(table)


def _column_orthogonality(table: CharacterTable) -> None:
    cd = table.classdata
    k = table.k
    order = table.group.order
    mats = []
    for a in range(k):
        n = cd.orders[a]
        rows = []
        for r in range(k):
            v = table.values[r][a]
            if v.den != 1:
                raise CrossCheckFailed("character value is not an algebraic integer")
            rows.append(v.lift_vector(n))
        mats.append(np.array(rows, dtype=np.int64))
    for a in range(k):
        na = cd.orders[a]
        pa = mats[a].shape[1]
        for b in range(a, k):
            nb = cd.orders[b]
            N = math.lcm(na, nb)
            sa, sb = N // na, N // nb
            S = mats[a].T @ mats[b]
            idx = (np.arange(pa, dtype=np.int64)[:, None] * sa
                   - np.arange(mats[b].shape[1], dtype=np.int64)[None, :] * sb) % N
            vec = np.zeros(N, dtype=np.int64)
            np.add.at(vec, idx, S)
            got = reduce_power_vector(N, [int(x) for x in vec])
            want = Cyclo.rational(order // cd.sizes[a] if a == b else 0)
            if got != want:
                raise CrossCheckFailed(f"column orthogonality failed at ({a},{b})")


# ---------------------------------------------------------------------------
# derived data


def frobenius_schur(table: CharacterTable, r: int) -> int:
    """Indicator (1/|G|) sum chi(g^2): 1, -1 or 0."""
    cd = table.classdata
    pm2 = cd.power_map(2)
    vals = table.values[r]
    total = Fraction(0)
    for base, transversal in cd.rational_families():
        P = vals[pm2[base]]
        if P.is_zero():
            continue
        S = galois_orbit_sum(P, [t for t, _ in transversal])
        if not S.is_rational():
            raise CrossCheckFailed("indicator family sum left the rationals")
        total += Fraction(cd.sizes[base]) * S.as_fraction()
    nu = total / table.group.order
    if nu not in (Fraction(-1), Fraction(0), Fraction(1)):
        raise CrossCheckFailed(f"indicator {nu} outside -1, 0, 1")
    return int(nu)


class RealIrreducible:
    """Real-irreducible constituent sigma built from a complex row or a
    conjugate pair: sigma = chi (orthogonal), chi + conj(chi) (complex),
    or 2 chi (quaternionic)."""

    __slots__ = ("values", "degree", "typ", "norm", "chi_rows", "indicator")

    def __init__(self, values, degree, typ, norm, chi_rows, indicator):
        self.values = values
        self.degree = degree
        self.typ = typ
        self.norm = norm
        self.chi_rows = chi_rows
        self.indicator = indicator

    def __repr__(self):
        return f"RealIrreducible(degree={self.degree}, type={self.typ})"


def real_irreducibles(table: CharacterTable) -> list[RealIrreducible]:
    """One entry per orbit {chi, conj(chi)}, in row order."""
    out = []
    seen = set()
    for r in range(table.k):
        if r in seen:
            continue
        rbar = table.conjugate_row_index(r)
        seen.add(r)
        seen.add(rbar)
        vals = table.values[r]
        if rbar == r:
            nu = frobenius_schur(table, r)
            if nu == 1:
                out.append(RealIrreducible(vals, table.degrees[r], "R", 1, (r,), 1))
            elif nu == -1:
                sigma = tuple(v * 2 for v in vals)
                out.append(RealIrreducible(sigma, 2 * table.degrees[r], "H", 4, (r,), -1))
            else:
                raise CrossCheckFailed("self-conjugate row with zero indicator")
        else:
            if frobenius_schur(table, r) != 0:
                raise CrossCheckFailed("conjugate pair with nonzero indicator")
            sigma = tuple(v + w for v, w in zip(vals, table.values[rbar]))
            out.append(RealIrreducible(sigma, 2 * table.degrees[r], "C", 2,
                                       (r, rbar), 0))
    return out


def induced_trivial_character(G: Group, H: Subgroup) -> tuple[int, ...]:
    """Permutation character of G on the right cosets of H, one integer
    per conjugacy class."""
    cd = G.conjugacy_classes()
    counts = np.bincount(cd.class_of[H.members], minlength=cd.k)
    out = []
    for i in range(cd.k):
        num = int(counts[i]) * (G.order // cd.sizes[i])
        val, rem = divmod(num, H.order)
        if rem:
            raise CrossCheckFailed("induced character value not integral")
        out.append(val)
    return tuple(out)


def trivial_restriction_multiplicity(cd: ConjugacyClassData, H: Subgroup,
                                     vals) -> Cyclo:
    """(1/|H|) sum over h in H of chi(h), for Frobenius reciprocity checks."""
    counts = np.bincount(cd.class_of[H.members], minlength=cd.k)
    acc = Cyclo.zero()
    for i in range(cd.k):
        if counts[i]:
            acc = acc + _as_cyclo(vals[i]) * int(counts[i])
    return acc / H.order
