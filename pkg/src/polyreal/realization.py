"""Realization cones of transitive actions.

The commutant of a transitive action on Omega splits into blocks, one
per real-irreducible constituent sigma of the permutation character,
and the cone of G-invariant PSD matrices splits with it: each block
contributes the cone of m x m PSD matrices over R, C or H, where m is
the multiplicity of sigma and the division ring is fixed by the
Frobenius-Schur indicator of its complex constituents.

Everything here works on compressed matrices: one exact cyclotomic
value per layer.  Products of invariant matrices are evaluated via the
intersection counts of the layer structure, with the cyclotomic work
batched into integer convolutions and a single polynomial reduction per
orbital representative, so all identities are checked exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .chartable import (CharacterTable, RealIrreducible, character_table,
                        induced_trivial_character, inner_product_values,
                        real_irreducibles)
from .cyclo import ORDER_CAP, Cyclo, reduce_power_vector
from .errors import (CrossCheckFailed, DimensionMismatch, MultiplicityNotOne,
                     NonIntegralMultiplicity, NotInvariant, NotPSD,
                     OrderCapExceeded)
from .gsets import GSet, LayerData

_RING_NAMES = {"R": "R", "C": "C", "H": "H"}


class Constituent:
    """One real-irreducible constituent of the permutation character,
    with its multiplicity and the block it contributes to the cone."""

    __slots__ = ("sigma", "mult", "subcone_dim")

    def __init__(self, sigma: RealIrreducible, mult: int):
        self.sigma = sigma
        self.mult = mult
        m = mult
        if sigma.typ == "R":
            self.subcone_dim = m * (m + 1) // 2
        elif sigma.typ == "C":
            self.subcone_dim = m * m
        else:
            self.subcone_dim = m * (2 * m - 1)

    @property
    def cone_label(self) -> str:
        return f"PSD {self.mult}x{self.mult} over {_RING_NAMES[self.sigma.typ]}"

    def __repr__(self):
        return (f"Constituent(degree={self.sigma.degree}, type={self.sigma.typ}, "
                f"m={self.mult})")


class GSetAnalysis:
    def __init__(self, gset: GSet, table: CharacterTable,
                 layers: LayerData, pi: tuple[int, ...],
                 chi_mults: tuple[int, ...], constituents: list[Constituent]):
        self.gset = gset
        self.table = table
        self.layers = layers
        self.pi = pi
        self.chi_mults = chi_mults
        self.constituents = constituents

    @property
    def gelfand(self) -> str:
        return gelfand_classify(self)

    def __repr__(self):
        return (f"GSetAnalysis(points={self.gset.n_points}, "
                f"constituents={len(self.constituents)}, "
                f"layers={self.layers.n_layers})")


def analyze_gset(gset: GSet, table: CharacterTable | None = None,
                 cache_dir: str | None = None) -> GSetAnalysis:
    """Decompose the permutation character over the real irreducibles
    and verify the counting identities the layer structure must satisfy."""
    G = gset.group
    if table is None:
        table = character_table(G, cache_dir=cache_dir)
    cd = table.classdata
    pi = induced_trivial_character(G, gset.subgroup)

    chi_mults = []
    for r in range(table.k):
        ip = inner_product_values(cd, pi, table.values[r])
        if not ip.is_rational() or ip.as_fraction().denominator != 1:
            raise NonIntegralMultiplicity(f"<pi, chi_{r}> = {ip}")
        chi_mults.append(int(ip.as_fraction()))
    chi_mults = tuple(chi_mults)

    # the multiplicities must reassemble pi exactly, class by class
    for c in range(cd.k):
        acc = Cyclo.zero()
        for r in range(table.k):
            if chi_mults[r]:
                acc = acc + table.values[r][c] * chi_mults[r]
        if acc != Cyclo.rational(pi[c]):
            raise CrossCheckFailed(f"pi mismatch at class {c}: {acc} vs {pi[c]}")

    indicators = {}
    constituents = []
    for sigma in real_irreducibles(table):
        r0 = sigma.chi_rows[0]
        m_chi = chi_mults[r0]
        if sigma.typ == "C":
            r1 = sigma.chi_rows[1]
            if chi_mults[r1] != m_chi:
                raise CrossCheckFailed("conjugate constituents with unequal multiplicity")
            m = m_chi
        elif sigma.typ == "H":
            if m_chi % 2:
                raise NonIntegralMultiplicity(
                    f"quaternionic constituent with odd multiplicity {m_chi}")
            m = m_chi // 2
        else:
            m = m_chi
        for r in sigma.chi_rows:
            indicators[r] = sigma.indicator
        if m:
            constituents.append(Constituent(sigma, m))

    layers = gset.layers()
    # layer count: (1/2) sum m_chi (m_chi + indicator)
    twice = sum(chi_mults[r] * (chi_mults[r] + indicators[r])
                for r in range(table.k))
    if twice % 2 or twice // 2 != layers.n_layers:
        raise CrossCheckFailed(
            f"layer count {layers.n_layers} vs multiplicity formula {twice}/2")
    # suborbit count: sum m_chi^2
    if sum(m * m for m in chi_mults) != len(layers.suborbits):
        raise CrossCheckFailed("suborbit count disagrees with sum of m^2")
    if sum(c.subcone_dim for c in constituents) != layers.n_layers:
        raise CrossCheckFailed("subcone dimensions do not fill the layer space")
    return GSetAnalysis(gset, table, layers, pi, chi_mults, constituents)


def gelfand_classify(analysis: GSetAnalysis) -> str:
    """gelfand: complex multiplicity free; gelfand_over_R_only: only the
    real structure is multiplicity free; not_gelfand otherwise."""
    if all(m <= 1 for m in analysis.chi_mults):
        return "gelfand"
    if all(c.mult <= 1 for c in analysis.constituents):
        return "gelfand_over_R_only"
    return "not_gelfand"


# ---------------------------------------------------------------------------
# compressed invariant matrices


class InvariantMatrix:
    """G-invariant symmetric matrix on the points, one value per layer."""

    __slots__ = ("layers", "values")

    def __init__(self, layers: LayerData, values):
        values = tuple(v if isinstance(v, Cyclo) else Cyclo.rational(v)
                       for v in values)
        if len(values) != layers.n_layers:
            raise DimensionMismatch(
                f"{len(values)} values for {layers.n_layers} layers")
        self.layers = layers
        self.values = values

    def trace(self) -> Cyclo:
        return self.values[0] * self.layers.gset.n_points

    def to_dense_float(self) -> np.ndarray:
        rel = _rel_matrix(self.layers)
        vals = np.array([v.to_float().real for v in self.values])
        return vals[rel]

    def __repr__(self):
        return f"InvariantMatrix({self.layers.n_layers} layers)"


def _rel_matrix(ld: LayerData) -> np.ndarray:
    if not hasattr(ld, "_rel_full"):
        n = ld.gset.n_points
        rows = [ld.rel_row(p) for p in range(n)]
        ld._rel_full = np.vstack(rows)
    return ld._rel_full


def _group_class_counts(gset: GSet, element: int):
    """Class index -> count of h*g over h in the point stabilizer."""
    G = gset.group
    cd = G.conjugacy_classes()
    counts = {}
    for h in gset.subgroup.members:
        c = int(cd.class_of[G.mul_index(int(h), element)])
        counts[c] = counts.get(c, 0) + 1
    return counts


def _stabilizer_sum(gset: GSet, values, element: int) -> Cyclo:
    """Sum of sigma(h g) over the stabilizer H."""
    acc = Cyclo.zero()
    for c, n in sorted(_group_class_counts(gset, element).items()):
        acc = acc + values[c] * n
    return acc


def spherical_function(gset: GSet, chi_values, element: int) -> Cyclo:
    """(1/|H|) sum over h in H of chi(h g)."""
    return _stabilizer_sum(gset, chi_values, element) / gset.subgroup.order


def wythoff_cosine_sum(gset: GSet, sigma: RealIrreducible, element: int) -> Cyclo:
    """(1/(<sigma,sigma> |H|)) sum over h in H of sigma(h g); equals the
    multiplicity of sigma at the identity."""
    return (_stabilizer_sum(gset, sigma.values, element)
            / (sigma.norm * gset.subgroup.order))


def homogeneous_projection(gset: GSet, constituent: Constituent,
                           layers: LayerData | None = None) -> InvariantMatrix:
    """Orthogonal projection onto the sigma-isotypic component, in
    compressed form.  Entries against the base point are stabilizer
    sums of sigma over the coset transversal; the value is computed at
    every suborbit representative and fused suborbits must agree."""
    sigma = constituent.sigma
    ld = layers if layers is not None else gset.layers()
    G = gset.group
    scale = Fraction(sigma.degree, sigma.norm * G.order)
    per_layer: dict[int, Cyclo] = {}
    for s, orb in enumerate(ld.suborbits):
        p = int(orb[0])
        t = int(gset.reps[p])
        tinv = int(G.inv[t])
        val = _stabilizer_sum(gset, sigma.values, tinv) * scale
        li = int(ld.layer_of_point[p])
        if li in per_layer:
            if per_layer[li] != val:
                raise CrossCheckFailed(
                    f"projection value differs across fused suborbits in layer {li}")
        else:
            per_layer[li] = val
    values = tuple(per_layer[i] for i in range(ld.n_layers))
    Q = InvariantMatrix(ld, values)
    expected = Cyclo.rational(constituent.mult * sigma.degree)
    if Q.trace() != expected:
        raise CrossCheckFailed(
            f"projection trace {Q.trace()} differs from {expected}")
    return Q


def cosine_vector_pure(gset: GSet, constituent: Constituent,
                       layers: LayerData | None = None) -> tuple[Cyclo, ...]:
    """Layer cosine vector of a multiplicity-one constituent; entry 0 is
    one and every entry has absolute value at most 1."""
    if constituent.mult != 1:
        raise MultiplicityNotOne(
            f"multiplicity {constituent.mult} for degree {constituent.sigma.degree}")
    ld = layers if layers is not None else gset.layers()
    sigma = constituent.sigma
    out = []
    for li in range(ld.n_layers):
        p = ld.layer_reps[li]
        t = int(gset.reps[p])
        c = wythoff_cosine_sum(gset, sigma, t) / constituent.mult
        out.append(c)
    if out[0] != Cyclo.rational(1):
        raise CrossCheckFailed("cosine vector does not start at 1")
    for c in out:
        f = c.to_float()
        if abs(f.imag) > 1e-9 or abs(f.real) > 1 + 1e-9:
            raise CrossCheckFailed(f"cosine entry {c} outside the unit interval")
    return tuple(out)


def lambda_inner(ld: LayerData, a, b) -> Cyclo:
    """(1/|Omega|) sum over layers of size_i a_i b_i."""
    avals = a.values if isinstance(a, InvariantMatrix) else a
    bvals = b.values if isinstance(b, InvariantMatrix) else b
    if len(avals) != ld.n_layers or len(bvals) != ld.n_layers:
        raise DimensionMismatch("layer value vectors of wrong length")
    acc = Cyclo.zero()
    for size, x, y in zip(ld.layer_sizes, avals, bvals):
        x = x if isinstance(x, Cyclo) else Cyclo.rational(x)
        y = y if isinstance(y, Cyclo) else Cyclo.rational(y)
        acc = acc + x * y * size
    return acc / ld.gset.n_points


def integrality_certificate(ld: LayerData, values) -> dict:
    """Check that layer size times cosine entry is an algebraic integer
    for every layer; returns the per-layer evidence."""
    rows = []
    ok = True
    for li in range(ld.n_layers):
        v = values[li] * ld.layer_sizes[li]
        good = v.is_algebraic_integer()
        ok = ok and good
        rows.append({"layer": li, "size": ld.layer_sizes[li],
                     "scaled": str(v), "algebraic_integer": good})
    return {"all_integral": ok, "layers": rows}


# ---------------------------------------------------------------------------
# exact products of compressed matrices


def _common_integer_form(values):
    """Common order, common denominator, and integer coordinate rows."""
    n = 1
    for v in values:
        n = math.lcm(n, v.order)
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"matrix values span order {n}")
    den = 1
    for v in values:
        den = math.lcm(den, v.den)
    rows = []
    for v in values:
        f = den // v.den
        rows.append([c * f for c in v.lift_vector(n)])
    return n, den, rows


def product_on_representatives(ld: LayerData, A: InvariantMatrix,
                               B: InvariantMatrix) -> list[tuple[int, Cyclo]]:
    """Entries (base, q) of the matrix product A B at every suborbit
    representative q, computed exactly."""
    na, da, ra = _common_integer_form(A.values)
    nb, db, rb = _common_integer_form(B.values)
    n = math.lcm(na, nb)
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"product would need order {n}")
    # re-lift both to the common order n
    va = [reduce_power_vector(na, r).lift_vector(n) if na != n else r for r in ra]
    vb = [reduce_power_vector(nb, r).lift_vector(n) if nb != n else r for r in rb]
    ph = len(va[0])
    L = ld.n_layers
    out = []
    for q, N in ld.intersection_tensors():
        conv = [0] * (2 * ph - 1)
        for j in range(L):
            wj = [0] * ph
            col = N[:, j]
            for i in range(L):
                c = int(col[i])
                if c:
                    ai = va[i]
                    for p in range(ph):
                        if ai[p]:
                            wj[p] += c * ai[p]
            bj = vb[j]
            if any(wj) and any(bj):
                for p, x in enumerate(wj):
                    if x:
                        for r2, y in enumerate(bj):
                            if y:
                                conv[p + r2] += x * y
        out.append((q, reduce_power_vector(n, conv, den=da * db)))
    return out


def verify_product_identity(ld: LayerData, A: InvariantMatrix,
                            B: InvariantMatrix, C: InvariantMatrix | None,
                            scalar=1) -> None:
    """Check A B = scalar * C (C = zero matrix when None) exactly on a
    complete set of orbital representatives."""
    scalar = scalar if isinstance(scalar, Cyclo) else Cyclo.rational(scalar)
    for q, got in product_on_representatives(ld, A, B):
        if C is None:
            want = Cyclo.zero()
        else:
            want = C.values[int(ld.layer_of_point[q])] * scalar
        if got != want:
            raise CrossCheckFailed(
                f"product entry at representative {q}: {got} vs {want}")


# ---------------------------------------------------------------------------
# cone operations


def cone_blend(A: InvariantMatrix, B: InvariantMatrix, lam) -> InvariantMatrix:
    """Convex combination lam A + (1-lam) B."""
    lam = Fraction(lam)
    if lam < 0 or lam > 1:
        raise DimensionMismatch("blend parameter outside [0, 1]")
    vals = [a * lam + b * (1 - lam) for a, b in zip(A.values, B.values)]
    return InvariantMatrix(A.layers, vals)


def cone_scale(A: InvariantMatrix, lam) -> InvariantMatrix:
    """Scaling a realization by lam scales its Gram matrix by lam^2."""
    f = Fraction(lam) ** 2
    return InvariantMatrix(A.layers, [v * f for v in A.values])


def cone_hadamard(A: InvariantMatrix, B: InvariantMatrix) -> InvariantMatrix:
    """Entrywise product; the cone is closed under it."""
    return InvariantMatrix(A.layers, [a * b for a, b in zip(A.values, B.values)])


def cone_ops(op: str, *args) -> InvariantMatrix:
    if op == "blend":
        return cone_blend(*args)
    if op == "scale":
        return cone_scale(*args)
    if op == "hadamard":
        return cone_hadamard(*args)
    raise DimensionMismatch(f"unknown cone op {op!r}")


# ---------------------------------------------------------------------------
# numeric PSD square root


def psd_sqrt_commuting(ld: LayerData, M: np.ndarray) -> np.ndarray:
    """Symmetric PSD square root of an invariant matrix, numerically.
    Eigenvalues in [-1e-6, 0) are clamped to zero; anything lower is an
    error.  The root commutes with the action because it is a spectral
    function of an invariant matrix; the result is checked to stay
    invariant and to square back within 1e-8."""
    n = ld.gset.n_points
    M = np.asarray(M, dtype=float)
    if M.shape != (n, n):
        raise DimensionMismatch(f"matrix shape {M.shape} for {n} points")
    if np.max(np.abs(M - M.T)) > 1e-9:
        raise NotInvariant("matrix is not symmetric")
    rel = _rel_matrix(ld)
    for li in range(ld.n_layers):
        vals = M[rel == li]
        if vals.size and np.max(np.abs(vals - vals[0])) > 1e-9:
            raise NotInvariant(f"entries vary across layer {li}")
    w, V = np.linalg.eigh((M + M.T) / 2)
    if w.min() < -1e-6:
        raise NotPSD(f"eigenvalue {w.min()} below tolerance")
    w = np.clip(w, 0.0, None)
    # sqrt turns O(eps) noise in the zero cluster into O(sqrt(eps)) in the
    # root; flatten everything below the spectral noise floor first
    cutoff = max(1e-10, n * np.finfo(float).eps * float(w[-1]))
    w = np.where(w < cutoff, 0.0, w)
    A = (V * np.sqrt(w)) @ V.T
    if np.max(np.abs(A @ A - M)) > 1e-8:
        raise CrossCheckFailed("square of the root drifted past 1e-8")
    for li in range(ld.n_layers):
        vals = A[rel == li]
        if vals.size and np.max(np.abs(vals - vals[0])) > 1e-8:
            raise CrossCheckFailed("root is not invariant within 1e-8")
    return A


# ---------------------------------------------------------------------------
# cone report and identity suite


class ConeReport:
    def __init__(self, analysis: GSetAnalysis, checks: dict, projections):
        self.analysis = analysis
        self.checks = checks
        self.projections = projections

    def to_json(self) -> dict:
        a = self.analysis
        return {
            "schema": "polyreal/1",
            "points": a.gset.n_points,
            "group_order": a.gset.group.order,
            "stabilizer_order": a.gset.subgroup.order,
            "sigma": [
                {
                    "degree": c.sigma.degree,
                    "type": c.sigma.typ,
                    "norm": c.sigma.norm,
                    "multiplicity": c.mult,
                    "subcone_dim": c.subcone_dim,
                    "cone": c.cone_label,
                }
                for c in a.constituents
            ],
            "layers": [
                {"rep": a.layers.layer_reps[i], "size": a.layers.layer_sizes[i]}
                for i in range(a.layers.n_layers)
            ],
            "checks": dict(self.checks),
            "gelfand": a.gelfand,
        }


def cone_report(gset: GSet, table: CharacterTable | None = None,
                matrix_checks: str = "auto",
                cache_dir: str | None = None) -> ConeReport:
    """Full decomposition report.  matrix_checks: "on" always verifies
    the projection product identities, "off" only the counting and
    orthogonality identities, "auto" runs products when the point count
    and value orders keep them cheap."""
    if matrix_checks not in ("auto", "on", "off"):
        raise DimensionMismatch(f"matrix_checks must be auto/on/off")
    analysis = analyze_gset(gset, table=table, cache_dir=cache_dir)
    ld = analysis.layers
    checks = {}

    projections = [homogeneous_projection(gset, c, ld)
                   for c in analysis.constituents]

    # sum of projections is the identity, layer by layer
    acc = [Cyclo.zero()] * ld.n_layers
    for Q in projections:
        acc = [x + v for x, v in zip(acc, Q.values)]
    ident = [Cyclo.rational(1)] + [Cyclo.zero()] * (ld.n_layers - 1)
    layer_ok = acc == ident
    checks["layer_identity"] = bool(layer_ok)
    if not layer_ok:
        raise CrossCheckFailed("projections do not sum to the identity")

    # pairwise orthogonality under the layer form
    omega = gset.n_points
    ortho = True
    for i, Qi in enumerate(projections):
        ci = analysis.constituents[i]
        for j in range(i, len(projections)):
            got = lambda_inner(ld, Qi, projections[j])
            want = (Cyclo.rational(Fraction(ci.mult * ci.sigma.degree,
                                            omega * omega))
                    if i == j else Cyclo.zero())
            if got != want:
                ortho = False
    run_products = matrix_checks == "on" or (
        matrix_checks == "auto" and _products_feasible(gset, projections))
    if run_products:
        for i, Qi in enumerate(projections):
            for j in range(i, len(projections)):
                target = Qi if i == j else None
                verify_product_identity(ld, Qi, projections[j], target)
    checks["products"] = True if run_products else "skipped"
    checks["orthogonality"] = bool(ortho)
    if not ortho:
        raise CrossCheckFailed("projection family is not orthogonal")
    return ConeReport(analysis, checks, projections)


def _products_feasible(gset: GSet, projections) -> bool:
    if gset.n_points > 700:
        return False
    n = 1
    for Q in projections:
        for v in Q.values:
            n = math.lcm(n, v.order)
    return n <= ORDER_CAP


def identity_suite(gset: GSet, table: CharacterTable | None = None,
                   seed: int = 7, cache_dir: str | None = None) -> dict:
    """Exhaustive exact identity checks for one action; raises on the
    first failure and reports what ran."""
    analysis = analyze_gset(gset, table=table, cache_dir=cache_dir)
    ld = analysis.layers
    omega = gset.n_points
    report = {"points": omega, "constituents": len(analysis.constituents)}

    projections = [homogeneous_projection(gset, c, ld)
                   for c in analysis.constituents]

    acc = [Cyclo.zero()] * ld.n_layers
    for Q in projections:
        acc = [x + v for x, v in zip(acc, Q.values)]
    if acc != [Cyclo.rational(1)] + [Cyclo.zero()] * (ld.n_layers - 1):
        raise CrossCheckFailed("sum of projections is not the identity")
    report["projection_sum"] = True

    for i, Qi in enumerate(projections):
        ci = analysis.constituents[i]
        if Qi.trace() != Cyclo.rational(ci.mult * ci.sigma.degree):
            raise CrossCheckFailed("projection trace identity failed")
        for j in range(i, len(projections)):
            target = Qi if i == j else None
            verify_product_identity(ld, Qi, projections[j], target)
            got = lambda_inner(ld, Qi, projections[j])
            want = (Cyclo.rational(Fraction(ci.mult * ci.sigma.degree, omega * omega))
                    if i == j else Cyclo.zero())
            if got != want:
                raise CrossCheckFailed("layer-form orthogonality failed")
    report["projection_products"] = True

    # normalized matrices C_sigma and their lambda norm
    for i, Qi in enumerate(projections):
        ci = analysis.constituents[i]
        f = Fraction(omega, ci.mult * ci.sigma.degree)
        Cm = InvariantMatrix(ld, [v * f for v in Qi.values])
        if Cm.values[0] != Cyclo.rational(1):
            raise CrossCheckFailed("normalized matrix has wrong diagonal")
        if lambda_inner(ld, Cm, Cm) != Cyclo.rational(
                Fraction(1, ci.mult * ci.sigma.degree)):
            raise CrossCheckFailed("normalized matrix norm failed")
    report["normalized_norms"] = True

    # trace route vs layer route on random integer invariant matrices
    rng = np.random.default_rng(seed)
    rel = _rel_matrix(ld)
    for _ in range(3):
        avals = [int(x) for x in rng.integers(-9, 10, ld.n_layers)]
        bvals = [int(x) for x in rng.integers(-9, 10, ld.n_layers)]
        Afull = np.asarray(avals, dtype=np.int64)[rel]
        Bfull = np.asarray(bvals, dtype=np.int64)[rel]
        tr = int(np.tensordot(Afull, Bfull.T, axes=2))
        layer_route = lambda_inner(ld, [Cyclo.rational(v) for v in avals],
                                   [Cyclo.rational(v) for v in bvals])
        if layer_route != Cyclo.rational(Fraction(tr, omega * omega)):
            raise CrossCheckFailed("trace route disagrees with layer route")
    report["trace_vs_layer"] = True

    # cosine vector equals spherical function values for orthogonal
    # multiplicity-one constituents
    cos_checked = 0
    for i, c in enumerate(analysis.constituents):
        if c.mult != 1:
            continue
        vec = cosine_vector_pure(gset, c, ld)
        if c.sigma.typ == "R":
            chi = c.sigma.values
            for li in range(ld.n_layers):
                t = int(gset.reps[ld.layer_reps[li]])
                s = spherical_function(gset, chi, t)
                if s != vec[li]:
                    raise CrossCheckFailed("cosine and spherical values differ")
            cos_checked += 1
        cert = integrality_certificate(ld, vec)
        if not cert["all_integral"]:
            raise CrossCheckFailed("size-weighted cosine entry not integral")
    report["cosine_spherical"] = cos_checked
    report["integrality"] = True

    # hadamard of cone elements decomposes with nonnegative weights
    if len(projections) >= 2:
        Hmat = cone_hadamard(projections[0], projections[1])
        for i, Qi in enumerate(projections):
            ci = analysis.constituents[i]
            coeff = lambda_inner(ld, Hmat, Qi).to_float().real
            if coeff < -1e-12:
                raise CrossCheckFailed("hadamard decomposition went negative")
    report["hadamard"] = True
    return report
