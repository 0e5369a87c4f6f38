"""PSL(2,p) on the projective line, involution triples, and the
multiplicity pipeline built on them.

Matrices act on the right of row vectors, so [[alpha, beta], [gamma, delta]]
sends a projective parameter x to (alpha*x + gamma) / (beta*x + delta).
Points are 0..p-1 for the field and index p for the point at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import CharacterTable, _is_prime, character_table
from .errors import (
    CrossCheckFailed,
    InvalidParams,
    NoMatch,
    NotPrime,
    PrimeTooLarge,
    StringCFailed,
)
from .groups import Group, Permutation, enumerate_group, subgroup_generated
from .gsets import coset_action
from .realization import analyze_gset
from .stringc import verify_string_cgroup

MAX_P = 50

Matrix = tuple[int, int, int, int]


def _mmul(p: int, m1: Matrix, m2: Matrix) -> Matrix:
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    return (
        (a1 * a2 + b1 * c2) % p,
        (a1 * b2 + b1 * d2) % p,
        (c1 * a2 + d1 * c2) % p,
        (c1 * b2 + d1 * d2) % p,
    )


def moebius_permutation(p: int, m: Matrix) -> Permutation:
    """Projective action of m = (alpha, beta, gamma, delta); infinity = p."""
    alpha, beta, gamma, delta = (x % p for x in m)
    if (alpha * delta - beta * gamma) % p == 0:
        raise InvalidParams("matrix is singular mod p")
    images = []
    for x in range(p):
        num = (alpha * x + gamma) % p
        den = (beta * x + delta) % p
        images.append(p if den == 0 else num * pow(den, -1, p) % p)
    images.append(p if beta == 0 else alpha * pow(beta, -1, p) % p)
    return Permutation(images)


def psl_order(p: int) -> int:
    return p * (p * p - 1) // 2


def psl_group(p: int) -> Group:
    """PSL(2,p) as the Moebius permutation group on p+1 points."""
    if not _is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    if p > MAX_P:
        raise PrimeTooLarge(f"p = {p} exceeds supported maximum {MAX_P}")
    s = moebius_permutation(p, (0, 1, p - 1, 0))
    t = moebius_permutation(p, (1, 1, 0, 1))
    sanity = moebius_permutation(p, _mmul(p, (0, 1, p - 1, 0), (1, 1, 0, 1)))
    if s * t != sanity:
        raise CrossCheckFailed("Moebius action is not a right action")
    G = enumerate_group([s, t], cap=psl_order(p) + 8)
    if G.order != psl_order(p):
        raise CrossCheckFailed(
            f"PSL(2,{p}) enumeration gave order {G.order}, expected {psl_order(p)}"
        )
    return G


@dataclass(frozen=True)
class PSLParams:
    """Parameters (p, y, a, b) for the involution triple s0, s1, s2."""

    p: int
    y: int
    a: int
    b: int

    def __post_init__(self):
        p = self.p
        if not _is_prime(p) or p == 2:
            raise NotPrime(f"{p} is not an odd prime")
        y, a, b = self.y % p, self.a % p, self.b % p
        if y in (0, 1, p - 1):
            raise InvalidParams("y must avoid 0, 1, -1 mod p")
        if a == 0:
            raise InvalidParams("a must be nonzero mod p")
        if (a * a + b * b) % p != p - 1:
            raise InvalidParams("a^2 + b^2 must equal -1 mod p")


def find_ab(p: int) -> tuple[int, int]:
    """Smallest a >= 1, then smallest b >= 0, with a^2 + b^2 = -1 mod p."""
    for a in range(1, p):
        for b in range(p):
            if (a * a + b * b) % p == p - 1:
                return a, b
    raise InvalidParams(f"no (a, b) with a^2 + b^2 = -1 mod {p}")


@dataclass(frozen=True)
class LemmaGenerators:
    params: PSLParams
    s0: Permutation
    s1: Permutation
    s2: Permutation
    m0: Matrix
    m1: Matrix
    m2: Matrix


def lemma_generators(params: PSLParams) -> LemmaGenerators:
    """The three involutions built from (y, a, b), with their identities
    rechecked: each squares to 1, s0 and s2 commute, and the matrix
    product m0*m1 is exactly diag(-1/y, -y)."""
    p, y, a, b = params.p, params.y % params.p, params.a % params.p, params.b % params.p
    yinv = pow(y, -1, p)
    m0: Matrix = (0, 1, p - 1, 0)
    m1: Matrix = (0, y, (p - yinv) % p, 0)
    m2: Matrix = (a, b, b, (p - a) % p)
    if _mmul(p, m0, m1) != ((p - yinv) % p, 0, 0, (p - y) % p):
        raise CrossCheckFailed("m0*m1 is not diag(-1/y, -y)")
    s0, s1, s2 = (moebius_permutation(p, m) for m in (m0, m1, m2))
    for s in (s0, s1, s2):
        if s.order() != 2:
            raise CrossCheckFailed("lemma generator is not an involution")
    if s0 * s2 != s2 * s0:
        raise CrossCheckFailed("s0 and s2 do not commute")
    return LemmaGenerators(params, s0, s1, s2, m0, m1, m2)


@dataclass(frozen=True)
class GenerationResult:
    generates: bool
    order: int
    expected: int
    order_s0s1: int
    order_s1s2: int

    @property
    def hypothesis(self) -> bool:
        """Whether one of the two string orders reaches 6."""
        return self.order_s0s1 >= 6 or self.order_s1s2 >= 6

    def __bool__(self) -> bool:
        return self.generates


def generation_check(p: int, s0: Permutation, s1: Permutation, s2: Permutation) -> GenerationResult:
    """Do the three involutions generate all of PSL(2,p)?  Checked by
    brute enumeration; the string orders are reported alongside."""
    expected = psl_order(p)
    closure = enumerate_group([s0, s1, s2], cap=expected + 8)
    return GenerationResult(
        generates=closure.order == expected,
        order=closure.order,
        expected=expected,
        order_s0s1=(s0 * s1).order(),
        order_s1s2=(s1 * s2).order(),
    )


@dataclass(frozen=True)
class WeilReport:
    degree: int
    row: int
    conjugate_row: int
    order_p_classes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "row": self.row,
            "conjugate_row": self.conjugate_row,
            "order_p_classes": list(self.order_p_classes),
        }


def weil_constituent_check(p: int, table: CharacterTable | None = None,
                           cache_dir=None) -> WeilReport:
    """Locate the conjugate pair of degree (p-1)/2 characters that are
    non-real exactly on the order-p classes and take values in {-1,0,1}
    everywhere else.  Exactly one such pair must exist."""
    if p % 4 != 3:
        raise InvalidParams("requires p = 3 mod 4")
    if table is None:
        table = character_table(psl_group(p), cache_dir=cache_dir)
    cd = table.classdata
    p_classes = tuple(j for j in range(cd.k) if cd.orders[j] == p)
    if not p_classes:
        raise NoMatch(f"no order-{p} classes found")
    target = (p - 1) // 2
    hits = []
    for r in range(table.k):
        if table.degrees[r] != target:
            continue
        ok = True
        for j in range(cd.k):
            if cd.orders[j] == 1:
                continue
            v = table.values[r][j]
            if cd.orders[j] == p:
                if v.is_real():
                    ok = False
                    break
            else:
                if not v.is_rational() or v.as_fraction() not in (-1, 0, 1):
                    ok = False
                    break
        if ok:
            hits.append(r)
    if len(hits) != 2:
        raise NoMatch(f"expected one conjugate pair, found rows {hits}")
    r1, r2 = hits
    if table.conjugate_row_index(r1) != r2:
        raise NoMatch("matching rows are not complex conjugates of each other")
    return WeilReport(target, r1, r2, p_classes)


def multiplicative_order(y: int, p: int) -> int:
    y %= p
    if y == 0:
        raise InvalidParams("0 has no multiplicative order")
    k, acc = 1, y
    while acc != 1:
        acc = acc * y % p
        k += 1
    return k


def counterexample_pipeline(p: int, y: int, stabilizer: str = "s0,s1",
                            a: int | None = None, b: int | None = None,
                            cache_dir=None) -> dict:
    """Full run: build the involution triple, certify the string C-group,
    form the coset space of H = <s0,s1> (or <s1,s2>), and compare the
    multiplicity of the degree-(p-1)/2 pair against the lower bound
    ((p-1)/2 - (|H|-1)) / |H|."""
    if p % 4 != 3:
        raise InvalidParams("requires p = 3 mod 4")
    if stabilizer not in ("s0,s1", "s1,s2"):
        raise InvalidParams("stabilizer must be 's0,s1' or 's1,s2'")
    if stabilizer == "s0,s1" and multiplicative_order(y, p) != 7:
        raise InvalidParams("the <s0,s1> pipeline needs y of multiplicative order 7")
    if a is None or b is None:
        a, b = find_ab(p)
    params = PSLParams(p, y, a, b)
    lg = lemma_generators(params)

    G = psl_group(p)
    idx = [G.index_of(s) for s in (lg.s0, lg.s1, lg.s2)]

    gen = generation_check(p, lg.s0, lg.s1, lg.s2)
    if not gen:
        raise StringCFailed(f"triple generates order {gen.order}, expected {gen.expected}")
    screport = verify_string_cgroup(G, idx)
    if not screport.passed:
        raise StringCFailed(f"string C-group checks failed: {screport.to_dict()}")

    pair = (idx[0], idx[1]) if stabilizer == "s0,s1" else (idx[1], idx[2])
    H = subgroup_generated(G, list(pair))
    gs = coset_action(G, H)
    table = character_table(G, cache_dir=cache_dir)
    analysis = analyze_gset(gs, table)

    weil = weil_constituent_check(p, table=table)
    m_sigma = analysis.chi_mults[weil.row]
    if m_sigma != analysis.chi_mults[weil.conjugate_row]:
        raise CrossCheckFailed("conjugate characters have different multiplicities")

    bound = Fraction((p - 1) // 2 - (H.order - 1), H.order)
    if Fraction(m_sigma) < bound:
        raise CrossCheckFailed(f"multiplicity {m_sigma} violates lower bound {bound}")

    return {
        "p": p,
        "y": y % p,
        "a": a % p,
        "b": b % p,
        "stabilizer": stabilizer,
        "stabilizer_order": H.order,
        "points": gs.n_points,
        "schlafli": list(screport.schlafli),
        "string_c": screport.passed,
        "generates": gen.generates,
        "hypothesis_ge6": gen.hypothesis,
        "weil": {"degree": weil.degree, "multiplicity": m_sigma},
        "lower_bound": str(bound),
    }


def psl_search(max_p: int = 47, cache_dir=None) -> list[dict]:
    """Exploratory scan: for each odd prime p <= max_p, look for the
    smallest y making s0*s1 an element of order 3, and test whether the
    triple still generates.  Order 3 needs -y of order 3 or 6, so primes
    p = 2 mod 3 report no candidate."""
    rows = []
    for p in range(3, max_p + 1):
        if not _is_prime(p) or p == 2:
            continue
        try:
            a, b = find_ab(p)
        except InvalidParams:
            continue
        found = None
        for y in range(2, p - 1):
            try:
                params = PSLParams(p, y, a, b)
            except InvalidParams:
                continue
            lg = lemma_generators(params)
            if (lg.s0 * lg.s1).order() == 3:
                found = (y, lg)
                break
        if found is None:
            rows.append({"p": p, "order3_y": None})
            continue
        y, lg = found
        gen = generation_check(p, lg.s0, lg.s1, lg.s2)
        rows.append({
            "p": p,
            "order3_y": y,
            "a": a,
            "b": b,
            "order_s1s2": gen.order_s1s2,
            "generates": gen.generates,
        })
    return rows
