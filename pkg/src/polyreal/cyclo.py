"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored in the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n),
reduced mod the n-th cyclotomic polynomial, over a single integer
denominator.  The stored order is always the minimal one: n is never
congruent to 2 mod 4, and no proper subfield Q(zeta_d), d | n, contains
the value.  Minimality makes the representation a normal form, so
equality and hashing of the (order, den, nums) triple are sound, and
den == 1 is exactly the algebraic-integer test (the power basis is an
integral basis of Z[zeta_n]).

Arithmetic between values of coprime-ish orders lifts to the lcm order;
lifts above ORDER_CAP raise OrderCapExceeded.  The cap applies to the
lcm of *minimal* orders, which stays small when inputs are kept in small
fields.  The raw reduction helpers (reduce_power_vector) accept larger
orders; they exist so that bulk integer computations can defer to one
polynomial reduction at the end.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParams, OrderCapExceeded

ORDER_CAP = 360

# internal reductions (single final reduction of a bulk integer sum) may
# use larger fields than public arithmetic
_REDUCE_CAP = 4000


def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidParams(f"phi undefined for {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _prime_factors(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    # den monic; exact division of integer polynomials
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, index = power."""
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_divide_exact(poly, list(cyclotomic_coeffs(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k-phi(n) gives the coordinates of z^k mod Phi_n, for
    k = phi(n) .. max(n-1, 2*phi(n)-2)."""
    ph = euler_phi(n)
    phi_poly = cyclotomic_coeffs(n)
    top = max(n - 1, 2 * ph - 2)
    rows = []
    # x^phi = -(lower coefficients)
    cur = [-phi_poly[j] for j in range(ph)]
    rows.append(tuple(cur))
    for _ in range(ph + 1, top + 1):
        nxt = [0] * ph
        for j in range(ph - 1):
            nxt[j + 1] = cur[j]
        lead = cur[ph - 1]
        if lead:
            first = rows[0]
            for j in range(ph):
                nxt[j] += lead * first[j]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def _reduce_fullvec(n: int, vec: list) -> list:
    """Reduce a coefficient vector in powers 0..len(vec)-1 of zeta_n."""
    if len(vec) > n:
        folded = [0] * n
        for k, c in enumerate(vec):
            folded[k % n] += c
        vec = folded
    ph = euler_phi(n)
    low = list(vec[:ph])
    while len(low) < ph:
        low.append(0)
    if len(vec) > ph:
        rows = reduction_rows(n)
        for k in range(ph, len(vec)):
            c = vec[k]
            if c == 0:
                continue
            row = rows[k - ph]
            for j in range(ph):
                low[j] += c * row[j]
    return low


def _content(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _gauss_solve(mat: list[list[Fraction]], rhs: list[Fraction]):
    """Solve square mat @ x = rhs exactly; None if singular."""
    k = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(k):
        piv = None
        for r in range(col, k):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


@lru_cache(maxsize=None)
def _descent_solver(n: int, d: int):
    """Pivot rows and inverse block for rewriting order-n vectors in the
    lifted basis of Q(zeta_d).  Returns (pivot_rows, inv) with inv a
    phi(d) x phi(d) Fraction matrix."""
    ph_n, ph_d = euler_phi(n), euler_phi(d)
    step = n // d
    cols = []
    for i in range(ph_d):
        vec = [0] * (step * i + 1)
        vec[step * i] = 1
        cols.append(_reduce_fullvec(n, vec))
    # choose phi(d) independent rows by elimination
    work = [[Fraction(cols[c][r]) for c in range(ph_d)] for r in range(ph_n)]
    pivots = []
    used = [False] * ph_d
    for r in range(ph_n):
        if len(pivots) == ph_d:
            break
        row = work[r]
        for c in range(ph_d):
            if not used[c] and row[c] != 0:
                pivots.append(r)
                used[c] = True
                f = row[c]
                for rr in range(r + 1, ph_n):
                    if work[rr][c] != 0:
                        g = work[rr][c] / f
                        work[rr] = [a - g * b for a, b in zip(work[rr], row)]
                break
    if len(pivots) != ph_d:
        raise ArithmeticError("lifted basis not independent")
    block = [[Fraction(cols[c][r]) for c in range(ph_d)] for r in pivots]
    inv = []
    for i in range(ph_d):
        e = [Fraction(1) if j == i else Fraction(0) for j in range(ph_d)]
        sol = _gauss_solve(block, e)
        inv.append(sol)
    # inv currently holds columns of block^-1; transpose
    invmat = tuple(tuple(inv[j][i] for j in range(ph_d)) for i in range(ph_d))
    lift_cols = tuple(tuple(c) for c in cols)
    return tuple(pivots), invmat, lift_cols


class Cyclo:
    """Element of a cyclotomic field in minimal-order normal form."""

    __slots__ = ("order", "den", "nums")

    def __init__(self, order: int, den: int, nums: tuple[int, ...],
                 _normalized: bool = False):
        if not _normalized:
            raise InvalidParams("construct Cyclo via its classmethods")
        self.order = order
        self.den = den
        self.nums = nums

    # construction -----------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyclo":
        q = Fraction(q)
        return Cyclo(1, q.denominator, (q.numerator,), _normalized=True)

    @staticmethod
    def zero() -> "Cyclo":
        return _ZERO

    @staticmethod
    def one() -> "Cyclo":
        return _ONE

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclo":
        if n < 1:
            raise InvalidParams("zeta order must be positive")
        k %= n
        vec = [0] * (k + 1)
        vec[k] = 1
        return _make(n, 1, _reduce_fullvec(n, vec))

    @staticmethod
    def sqrt5() -> "Cyclo":
        return Cyclo.zeta(5, 1) - Cyclo.zeta(5, 2) - Cyclo.zeta(5, 3) + Cyclo.zeta(5, 4)

    @staticmethod
    def from_power_dict(order: int, powers: dict, den: int = 1) -> "Cyclo":
        """Value sum powers[k] * zeta_order^k / den, exponents arbitrary ints."""
        vec = [0] * order
        for k, c in powers.items():
            vec[k % order] += c
        return _make(order, den, _reduce_fullvec(order, vec))

    # serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(Fraction(c, self.den)) for c in self.nums],
        }

    @staticmethod
    def from_json(obj: dict) -> "Cyclo":
        order = int(obj["order"])
        fracs = [Fraction(s) for s in obj["coeffs"]]
        if len(fracs) != euler_phi(order):
            raise InvalidParams("coefficient list has wrong length")
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums = [int(f * den) for f in fracs]
        return _make(order, den, nums)

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.order == 1 and self.nums[0] == 0

    def is_rational(self) -> bool:
        return self.order == 1

    def as_fraction(self) -> Fraction:
        if self.order != 1:
            raise InvalidParams(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def is_real(self) -> bool:
        return self.conj() == self

    def is_algebraic_integer(self) -> bool:
        return self.den == 1

    # involutions and Galois maps ---------------------------------------

    def galois(self, t: int) -> "Cyclo":
        """Apply the automorphism zeta -> zeta^t; t must be a unit mod order."""
        n = self.order
        if n == 1:
            return self
        if math.gcd(t, n) != 1:
            raise InvalidParams(f"{t} is not a unit mod {n}")
        t %= n
        vec = [0] * n
        for k, c in enumerate(self.nums):
            if c:
                vec[(k * t) % n] += c
        return _make(n, self.den, _reduce_fullvec(n, vec))

    def conj(self) -> "Cyclo":
        if self.order == 1:
            return self
        return self.galois(self.order - 1)

    def lift_vector(self, m: int) -> list[int]:
        """Integer coordinates of den*self in the power basis at order m
        (requires order | m; no minimization, helper for bulk sums)."""
        n = self.order
        if m % n != 0:
            raise InvalidParams("lift target must be a multiple of the order")
        step = m // n
        vec = [0] * ((len(self.nums) - 1) * step + 1)
        for k, c in enumerate(self.nums):
            if c:
                vec[k * step] += c
        return _reduce_fullvec(m, vec)

    # arithmetic -------------------------------------------------------

    def _common(self, other: "Cyclo") -> int:
        n = math.lcm(self.order, other.order)
        if n > ORDER_CAP and n != self.order and n != other.order:
            raise OrderCapExceeded(
                f"order {n} from mixing Q(zeta_{self.order}) and Q(zeta_{other.order})")
        if n > _REDUCE_CAP:
            raise OrderCapExceeded(f"order {n} beyond reduction support")
        return n

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        n = self._common(other)
        a = self.lift_vector(n) if self.order != n else list(self.nums)
        b = other.lift_vector(n) if other.order != n else list(other.nums)
        da, db = self.den, other.den
        d = math.lcm(da, db)
        fa, fb = d // da, d // db
        vec = [fa * x + fb * y for x, y in zip(a, b)]
        return _make(n, d, vec)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Cyclo(self.order, self.den, tuple(-c for c in self.nums),
                     _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1:
            if self.nums[0] == 0:
                return _ZERO
            return _scale(other, Fraction(self.nums[0], self.den))
        if other.order == 1:
            if other.nums[0] == 0:
                return _ZERO
            return _scale(self, Fraction(other.nums[0], other.den))
        n = self._common(other)
        a = self.lift_vector(n) if self.order != n else self.nums
        b = other.lift_vector(n) if other.order != n else other.nums
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return _make(n, self.den * other.den, _reduce_fullvec(n, conv))

    def __rmul__(self, other):
        return self.__mul__(other)

    def inv(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        if self.order == 1:
            return Cyclo.rational(Fraction(self.den, self.nums[0]))
        n, ph = self.order, len(self.nums)
        cols = []
        for j in range(ph):
            vec = [0] * (j + len(self.nums))
            for k, c in enumerate(self.nums):
                vec[k + j] += c
            cols.append(_reduce_fullvec(n, vec))
        mat = [[Fraction(cols[c][r]) for c in range(ph)] for r in range(ph)]
        rhs = [Fraction(1)] + [Fraction(0)] * (ph - 1)
        sol = _gauss_solve(mat, rhs)
        if sol is None:
            raise ZeroDivisionError("singular multiplication matrix")
        den = math.lcm(*(f.denominator for f in sol))
        nums = [int(f * den) for f in sol]
        return _make(n, den, nums) * Fraction(self.den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.order == 1:
            if other.nums[0] == 0:
                raise ZeroDivisionError("division by zero")
            return _scale(self, Fraction(other.den, other.nums[0]))
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other).__truediv__(self)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison, hashing, display --------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.order == other.order and self.den == other.den
                and self.nums == other.nums)

    def __hash__(self):
        return hash((self.order, self.den, self.nums))

    def sort_key(self):
        return (self.order, self.nums, self.den)

    def to_float(self) -> complex:
        """Float approximation, for display and numeric export only."""
        n = self.order
        total = 0j
        for k, c in enumerate(self.nums):
            if c:
                total += c * complex(math.cos(2 * math.pi * k / n),
                                     math.sin(2 * math.pi * k / n))
        return total / self.den

    def __repr__(self):
        return f"Cyclo({self})"

    def __str__(self):
        if self.order == 1:
            return str(Fraction(self.nums[0], self.den))
        terms = []
        for k, c in enumerate(self.nums):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mon = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                if c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append(f"-{mon}")
                else:
                    terms.append(f"{c}*{mon}")
        body = " + ".join(terms).replace("+ -", "- ")
        if self.den == 1:
            return body
        return f"({body})/{self.den}"


def _coerce(x):
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclo.rational(x)
    return NotImplemented


def _scale(x: Cyclo, f: Fraction) -> Cyclo:
    if f == 0:
        return _ZERO
    num, den = f.numerator, f.denominator
    vec = [num * c for c in x.nums]
    return _make(x.order, x.den * den, vec)


def _make(order: int, den: int, nums: list) -> Cyclo:
    """Normalize (order, den, nums) to minimal-order canonical form."""
    if den < 0:
        den = -den
        nums = [-c for c in nums]
    if all(c == 0 for c in nums):
        return Cyclo(1, 1, (0,), _normalized=True) if _ZERO is None else _ZERO
    g = math.gcd(den, _content(nums))
    if g > 1:
        den //= g
        nums = [c // g for c in nums]
    # already rational
    if all(c == 0 for c in nums[1:]):
        return Cyclo(1, den, (nums[0],), _normalized=True)
    # strip the redundant factor 2 when order is 2 mod 4
    if order % 4 == 2:
        m = order // 2
        half = (m + 1) // 2
        vec = [0] * m
        for k, c in enumerate(nums):
            if c:
                e = (k * half) % m
                vec[e] += -c if k % 2 else c
        return _make(m, den, _reduce_fullvec(m, vec))
    # prime descents while a proper subfield contains the value
    for p in _prime_factors(order):
        d = order // p
        if d == 1:
            continue
        if not _fixed_by_all(order, nums, d):
            continue
        pivots, inv, lift_cols = _descent_solver(order, d)
        ph_d = len(inv)
        sub = [Fraction(nums[r]) for r in pivots]
        coords = [sum(inv[i][j] * sub[j] for j in range(ph_d)) for i in range(ph_d)]
        # confirm the rewrite reproduces every coordinate
        ok = True
        ph_n = len(nums)
        for r in range(ph_n):
            acc = Fraction(0)
            for i in range(ph_d):
                if coords[i]:
                    acc += coords[i] * lift_cols[i][r]
            if acc != nums[r]:
                ok = False
                break
        if not ok:
            continue
        dd = math.lcm(*(f.denominator for f in coords))
        return _make(d, den * dd, [int(f * dd) for f in coords])
    return Cyclo(order, den, tuple(nums), _normalized=True)


def _fixed_by_all(n: int, nums: list, d: int) -> bool:
    """True if the order-n vector is fixed by Gal(Q(zeta_n)/Q(zeta_d))."""
    for j in range(1 + d, n, d):
        if math.gcd(j, n) != 1:
            continue
        vec = [0] * n
        for k, c in enumerate(nums):
            if c:
                vec[(k * j) % n] += c
        if _reduce_fullvec(n, vec) != list(nums):
            return False
    return True


_ZERO = None
_ZERO = Cyclo(1, 1, (0,), _normalized=True)
_ONE = Cyclo(1, 1, (1,), _normalized=True)


def cyclo_arith(x: Cyclo, y, op: str) -> Cyclo:
    """Dispatch arithmetic by name: add, mul, neg, inv."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    raise InvalidParams(f"unknown op {op!r}")


def is_real(x: Cyclo) -> bool:
    return x.is_real()


def is_rational(x: Cyclo) -> bool:
    return x.is_rational()


def to_float(x: Cyclo) -> complex:
    return x.to_float()


def is_algebraic_integer(x: Cyclo) -> bool:
    return x.is_algebraic_integer()


def reduce_power_vector(order: int, vec, den: int = 1) -> Cyclo:
    """Collapse an integer coefficient vector over powers of zeta_order
    into a normal-form value.  Used after bulk integer accumulation."""
    if order > _REDUCE_CAP:
        raise OrderCapExceeded(f"order {order} beyond reduction support")
    return _make(order, den, _reduce_fullvec(order, list(vec)))
