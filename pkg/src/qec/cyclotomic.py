"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored at an order ``n`` as rational coefficients over the power
basis ``1, zeta_n, ..., zeta_n^(phi(n)-1)``, reduced modulo the cyclotomic
polynomial Phi_n. Binary operations embed both operands into Q(zeta_lcm).
The order is never shrunk implicitly; call :meth:`Cyclotomic.normalize`.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


class NotRationalError(ValueError):
    """Raised by :meth:`Cyclotomic.as_rational` for irrational values."""


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (coefficients low -> high), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_int(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds zeta_n^k reduced to the power basis, for 0 <= k < n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by zeta: shift, then substitute zeta^deg = -sum phi_i zeta^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


@lru_cache(maxsize=None)
def _sparse_rows(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    return tuple(tuple((i, r) for i, r in enumerate(row) if r) for row in _power_table(n))


def _reduce_int(n: int, items) -> list[int]:
    # items: (exponent, integer coefficient) pairs, exponents taken mod n
    rows = _sparse_rows(n)
    out = [0] * euler_phi(n)
    for k, c in items:
        if c:
            for i, r in rows[k % n]:
                out[i] += c * r
    return out


def _reduce(n: int, coeffs: dict[int, Fraction] | list) -> tuple[Fraction, ...]:
    # coeffs: exponent -> coefficient, exponents taken mod n
    items = list(coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs))
    den = math.lcm(*(Fraction(c).denominator for _, c in items)) if items else 1
    nums = _reduce_int(n, ((k, int(Fraction(c) * den)) for k, c in items))
    return tuple(Fraction(x, den) for x in nums)


def _make(order: int, num, den: int) -> Cyclotomic:
    # num must already have length phi(order); den > 0
    g = math.gcd(den, *num)
    if g != 1:
        num = tuple(x // g for x in num)
        den //= g
    obj = object.__new__(Cyclotomic)
    obj.order = order
    obj._num = tuple(num)
    obj._den = den
    obj._norm = None
    return obj


class Cyclotomic:
    """Immutable exact element of Q(zeta_n).

    Stored as integer numerators over the power basis with one positive
    common denominator, kept in lowest terms so equal values at the same
    order have equal representations.
    """

    __slots__ = ("order", "_num", "_den", "_norm")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in fr)) if fr else 1
        nums = [int(c * den) for c in fr]
        if len(nums) != euler_phi(order):
            nums = _reduce_int(order, enumerate(nums))
        made = _make(order, nums, den)
        self.order = order
        self._num = made._num
        self._den = made._den
        self._norm = None

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    # constructors

    @classmethod
    def rational(cls, r) -> Cyclotomic:
        r = Fraction(r)
        return _make(1, (r.numerator,), r.denominator)

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> Cyclotomic:
        return _make(n, _power_table(n)[k % n], 1)

    @classmethod
    def from_exponents(cls, n: int, weights: dict[int, Fraction | int]) -> Cyclotomic:
        """Build ``sum_k weights[k] * zeta_n^k``."""
        return cls(n, _reduce(n, {k: Fraction(v) for k, v in weights.items()}))

    # conversions

    def embed(self, m: int) -> Cyclotomic:
        """Same value, represented at order ``m`` (a multiple of this order)."""
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {m}")
        step = m // self.order
        nums = _reduce_int(m, ((i * step, c) for i, c in enumerate(self._num)))
        return _make(m, nums, self._den)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def as_int(self) -> int:
        r = self.as_rational()
        if r.denominator != 1:
            raise NotRationalError(f"{self} is not an integer")
        return r.numerator

    def __complex__(self) -> complex:
        z = cmath.exp(2j * math.pi / self.order)
        return sum(x * z**i for i, x in enumerate(self._num)) / self._den

    # arithmetic

    def _align(self, other) -> tuple[Cyclotomic, Cyclotomic]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        if a._den == b._den:
            return _make(a.order, [x + y for x, y in zip(a._num, b._num)], a._den)
        da, db = a._den, b._den
        return _make(a.order, [x * db + y * da for x, y in zip(a._num, b._num)], da * db)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return _make(self.order, [-x for x in self._num], self._den)

    def __sub__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return _make(
                self.order,
                [x * other.numerator for x in self._num],
                self._den * other.denominator,
            )
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        acc = [0] * (2 * len(a._num) - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        acc[i + j] += x * y
        return _make(a.order, _reduce_int(a.order, enumerate(acc)), a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, a: int) -> Cyclotomic:
        """Apply the automorphism zeta_n -> zeta_n^a (gcd(a, n) == 1)."""
        n = self.order
        if math.gcd(a, n) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        nums = _reduce_int(n, (((i * a) % n, c) for i, c in enumerate(self._num)))
        return _make(n, nums, self._den)

    def conj(self) -> Cyclotomic:
        return self.galois(self.order - 1) if self.order > 1 else self

    def norm_to_q(self) -> Fraction:
        """Product of all Galois conjugates; nonzero iff the value is nonzero."""
        n = self.order
        prod = Cyclotomic.rational(1)
        for a in range(1, n + 1):
            if math.gcd(a, n) == 1:
                prod = prod * self.galois(a)
        return prod.as_rational()

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.order
        others = Cyclotomic.rational(1)
        for a in range(2, n + 1):
            if math.gcd(a, n) == 1:
                others = others * self.galois(a)
        norm = (self * others).as_rational()
        return others * (1 / norm)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        n, c = self.normalize_key()
        return hash((n, c))

    def normalize_key(self) -> tuple[int, tuple[Fraction, ...]]:
        if self._norm is None:
            small = self.normalize()
            self._norm = (small.order, small.coeffs)
        return self._norm

    def normalize(self) -> Cyclotomic:
        """Represent the value at the smallest order whose field contains it."""
        n = self.order
        for d in sorted(x for x in range(1, n + 1) if n % x == 0):
            found = _express_in(self, d)
            if found is not None:
                return found
        return self

    def sort_key(self) -> tuple:
        return (self.order, self.coeffs)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _express_in(x: Cyclotomic, d: int) -> Cyclotomic | None:
    """Return x as an element of order ``d`` if x lies in Q(zeta_d), else None."""
    n = x.order
    if d == n:
        return x
    # x in Q(zeta_d) iff it is fixed by every automorphism a = 1 mod d
    for a in range(1, n):
        if a % d == 1 % d and math.gcd(a, n) == 1 and x.galois(a) != x:
            return None
    # solve for coefficients over the order-d power basis by elimination
    deg_d = euler_phi(d)
    step = n // d
    basis = [Cyclotomic.root_of_unity(n, i * step).coeffs for i in range(deg_d)]
    sol = _solve_columns(basis, list(x.coeffs))
    if sol is None:
        return None
    return Cyclotomic(d, sol)


def _solve_columns(columns: list[tuple[Fraction, ...]], target: list[Fraction]):
    # solve sum_j s_j * columns[j] = target; columns are linearly independent
    rows = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(rows)]
    piv_row = 0
    pivots = []
    for col in range(k):
        r = next((i for i in range(piv_row, rows) if aug[i][col]), None)
        if r is None:
            continue
        aug[piv_row], aug[r] = aug[r], aug[piv_row]
        p = aug[piv_row][col]
        aug[piv_row] = [v / p for v in aug[piv_row]]
        for i in range(rows):
            if i != piv_row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[piv_row])]
        pivots.append(col)
        piv_row += 1
    if any(aug[i][k] for i in range(piv_row, rows)):
        return None
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = aug[i][k]
    return tuple(sol)


def cyc_root_of_unity(n: int, k: int) -> Cyclotomic:
    return Cyclotomic.root_of_unity(n, k)


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def cyc_conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def cyc_as_rational(a: Cyclotomic) -> Fraction:
    return a.as_rational()


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
