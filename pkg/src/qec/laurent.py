"""Laurent polynomials with integer coefficients, the ring Z[q, q^-1]."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An immutable element of Z[q, q^-1].

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with every
    coefficient nonzero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, (dict, Mapping)) else terms
        for exp, coef in items:
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise TypeError(f"exponent must be an int, got {exp!r}")
            if not isinstance(coef, int) or isinstance(coef, bool):
                raise TypeError(f"coefficient must be an int, got {coef!r}")
            acc[exp] = acc.get(exp, 0) + coef
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPoly:
        return cls({exp: coef})

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exp: int) -> int:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def is_unit(self) -> bool:
        """True iff this is +-q^k, the only units of Z[q, q^-1]."""
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        if k == 0:
            return self
        return _raw({e + k: c for e, c in self._terms})

    def evaluate(self, q):
        return sum(c * q**e for e, c in self._terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return _raw(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _raw({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) - c
        return _raw(acc)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return _raw(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, c), = self._terms
            return LaurentPoly({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Divide exactly; raise ``ArithmeticError`` if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        lead_e, lead_c = other._terms[-1]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        low = other.min_exp()
        # long division from the top; remainder support must shrink past self's bottom
        floor = self.min_exp() - low
        while rem:
            top = max(rem)
            e = top - lead_e
            if e < floor:
                raise ArithmeticError("not divisible")
            c, r = divmod(rem[top], lead_c)
            if r:
                raise ArithmeticError("not divisible")
            quot[e] = c
            for oe, oc in other._terms:
                k = oe + e
                v = rem.get(k, 0) - c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("LaurentPoly", self._terms))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                mono = str(abs(c))
            else:
                q = "q" if e == 1 else f"q^{e}"
                mono = q if abs(c) == 1 else f"{abs(c)}*{q}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in data)


def _raw(acc: dict[int, int]) -> LaurentPoly:
    # internal constructor for already validated integer data
    obj = object.__new__(LaurentPoly)
    obj._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
    obj._hash = None
    return obj


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentPoly({0: x}) if x else ZERO
    return NotImplemented


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def laurent_is_unit(a: LaurentPoly) -> bool:
    return a.is_unit()


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})
