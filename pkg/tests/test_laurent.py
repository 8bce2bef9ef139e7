import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qec.laurent import ONE, Q, ZERO, LaurentPoly, laurent_is_unit, laurent_mul

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


def test_examples():
    q = LaurentPoly.monomial(1)
    assert laurent_mul(q, LaurentPoly.monomial(-1)) == ONE
    assert laurent_mul(1 + q, 1 - q) == LaurentPoly({0: 1, 2: -1})
    assert laurent_is_unit(LaurentPoly({3: -1}))
    assert not laurent_is_unit(1 + q)
    assert not laurent_is_unit(ZERO)


def test_no_fractional_exponents():
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})


def test_zero_coefficients_dropped():
    p = LaurentPoly({0: 1, 2: 0}) + LaurentPoly({0: -1})
    assert p.is_zero() and p.terms == ()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_support_in_sumset(a, b):
    supp = {e1 + e2 for e1, _ in a.terms for e2, _ in b.terms}
    assert {e for e, _ in (a * b).terms} <= supp


@given(polys, polys)
def test_exact_div_inverts_mul(a, b):
    if not b.is_zero():
        assert (a * b).exact_div(b) == a


def test_exact_div_rejects():
    with pytest.raises(ArithmeticError):
        (1 + Q).exact_div(LaurentPoly({0: 2}))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


@given(polys)
def test_unit_iff_invertible(a):
    # brute-force search for an inverse among +-q^k on a small window
    candidates = [LaurentPoly({k: s}) for k in range(-8, 9) for s in (1, -1)]
    has_inverse = any(a * b == ONE for b in candidates)
    assert laurent_is_unit(a) == has_inverse


@given(polys)
def test_json_roundtrip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(polys, st.integers(-3, 3))
def test_shift_and_powers(a, k):
    assert a.shift(k) == a * LaurentPoly.monomial(k)
    assert Q**3 == Q * Q * Q
    assert (Q**-2) * Q**2 == ONE


def test_negative_power_of_nonunit():
    with pytest.raises(ValueError):
        (1 + Q) ** -1


def test_str():
    assert str(LaurentPoly({2: 1, 0: -1})) in ("q^2 - 1", "-1 + q^2")
    assert list(itertools.islice(LaurentPoly({1: 2, -1: 3}).terms, 2)) == [(-1, 3), (1, 2)]
