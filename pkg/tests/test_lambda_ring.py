from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qec.characters import character_table, restrict_character
from qec.cyclotomic import Cyclotomic
from qec.groups import GroupHom, cyclic, identity_hom, inclusion, symmetric, trivial_group
from qec.laurent import LaurentPoly, Q
from qec.lambda_ring import (
    LambdaRingElement,
    PhaseMismatchError,
    from_isotypic,
    lambda_basis,
    lambda_conjugate_transport,
    lambda_mul,
    lambda_q_scale,
    lambda_rank,
    lambda_restrict,
)
from qec.perm import compose, parse_cycles

C2, C4, S3 = cyclic(2), cyclic(4), symmetric(3)
g2, g4 = C2.generators[0], C4.generators[0]
B2 = lambda_basis((C2, g2))
B4 = lambda_basis((C4, g4))
T01, T12 = parse_cycles("(0 1)", 3), parse_cycles("(1 2)", 3)


def test_basis_examples():
    E = trivial_group()
    assert lambda_basis((E, E.identity)).entries() == [(0, 0)]
    assert B2.entries() == [(0, 0), (1, Fraction(1, 2))]
    assert sorted(B4.phases) == [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    assert lambda_rank(lambda_basis((E, E.identity))) == 1
    assert lambda_rank(B2) == 2
    assert lambda_rank(lambda_basis((S3, S3.identity))) == 3


def test_phase_integrity():
    for b in (B2, B4, lambda_basis((S3.centralizer(T01), T01))):
        for i, c in b.entries():
            chi = b.table[i]
            assert chi(b.central_element) == chi.degree * Cyclotomic.root_of_unity(c.denominator, c.numerator)


def test_product_examples():
    x = B2.basis_element(1)
    assert lambda_mul(B2.one(), x) == x
    assert x * x == B2.one().q_scale(1)
    i = B4.phases.index(Fraction(1, 4))
    j = B4.phases.index(Fraction(3, 4))
    assert B4.basis_element(i) * B4.basis_element(j) == B4.one().q_scale(1)
    assert lambda_q_scale(B2.one(), 2) == LambdaRingElement(B2, {0: Q ** 2})
    assert lambda_q_scale(x, 0) == x


def test_product_exponents_brute_force():
    # the product coefficient of b_mu must be n_mu q^(c_i + c_j - c_mu) with n_mu from the character product
    for b in (B4, lambda_basis((S3.centralizer(T01), T01)), lambda_basis((S3, S3.identity))):
        for i in range(b.rank):
            for j in range(b.rank):
                prod = (b.basis_element(i) * b.basis_element(j)).coeffs
                mults = b.table.multiplicities(b.table[i] * b.table[j])
                for mu, n in enumerate(mults):
                    if n:
                        shift = b.phases[i] + b.phases[j] - b.phases[mu]
                        assert prod[mu] == LaurentPoly({int(shift): n})
                    else:
                        assert mu not in prod


BASES = [B2, B4, lambda_basis((S3, S3.identity)), lambda_basis((S3.centralizer(T01), T01)),
         lambda_basis((S3.centralizer(parse_cycles("(0 1 2)", 3)), parse_cycles("(0 1 2)", 3)))]
poly = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3).map(LaurentPoly)


@st.composite
def elements(draw, basis):
    return LambdaRingElement(basis, {i: draw(poly) for i in range(basis.rank)})


@st.composite
def triples(draw):
    b = draw(st.sampled_from(BASES))
    return draw(elements(b)), draw(elements(b)), draw(elements(b))


@given(triples(), st.integers(-3, 3))
def test_ring_axioms(t, k):
    x, y, z = t
    one = x.basis.one()
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert one * x == x
    assert lambda_q_scale(lambda_mul(x, y), k) == lambda_mul(lambda_q_scale(x, k), y)
    assert LambdaRingElement.from_json(x.basis, x.to_json()) == x


def test_restriction_examples():
    x = B2.basis_element(1)
    assert lambda_restrict(x, identity_hom(C2), g2) == x
    E = trivial_group(3)
    base = lambda_basis((S3, S3.identity))
    to_s3 = inclusion(E, S3)
    for i in range(3):
        r = lambda_restrict(base.basis_element(i), to_s3, E.identity)
        assert r.coeffs == {0: LaurentPoly.constant(base.table.degrees[i])}
    # e must be sent onto the source central element
    with pytest.raises(ValueError):
        lambda_restrict(B2.one(), GroupHom(trivial_group(), C2, {(0,): (0, 1)}), (0,))


def test_restriction_is_ring_map():
    K = S3.centralizer(T01)
    b = lambda_basis((K, T01))
    incl = inclusion(K, K)
    for i in range(b.rank):
        for j in range(b.rank):
            x, y = b.basis_element(i), b.basis_element(j)
            assert lambda_restrict(x * y, incl, T01) == lambda_restrict(x, incl, T01) * lambda_restrict(y, incl, T01)
    # Z/2 inside Z/4 with central element g^2 on both sides
    sq = compose(g4, g4)
    sub = C4.generated_subgroup([sq])
    src = lambda_basis((C4, sq))
    for i in range(src.rank):
        r = lambda_restrict(src.basis_element(i), inclusion(sub, C4), sq)
        (mu, c), = r.coeffs.items()
        assert c == LaurentPoly.constant(1) and r.basis.phases[mu] == src.phases[i]


def test_transport_examples():
    u = parse_cycles("(0 2)", 3)
    K, K2 = S3.centralizer(T01), S3.centralizer(T12)
    b = lambda_basis((K, T01))
    assert lambda_conjugate_transport(b.basis_element(1), S3.identity, K) == b.basis_element(1)
    images = [lambda_conjugate_transport(b.basis_element(i), u, K2) for i in range(b.rank)]
    assert sorted(img.basis.phases[next(iter(img.coeffs))] for img in images) == [0, Fraction(1, 2)]
    assert len({next(iter(img.coeffs)) for img in images}) == b.rank
    for i, img in enumerate(images):
        back = lambda_conjugate_transport(img, u, K)
        assert back == b.basis_element(i)


def test_from_isotypic():
    assert from_isotypic(B2, [(0, 1, Fraction(1))]) == B2.one().q_scale(1)
    assert from_isotypic(B2, [(1, 2, Fraction(-1, 2))]) == LambdaRingElement(B2, {1: LaurentPoly({-1: 2})})
    with pytest.raises(PhaseMismatchError):
        from_isotypic(B2, [(1, 1, Fraction(0))])
