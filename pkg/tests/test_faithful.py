import cmath
from fractions import Fraction
from math import lcm

import pytest

from qec.characters import character_table
from qec.faithful import (
    GRep,
    LambdaKernel,
    LambdaRepDescriptor,
    NotRealError,
    compat_checks,
    compat_direct_sum,
    compat_pullback,
    fixed_part,
    is_faithful,
    isotypify,
    lambda_fs_indicator,
    lambda_kernel,
    real_class_count,
    real_lambda_basis,
    v_sigma,
    v_sigma_real,
    v_sigma_variants,
)
from qec.groups import (
    LambdaGroupDescriptor,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    inclusion,
    make_hom,
    quaternion8,
    symmetric,
    trivial_group,
)
from qec.gsets import FiniteGSet
from qec.laurent import LaurentPoly
from qec.lambda_ring import LambdaRingElement, lambda_basis
from qec.perm import compose, inverse, parse_cycles

F = Fraction
C2, C3, C4, S3 = cyclic(2), cyclic(3), cyclic(4), symmetric(3)
g2 = C2.generators[0]
T = parse_cycles("(0 1)", 3)
GROUPS = [cyclic(1), C2, C3, C4, cyclic(6), S3, dihedral(4), quaternion8(), alternating(4)]


def kernel_oracle(d: LambdaRepDescriptor):
    """[a, t] on a fine t-grid acting as the identity, tested numerically on characters."""
    K = d.group
    table = d.table
    M = K.order * lcm(*(max(abs(e.numerator), 1) * e.denominator for _, _, e in d.components))
    out = []
    for a in K.elements:
        ts = []
        for k in range(M):
            t = F(k, M)
            if all(
                abs(complex(table[i](a)) * cmath.exp(2j * cmath.pi * float(e * t)) - table.degrees[i]) < 1e-9
                for i, _, e in d.components
            ):
                ts.append(t)
        if ts:
            out.append((a, LambdaKernel.ALL if len(ts) == M and all(e == 0 for _, _, e in d.components) else tuple(ts)))
    return out


def test_isotypify_examples():
    reg = GRep.regular(S3)
    assert isotypify(GRep.trivial(S3), T) == [1, 0]
    assert isotypify(reg, T) == [3, 3]
    assert isotypify(GRep.irreducible(S3, 2), S3.identity) == [0, 0, 1]
    for G in GROUPS:
        for g in G.class_reps:
            mults = isotypify(reg := GRep.regular(G), g)
            degs = character_table(G.centralizer(g)).degrees
            assert sum(n * d for n, d in zip(mults, degs)) == reg.degree


def test_v_sigma_examples():
    for G in GROUPS:
        for s in G.class_reps:
            d = v_sigma(GRep.trivial(G), s)
            assert d.components == ((0, 1, F(1)),)
            assert d.to_ring_element() == d.to_ring_element().basis.one().q_scale(1)
    d = v_sigma(GRep.regular(C2), g2)
    assert d.components == ((0, 1, F(1)), (1, 1, F(1, 2)))
    d = v_sigma(GRep.regular(S3), S3.identity)
    assert all(e == 1 for _, _, e in d.components)
    assert d.to_ring_element() == LambdaRingElement(d.to_ring_element().basis, {0: LaurentPoly({1: 1}), 1: LaurentPoly({1: 1}), 2: LaurentPoly({1: 2})})


def test_variant_examples():
    reg, sign = GRep.regular(C2), GRep.irreducible(C2, 1)
    assert v_sigma_variants(reg, g2, "iii").components == ((0, 1, F(0)), (0, 1, F(1)), (1, 1, F(1, 2)))
    assert v_sigma_variants(sign, g2, "ii").components == ((1, 1, F(-1, 2)), (1, 1, F(1, 2)))
    # sign (.) q^(1/2) generates the dual of Lambda_{Z/2}(g), so it is faithful
    assert is_faithful(v_sigma_variants(sign, g2, "i"))
    # the S3 sign rep has no trivial summand: A3 x {0} and transpositions at t = 1/2 act trivially
    d = v_sigma_variants(GRep.irreducible(S3, 1), S3.identity, "i")
    assert not is_faithful(d)
    assert {ts for _, ts in lambda_kernel(d).entries} == {(F(0),), (F(1, 2),)}
    assert len(lambda_kernel(d).entries) == 6
    assert fixed_part(sign, g2).components == ()
    with pytest.raises(ValueError):
        v_sigma_variants(reg, g2, "iv")


def test_real_examples():
    E = trivial_group()
    d = v_sigma_real(GRep.trivial(E), E.identity)
    assert [i for i, _, _ in d.components] == [0, 0] and d.degree == 2
    d = v_sigma_real(GRep.irreducible(C2, 1), g2)
    assert d.components == ((1, 1, F(-1, 2)), (1, 1, F(1, 2)))
    for G in GROUPS:
        V = GRep.regular(G)
        for s in G.class_reps:
            assert v_sigma_real(V, s).degree == 2 * V.degree
            assert v_sigma_variants(V, s, "ii").degree == 2 * V.degree
    with pytest.raises(NotRealError):
        v_sigma_real(GRep.irreducible(C3, 1), C3.identity)


def test_kernel_examples():
    desc = LambdaGroupDescriptor(C2, g2)
    k = lambda_kernel(LambdaRepDescriptor(desc, ((0, 1, F(0)),)))
    assert k.is_everything() and not k.is_trivial()
    k = lambda_kernel(LambdaRepDescriptor(desc, ((0, 1, F(1)),)))
    assert k.entries == [(C2.identity, (F(0),)), (g2, (F(0),))]
    assert is_faithful(v_sigma_variants(GRep.regular(C2), g2, "iii"))
    with pytest.raises(ValueError):
        LambdaRepDescriptor(desc, ((1, 1, F(0)),))
    with pytest.raises(ValueError):
        lambda_kernel(LambdaRepDescriptor(desc, ()))


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.label())
def test_kernel_against_oracle(G):
    reps = [GRep.regular(G), GRep.trivial(G)] + [GRep.irreducible(G, i) for i in range(len(character_table(G)))]
    for s in G.class_reps:
        for V in reps[:4]:
            for variant in ("i", "ii", "iii"):
                d = v_sigma_variants(V, s, variant)
                if d.components:
                    assert lambda_kernel(d).entries == kernel_oracle(d)
        for variant in ("i", "ii", "iii", "real"):
            assert is_faithful(v_sigma_variants(GRep.regular(G), s, variant))
        assert is_faithful(v_sigma_variants(GRep.regular(G) + GRep.trivial(G), s, "i"))
        if G.order > 1:
            assert not is_faithful(v_sigma_variants(GRep.trivial(G), s, "iii"))


def test_faithful_real_permutation_rep():
    V = GRep.permutation(FiniteGSet.natural(S3))
    assert V.is_faithful()
    for s in S3.class_reps:
        assert is_faithful(v_sigma_real(V, s))


def test_compat_examples():
    V4, _, _, _, _ = direct_product(C2, C2)
    V, W = GRep.regular(C2), GRep.irreducible(C2, 1)
    for s in C2.elements:
        for t in C2.elements:
            for r in compat_checks(V, W, s, t):
                assert r.passed, r.to_dict()
    phi = make_hom(C2, S3, [T])
    for V in (GRep.regular(S3), GRep.irreducible(S3, 2), GRep.permutation(FiniteGSet.natural(S3))):
        for tau in C2.elements:
            for variant in ("i", "ii", "iii"):
                assert compat_pullback(V, phi, tau, variant).passed
    # trivial H: the sum with the trivial representation of C1
    E = cyclic(1)
    for s in S3.class_reps:
        assert compat_direct_sum(GRep.regular(S3), GRep.trivial(E), s, E.identity).passed
    H = S3.generated_subgroup([parse_cycles("(0 1 2)", 3)])
    for tau in H.elements:
        assert compat_pullback(GRep.regular(S3), inclusion(H, S3), tau, "iii").passed


def test_compat_detects_mismatch():
    r = compat_direct_sum(GRep.regular(C2), GRep.trivial(C2), g2, g2)
    assert r.passed
    bad = type(r)(r.name, r.lhs, r.rhs + r.rhs)
    assert not bad.passed and "lhs" in bad.to_dict()


def quadrature_indicator(table, i, c, steps=4000):
    """(1/|K|) sum_a integral chi(a^2) exp(4 pi i c t) dt by the midpoint rule."""
    K = table.group
    total = 0
    for a in K.elements:
        total += complex(table[i](compose(a, a)))
    rot = sum(cmath.exp(4j * cmath.pi * float(c) * (k + 0.5) / steps) for k in range(steps)) / steps
    return total / K.order * rot


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.label())
def test_lambda_indicator_against_quadrature(G):
    for s in G.class_reps:
        K = G.centralizer(s)
        b = lambda_basis((K, s))
        for i, c in b.entries():
            num = quadrature_indicator(b.table, i, c)
            assert abs(num - lambda_fs_indicator(b.table, i, c)) < 1e-2


def real_class_oracle(K):
    classes = [frozenset(c) for c in K.conjugacy_classes]
    return sum(1 for c in classes if frozenset(inverse(x) for x in c) == c)


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.label())
def test_real_basis_count(G):
    for s in G.class_reps:
        K = G.centralizer(s)
        basis = real_lambda_basis(LambdaGroupDescriptor(K, s))
        assert real_class_count(K) == real_class_oracle(K)
        assert len(basis) == (len(K.conjugacy_classes) + real_class_oracle(K)) // 2
        for el in basis:
            assert el.rep.degree == el.real_dimension
            assert el.rep == el.rep.dual()
