import pytest

from qec.groups import (
    CapExceededError,
    FiniteGroup,
    LambdaGroupDescriptor,
    NotAHomomorphismError,
    alternating,
    conjugacy_classes,
    centralizer,
    cyclic,
    dihedral,
    direct_product,
    enumerate_elements,
    identity_hom,
    make_hom,
    quaternion8,
    quotient_hom,
    symmetric,
    trivial_group,
)
from qec.perm import compose, cycles, format_perm, inverse, order, parse_cycles

CORPUS = [trivial_group(), cyclic(4), cyclic(6), symmetric(3), symmetric(4), alternating(4), dihedral(4), dihedral(6), quaternion8()]


def brute_classes(G):
    out = set()
    for g in G.elements:
        out.add(frozenset(compose(compose(u, g), inverse(u)) for u in G.elements))
    return out


def test_perm_basics():
    p = parse_cycles("(0 1 2)", 4)
    assert p == (1, 2, 0, 3)
    assert format_perm(p) == "(0 1 2)"
    assert format_perm((0, 1)) == "()"
    assert order(parse_cycles("(0 1)(2 3 4)", 5)) == 6
    assert cycles(parse_cycles("(0 1)(2 3)", 4)) == [[0, 1], [2, 3]]
    # compose applies the right factor first
    a, b = parse_cycles("(0 1)", 3), parse_cycles("(1 2)", 3)
    assert compose(a, b)[1] == a[b[1]]
    for bad in ("(0 0)", "(0 1)(1 2)", "(0 3)", "0 1"):
        with pytest.raises(ValueError):
            parse_cycles(bad, 3)


def test_enumeration_examples():
    assert enumerate_elements(3, []).order == 1
    assert enumerate_elements(3, [parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)]).order == 6
    assert enumerate_elements(4, [parse_cycles("(0 1 2 3)", 4)]).order == 4
    with pytest.raises(CapExceededError):
        FiniteGroup(5, symmetric(5).generators, cap=100)


@pytest.mark.parametrize("G", CORPUS, ids=lambda G: G.label())
def test_closure_and_identity(G):
    els = set(G.elements)
    assert G.identity == G.elements[0]
    for a in G.elements:
        assert inverse(a) in els
        for b in G.elements:
            assert compose(a, b) in els


@pytest.mark.parametrize("G", CORPUS, ids=lambda G: G.label())
def test_classes_match_brute_force(G):
    classes = conjugacy_classes(G)
    assert {frozenset(c) for c in classes} == brute_classes(G)
    assert sum(len(c) for c in classes) == G.order
    for c in classes:
        assert c[0] == min(c)
        assert len(c) * centralizer(G, c[0]).order == G.order


@pytest.mark.parametrize("G", CORPUS, ids=lambda G: G.label())
def test_centralizers_and_lagrange(G):
    for g in G.elements:
        C = G.centralizer(g)
        assert set(C.elements) == {h for h in G.elements if compose(h, g) == compose(g, h)}
        assert g in C
    for H in G.all_subgroups():
        assert G.order % H.order == 0


def test_named_examples():
    S3 = symmetric(3)
    assert S3.class_sizes == (1, 3, 2)
    assert len(conjugacy_classes(trivial_group())) == 1
    assert len(conjugacy_classes(cyclic(4))) == 4
    assert centralizer(S3, parse_cycles("(0 1)", 3)).order == 2
    assert centralizer(symmetric(4), parse_cycles("(0 1)(2 3)", 4)).order == 8
    assert len(symmetric(4).all_subgroups()) == 30
    assert len(symmetric(4).subgroups_up_to_conjugacy()) == 11
    assert dihedral(4).order == 8 and dihedral(6).order == 12
    assert quaternion8().center().order == 2
    assert not quaternion8().is_abelian() and cyclic(5).is_abelian()


def test_homomorphisms():
    S3, C2, C4, S4 = symmetric(3), cyclic(2), cyclic(4), symmetric(4)
    assert make_hom(S3, S3, S3.generators) == identity_hom(S3)
    phi = make_hom(C2, S3, [parse_cycles("(0 1)", 3)])
    assert phi.is_injective() and phi.image().order == 2
    q = make_hom(C4, C2, C2.generators)
    assert q.kernel().order == 2
    with pytest.raises(NotAHomomorphismError):
        make_hom(C2, S4, [parse_cycles("(0 1 2 3)", 4)])


def test_quotients():
    S4 = symmetric(4)
    V4 = next(N for N in S4.subgroups_up_to_conjugacy() if N.order == 4 and S4.is_normal(N))
    q = quotient_hom(S4, V4)
    assert q.codomain.order == 6 and q.kernel() == V4
    with pytest.raises(ValueError):
        quotient_hom(S4, S4.generated_subgroup([parse_cycles("(0 1)", 4)]))


def test_direct_product():
    C2 = cyclic(2)
    prod, eg, eh, pg, ph = direct_product(C2, C2)
    assert prod.order == 4 and prod.label() == "C2 x C2"
    assert pg.compose(eg) == identity_hom(C2)
    assert ph.compose(eh) == identity_hom(C2)


def test_lambda_descriptor():
    S3 = symmetric(3)
    t = parse_cycles("(0 1)", 3)
    d = LambdaGroupDescriptor(S3.centralizer(t), t)
    assert d.order_l == 2
    with pytest.raises((ValueError, AssertionError)):
        LambdaGroupDescriptor(S3, t)
