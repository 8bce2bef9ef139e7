import pytest

from qec.dsl import ParseError, parse_corpus, parse_group, parse_gset
from qec.groups import CapExceededError
from qec.gsets import NotAnActionError


@pytest.mark.parametrize(
    "text, order",
    [("C4", 4), ("C 4", 4), ("D4", 8), ("S 4", 24), ("A4", 12), ("Q8", 8), ("C2 x C2", 4),
     ("C2 × C3", 6), ("S3 x C2 x C2", 24), ("perm 1:", 1), ("perm 4: (0 1 2 3);(0 2)", 8)],
)
def test_group_specs(text, order):
    assert parse_group(text).order == order


def test_group_errors():
    with pytest.raises(ParseError) as e:
        parse_group("C2 x Z3")
    assert (e.value.line, e.value.column) == (1, 6)
    with pytest.raises(ParseError) as e:
        parse_group("perm 3: (0 1);(1 5)")
    assert e.value.column == 15
    for bad in ("", "C", "C0", "perm x: (0 1)", "foo"):
        with pytest.raises(ParseError):
            parse_group(bad)
    with pytest.raises(CapExceededError):
        parse_group("S7", cap=1000)
    with pytest.raises(CapExceededError):
        parse_group("perm 5: (0 1);(0 1 2 3 4)", cap=50)


def test_gset_specs():
    S3 = parse_group("S3")
    assert len(parse_gset("pt", S3)) == 1
    assert len(parse_gset("regular", S3)) == 6
    assert len(parse_gset("natural", S3)) == 3
    assert len(parse_gset("coset (0 1)", S3)) == 3
    X = parse_gset("pt + coset (0 1 2)", S3)
    assert len(X) == 3 and X.label() == "pt + coset (0 1 2)"
    C2 = parse_group("C2")
    Y = parse_gset("gset Y: a b c | b a c", C2)
    assert list(Y.labels) == ["a", "b", "c"] and Y.act(C2.generators[0], 0) == 1


def test_gset_errors():
    S3 = parse_group("S3")
    C3 = parse_group("C3")
    with pytest.raises(ParseError) as e:
        parse_gset("pt + blob", S3)
    assert e.value.column == 6
    with pytest.raises(ParseError):
        parse_gset("coset (0 1 2 3)", S3)
    with pytest.raises(ParseError):
        parse_gset("gset Y: a b | b", C3)
    with pytest.raises(ParseError):
        parse_gset("gset Y: a b | b z", C3)
    with pytest.raises(NotAnActionError) as e:
        parse_gset("gset Y: a b | b a", C3)
    assert str(e.value).startswith("not an action")


def test_corpus_lines():
    groups = parse_corpus("# small corpus\nC2\n\nS3  # symmetric\n")
    assert [G.label() for G in groups] == ["C2", "S3"]
    with pytest.raises(ParseError) as e:
        parse_corpus("C2\nS3\nBad\n")
    assert e.value.line == 3
