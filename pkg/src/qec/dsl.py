"""Text input for groups and G-sets.

Groups::

    C 4 | C4 | D 3 | S 4 | A 4 | Q8 | G x H
    perm 4: (0 1 2 3);(0 2)

G-sets (over an already parsed group)::

    pt | regular | natural | coset (0 1);(2 3)
    gset <name>: a b c | b c a | a c b      # points, then one image row per generator
    X + Y                                    # disjoint union
"""

from __future__ import annotations

import re
from math import factorial
from dataclasses import dataclass

from .groups import (
    DEFAULT_CAP,
    CapExceededError,
    FiniteGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    quaternion8,
    symmetric,
)
from .gsets import FiniteGSet, NotAnActionError
from .perm import Perm, parse_cycles


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_FAMILY_RE = re.compile(r"\s*([A-Za-z]+)\s*(\d*)\s*$")
_FAMILIES = {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}
_FAMILY_ORDERS = {
    "C": lambda n: n,
    "D": lambda n: 2 * n,
    "S": factorial,
    "A": lambda n: max(factorial(n) // 2, 1),
}


@dataclass
class _Piece:
    text: str
    column: int  # 1-based column of the first character of ``text``


def _split_top(text: str, sep: re.Pattern, base: int = 1) -> list[_Piece]:
    pieces, start = [], 0
    for m in sep.finditer(text):
        pieces.append(_Piece(text[start:m.start()], base + start))
        start = m.end()
    pieces.append(_Piece(text[start:], base + start))
    return pieces


def _strip(p: _Piece) -> _Piece:
    lead = len(p.text) - len(p.text.lstrip())
    return _Piece(p.text.strip(), p.column + lead)


_PRODUCT_SEP = re.compile(r"(?<=[0-9A-Za-z])\s*[x×]\s*(?=[A-Z])")


def parse_group(text: str, *, cap: int = DEFAULT_CAP, line: int = 1) -> FiniteGroup:
    """Parse a group spec; raises ParseError with the offending position."""
    if not text.strip():
        raise ParseError("empty group spec", line, 1)
    stripped = text.strip()
    if stripped.startswith("perm"):
        return _parse_perm(text, cap, line)
    pieces = [_strip(p) for p in _split_top(text, _PRODUCT_SEP)]
    groups = [_parse_family(p, cap, line) for p in pieces]
    out = groups[0]
    for h in groups[1:]:
        out = direct_product(out, h)[0]
    return out


def _parse_family(p: _Piece, cap: int, line: int) -> FiniteGroup:
    if p.text == "Q8":
        return quaternion8()
    m = _FAMILY_RE.match(p.text)
    if not m or m.group(1) not in _FAMILIES:
        raise ParseError(f"unknown group {p.text!r}", line, p.column)
    if not m.group(2):
        raise ParseError(f"group family {m.group(1)} needs a parameter", line, p.column + len(p.text))
    n = int(m.group(2))
    if n < 1:
        raise ParseError("group parameter must be positive", line, p.column + m.start(2))
    order = _FAMILY_ORDERS[m.group(1)](n)
    if order > cap:
        raise CapExceededError(f"{p.text} has order {order}, above the enumeration cap {cap}")
    try:
        return _FAMILIES[m.group(1)](n)
    except ValueError as exc:
        raise ParseError(str(exc), line, p.column) from exc


_PERM_RE = re.compile(r"\s*perm\s+(\d+)\s*:(.*)$", re.S)


def _parse_perm(text: str, cap: int, line: int) -> FiniteGroup:
    m = _PERM_RE.match(text)
    if not m:
        raise ParseError("expected 'perm <degree>: <cycles>;<cycles>;...'", line, 1)
    degree = int(m.group(1))
    if degree < 1:
        raise ParseError("degree must be positive", line, m.start(1) + 1)
    gens = _parse_perm_list(m.group(2), degree, line, m.start(2) + 1)
    try:
        return FiniteGroup(degree, gens, cap=cap)
    except ValueError as exc:
        raise ParseError(str(exc), line, 1) from exc


def _parse_perm_list(text: str, degree: int, line: int, column: int) -> list[Perm]:
    gens = []
    for p in _split_top(text, re.compile(";"), column):
        p = _strip(p)
        if not p.text:
            continue
        try:
            gens.append(parse_cycles(p.text, degree))
        except ValueError as exc:
            raise ParseError(str(exc), line, p.column) from exc
    return gens


# G-sets


def parse_gset(text: str, group: FiniteGroup, *, line: int = 1) -> FiniteGSet:
    if not text.strip():
        raise ParseError("empty G-set spec", line, 1)
    if text.lstrip().startswith("gset"):
        pieces = [_strip(_Piece(text, 1))]
    else:
        pieces = [_strip(p) for p in _split_top(text, re.compile(r"\+"))]
    parts = [_parse_gset_piece(p, group, line) for p in pieces]
    out = parts[0]
    for x in parts[1:]:
        out = out.disjoint_union(x)
    out.name = " + ".join(p.text for p in pieces)
    return out


def _parse_gset_piece(p: _Piece, group: FiniteGroup, line: int) -> FiniteGSet:
    word, _, rest = p.text.partition(" ")
    if p.text == "pt":
        return FiniteGSet.point(group)
    if p.text == "regular":
        return FiniteGSet.regular(group)
    if p.text == "natural":
        return FiniteGSet.natural(group)
    if word == "coset":
        col = p.column + len(word) + 1
        gens = _parse_perm_list(rest, group.degree, line, col)
        for g in gens:
            if g not in group:
                raise ParseError("subgroup generator is not in the group", line, col)
        sub = group.generated_subgroup(gens)
        return FiniteGSet.cosets(group, sub, name=p.text)
    if word == "gset":
        return _parse_explicit(p, group, line)
    raise ParseError(f"unknown G-set {p.text!r}", line, p.column)


def _parse_explicit(p: _Piece, group: FiniteGroup, line: int) -> FiniteGSet:
    head, colon, body = p.text.partition(":")
    if not colon:
        raise ParseError("expected 'gset <name>: <points> | <images> ...'", line, p.column)
    rows = _split_top(body, re.compile(r"\|"), p.column + len(head) + 1)
    points = rows[0].text.replace(",", " ").split()
    if not points:
        raise ParseError("a G-set needs at least one point", line, rows[0].column)
    if len(set(points)) != len(points):
        raise ParseError("point names must be distinct", line, rows[0].column)
    where = {x: i for i, x in enumerate(points)}
    images = []
    for r in rows[1:]:
        toks = r.text.replace(",", " ").split()
        if len(toks) != len(points):
            raise ParseError(f"expected {len(points)} images, got {len(toks)}", line, r.column)
        unknown = [t for t in toks if t not in where]
        if unknown:
            raise ParseError(f"unknown point {unknown[0]!r}", line, r.column)
        images.append([where[t] for t in toks])
    try:
        return FiniteGSet.from_generator_images(group, points, images, name=p.text)
    except NotAnActionError as exc:
        if str(exc).startswith("not an action"):
            raise
        raise NotAnActionError(f"not an action: {exc}") from exc


def parse_corpus(text: str, *, cap: int = DEFAULT_CAP) -> list[FiniteGroup]:
    """One group spec per line; blank lines and ``#`` comments are skipped."""
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        spec = raw.split("#", 1)[0]
        if spec.strip():
            out.append(parse_group(spec, cap=cap, line=n))
    return out


__all__ = ["ParseError", "parse_corpus", "parse_group", "parse_gset"]
