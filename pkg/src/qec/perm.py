"""Permutations as tuples of images on points ``0..n-1``.

Composition follows function composition: ``compose(p, q)`` applies ``q``
first, so ``x -> p[x]`` is a left action.
"""

from __future__ import annotations

import math
import re

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def check_perm(p) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(u: Perm, g: Perm) -> Perm:
    """Return u g u^-1."""
    return compose(compose(u, g), inverse(u))


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(p: Perm) -> list[list[int]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def order(p: Perm) -> int:
    return math.lcm(1, *(len(c) for c in cycles(p)))


def format_perm(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse disjoint-cycle notation such as ``(0 1)(2 3)`` on ``degree`` points."""
    text = text.strip()
    images = list(range(degree))
    pos = 0
    used: set[int] = set()
    for m in _CYCLE_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unexpected text {text[pos:m.start()]!r} in cycle notation")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        pts = [int(tok) for tok in body]
        for x in pts:
            if not 0 <= x < degree:
                raise ValueError(f"point {x} out of range for degree {degree}")
            if x in used:
                raise ValueError(f"point {x} repeated; cycles must be disjoint")
            used.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    if text[pos:].strip():
        raise ValueError(f"unexpected text {text[pos:]!r} in cycle notation")
    return tuple(images)
