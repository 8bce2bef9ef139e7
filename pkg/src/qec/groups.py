"""Finite permutation groups stored with a full element enumeration.

Elements are permutation tuples. Every group keeps its elements sorted
lexicographically, so the identity is element 0 and "enumeration-least"
means lexicographically least. Groups with the same degree and element set
compare equal regardless of which generators built them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .perm import Perm, check_perm, compose, conjugate, format_perm, identity, inverse
from .perm import order as perm_order

DEFAULT_CAP = 20_000


class CapExceededError(RuntimeError):
    pass


class NotAHomomorphismError(ValueError):
    pass


class FiniteGroup:
    def __init__(
        self,
        degree: int,
        generators: Iterable[Sequence[int]] = (),
        *,
        name: str | None = None,
        cap: int = DEFAULT_CAP,
    ):
        gens = []
        for g in generators:
            g = tuple(g)
            check_perm(g)
            if len(g) != degree:
                raise ValueError(f"generator {g} does not have degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.name = name
        self.words = _closure_words(degree, self.generators, cap)
        self.elements: tuple[Perm, ...] = tuple(sorted(self.words))
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._centralizers: dict[Perm, FiniteGroup] = {}
        self._cache: dict = {}

    # basic protocol

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.index

    @cached_property
    def key(self) -> tuple[int, frozenset]:
        return (self.degree, frozenset(self.elements))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<FiniteGroup {label} degree={self.degree} order={self.order}>"

    def label(self) -> str:
        if self.name:
            return self.name
        gens = ";".join(format_perm(g) for g in self.generators)
        return f"perm {self.degree}: {gens}".rstrip()

    # element arithmetic

    @staticmethod
    def mul(a: Perm, b: Perm) -> Perm:
        return compose(a, b)

    @staticmethod
    def inv(a: Perm) -> Perm:
        return inverse(a)

    def element_order(self, g: Perm) -> int:
        return perm_order(g)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(1, *(perm_order(g) for g in self.elements))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def is_central(self, g: Perm) -> bool:
        return g in self and all(compose(g, h) == compose(h, g) for h in self.generators)

    # conjugacy

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        """Conjugation orbits, ordered by their least element."""
        seen: set[Perm] = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                x = frontier.pop()
                for s in self.generators:
                    y = conjugate(s, x)
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return tuple(classes)

    @cached_property
    def class_reps(self) -> tuple[Perm, ...]:
        return tuple(c[0] for c in self.conjugacy_classes)

    @cached_property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.conjugacy_classes)

    @cached_property
    def class_index(self) -> dict[Perm, int]:
        return {g: i for i, c in enumerate(self.conjugacy_classes) for g in c}

    def class_of(self, g: Perm) -> int:
        return self.class_index[g]

    def power_map(self, k: int) -> tuple[int, ...]:
        """Class index of ``g^k`` for each class representative ``g``."""
        cache = self._cache.setdefault("power_map", {})
        if k not in cache:
            from .perm import power

            cache[k] = tuple(self.class_index[power(g, k)] for g in self.class_reps)
        return cache[k]

    @cached_property
    def inverse_classes(self) -> tuple[int, ...]:
        return self.power_map(-1)

    def conjugator(self, x: Perm, y: Perm) -> Perm | None:
        """Least ``u`` in the group with ``u x u^-1 == y``, or None."""
        for u in self.elements:
            if conjugate(u, x) == y:
                return u
        return None

    def conjugators(self, x: Perm, y: Perm) -> list[Perm]:
        return [u for u in self.elements if conjugate(u, x) == y]

    # subgroups

    def centralizer(self, g: Perm) -> FiniteGroup:
        if g not in self:
            raise ValueError(f"{format_perm(g)} is not in the group")
        if g not in self._centralizers:
            elems = [h for h in self.elements if compose(h, g) == compose(g, h)]
            self._centralizers[g] = self.subgroup(elems)
        return self._centralizers[g]

    def subgroup(self, elements: Iterable[Perm]) -> FiniteGroup:
        """The subgroup with exactly these elements (which must be closed)."""
        elems = frozenset(elements)
        if elems == self.key[1]:
            return self
        if not elems <= self.key[1]:
            raise ValueError("elements are not contained in the group")
        return subgroup_from_elements(self.degree, elems)

    def generated_subgroup(self, gens: Iterable[Perm]) -> FiniteGroup:
        gens = list(gens)
        for g in gens:
            if g not in self:
                raise ValueError(f"{format_perm(g)} is not in the group")
        sub = FiniteGroup(self.degree, gens)
        return self.subgroup(sub.elements)

    def is_subgroup_of(self, other: FiniteGroup) -> bool:
        return self.degree == other.degree and self.key[1] <= other.key[1]

    def center(self) -> FiniteGroup:
        return self.subgroup(g for g in self.elements if self.is_central(g))

    def left_cosets(self, sub: FiniteGroup) -> list[tuple[Perm, ...]]:
        """Left cosets ``gH`` ordered by least element, each sorted."""
        seen: set[Perm] = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            coset = tuple(sorted(compose(g, h) for h in sub.elements))
            seen.update(coset)
            out.append(coset)
        return out

    def is_normal(self, sub: FiniteGroup) -> bool:
        return sub.is_subgroup_of(self) and all(
            conjugate(u, x) in sub for u in self.generators for x in sub.generators
        )

    def all_subgroups(self) -> list[FiniteGroup]:
        """Every subgroup, built by adjoining elements to cyclic subgroups."""
        if "subgroups" in self._cache:
            return self._cache["subgroups"]
        found: dict[frozenset, FiniteGroup] = {}
        frontier = []
        for g in self.elements:
            s = self.generated_subgroup([g])
            if s.key[1] not in found:
                found[s.key[1]] = s
                frontier.append(s)
        while frontier:
            nxt = []
            for s in frontier:
                for g in self.elements:
                    if g in s:
                        continue
                    t = self.generated_subgroup(list(s.generators) + [g])
                    if t.key[1] not in found:
                        found[t.key[1]] = t
                        nxt.append(t)
            frontier = nxt
        subs = sorted(found.values(), key=lambda s: (s.order, sorted(s.elements)))
        self._cache["subgroups"] = subs
        return subs

    def subgroups_up_to_conjugacy(self) -> list[FiniteGroup]:
        reps = []
        seen: set[frozenset] = set()
        for s in self.all_subgroups():
            if s.key[1] in seen:
                continue
            reps.append(s)
            for u in self.elements:
                seen.add(frozenset(conjugate(u, x) for x in s.elements))
        return reps


def _closure_words(degree: int, gens: tuple[Perm, ...], cap: int) -> dict[Perm, tuple[int, ...]]:
    e = identity(degree)
    words = {e: ()}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        wx = words[x]
        for i, s in enumerate(gens):
            y = compose(s, x)
            if y not in words:
                words[y] = (i,) + wx
                if len(words) > cap:
                    raise CapExceededError(f"group closure exceeded the cap of {cap} elements")
                queue.append(y)
    return words


_SUBGROUP_CACHE: dict[tuple[int, frozenset], FiniteGroup] = {}


def subgroup_from_elements(degree: int, elements: frozenset) -> FiniteGroup:
    """Build (or fetch) the group with this element set; generators chosen greedily."""
    key = (degree, frozenset(elements))
    grp = _SUBGROUP_CACHE.get(key)
    if grp is not None:
        return grp
    gens: list[Perm] = []
    span = {identity(degree)}
    for g in sorted(key[1]):
        if g not in span:
            gens.append(g)
            span = set(FiniteGroup(degree, gens).elements)
    grp = FiniteGroup(degree, gens)
    if grp.key != key:
        raise ValueError("element set is not closed under composition")
    _SUBGROUP_CACHE[key] = grp
    return grp


# homomorphisms


class GroupHom:
    """A homomorphism given by its full element table."""

    def __init__(
        self,
        domain: FiniteGroup,
        codomain: FiniteGroup,
        mapping: Mapping[Perm, Perm],
        *,
        check: bool = True,
    ):
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)
        if check:
            self._verify()

    def _verify(self) -> None:
        if set(self.mapping) != set(self.domain.elements):
            raise NotAHomomorphismError("mapping is not total on the domain")
        for x in self.mapping.values():
            if x not in self.codomain:
                raise NotAHomomorphismError(f"image {format_perm(x)} is outside the codomain")
        m = self.mapping
        for a in self.domain.elements:
            ma = m[a]
            for b in self.domain.elements:
                if m[compose(a, b)] != compose(ma, m[b]):
                    raise NotAHomomorphismError(
                        f"not a homomorphism: fails on ({format_perm(a)}, {format_perm(b)})"
                    )

    def __call__(self, g: Perm) -> Perm:
        return self.mapping[g]

    def compose(self, inner: GroupHom) -> GroupHom:
        """Return ``self o inner``."""
        if inner.codomain != self.domain:
            raise ValueError("homomorphisms are not composable")
        return GroupHom(
            inner.domain,
            self.codomain,
            {g: self.mapping[inner.mapping[g]] for g in inner.domain.elements},
            check=False,
        )

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)

    def image(self) -> FiniteGroup:
        return self.codomain.subgroup(set(self.mapping.values()))

    def kernel(self) -> FiniteGroup:
        e = self.codomain.identity
        return self.domain.subgroup(g for g, x in self.mapping.items() if x == e)

    def restrict(self, sub: FiniteGroup, codomain: FiniteGroup | None = None) -> GroupHom:
        cod = codomain or self.codomain
        return GroupHom(sub, cod, {g: self.mapping[g] for g in sub.elements}, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.mapping == other.mapping
        )

    __hash__ = None


def make_hom(
    domain: FiniteGroup, codomain: FiniteGroup, generator_images: Sequence[Perm]
) -> GroupHom:
    """Extend generator images along stored words and verify multiplicativity."""
    if len(generator_images) != len(domain.generators):
        raise ValueError(
            f"expected {len(domain.generators)} generator images, got {len(generator_images)}"
        )
    images = [tuple(x) for x in generator_images]
    for x in images:
        if x not in codomain:
            raise NotAHomomorphismError(f"image {format_perm(x)} is outside the codomain")
    e = codomain.identity
    mapping = {}
    for g, word in domain.words.items():
        x = e
        for i in reversed(word):
            x = compose(images[i], x)
        mapping[g] = x
    return GroupHom(domain, codomain, mapping)


def inclusion(sub: FiniteGroup, group: FiniteGroup) -> GroupHom:
    if not sub.is_subgroup_of(group):
        raise ValueError("not a subgroup")
    return GroupHom(sub, group, {g: g for g in sub.elements}, check=False)


def identity_hom(group: FiniteGroup) -> GroupHom:
    return GroupHom(group, group, {g: g for g in group.elements}, check=False)


def conjugation_hom(domain: FiniteGroup, codomain: FiniteGroup, u: Perm) -> GroupHom:
    """``s -> u s u^-1`` from ``domain`` into ``codomain``."""
    return GroupHom(domain, codomain, {s: conjugate(u, s) for s in domain.elements}, check=False)


@dataclass(frozen=True)
class LambdaGroupDescriptor:
    """Finite data (K, g) of the group Lambda_K(g) = K x R / <(g, -1)>."""

    group: FiniteGroup
    central_element: Perm
    order_l: int = field(init=False)

    def __post_init__(self):
        g = self.central_element
        if g not in self.group:
            raise ValueError(f"{format_perm(g)} is not in K")
        if not self.group.is_central(g):
            raise ValueError(f"{format_perm(g)} is not central in K")
        object.__setattr__(self, "order_l", perm_order(g))


# named families


def trivial_group(degree: int = 1) -> FiniteGroup:
    return FiniteGroup(degree, [], name="C1" if degree == 1 else None)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    gen = tuple((i + 1) % n for i in range(n))
    return FiniteGroup(n, [gen] if n > 1 else [], name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on the n-gon (n >= 3), or a small model."""
    if n < 1:
        raise ValueError("dihedral parameter must be positive")
    if n == 1:
        return FiniteGroup(2, [(1, 0)], name="D1")
    if n == 2:
        return FiniteGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)], name="D2")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, [rot, ref], name=f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("symmetric group degree must be positive")
    gens = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return FiniteGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("alternating group degree must be positive")
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = p[1], p[k], p[0]
        gens.append(tuple(p))
    return FiniteGroup(n, gens, name=f"A{n}")


def quaternion8() -> FiniteGroup:
    """Q8 in its regular representation on {1,-1,i,-i,j,-j,k,-k} = 0..7."""
    # units as (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k
    def idx(sign, axis):
        return 2 * axis + (0 if sign > 0 else 1)

    def unit(k):
        return (1 if k % 2 == 0 else -1, k // 2)

    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def left_mult(k):
        s1, a1 = unit(k)
        images = []
        for x in range(8):
            s2, a2 = unit(x)
            s3, a3 = table[(a1, a2)]
            images.append(idx(s1 * s2 * s3, a3))
        return tuple(images)

    return FiniteGroup(8, [left_mult(2), left_mult(4)], name="Q8")


def direct_product(
    g: FiniteGroup, h: FiniteGroup, name: str | None = None
) -> tuple[FiniteGroup, GroupHom, GroupHom, GroupHom, GroupHom]:
    """G x H on ``deg G + deg H`` points, with both embeddings and projections."""
    dg, dh = g.degree, h.degree

    def pair(a: Perm, b: Perm) -> Perm:
        return tuple(a) + tuple(dg + x for x in b)

    gens = [pair(a, h.identity) for a in g.generators] + [pair(g.identity, b) for b in h.generators]
    if name is None and g.name and h.name:
        name = f"{g.name} x {h.name}"
    prod = FiniteGroup(dg + dh, gens, name=name)
    emb_g = GroupHom(g, prod, {a: pair(a, h.identity) for a in g.elements}, check=False)
    emb_h = GroupHom(h, prod, {b: pair(g.identity, b) for b in h.elements}, check=False)
    proj_g = GroupHom(prod, g, {x: x[:dg] for x in prod.elements}, check=False)
    proj_h = GroupHom(prod, h, {x: tuple(y - dg for y in x[dg:]) for x in prod.elements}, check=False)
    return prod, emb_g, emb_h, proj_g, proj_h


def pair_element(g: FiniteGroup, a: Perm, b: Perm) -> Perm:
    """The element (a, b) of ``direct_product(g, h)``."""
    return tuple(a) + tuple(g.degree + x for x in b)


def enumerate_elements(degree: int, generators: Iterable[Sequence[int]], cap: int = DEFAULT_CAP) -> FiniteGroup:
    return FiniteGroup(degree, generators, cap=cap)


def conjugacy_classes(group: FiniteGroup):
    return group.conjugacy_classes


def centralizer(group: FiniteGroup, g: Perm) -> FiniteGroup:
    return group.centralizer(g)


def quotient_hom(group: FiniteGroup, normal: FiniteGroup) -> GroupHom:
    """G -> G/N, with G/N realized as permutations of the left cosets of N."""
    if not group.is_normal(normal):
        raise ValueError("subgroup is not normal")
    cosets = group.left_cosets(normal)
    where = {x: i for i, c in enumerate(cosets) for x in c}
    act = {g: tuple(where[compose(g, c[0])] for c in cosets) for g in group.elements}
    quotient = FiniteGroup(len(cosets), [act[g] for g in group.generators])
    return GroupHom(group, quotient, act, check=False)
