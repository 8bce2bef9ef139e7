"""Finite G-sets given by a full action table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .groups import FiniteGroup, GroupHom, identity_hom
from .perm import Perm, compose, format_perm, inverse


class NotAnActionError(ValueError):
    pass


class NotEquivariantError(ValueError):
    pass


class FiniteGSet:
    """Points ``0..n-1`` (with display labels) and a left action of ``group``.

    ``table[g][i]`` is the index of ``g . point_i``.
    """

    def __init__(
        self,
        group: FiniteGroup,
        labels: Sequence[Hashable],
        table: dict[Perm, tuple[int, ...]],
        *,
        name: str | None = None,
        check: bool = True,
    ):
        self.group = group
        self.labels = tuple(labels)
        self.table = table
        self.name = name
        if check:
            self._verify()

    @classmethod
    def from_generator_images(
        cls,
        group: FiniteGroup,
        labels: Sequence[Hashable],
        images: Sequence[Sequence[int]],
        *,
        name: str | None = None,
    ) -> FiniteGSet:
        """Extend the action of each group generator along the stored words."""
        n = len(labels)
        if len(images) != len(group.generators):
            raise NotAnActionError(
                f"expected {len(group.generators)} generator images, got {len(images)}"
            )
        imgs = []
        for im in images:
            im = tuple(im)
            if sorted(im) != list(range(n)):
                raise NotAnActionError(f"generator image {im} is not a permutation of the points")
            imgs.append(im)
        table = {}
        for g, word in group.words.items():
            x = tuple(range(n))
            for i in reversed(word):
                x = compose(imgs[i], x)
            table[g] = x
        return cls(group, labels, table, name=name)

    def _verify(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise NotAnActionError("point labels must be distinct")
        if set(self.table) != set(self.group.elements):
            raise NotAnActionError("action is not defined on every group element")
        if self.table[self.group.identity] != tuple(range(n)):
            raise NotAnActionError("identity does not act trivially")
        for g in self.group.elements:
            tg = self.table[g]
            if sorted(tg) != list(range(n)):
                raise NotAnActionError(f"{format_perm(g)} does not act bijectively")
            for h in self.group.elements:
                if self.table[compose(g, h)] != compose(tg, self.table[h]):
                    raise NotAnActionError(
                        f"not an action: (gh).x != g.(h.x) for g={format_perm(g)}, h={format_perm(h)}"
                    )

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def act(self, g: Perm, i: int) -> int:
        return self.table[g][i]

    def label(self) -> str:
        return self.name or f"gset({len(self)} points)"

    # standard constructions

    @classmethod
    def point(cls, group: FiniteGroup) -> FiniteGSet:
        return cls(group, ["*"], {g: (0,) for g in group.elements}, name="pt", check=False)

    @classmethod
    def regular(cls, group: FiniteGroup) -> FiniteGSet:
        idx = group.index
        table = {g: tuple(idx[compose(g, x)] for x in group.elements) for g in group.elements}
        labels = [format_perm(x) for x in group.elements]
        return cls(group, labels, table, name="regular", check=False)

    @classmethod
    def natural(cls, group: FiniteGroup) -> FiniteGSet:
        table = {g: tuple(g) for g in group.elements}
        return cls(group, list(range(group.degree)), table, name="natural", check=False)

    @classmethod
    def cosets(cls, group: FiniteGroup, sub: FiniteGroup, *, name: str | None = None) -> FiniteGSet:
        """``group / sub`` with left translation; points labeled by least coset element."""
        cosets = group.left_cosets(sub)
        where = {x: i for i, c in enumerate(cosets) for x in c}
        table = {g: tuple(where[compose(g, c[0])] for c in cosets) for g in group.elements}
        labels = [format_perm(c[0]) for c in cosets]
        return cls(group, labels, table, name=name or "cosets", check=False)

    def disjoint_union(self, other: FiniteGSet) -> FiniteGSet:
        if other.group != self.group:
            raise ValueError("G-sets over different groups")
        n = len(self)
        labels = [("L", x) for x in self.labels] + [("R", y) for y in other.labels]
        table = {
            g: self.table[g] + tuple(n + j for j in other.table[g]) for g in self.group.elements
        }
        name = f"{self.label()} + {other.label()}"
        return FiniteGSet(self.group, labels, table, name=name, check=False)

    def restrict(self, hom: GroupHom) -> FiniteGSet:
        """The G-set viewed over ``hom.domain`` through ``hom``."""
        if hom.codomain != self.group:
            raise ValueError("homomorphism does not land in the acting group")
        table = {h: self.table[hom.mapping[h]] for h in hom.domain.elements}
        return FiniteGSet(hom.domain, self.labels, table, name=self.name, check=False)

    # queries

    def fixed_points(self, g: Perm) -> list[int]:
        t = self.table[g]
        return [i for i in range(len(self)) if t[i] == i]

    def orbits(self, acting: FiniteGroup | None = None, points: Sequence[int] | None = None):
        """Orbits of ``acting`` (a subgroup of the group) on ``points``.

        Returns ``(representative, orbit, stabilizer)`` triples; representatives
        are the least point index of each orbit, orbits are ordered by them.
        """
        K = acting if acting is not None else self.group
        if not K.is_subgroup_of(self.group):
            raise ValueError("acting group is not a subgroup")
        pts = sorted(points) if points is not None else list(range(len(self)))
        allowed = set(pts)
        seen: set[int] = set()
        out = []
        for x in pts:
            if x in seen:
                continue
            orbit = sorted({self.table[k][x] for k in K.elements})
            if not allowed.issuperset(orbit):
                raise ValueError("point subset is not closed under the acting group")
            seen.update(orbit)
            stab = K.subgroup(k for k in K.elements if self.table[k][x] == x)
            out.append((x, tuple(orbit), stab))
        return out

    def transporter(self, acting: FiniteGroup, x: int, y: int) -> Perm | None:
        """Least ``c`` in ``acting`` with ``c . x == y``."""
        for c in acting.elements:
            if self.table[c][x] == y:
                return c
        return None

    def is_isomorphic_data(self, other: FiniteGSet) -> bool:
        return self.group == other.group and self.table == other.table


def induced_gset(incl: GroupHom, X: FiniteGSet) -> tuple[FiniteGSet, list[int]]:
    """``G x_H X`` for an injective ``incl: H -> G``.

    Returns the G-set and the map ``x -> [e, x]`` as a list of point indices.
    """
    if not incl.is_injective():
        raise ValueError("induction needs an injective homomorphism")
    H, G = incl.domain, incl.codomain
    if X.group != H:
        raise ValueError("X is not an H-set")
    # class of (g, x) is {(g h^-1, h x)}; canonical rep is the least pair
    rep_of: dict[tuple[Perm, int], int] = {}
    reps: list[tuple[Perm, int]] = []
    for g in G.elements:
        for x in range(len(X)):
            if (g, x) in rep_of:
                continue
            members = {(compose(g, inverse(incl.mapping[h])), X.table[h][x]) for h in H.elements}
            rep = min(members)
            idx = len(reps)
            reps.append(rep)
            for m in members:
                rep_of[m] = idx
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    renum = {old: new for new, old in enumerate(order)}
    reps = [reps[i] for i in order]
    rep_of = {k: renum[v] for k, v in rep_of.items()}
    table = {}
    for a in G.elements:
        table[a] = tuple(rep_of[(compose(a, g), x)] for g, x in reps)
    labels = [f"[{format_perm(g)}, {X.labels[x]}]" for g, x in reps]
    name = f"{G.label()} x_H {X.label()}"
    ind = FiniteGSet(G, labels, table, name=name, check=False)
    e = G.identity
    i_map = [rep_of[(e, x)] for x in range(len(X))]
    return ind, i_map


@dataclass
class GMap:
    """An equivariant map ``source -> target`` between G-sets over one group."""

    source: FiniteGSet
    target: FiniteGSet
    images: tuple[int, ...]

    def __post_init__(self):
        self.images = tuple(self.images)
        if self.source.group != self.target.group:
            raise NotEquivariantError("G-sets over different groups")
        if len(self.images) != len(self.source):
            raise NotEquivariantError("map is not total on the source")
        for g in self.source.group.elements:
            ts, tt = self.source.table[g], self.target.table[g]
            for x in range(len(self.source)):
                if self.images[ts[x]] != tt[self.images[x]]:
                    raise NotEquivariantError(
                        f"not equivariant at g={format_perm(g)}, x={self.source.labels[x]}"
                    )

    @classmethod
    def identity(cls, X: FiniteGSet) -> GMap:
        return cls(X, X, tuple(range(len(X))))

    @classmethod
    def collapse(cls, X: FiniteGSet) -> GMap:
        return cls(X, FiniteGSet.point(X.group), (0,) * len(X))

    def then(self, after: GMap) -> GMap:
        """``after o self``."""
        return GMap(self.source, after.target, tuple(after.images[i] for i in self.images))


def fixed_points(X: FiniteGSet, g: Perm) -> list[int]:
    return X.fixed_points(g)


def orbits(K: FiniteGroup, X: FiniteGSet, points: Sequence[int] | None = None):
    return X.orbits(K, points)


__all__ = [
    "FiniteGSet",
    "GMap",
    "NotAnActionError",
    "NotEquivariantError",
    "fixed_points",
    "induced_gset",
    "orbits",
]
