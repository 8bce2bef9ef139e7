"""Lambda_G(sigma)-representations built from G-representations.

Everything is handled at the level of characters: a G-representation is its
character, and a Lambda_K(g)-representation is an isotypic list of
``(irreducible of K, multiplicity, rotation phase e)`` triples, meaning
sum n * (lambda (.) q^e) with [h, t] acting by lambda(h) exp(2 pi i e t).

Phases produced by :func:`v_sigma` follow the (0, 1] convention: if sigma
acts on lambda by exp(2 pi i m / l) then e = m / l with 0 < m <= l.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .characters import (
    CharacterTable,
    ClassFunction,
    central_phase,
    character_table,
    fs_indicator,
    permutation_character,
    regular_character,
    restrict_character,
    scalar_phase,
    trivial_character,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    LambdaGroupDescriptor,
    direct_product,
    pair_element,
)
from .lambda_ring import LambdaRingElement, from_isotypic, lambda_basis
from .perm import Perm, format_perm


class NotRealError(ValueError):
    pass


@dataclass(eq=False)
class GRep:
    """A complex G-representation, recorded by its character."""

    group: FiniteGroup
    character: ClassFunction
    multiplicities: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.character.group != self.group:
            raise ValueError("character lives on a different group")
        table = character_table(self.group)
        self.multiplicities = tuple(table.multiplicities(self.character))
        if self.degree <= 0:
            raise ValueError("a representation must have positive degree")

    @property
    def degree(self) -> int:
        return self.character.int_degree()

    @classmethod
    def regular(cls, G: FiniteGroup) -> GRep:
        return cls(G, regular_character(G))

    @classmethod
    def trivial(cls, G: FiniteGroup) -> GRep:
        return cls(G, trivial_character(G))

    @classmethod
    def permutation(cls, gset) -> GRep:
        return cls(gset.group, permutation_character(gset))

    @classmethod
    def irreducible(cls, G: FiniteGroup, i: int) -> GRep:
        return cls(G, character_table(G)[i])

    def __add__(self, other: GRep) -> GRep:
        return GRep(self.group, self.character + other.character)

    def restrict(self, hom: GroupHom) -> GRep:
        return GRep(hom.domain, restrict_character(self.character, hom))

    def is_faithful(self) -> bool:
        """Kernel = {g : chi(g) = chi(1)} is trivial."""
        G = self.group
        deg = self.character.degree
        return all(
            self.character.values[k] != deg for k in range(1, len(G.conjugacy_classes))
        )

    def is_real_valued(self) -> bool:
        return self.character.is_real_valued()


@dataclass(frozen=True, eq=False)
class LambdaRepDescriptor:
    """sum n * (lambda (.) q^e) over Lambda_K(g), with components merged and sorted."""

    descriptor: LambdaGroupDescriptor
    components: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        merged: dict[tuple[int, Fraction], int] = {}
        for i, n, e in self.components:
            e = Fraction(e)
            if n < 0:
                raise ValueError("multiplicities must be nonnegative")
            if n:
                merged[(i, e)] = merged.get((i, e), 0) + n
        comps = tuple(sorted((i, n, e) for (i, e), n in merged.items()))
        object.__setattr__(self, "components", comps)
        self._validate()

    def _validate(self) -> None:
        l = self.descriptor.order_l
        table = self.table
        g = self.descriptor.central_element
        for i, _, e in self.components:
            if (e * l).denominator != 1:
                raise ValueError(f"phase {e} is not a multiple of 1/{l}")
            # [g, -1] ~ [e, 0]: lambda(g) exp(-2 pi i e) must be the identity
            if (e - central_phase(table[i], g, l)).denominator != 1:
                raise ValueError(f"phase {e} violates the quotient relation for irrep {i}")

    @property
    def group(self) -> FiniteGroup:
        return self.descriptor.group

    @property
    def table(self) -> CharacterTable:
        return character_table(self.descriptor.group)

    @property
    def degree(self) -> int:
        degs = self.table.degrees
        return sum(n * degs[i] for i, n, _ in self.components)

    def __add__(self, other: LambdaRepDescriptor) -> LambdaRepDescriptor:
        self._same(other)
        return LambdaRepDescriptor(self.descriptor, self.components + other.components)

    def twist(self, k: int) -> LambdaRepDescriptor:
        """Tensor with q^k."""
        return LambdaRepDescriptor(
            self.descriptor, tuple((i, n, e + k) for i, n, e in self.components)
        )

    def dual(self) -> LambdaRepDescriptor:
        table = self.table
        return LambdaRepDescriptor(
            self.descriptor, tuple((table.dual_index(i), n, -e) for i, n, e in self.components)
        )

    def pullback(self, hom: GroupHom, central: Perm) -> LambdaRepDescriptor:
        """Restrict along Lambda_{K'}(g') -> Lambda_K(g), [h, t] -> [hom(h), t]."""
        if hom.codomain != self.group:
            raise ValueError("homomorphism does not land in K")
        if hom.mapping[central] != self.descriptor.central_element:
            raise ValueError("homomorphism does not carry g' to g")
        target = LambdaGroupDescriptor(hom.domain, central)
        comps = []
        for i, n, e in self.components:
            mults = _restricted_multiplicities(hom, i)
            comps.extend((mu, n * m, e) for mu, m in enumerate(mults) if m)
        return LambdaRepDescriptor(target, tuple(comps))

    def to_ring_element(self) -> LambdaRingElement:
        return from_isotypic(lambda_basis(self.descriptor), self.components)

    def _same(self, other: LambdaRepDescriptor) -> None:
        if self.descriptor.group != other.descriptor.group or (
            self.descriptor.central_element != other.descriptor.central_element
        ):
            raise ValueError("descriptors over different Lambda groups")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaRepDescriptor):
            return NotImplemented
        return (
            self.descriptor.group == other.descriptor.group
            and self.descriptor.central_element == other.descriptor.central_element
            and self.components == other.components
        )

    __hash__ = None

    def to_dict(self) -> dict:
        l = self.descriptor.order_l
        return {
            "group_order": self.group.order,
            "central_element": format_perm(self.descriptor.central_element),
            "l": l,
            "components": [
                {"irrep": i, "multiplicity": n, "phase": _phase_str(e, l)}
                for i, n, e in self.components
            ],
            "degree": self.degree,
        }


_RESTRICT_CACHE: dict[tuple, list[int]] = {}


def _restricted_multiplicities(hom: GroupHom, i: int) -> list[int]:
    # restriction depends only on where the class representatives go
    H, G = hom.domain, hom.codomain
    key = (H.key, G.key, tuple(G.class_of(hom.mapping[h]) for h in H.class_reps), i)
    if key not in _RESTRICT_CACHE:
        chi = character_table(G)[i]
        _RESTRICT_CACHE[key] = character_table(H).multiplicities(restrict_character(chi, hom))
    return _RESTRICT_CACHE[key]


def _phase_str(e: Fraction, l: int) -> str:
    return f"{e * l}/{l}"


# the functor V -> (V)_sigma


def isotypify(V: GRep, g: Perm) -> list[int]:
    C = V.group.centralizer(g)
    return character_table(C).multiplicities(restrict_character(V.character, C))


def appendix_phase(chi: ClassFunction, g: Perm, l: int) -> Fraction:
    """m / l with 0 < m <= l and chi(g) = exp(2 pi i m / l) chi(1)."""
    c = central_phase(chi, g, l)
    return c if c else Fraction(1)


def v_sigma(V: GRep, sigma: Perm) -> LambdaRepDescriptor:
    G = V.group
    C = G.centralizer(sigma)
    desc = LambdaGroupDescriptor(C, sigma)
    table = character_table(C)
    l = desc.order_l
    mults = isotypify(V, sigma)
    comps = [(i, n, appendix_phase(table[i], sigma, l)) for i, n in enumerate(mults) if n]
    return LambdaRepDescriptor(desc, tuple(comps))


def fixed_part(V: GRep, sigma: Perm) -> LambdaRepDescriptor:
    """V^sigma with trivial rotation: isotypic parts on which sigma acts trivially, phase 0."""
    C = V.group.centralizer(sigma)
    desc = LambdaGroupDescriptor(C, sigma)
    table = character_table(C)
    l = desc.order_l
    mults = isotypify(V, sigma)
    comps = [
        (i, n, Fraction(0)) for i, n in enumerate(mults) if n and central_phase(table[i], sigma, l) == 0
    ]
    return LambdaRepDescriptor(desc, tuple(comps))


def v_sigma_real(V: GRep, sigma: Perm) -> LambdaRepDescriptor:
    """(V (x) C)_sigma + (V (x) C)*_sigma for a real representation V."""
    if not V.is_real_valued():
        raise NotRealError("character not real-valued")
    d = v_sigma(V, sigma)
    return d + d.dual()


VARIANTS = ("i", "ii", "iii", "real")


def v_sigma_variants(V: GRep, sigma: Perm, variant: str = "i") -> LambdaRepDescriptor:
    if variant == "i":
        return v_sigma(V, sigma)
    if variant == "ii":
        d = v_sigma(V, sigma)
        return d + d.twist(-1)
    if variant == "iii":
        return v_sigma(V, sigma) + fixed_part(V, sigma)
    if variant == "real":
        return v_sigma_real(V, sigma)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


# kernels


@dataclass
class LambdaKernel:
    """Elements [a, t] (t in [0, 1)) acting trivially; ``ALL`` means every t."""

    descriptor: LambdaGroupDescriptor
    entries: list[tuple[Perm, object]]

    ALL = "all"

    def is_trivial(self) -> bool:
        e = self.descriptor.group.identity
        return self.entries == [(e, (Fraction(0),))]

    def is_everything(self) -> bool:
        return len(self.entries) == self.descriptor.group.order and all(
            ts == self.ALL for _, ts in self.entries
        )

    def to_dict(self) -> dict:
        return {
            "trivial": self.is_trivial(),
            "elements": [
                {
                    "a": format_perm(a),
                    "t": ts if ts == self.ALL else [str(t) for t in ts],
                }
                for a, ts in self.entries
            ],
        }


def lambda_kernel(d: LambdaRepDescriptor) -> LambdaKernel:
    if not d.components:
        raise ValueError("kernel of the zero representation is everything")
    K = d.group
    table = d.table
    entries = []
    for a in K.elements:
        phases = []
        for i, _, e in d.components:
            ph = scalar_phase(table[i], a)
            if ph is None:
                break
            phases.append((ph, e))
        else:
            ts = _solve_rotation(phases)
            if ts:
                entries.append((a, ts))
    return LambdaKernel(d.descriptor, entries)


def _solve_rotation(constraints: list[tuple[Fraction, Fraction]]):
    """All t in [0, 1) with ph + e t in Z for every (ph, e)."""
    moving = [(ph, e) for ph, e in constraints if e != 0]
    if any(ph != 0 for ph, e in constraints if e == 0):
        return ()
    if not moving:
        return LambdaKernel.ALL
    ph0, e0 = moving[0]
    # t = (k - ph0) / e0 must land in [0, 1)
    lo, hi = (ph0, ph0 + e0) if e0 > 0 else (ph0 + e0, ph0)
    candidates = []
    k = _ceil(lo)
    while k <= hi:
        t = (k - ph0) / e0
        if 0 <= t < 1:
            candidates.append(t)
        k += 1
    sols = [t for t in candidates if all((ph + e * t).denominator == 1 for ph, e in moving)]
    return tuple(sorted(set(sols)))


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def is_faithful(d: LambdaRepDescriptor) -> bool:
    return lambda_kernel(d).is_trivial()


# compatibility with sums and restriction


@dataclass
class CompatReport:
    name: str
    lhs: LambdaRepDescriptor
    rhs: LambdaRepDescriptor

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        out = {"check": self.name, "pass": self.passed}
        if not self.passed:
            out["lhs"] = self.lhs.to_dict()
            out["rhs"] = self.rhs.to_dict()
        return out


def compat_direct_sum(
    V: GRep, W: GRep, sigma: Perm, tau: Perm, variant: str = "i"
) -> CompatReport:
    """(V + W)_(sigma, tau) versus V_sigma + W_tau over Lambda_{G x H}(sigma, tau)."""
    G, H = V.group, W.group
    prod, _, _, proj_g, proj_h = direct_product(G, H)
    st = pair_element(G, sigma, tau)
    VW = GRep(prod, restrict_character(V.character, proj_g) + restrict_character(W.character, proj_h))
    lhs = v_sigma_variants(VW, st, variant)
    C = prod.centralizer(st)
    to_g = GroupHom(C, G.centralizer(sigma), {x: proj_g.mapping[x] for x in C.elements}, check=False)
    to_h = GroupHom(C, H.centralizer(tau), {x: proj_h.mapping[x] for x in C.elements}, check=False)
    rhs = v_sigma_variants(V, sigma, variant).pullback(to_g, st) + v_sigma_variants(
        W, tau, variant
    ).pullback(to_h, st)
    return CompatReport(f"direct-sum[{variant}]", lhs, rhs)


def compat_pullback(V: GRep, phi: GroupHom, tau: Perm, variant: str = "i") -> CompatReport:
    """phi_tau^* (V)_phi(tau) versus (phi^* V)_tau over Lambda_H(tau)."""
    H, G = phi.domain, phi.codomain
    sigma = phi.mapping[tau]
    CH = H.centralizer(tau)
    CG = G.centralizer(sigma)
    phi_tau = GroupHom(CH, CG, {x: phi.mapping[x] for x in CH.elements}, check=False)
    lhs = v_sigma_variants(V, sigma, variant).pullback(phi_tau, tau)
    rhs = v_sigma_variants(V.restrict(phi), tau, variant)
    return CompatReport(f"pullback[{variant}]", lhs, rhs)


def compat_checks(
    V: GRep, W: GRep, sigma: Perm, tau: Perm, phi: GroupHom | None = None, variants: Sequence[str] = ("i", "ii", "iii")
) -> list[CompatReport]:
    reports = [compat_direct_sum(V, W, sigma, tau, v) for v in variants]
    if phi is not None:
        if phi.codomain != V.group:
            raise ValueError("phi must land in V's group")
        reports += [compat_pullback(V, phi, tau, v) for v in variants]
    return reports


# real representation theory


def lambda_fs_indicator(table: CharacterTable, i: int, phase: Fraction) -> int:
    """Frobenius-Schur indicator of lambda_i (.) q^phase as a Lambda-representation.

    Over K x [0, 1) the squared element is [a^2, 2t]; the t-integral of
    exp(4 pi i phase t) vanishes unless phase = 0, and when 2 * phase is not
    an integer lambda_i is not self-dual, so its own indicator is already 0.
    """
    ind = fs_indicator(table[i])
    if phase == 0:
        return ind
    if (2 * phase).denominator != 1 and ind != 0:
        raise ArithmeticError("self-dual irreducible with a non-real central phase")
    return 0


@dataclass
class RealBasisElement:
    constituents: tuple[int, ...]
    real_dimension: int
    rep: LambdaRepDescriptor
    kind: str


def real_irreducibles(table: CharacterTable) -> list[tuple[tuple[int, ...], str]]:
    """Real irreducibles of K as complex constituents of their complexification."""
    out = []
    for i, chi in enumerate(table):
        ind = fs_indicator(chi)
        if ind == 1:
            out.append(((i,), "real"))
        elif ind == -1:
            out.append(((i, i), "quaternionic"))
        else:
            j = table.dual_index(i)
            if i < j:
                out.append(((i, j), "complex"))
    return out


def real_lambda_basis(descriptor: LambdaGroupDescriptor) -> list[RealBasisElement]:
    """One real Lambda_K(sigma)-representation per real irreducible of K.

    For sigma = e the real irreducible with trivial rotation. Otherwise
    (lambda_C (.) eta) + its dual, with eta the rotation character
    exp(2 pi i m t / l), 0 < m <= l, fixed by how sigma acts on each
    constituent; this has twice the dimension of lambda.
    """
    K = descriptor.group
    table = character_table(K)
    sigma = descriptor.central_element
    l = descriptor.order_l
    out = []
    for consts, kind in real_irreducibles(table):
        dim = sum(table.degrees[i] for i in consts)
        if sigma == K.identity:
            rep = LambdaRepDescriptor(descriptor, tuple((i, 1, Fraction(0)) for i in consts))
            out.append(RealBasisElement(consts, dim, rep, kind))
        else:
            comps = []
            for i in consts:
                e = appendix_phase(table[i], sigma, l)
                comps.append((i, 1, e))
                comps.append((table.dual_index(i), 1, -e))
            rep = LambdaRepDescriptor(descriptor, tuple(comps))
            out.append(RealBasisElement(consts, 2 * dim, rep, kind))
    return out


def real_class_count(K: FiniteGroup) -> int:
    """Classes closed under inversion."""
    inv = K.inverse_classes
    return sum(1 for k in range(len(inv)) if inv[k] == k)


__all__ = [
    "CompatReport",
    "GRep",
    "LambdaKernel",
    "LambdaRepDescriptor",
    "NotRealError",
    "VARIANTS",
    "compat_checks",
    "compat_direct_sum",
    "compat_pullback",
    "fixed_part",
    "is_faithful",
    "isotypify",
    "lambda_fs_indicator",
    "lambda_kernel",
    "real_class_count",
    "real_irreducibles",
    "real_lambda_basis",
    "v_sigma",
    "v_sigma_real",
    "v_sigma_variants",
]
