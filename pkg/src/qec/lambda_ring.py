"""The representation ring R(Lambda_K(g)) as a free Z[q, q^-1]-module.

Lambda_K(g) = K x R / <(g, -1)> is handled through its finite data (K, g):
each irreducible lambda of K on which g acts by exp(2 pi i c), c in [0, 1),
gives the basis element lambda (.) q^c, i.e. [h, t] -> lambda(h) exp(2 pi i c t).
An element is a Z[q^+-]-combination of these basis elements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .characters import CharacterTable, central_phase, character_table, restrict_character
from .groups import FiniteGroup, GroupHom, LambdaGroupDescriptor, conjugation_hom
from .laurent import ONE, ZERO, LaurentPoly
from .perm import Perm, conjugate, inverse


class PhaseMismatchError(ArithmeticError):
    pass


class LambdaBasis:
    """Canonical basis {lambda (.) q^c_lambda}, one entry per irreducible of K."""

    def __init__(self, descriptor: LambdaGroupDescriptor):
        self.descriptor = descriptor
        self.table: CharacterTable = character_table(descriptor.group)
        g, l = descriptor.central_element, descriptor.order_l
        self.phases: tuple[Fraction, ...] = tuple(central_phase(chi, g, l) for chi in self.table)
        self._products: dict[tuple[int, int], dict[int, LaurentPoly]] = {}

    @property
    def group(self) -> FiniteGroup:
        return self.descriptor.group

    @property
    def central_element(self) -> Perm:
        return self.descriptor.central_element

    @property
    def order_l(self) -> int:
        return self.descriptor.order_l

    @property
    def rank(self) -> int:
        return len(self.phases)

    def entries(self) -> list[tuple[int, Fraction]]:
        return list(enumerate(self.phases))

    def phase_label(self, i: int) -> str:
        l = self.order_l
        return f"{self.phases[i] * l}/{l}"

    def product(self, i: int, j: int) -> dict[int, LaurentPoly]:
        """(b_i)(b_j) = sum_mu n_mu q^(c_i + c_j - c_mu) b_mu."""
        key = (i, j) if i <= j else (j, i)
        if key not in self._products:
            chi = self.table[i] * self.table[j]
            mults = self.table.multiplicities(chi)
            out = {}
            for mu, n in enumerate(mults):
                if not n:
                    continue
                shift = self.phases[i] + self.phases[j] - self.phases[mu]
                if shift.denominator != 1:
                    raise PhaseMismatchError(
                        f"non-integral exponent {shift} in product of basis elements {i}, {j}"
                    )
                out[mu] = LaurentPoly({int(shift): n})
            self._products[key] = out
        return self._products[key]

    def one(self) -> LambdaRingElement:
        return LambdaRingElement(self, {0: ONE})

    def zero(self) -> LambdaRingElement:
        return LambdaRingElement(self, {})

    def basis_element(self, i: int) -> LambdaRingElement:
        return LambdaRingElement(self, {i: ONE})

    def same_as(self, other: LambdaBasis) -> bool:
        return self is other or (
            self.descriptor.group == other.descriptor.group
            and self.central_element == other.central_element
        )

    def to_json(self) -> list[dict]:
        return [{"irrep": i, "phase": self.phase_label(i)} for i in range(self.rank)]

    def __repr__(self) -> str:
        return f"<LambdaBasis |K|={self.group.order} l={self.order_l} rank={self.rank}>"


_BASIS_CACHE: dict[tuple, LambdaBasis] = {}


def lambda_basis(descriptor: LambdaGroupDescriptor | tuple[FiniteGroup, Perm]) -> LambdaBasis:
    if not isinstance(descriptor, LambdaGroupDescriptor):
        descriptor = LambdaGroupDescriptor(*descriptor)
    key = (descriptor.group.key, descriptor.central_element)
    basis = _BASIS_CACHE.get(key)
    if basis is None:
        basis = LambdaBasis(descriptor)
        _BASIS_CACHE[key] = basis
    return basis


def lambda_rank(basis: LambdaBasis) -> int:
    return basis.rank


class LambdaRingElement:
    """sum_i coeffs[i] * b_i with Laurent polynomial coefficients."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: LambdaBasis, coeffs: Mapping[int, LaurentPoly | int]):
        self.basis = basis
        clean = {}
        for i, c in coeffs.items():
            if not 0 <= i < basis.rank:
                raise IndexError(f"basis index {i} out of range")
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)
            if c:
                clean[i] = c
        self.coeffs: dict[int, LaurentPoly] = dict(sorted(clean.items()))

    @classmethod
    def from_vector(cls, basis: LambdaBasis, vec) -> LambdaRingElement:
        return cls(basis, dict(enumerate(vec)))

    def vector(self) -> list[LaurentPoly]:
        return [self.coeffs.get(i, ZERO) for i in range(self.basis.rank)]

    def _check(self, other: LambdaRingElement) -> None:
        if not self.basis.same_as(other.basis):
            raise ValueError("elements of different representation rings")

    def __add__(self, other: LambdaRingElement) -> LambdaRingElement:
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, ZERO) + c
        return LambdaRingElement(self.basis, out)

    def __neg__(self) -> LambdaRingElement:
        return LambdaRingElement(self.basis, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: LambdaRingElement) -> LambdaRingElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return LambdaRingElement(self.basis, {i: c * other for i, c in self.coeffs.items()})
        if not isinstance(other, LambdaRingElement):
            return NotImplemented
        self._check(other)
        out: dict[int, LaurentPoly] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                ab = a * b
                for mu, coef in self.basis.product(i, j).items():
                    out[mu] = out.get(mu, ZERO) + ab * coef
        return LambdaRingElement(self.basis, out)

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self * other
        return NotImplemented

    def q_scale(self, k: int) -> LambdaRingElement:
        return LambdaRingElement(self.basis, {i: c.shift(k) for i, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaRingElement):
            return NotImplemented
        return self.basis.same_as(other.basis) and self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def dimension_polynomial(self) -> LaurentPoly:
        """Image under forgetting K: sum deg(lambda_i) * coeff_i (a Laurent polynomial)."""
        out = ZERO
        for i, c in self.coeffs.items():
            out = out + c * self.basis.table.degrees[i]
        return out

    def to_json(self) -> list[dict]:
        return [
            {"irrep_index": i, "phase": self.basis.phase_label(i), "coeff": c.to_json()}
            for i, c in self.coeffs.items()
        ]

    @classmethod
    def from_json(cls, basis: LambdaBasis, data) -> LambdaRingElement:
        coeffs = {}
        for item in data:
            i = int(item["irrep_index"])
            if item["phase"] != basis.phase_label(i):
                raise ValueError(f"phase {item['phase']} does not match basis entry {i}")
            coeffs[i] = LaurentPoly.from_json(item["coeff"])
        return cls(basis, coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in self.coeffs.items():
            parts.append(f"({c})*[chi{i} q^{self.basis.phases[i]}]")
        return " + ".join(parts)


def from_isotypic(
    basis: LambdaBasis, components: Sequence[tuple[int, int, Fraction]]
) -> LambdaRingElement:
    """Rewrite sum n * (lambda (.) q^e) in the canonical basis.

    This is the only place where phases outside [0, 1) (for instance the
    (0, 1] convention used by the faithful-representation constructions, or
    negative phases from duals and q^-1 twists) meet the canonical basis:
    lambda (.) q^e = q^(e - c_lambda) * (lambda (.) q^c_lambda).
    """
    out: dict[int, LaurentPoly] = {}
    for i, n, e in components:
        shift = Fraction(e) - basis.phases[i]
        if shift.denominator != 1:
            raise PhaseMismatchError(
                f"phase {e} is incompatible with the central phase {basis.phases[i]} of irrep {i}"
            )
        out[i] = out.get(i, ZERO) + LaurentPoly({int(shift): n})
    return LambdaRingElement(basis, out)


def lambda_mul(x: LambdaRingElement, y: LambdaRingElement) -> LambdaRingElement:
    return x * y


def lambda_q_scale(x: LambdaRingElement, k: int) -> LambdaRingElement:
    return x.q_scale(k)


# maps between representation rings


def restriction_columns(
    source: LambdaBasis, target: LambdaBasis, hom: GroupHom
) -> list[dict[int, int]]:
    """Pull-back of each source basis element along ``hom: K' -> K``.

    ``hom`` must send the target central element to the source one. Column i
    maps target index -> multiplicity of that basis element in the pull-back
    of source basis element i.
    """
    if hom.codomain != source.group or hom.domain != target.group:
        raise ValueError("homomorphism does not match the two Lambda groups")
    if hom.mapping[target.central_element] != source.central_element:
        raise ValueError("homomorphism does not carry the central elements onto each other")
    cols = []
    for i, chi in enumerate(source.table):
        pulled = restrict_character(chi, hom)
        mults = target.table.multiplicities(pulled)
        col = {}
        for mu, n in enumerate(mults):
            if not n:
                continue
            if target.phases[mu] != source.phases[i]:
                raise PhaseMismatchError(
                    f"restricted component {mu} has phase {target.phases[mu]}, expected {source.phases[i]}"
                )
            col[mu] = n
        cols.append(col)
    return cols


def apply_columns(
    cols: list[dict[int, int]], x: LambdaRingElement, target: LambdaBasis
) -> LambdaRingElement:
    out: dict[int, LaurentPoly] = {}
    for i, c in x.coeffs.items():
        for mu, n in cols[i].items():
            out[mu] = out.get(mu, ZERO) + c * n
    return LambdaRingElement(target, out)


def lambda_restrict(
    x: LambdaRingElement, hom: GroupHom, target_central: Perm
) -> LambdaRingElement:
    """Pull ``x`` back along ``Lambda_{K'}(g') -> Lambda_K(g)``, [h, t] -> [hom(h), t]."""
    target = lambda_basis(LambdaGroupDescriptor(hom.domain, target_central))
    cols = restriction_columns(x.basis, target, hom)
    return apply_columns(cols, x, target)


def transport_hom(source: LambdaBasis, target_group: FiniteGroup, u: Perm) -> GroupHom:
    """``k' -> u^-1 k' u`` from the conjugated group back to the source group."""
    u_inv = inverse(u)
    for k in target_group.generators:
        if conjugate(u_inv, k) not in source.group:
            raise ValueError("u does not conjugate K onto K'")
    return conjugation_hom(target_group, source.group, u_inv)


def lambda_conjugate_transport(
    x: LambdaRingElement, u: Perm, target_group: FiniteGroup
) -> LambdaRingElement:
    """Carry ``x`` from Lambda_K(g) to Lambda_{uKu^-1}(u g u^-1)."""
    g_new = conjugate(u, x.basis.central_element)
    if target_group.order != x.basis.group.order:
        raise ValueError("target group is not a conjugate of K")
    hom = transport_hom(x.basis, target_group, u)
    return lambda_restrict(x, hom, g_new)


__all__ = [
    "LambdaBasis",
    "LambdaRingElement",
    "PhaseMismatchError",
    "apply_columns",
    "from_isotypic",
    "lambda_basis",
    "lambda_conjugate_transport",
    "lambda_mul",
    "lambda_q_scale",
    "lambda_rank",
    "lambda_restrict",
    "restriction_columns",
]
