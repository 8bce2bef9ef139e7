"""Degree-zero quasi-elliptic cohomology of finite G-sets.

QEll^0_G(X) is the product over conjugacy-class representatives g of
K^0_{Lambda_G(g)}(X^g). Splitting X^g into C_G(g)-orbits identifies each
factor with a sum of representation rings R(Lambda_{S_x}(g)), S_x the
stabilizer of the orbit representative x. Everything below works in that
presentation: a QEll element is one Lambda-ring element per (class, orbit),
and a map is a block matrix over Z[q^+-].
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .groups import FiniteGroup, GroupHom, LambdaGroupDescriptor, conjugation_hom, inclusion
from .gsets import FiniteGSet, GMap, induced_gset
from .lambda_ring import LambdaBasis, LambdaRingElement, lambda_basis, restriction_columns
from .laurent import ONE, ZERO, LaurentPoly
from .linalg import Matrix, bareiss_det, identity_matrix, mat_mul, mat_vec, zeros
from .perm import Perm, compose, conjugate, format_perm


@dataclass
class QEllFactor:
    class_index: int
    class_rep: Perm
    orbit_rep: int
    orbit: tuple[int, ...]
    stabilizer: FiniteGroup
    basis: LambdaBasis
    offset: int

    @property
    def rank(self) -> int:
        return self.basis.rank


@dataclass
class QEllDecomposition:
    group: FiniteGroup
    gset: FiniteGSet
    factors: list[QEllFactor]
    class_factors: list[list[int]]
    total_rank: int
    _lookup: dict = field(default_factory=dict, repr=False)

    def factor_of_point(self, class_index: int, point: int) -> int:
        """Index of the factor whose orbit (in this class) contains ``point``."""
        key = (class_index, point)
        if key not in self._lookup:
            for fi in self.class_factors[class_index]:
                if point in self.factors[fi].orbit:
                    self._lookup[key] = fi
                    break
            else:
                raise KeyError(f"point {point} is not fixed by class {class_index}")
        return self._lookup[key]

    def class_rank(self, class_index: int) -> int:
        return sum(self.factors[fi].rank for fi in self.class_factors[class_index])

    def class_ranks(self) -> list[int]:
        return [self.class_rank(i) for i in range(len(self.class_factors))]

    def same_as(self, other: QEllDecomposition) -> bool:
        return (
            self is other
            or (
                self.group == other.group
                and len(self.gset) == len(other.gset)
                and all(self.gset.table[g] == other.gset.table[g] for g in self.group.elements)
            )
        )

    def to_dict(self) -> dict:
        factors = []
        for ci, rep in enumerate(self.group.class_reps):
            orbits = []
            for fi in self.class_factors[ci]:
                f = self.factors[fi]
                orbits.append(
                    {
                        "rep": str(self.gset.labels[f.orbit_rep]),
                        "stabilizer_order": f.stabilizer.order,
                        "rank": f.rank,
                        "basis": f.basis.to_json(),
                    }
                )
            factors.append({"class_rep": format_perm(rep), "orbits": orbits})
        return {
            "group": self.group.label(),
            "gset": self.gset.label(),
            "factors": factors,
            "total_rank": self.total_rank,
        }

    def one(self) -> QEllElement:
        return QEllElement(self, [f.basis.one() for f in self.factors])

    def zero(self) -> QEllElement:
        return QEllElement(self, [f.basis.zero() for f in self.factors])


def qell_of_gset(G: FiniteGroup, X: FiniteGSet) -> QEllDecomposition:
    if X.group != G:
        raise ValueError("X is not a G-set")
    factors: list[QEllFactor] = []
    class_factors: list[list[int]] = []
    offset = 0
    for ci, g in enumerate(G.class_reps):
        C = G.centralizer(g)
        fixed = X.fixed_points(g)
        idxs = []
        for rep, orbit, stab in X.orbits(C, fixed):
            # g fixes the representative and commutes with C, so it is central in the stabilizer
            basis = lambda_basis(LambdaGroupDescriptor(stab, g))
            idxs.append(len(factors))
            factors.append(QEllFactor(ci, g, rep, orbit, stab, basis, offset))
            offset += basis.rank
        class_factors.append(idxs)
    return QEllDecomposition(G, X, factors, class_factors, offset)


def qell_rank(d: QEllDecomposition) -> int:
    return d.total_rank


class QEllElement:
    def __init__(self, decomposition: QEllDecomposition, components: Sequence[LambdaRingElement]):
        if len(components) != len(decomposition.factors):
            raise ValueError("one component per factor is required")
        for comp, f in zip(components, decomposition.factors):
            if not comp.basis.same_as(f.basis):
                raise ValueError("component does not lie in its factor's ring")
        self.decomposition = decomposition
        self.components = list(components)

    @classmethod
    def from_vector(cls, d: QEllDecomposition, vec: Sequence[LaurentPoly]) -> QEllElement:
        comps = []
        for f in d.factors:
            comps.append(LambdaRingElement.from_vector(f.basis, vec[f.offset : f.offset + f.rank]))
        return cls(d, comps)

    def vector(self) -> list[LaurentPoly]:
        out = []
        for c in self.components:
            out.extend(c.vector())
        return out

    def __add__(self, other: QEllElement) -> QEllElement:
        return QEllElement(self.decomposition, [a + b for a, b in zip(self.components, other.components)])

    def __mul__(self, other):
        if isinstance(other, QEllElement):
            return QEllElement(
                self.decomposition, [a * b for a, b in zip(self.components, other.components)]
            )
        return QEllElement(self.decomposition, [a * other for a in self.components])

    def __eq__(self, other) -> bool:
        if not isinstance(other, QEllElement):
            return NotImplemented
        return self.vector() == other.vector()

    __hash__ = None


def random_element(d: QEllDecomposition, rng: random.Random, *, terms: int = 2) -> QEllElement:
    vec = []
    for _ in range(d.total_rank):
        if rng.random() < 0.3:
            vec.append(ZERO)
            continue
        vec.append(LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(terms)}))
    return QEllElement.from_vector(d, vec)


class QEllMap:
    """A Z[q^+-]-linear map ``source -> target``; column j is the image of source basis j."""

    def __init__(self, source: QEllDecomposition, target: QEllDecomposition, matrix: Matrix):
        if len(matrix) != target.total_rank or any(len(r) != source.total_rank for r in matrix):
            raise ValueError("matrix shape does not match the decompositions")
        self.source = source
        self.target = target
        self.matrix = matrix

    def block(self, target_factor: int, source_factor: int) -> Matrix:
        tf = self.target.factors[target_factor]
        sf = self.source.factors[source_factor]
        return [
            row[sf.offset : sf.offset + sf.rank]
            for row in self.matrix[tf.offset : tf.offset + tf.rank]
        ]

    def __call__(self, x: QEllElement) -> QEllElement:
        if not x.decomposition.same_as(self.source):
            raise ValueError("element is not in the source")
        return QEllElement.from_vector(self.target, mat_vec(self.matrix, x.vector()))

    def after(self, first: QEllMap) -> QEllMap:
        """``self o first``."""
        if not first.target.same_as(self.source):
            raise ValueError("maps are not composable")
        return QEllMap(first.source, self.target, mat_mul(self.matrix, first.matrix))

    def is_square(self) -> bool:
        return self.source.total_rank == self.target.total_rank

    def determinant(self) -> LaurentPoly:
        return bareiss_det(self.matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QEllMap):
            return NotImplemented
        return (
            self.source.same_as(other.source)
            and self.target.same_as(other.target)
            and self.matrix == other.matrix
        )

    __hash__ = None

    def to_json(self) -> list[list[list[list[int]]]]:
        return [[x.to_json() for x in row] for row in self.matrix]


def identity_map(d: QEllDecomposition) -> QEllMap:
    return QEllMap(d, d, identity_matrix(d.total_rank))


def _pick(candidates: list[Perm], choice: str) -> Perm:
    if not candidates:
        raise ValueError("no conjugating element exists")
    return candidates[0] if choice == "least" else candidates[-1]


def _fill(matrix: Matrix, tf: QEllFactor, sf: QEllFactor, cols: list[dict[int, int]]) -> None:
    for i, col in enumerate(cols):
        for mu, n in col.items():
            matrix[tf.offset + mu][sf.offset + i] = LaurentPoly.constant(n)


def pullback_gmap(
    f: GMap,
    *,
    source: QEllDecomposition | None = None,
    target: QEllDecomposition | None = None,
    choice: str = "least",
) -> QEllMap:
    """f^*: QEll(Y) -> QEll(X) for an equivariant ``f: X -> Y``."""
    G = f.source.group
    src = source or qell_of_gset(G, f.target)
    tgt = target or qell_of_gset(G, f.source)
    if source is not None and not src.same_as(qell_stub(G, f.target)):
        raise ValueError("source decomposition does not belong to the map's target")
    matrix = zeros(tgt.total_rank, src.total_rank)
    for ti, tf in enumerate(tgt.factors):
        g = tf.class_rep
        C = G.centralizer(g)
        fx = f.images[tf.orbit_rep]
        si = src.factor_of_point(tf.class_index, fx)
        sf = src.factors[si]
        c = _pick([k for k in C.elements if f.target.table[k][fx] == sf.orbit_rep], choice)
        # fibre at f(x) seen from the orbit representative: s -> c s c^-1
        psi = conjugation_hom(tf.stabilizer, sf.stabilizer, c)
        _fill(matrix, tf, sf, restriction_columns(sf.basis, tf.basis, psi))
    return QEllMap(src, tgt, matrix)


def qell_stub(G: FiniteGroup, X: FiniteGSet) -> QEllDecomposition:
    # comparison helper: only group and gset are consulted by same_as
    return QEllDecomposition(G, X, [], [], 0)


def restriction_hom(
    phi: GroupHom,
    X: FiniteGSet,
    *,
    source: QEllDecomposition | None = None,
    target: QEllDecomposition | None = None,
    choice: str = "least",
) -> QEllMap:
    """phi^*: QEll_G(X) -> QEll_H(phi^* X) for ``phi: H -> G``."""
    H, G = phi.domain, phi.codomain
    if X.group != G:
        raise ValueError("X is not a G-set")
    src = source or qell_of_gset(G, X)
    tgt = target or qell_of_gset(H, X.restrict(phi))
    matrix = zeros(tgt.total_rank, src.total_rank)
    for tf in tgt.factors:
        tau = tf.class_rep
        sigma = phi.mapping[tau]
        ci = G.class_of(sigma)
        g = G.class_reps[ci]
        u = _pick(G.conjugators(sigma, g), choice)
        y1 = X.table[u][tf.orbit_rep]
        si = src.factor_of_point(ci, y1)
        sf = src.factors[si]
        C = G.centralizer(g)
        c = _pick([k for k in C.elements if X.table[k][y1] == sf.orbit_rep], choice)
        w = compose(c, u)
        mapping = {s: conjugate(w, phi.mapping[s]) for s in tf.stabilizer.elements}
        psi = GroupHom(tf.stabilizer, sf.stabilizer, mapping, check=False)
        _fill(matrix, tf, sf, restriction_columns(sf.basis, tf.basis, psi))
    return QEllMap(src, tgt, matrix)


@dataclass
class ChangeOfGroup:
    map: QEllMap
    restriction: QEllMap
    pullback: QEllMap
    induced: FiniteGSet


def change_of_group(H: FiniteGroup, G: FiniteGroup, X: FiniteGSet, *, choice: str = "least") -> ChangeOfGroup:
    """rho^G_H = i^* o phi^*: QEll_G(G x_H X) -> QEll_H(X)."""
    if X.group != H:
        raise ValueError("X is not an H-set")
    incl = inclusion(H, G)
    ind, i_map = induced_gset(incl, X)
    ind_h = ind.restrict(incl)
    mid = qell_of_gset(H, ind_h)
    res = restriction_hom(incl, ind, target=mid, choice=choice)
    i = GMap(X, ind_h, tuple(i_map))
    pb = pullback_gmap(i, source=mid, choice=choice)
    return ChangeOfGroup(pb.after(res), res, pb, ind)


@dataclass
class IsoCertificate:
    square: bool
    size: tuple[int, int]
    determinant: LaurentPoly | None
    is_unit: bool

    def to_dict(self) -> dict:
        return {
            "square": self.square,
            "size": list(self.size),
            "determinant": str(self.determinant) if self.determinant is not None else None,
            "unit": self.is_unit,
        }


def verify_change_of_group_iso(m: QEllMap) -> tuple[bool, IsoCertificate]:
    size = (m.target.total_rank, m.source.total_rank)
    if not m.is_square():
        return False, IsoCertificate(False, size, None, False)
    det = m.determinant()
    ok = det.is_unit()
    return ok, IsoCertificate(True, size, det, ok)


def check_ring_map(m: QEllMap, rng: random.Random, trials: int = 3) -> bool:
    if m(m.source.one()) != m.target.one():
        return False
    for _ in range(trials):
        x = random_element(m.source, rng)
        y = random_element(m.source, rng)
        if m(x * y) != m(x) * m(y):
            return False
    return True


__all__ = [
    "ChangeOfGroup",
    "IsoCertificate",
    "QEllDecomposition",
    "QEllElement",
    "QEllFactor",
    "QEllMap",
    "change_of_group",
    "check_ring_map",
    "identity_map",
    "pullback_gmap",
    "qell_of_gset",
    "qell_rank",
    "random_element",
    "restriction_hom",
    "verify_change_of_group_iso",
]
