"""Exact complex character theory of finite permutation groups.

Irreducible character tables come from Dixon's method: the class-algebra
structure constants are simultaneously diagonalized over F_p with
p = 1 (mod exponent), and the resulting character values mod p are lifted
to Q(zeta_e) through eigenvalue multiplicities. Tables are checked against
row orthogonality before they are returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import Cyclotomic
from .groups import FiniteGroup, GroupHom, inclusion
from .perm import Perm, compose, conjugate, inverse


class NotACharacterError(ValueError):
    pass


class NonScalarActionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ClassFunction:
    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.conjugacy_classes):
            raise ValueError("one value per conjugacy class is required")

    def __call__(self, g: Perm) -> Cyclotomic:
        return self.values[self.group.class_of(g)]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def int_degree(self) -> int:
        return self.values[0].as_int()

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            _same_group(self, other)
            return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group == other.group and all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def dual(self) -> ClassFunction:
        return ClassFunction(self.group, tuple(v.conj() for v in self.values))

    def is_real_valued(self) -> bool:
        return all(v == v.conj() for v in self.values)

    def inner(self, other: ClassFunction) -> Fraction | Cyclotomic:
        return inner_product(self, other)


def _same_group(a: ClassFunction, b: ClassFunction) -> None:
    if a.group != b.group:
        raise ValueError("class functions live on different groups")


def constant_function(group: FiniteGroup, c) -> ClassFunction:
    v = Cyclotomic.rational(c)
    return ClassFunction(group, (v,) * len(group.conjugacy_classes))


def trivial_character(group: FiniteGroup) -> ClassFunction:
    return constant_function(group, 1)


def regular_character(group: FiniteGroup) -> ClassFunction:
    zero = Cyclotomic.rational(0)
    vals = [zero] * len(group.conjugacy_classes)
    vals[0] = Cyclotomic.rational(group.order)
    return ClassFunction(group, tuple(vals))


def permutation_character(gset) -> ClassFunction:
    """Number of fixed points of each class representative on a G-set."""
    G = gset.group
    return ClassFunction(
        G, tuple(Cyclotomic.rational(len(gset.fixed_points(g))) for g in G.class_reps)
    )


def inner_product(a: ClassFunction, b: ClassFunction):
    """(1/|G|) sum_g a(g) conj(b(g)); returned as a Fraction when rational."""
    _same_group(a, b)
    G = a.group
    total = Cyclotomic.rational(0)
    for size, x, y in zip(G.class_sizes, a.values, b.values):
        if x and y:
            total = total + x * y.conj() * size
    total = total * Fraction(1, G.order)
    return total.as_rational() if total.is_rational() else total


def restrict_character(chi: ClassFunction, along: GroupHom | FiniteGroup) -> ClassFunction:
    """Pull ``chi`` back along a homomorphism into its group (or to a subgroup)."""
    hom = along if isinstance(along, GroupHom) else inclusion(along, chi.group)
    if hom.codomain != chi.group:
        raise ValueError("homomorphism does not land in the character's group")
    G = chi.group
    H = hom.domain
    return ClassFunction(H, tuple(chi.values[G.class_of(hom.mapping[h])] for h in H.class_reps))


def induce_character(chi: ClassFunction, G: FiniteGroup) -> ClassFunction:
    H = chi.group
    if not H.is_subgroup_of(G):
        raise ValueError("induction needs a subgroup")
    zero = Cyclotomic.rational(0)
    vals = []
    for g in G.class_reps:
        total = zero
        for x in G.elements:
            y = conjugate(x, g)
            if y in H.index:
                total = total + chi(y)
        vals.append(total * Fraction(1, H.order))
    return ClassFunction(G, tuple(vals))


class CharacterTable:
    """The irreducible characters of a group in normalized order.

    Order: by degree, trivial character first, then descending lexicographic
    on the coefficient vectors of the values (class order).
    """

    def __init__(self, group: FiniteGroup, irreducibles: Sequence[ClassFunction]):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(chi.int_degree() for chi in self.irreducibles)

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    def decompose(self, chi: ClassFunction) -> list:
        """Inner products of ``chi`` against every irreducible."""
        if chi.group != self.group:
            raise ValueError("class function on a different group")
        if not hasattr(self, "_weighted"):
            # conj(chi_i) * |class|, reused by every decomposition
            sizes = self.group.class_sizes
            self._weighted = [
                [y.conj() * size for size, y in zip(sizes, irr.values)] for irr in self.irreducibles
            ]
        scale = Fraction(1, self.group.order)
        out = []
        for row in self._weighted:
            total = Cyclotomic.rational(0)
            for x, w in zip(chi.values, row):
                if x and w:
                    total = total + x * w
            total = total * scale
            out.append(total.as_rational() if total.is_rational() else total)
        return out

    def multiplicities(self, chi: ClassFunction) -> list[int]:
        """Decompose a genuine character; raise if it is not one."""
        out = []
        for m in self.decompose(chi):
            if isinstance(m, Cyclotomic) or m.denominator != 1 or m < 0:
                raise NotACharacterError(f"not a character: multiplicity {m}")
            out.append(int(m))
        return out

    def index_of(self, chi: ClassFunction) -> int:
        for i, irr in enumerate(self.irreducibles):
            if irr == chi:
                return i
        raise KeyError("not an irreducible character of this group")

    def compose(self, mults: Sequence[int]) -> ClassFunction:
        total = constant_function(self.group, 0)
        for m, irr in zip(mults, self.irreducibles):
            if m:
                total = total + irr * m
        return total

    def dual_index(self, i: int) -> int:
        return self._dual_indices()[i]

    def _dual_indices(self) -> tuple[int, ...]:
        if not hasattr(self, "_duals"):
            self._duals = tuple(self.index_of(chi.dual()) for chi in self.irreducibles)
        return self._duals

    def to_rows(self) -> list[list[str]]:
        return [[str(v) for v in chi.values] for chi in self.irreducibles]


_TABLE_CACHE: dict[tuple, CharacterTable] = {}


def character_table(G: FiniteGroup) -> CharacterTable:
    cached = _TABLE_CACHE.get(G.key)
    if cached is not None:
        if cached.group is G:
            return cached
        table = CharacterTable(G, [ClassFunction(G, chi.values) for chi in cached.irreducibles])
        return table
    irrs = dixon_irreducibles(G)
    table = CharacterTable(G, irrs)
    _check_orthonormal(table)
    _TABLE_CACHE[G.key] = table
    return table


def _check_orthonormal(table: CharacterTable) -> None:
    irrs = table.irreducibles
    for i, a in enumerate(irrs):
        for j, b in enumerate(irrs):
            if j < i:
                continue
            if inner_product(a, b) != (1 if i == j else 0):
                raise ArithmeticError("character table failed row orthogonality")


# Dixon's method


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    return all(n % d for d in range(3, r + 1, 2))


def dixon_prime(G: FiniteGroup) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2 * sqrt|G| * sqrt|G|."""
    e = G.exponent
    p = (2 * G.order // e) * e + 1
    while p <= 2 * G.order or not _is_prime(p):
        p += e
    return p


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = [q for q in range(2, phi + 1) if phi % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    return 1


def class_structure_constants(G: FiniteGroup) -> list[list[list[int]]]:
    """a[i][j][k] = #{(x, y) in C_i x C_j : x y = z_k} for class reps z_k."""
    r = len(G.conjugacy_classes)
    cls = G.class_index
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, z in enumerate(G.class_reps):
        for i, C in enumerate(G.conjugacy_classes):
            for x in C:
                y = compose(inverse(x), z)
                a[i][cls[y]][k] += 1
    return a


def _nullspace_mod(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : rows . v = 0} over F_p."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % p
        basis.append(v)
    return basis


def _charpoly_roots(A: list[list[int]], p: int) -> list[int]:
    """Roots in F_p of the characteristic polynomial (Faddeev-LeVerrier)."""
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A M + c_{n-k+1} I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] = (AM[i][i] + coeffs[n - k + 1]) % p
        M = AM
        tr = sum(sum(A[i][t] * M[t][i] for t in range(n)) for i in range(n)) % p
        coeffs[n - k] = (-tr * pow(k, -1, p)) % p
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _common_eigenvectors(mats: list[list[list[int]]], r: int, p: int) -> list[list[int]]:
    # spaces are lists of column vectors (length r), each invariant under all mats
    spaces = [[[1 if i == j else 0 for i in range(r)] for j in range(r)]]
    for M in mats:
        if all(len(s) == 1 for s in spaces):
            break
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            d = len(basis)
            # coordinates of M b_s in the basis: solve basis-matrix * x = M b_s
            images = [[sum(M[i][k] * b[k] for k in range(r)) % p for i in range(r)] for b in basis]
            A = [[0] * d for _ in range(d)]
            for s, img in enumerate(images):
                coords = _solve_in_span(basis, img, p)
                for t in range(d):
                    A[t][s] = coords[t]
            for lam in _charpoly_roots(A, p):
                shifted = [[(A[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
                null = _nullspace_mod(shifted, p)
                vecs = [
                    [sum(c[t] * basis[t][i] for t in range(d)) % p for i in range(r)] for c in null
                ]
                new_spaces.append(vecs)
        spaces = new_spaces
    if any(len(s) != 1 for s in spaces) or len(spaces) != r:
        raise ArithmeticError("class algebra did not split into one-dimensional eigenspaces")
    return [s[0] for s in spaces]


def _solve_in_span(basis: list[list[int]], target: list[int], p: int) -> list[int]:
    d = len(basis)
    r = len(target)
    rows = [[basis[s][i] for s in range(d)] + [target[i]] for i in range(r)]
    sol_space = _nullspace_mod(rows, p)
    # find the solution with last coordinate -1
    for v in sol_space:
        if v[d] % p:
            inv = pow(-v[d], -1, p)
            return [(x * inv) % p for x in v[:d]]
    raise ArithmeticError("vector not in span")


def dixon_irreducibles(G: FiniteGroup) -> list[ClassFunction]:
    r = len(G.conjugacy_classes)
    n = G.order
    e = G.exponent
    if r == 1:
        return [trivial_character(G)]
    p = dixon_prime(G)
    a = class_structure_constants(G)
    mats = [[[a[i][j][k] % p for k in range(r)] for i in range(r)] for j in range(1, r)]
    vecs = _common_eigenvectors(mats, r, p)
    sizes = G.class_sizes
    inv_cls = G.inverse_classes
    z = pow(_primitive_root(p), (p - 1) // e, p)
    powers = [G.power_map(s) for s in range(e)]
    irrs = []
    for w in vecs:
        w0inv = pow(w[0], -1, p)
        w = [(x * w0inv) % p for x in w]
        s = sum(w[k] * w[inv_cls[k]] * pow(sizes[k], -1, p) for k in range(r)) % p
        d2 = (n * pow(s, -1, p)) % p
        deg = next((d for d in range(1, math.isqrt(n) + 1) if (d * d - d2) % p == 0), None)
        if deg is None:
            raise ArithmeticError("no admissible degree found")
        theta = [(w[k] * deg * pow(sizes[k], -1, p)) % p for k in range(r)]
        values = []
        inv_e = pow(e, -1, p)
        for k in range(r):
            weights = {}
            for j in range(e):
                m = sum(theta[powers[t][k]] * pow(z, (-j * t) % e, p) for t in range(e))
                m = (m * inv_e) % p
                if m > deg:
                    raise ArithmeticError("eigenvalue multiplicity exceeds the degree")
                if m:
                    weights[j] = m
            values.append(Cyclotomic.from_exponents(e, weights))
        irrs.append(ClassFunction(G, tuple(values)))
    return sorted(irrs, key=_table_sort_key)


def _table_sort_key(chi: ClassFunction):
    e = chi.group.exponent
    trivial = all(v == 1 for v in chi.values)
    vec = tuple(-c for v in chi.values for c in v.embed(e).coeffs)
    return (chi.int_degree(), 0 if trivial else 1, vec)


# derived operations


def tensor_decompose(a: ClassFunction, b: ClassFunction, table: CharacterTable | None = None) -> list[int]:
    table = table or character_table(a.group)
    return table.multiplicities(a * b)


def fs_indicator(chi: ClassFunction) -> int:
    G = chi.group
    sq = G.power_map(2)
    total = Cyclotomic.rational(0)
    for k, size in enumerate(G.class_sizes):
        total = total + chi.values[sq[k]] * size
    ind = (total * Fraction(1, G.order)).as_rational()
    if ind not in (-1, 0, 1):
        raise NotACharacterError(f"indicator {ind} is not in {{-1, 0, 1}}; character not irreducible")
    return int(ind)


def dual_character(chi: ClassFunction) -> ClassFunction:
    return chi.dual()


def central_phase(chi: ClassFunction, z: Perm, l: int | None = None) -> Fraction:
    """The c in [0, 1) with chi(z) = exp(2 pi i c) chi(1); l * c is an integer."""
    from .perm import order as perm_order

    if l is None:
        l = perm_order(z)
    val = chi(z)
    deg = chi.degree
    for k in range(l):
        if val == deg * Cyclotomic.root_of_unity(l, k):
            return Fraction(k, l)
    raise NonScalarActionError("element does not act by a scalar of order dividing l")


def scalar_phase(chi: ClassFunction, a: Perm) -> Fraction | None:
    """Phase of ``a`` when it acts by a scalar on the representation, else None."""
    val = chi(a)
    deg = chi.degree
    if val * val.conj() != deg * deg:
        return None
    from .perm import order as perm_order

    return central_phase(chi, a, perm_order(a))


def column_orthogonality_holds(table: CharacterTable) -> bool:
    G = table.group
    r = len(G.conjugacy_classes)
    for k in range(r):
        for m in range(r):
            total = Cyclotomic.rational(0)
            for chi in table:
                total = total + chi.values[k] * chi.values[m].conj()
            expected = Fraction(G.order, G.class_sizes[k]) if k == m else 0
            if total != expected:
                return False
    return True


__all__ = [
    "CharacterTable",
    "ClassFunction",
    "NonScalarActionError",
    "NotACharacterError",
    "central_phase",
    "character_table",
    "dual_character",
    "fs_indicator",
    "induce_character",
    "inner_product",
    "permutation_character",
    "regular_character",
    "restrict_character",
    "tensor_decompose",
    "trivial_character",
]
