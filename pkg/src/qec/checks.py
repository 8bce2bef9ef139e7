"""Verification suites run by ``qec check``.

Each suite expands a corpus into jobs (small picklable tuples naming groups
by their labels), runs them, possibly in worker processes, and reports one
record per checked instance. Records are sorted by key, so the report does
not depend on scheduling.
"""

from __future__ import annotations

import random
import zlib
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .characters import (
    character_table,
    column_orthogonality_holds,
    fs_indicator,
    induce_character,
    inner_product,
    restrict_character,
    trivial_character,
)
from .corpus import Corpus, group_from_label
from .cyclotomic import Cyclotomic
from .faithful import (
    VARIANTS,
    GRep,
    LambdaRepDescriptor,
    compat_direct_sum,
    compat_pullback,
    is_faithful,
    real_class_count,
    real_lambda_basis,
    v_sigma,
    v_sigma_variants,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    LambdaGroupDescriptor,
    direct_product,
    identity_hom,
    inclusion,
    quotient_hom,
)
from .gsets import FiniteGSet, GMap
from .lambda_ring import PhaseMismatchError, lambda_basis
from .perm import compose, format_perm
from .qell import (
    change_of_group,
    check_ring_map,
    identity_map,
    pullback_gmap,
    qell_of_gset,
    restriction_hom,
    verify_change_of_group_iso,
)

SUITES = (
    "lemma-cl",
    "phases",
    "change-of-group",
    "functoriality",
    "worked-instance",
    "faithful",
    "compat",
    "characters",
)


def _rec(key: str, ok: bool, **extra) -> dict:
    return {"key": key, "pass": bool(ok), **extra}


def _g(label: str) -> FiniteGroup:
    return group_from_label(label)


def _sub(G: FiniteGroup, label: str) -> FiniteGroup:
    return G.subgroup(_g(label).elements)


# brute-force oracles, deliberately independent of the library's class machinery


def commuting_pairs_class_count(K: FiniteGroup) -> int:
    """#classes of K = #{(a, b) : ab = ba} / |K|."""
    els = K.elements
    n = sum(1 for a in els for b in els if compose(a, b) == compose(b, a))
    return n // len(els)


def fixed_orbit_oracle(G: FiniteGroup, X: FiniteGSet) -> list[int]:
    """Per class representative: sum over centralizer orbits on X^g of #classes(stabilizer)."""
    ranks = []
    for g in G.class_reps:
        C = [h for h in G.elements if compose(h, g) == compose(g, h)]
        fixed = [x for x in range(len(X)) if X.table[g][x] == x]
        todo, total = set(fixed), 0
        while todo:
            x = min(todo)
            orbit = {X.table[h][x] for h in C}
            todo -= orbit
            stab = [h for h in C if X.table[h][x] == x]
            total += commuting_pairs_class_count(G.subgroup(stab))
        ranks.append(total)
    return ranks


# lemma-cl


def _lemma_cl_jobs(corpus: Corpus):
    return [("lemma-cl", G.label()) for G in corpus.groups()]


def _lemma_cl(label: str) -> list[dict]:
    G = _g(label)
    out = []
    for g in G.elements:
        C = G.centralizer(g)
        rank = lambda_basis((C, g)).rank
        classes = len(C.conjugacy_classes)
        oracle = commuting_pairs_class_count(C)
        out.append(
            _rec(
                f"{label} | g={format_perm(g)}",
                rank == classes == oracle,
                rank=rank,
                classes=classes,
                oracle=oracle,
            )
        )
    return out


# phases


def _phases_jobs(corpus: Corpus):
    return [("phases", G.label()) for G in corpus.groups()]


def _phases(label: str) -> list[dict]:
    G = _g(label)
    out = []
    for g in G.elements:
        basis = lambda_basis((G.centralizer(g), g))
        l = basis.order_l
        ok_entries = all(
            chi(g) == chi.degree * Cyclotomic.root_of_unity(l, int(c * l))
            for chi, c in zip(basis.table, basis.phases)
        )
        ok_products, pairs = True, 0
        for i in range(basis.rank):
            for j in range(i, basis.rank):
                pairs += 1
                mults = basis.table.multiplicities(basis.table[i] * basis.table[j])
                for mu, n in enumerate(mults):
                    if n and (basis.phases[i] + basis.phases[j] - basis.phases[mu]).denominator != 1:
                        ok_products = False
                try:
                    basis.product(i, j)
                except PhaseMismatchError:
                    ok_products = False
        out.append(
            _rec(
                f"{label} | g={format_perm(g)}",
                ok_entries and ok_products,
                entries=basis.rank,
                product_pairs=pairs,
            )
        )
    return out


# change of group


def _coset_subgroup(H: FiniteGroup) -> FiniteGroup | None:
    for K in H.subgroups_up_to_conjugacy():
        if 1 < K.order < H.order:
            return K
    return None


def _change_jobs(corpus: Corpus):
    return [("change-of-group", G.label(), H.label()) for G, H in corpus.pairs()]


def _change(glabel: str, hlabel: str) -> list[dict]:
    G = _g(glabel)
    H = _sub(G, hlabel)
    xs = [("pt", FiniteGSet.point(H)), ("regular", FiniteGSet.regular(H))]
    K = _coset_subgroup(H)
    if K is not None:
        xs.append((f"coset {K.label()}", FiniteGSet.cosets(H, K)))
    out = []
    for name, X in xs:
        m = change_of_group(H, G, X).map
        ok, cert = verify_change_of_group_iso(m)
        alt = change_of_group(H, G, X, choice="last").map
        out.append(
            _rec(
                f"{glabel} >= {hlabel} | X={name}",
                ok and alt == m,
                certificate=cert.to_dict(),
                choice_independent=alt == m,
            )
        )
    return out


# functoriality


def _functoriality_jobs(corpus: Corpus):
    jobs = [("functoriality", "identity", G.label(), "") for G in corpus.groups()]
    for G, H in corpus.pairs():
        if 1 < H.order < G.order:
            jobs.append(("functoriality", "chain", G.label(), H.label()))
    for G in corpus.top:
        for N in G.subgroups_up_to_conjugacy():
            if 1 < N.order and G.is_normal(N):
                jobs.append(("functoriality", "quotient", G.label(), N.label()))
    return jobs


def _seed(key: str) -> random.Random:
    return random.Random(zlib.crc32(key.encode()))


def _compare_composite(key: str, phi: GroupHom, psi: GroupHom, X: FiniteGSet) -> dict:
    """psi^* o phi^* against (phi o psi)^* on QEll_G(X)."""
    first = restriction_hom(phi, X)
    second = restriction_hom(psi, X.restrict(phi), source=first.target)
    direct = restriction_hom(phi.compose(psi), X)
    ring = check_ring_map(first, _seed(key), trials=2)
    return _rec(key, second.after(first) == direct and ring, ring_map=ring)


def _functoriality(kind: str, glabel: str, other: str) -> list[dict]:
    G = _g(glabel)
    out = []
    if kind == "identity":
        for name, X in (("pt", FiniteGSet.point(G)), ("regular", FiniteGSet.regular(G))):
            d = qell_of_gset(G, X)
            ident = identity_map(d)
            res = restriction_hom(identity_hom(G), X)
            pb = pullback_gmap(GMap.identity(X))
            out.append(_rec(f"identity | {glabel} | X={name}", res == ident and pb == ident))
        return out
    if kind == "chain":
        # K <= H <= G: restrict along H -> G, then K -> H
        H = _sub(G, other)
        for K in H.subgroups_up_to_conjugacy():
            if K.order == H.order:
                continue
            phi, psi = inclusion(H, G), inclusion(K, H)
            for name, X in (("pt", FiniteGSet.point(G)), ("natural", FiniteGSet.natural(G))):
                key = f"chain | {glabel} >= {other} >= {K.label()} | X={name}"
                out.append(_compare_composite(key, phi, psi, X))
        return out
    # quotient: H -> G -> G/N, the second map not injective
    N = _sub(G, other)
    q = quotient_hom(G, N)
    Q = q.codomain
    for H in G.subgroups_up_to_conjugacy():
        psi = inclusion(H, G)
        for name, X in (("pt", FiniteGSet.point(Q)), ("regular", FiniteGSet.regular(Q))):
            key = f"quotient | {glabel} / {other} <- {H.label()} | X={name}"
            out.append(_compare_composite(key, q, psi, X))
    return out


# worked instance


def _worked_jobs(corpus: Corpus):
    return [("worked-instance",)]


def _worked() -> list[dict]:
    out = []
    S3 = _g("S3")
    t = (1, 0, 2)
    X = FiniteGSet.cosets(S3, S3.generated_subgroup([t]))
    d = qell_of_gset(S3, X)
    oracle = fixed_orbit_oracle(S3, X)
    ranks = d.class_ranks()
    # class order of S3 is (e, transposition, 3-cycle)
    out.append(
        _rec(
            "S3 on S3/<(0 1)>",
            d.total_rank == 4 and ranks == [2, 2, 0] == oracle,
            total_rank=d.total_rank,
            class_ranks=ranks,
            oracle=oracle,
        )
    )
    for label, expected in (("C2", 4), ("S3", 8), ("perm 1:", 1)):
        G = _g(label)
        pt = FiniteGSet.point(G)
        d = qell_of_gset(G, pt)
        oracle = sum(fixed_orbit_oracle(G, pt))
        out.append(_rec(f"{label} on pt", d.total_rank == expected == oracle, total_rank=d.total_rank, oracle=oracle))
    for label in ("C2", "S3", "Q8", "S4"):
        G = _g(label)
        d = qell_of_gset(G, FiniteGSet.regular(G))
        out.append(_rec(f"{label} on regular", d.total_rank == 1, total_rank=d.total_rank))
    # restriction along Z/2 -> S3 on a point: the 2-dimensional irreducible at e goes to triv + sign
    C2 = S3.generated_subgroup([t])
    m = restriction_hom(inclusion(C2, S3), FiniteGSet.point(S3))
    src_e = m.source.factors[0]
    tgt_e = m.target.factors[0]
    two = src_e.basis.table.degrees.index(2)
    col = [m.matrix[tgt_e.offset + r][src_e.offset + two] for r in range(tgt_e.rank)]
    out.append(
        _rec(
            "restrict S3 -> <(0 1)> on pt",
            (m.source.total_rank, m.target.total_rank) == (8, 4) and [str(c) for c in col] == ["1", "1"],
            ranks=[m.source.total_rank, m.target.total_rank],
        )
    )
    ok, cert = verify_change_of_group_iso(change_of_group(C2, S3, FiniteGSet.point(C2)).map)
    out.append(_rec("change of group S3 >= <(0 1)> on pt", ok and cert.size == (4, 4), certificate=cert.to_dict()))
    return out


# faithful representations


def _faithful_jobs(corpus: Corpus):
    return [
        ("faithful", G.label(), format_perm(s), tuple(s))
        for G in corpus.groups()
        for s in G.class_reps
    ]


def _faithful(label: str, sname: str, sigma: tuple) -> list[dict]:
    G = _g(label)
    key = f"{label} | sigma={sname}"
    V = GRep.regular(G)
    triv = GRep.trivial(G)
    out = []
    for variant in VARIANTS:
        d = v_sigma_variants(V, sigma, variant)
        deg = 2 * V.degree if variant == "real" else None
        ok = is_faithful(d) and (deg is None or d.degree == deg)
        out.append(_rec(f"{key} | regular | {variant}", ok, degree=d.degree))
    Vt = V + triv
    d = v_sigma(Vt, sigma)
    has_triv = Vt.multiplicities[0] > 0
    out.append(_rec(f"{key} | regular+triv | i", has_triv and is_faithful(d) and d.degree == Vt.degree))
    # negative controls
    C = G.centralizer(sigma)
    flat = LambdaRepDescriptor(LambdaGroupDescriptor(C, sigma), ((0, 1, Fraction(0)),))
    out.append(_rec(f"{key} | control non-rotating", not is_faithful(flat)))
    if G.order > 1:
        for variant in ("i", "iii"):
            d = v_sigma_variants(triv, sigma, variant)
            out.append(_rec(f"{key} | control trivial | {variant}", not is_faithful(d)))
    # one real basis element per real irreducible of C_G(sigma)
    rb = real_lambda_basis(LambdaGroupDescriptor(C, sigma))
    expected = (len(C.conjugacy_classes) + real_class_count(C)) // 2
    out.append(_rec(f"{key} | real basis count", len(rb) == expected, count=len(rb), expected=expected))
    return out


# compatibility


_SUM_GROUPS = ("C1", "C2", "C3", "C2 x C2", "S3")


def _compat_jobs(corpus: Corpus):
    jobs = []
    for i, a in enumerate(_SUM_GROUPS):
        for b in _SUM_GROUPS[i:]:
            jobs.append(("compat", "sum", a, b))
    for G, H in corpus.pairs():
        jobs.append(("compat", "pullback", G.label(), H.label()))
    for G in corpus.top:
        for N in G.subgroups_up_to_conjugacy():
            if 1 < N.order < G.order and G.is_normal(N):
                jobs.append(("compat", "quotient", G.label(), N.label()))
    return jobs


def _compat(kind: str, a: str, b: str) -> list[dict]:
    out = []
    if kind == "sum":
        G, H = _g(a), _g(b)
        if G.order * H.order > 36:
            return out
        reps = [("regular", GRep.regular(G), GRep.regular(H)), ("regular+triv", GRep.regular(G), GRep.trivial(H))]
        for s in G.class_reps:
            for t in H.class_reps:
                for vname, V, W in reps:
                    reports = [compat_direct_sum(V, W, s, t, v) for v in VARIANTS]
                    key = f"sum | {a} (+) {b} | {vname} | sigma={format_perm(s)} tau={format_perm(t)}"
                    out.append(_rec(key, all(r.passed for r in reports), failures=[r.to_dict() for r in reports if not r.passed]))
        return out
    G = _g(a)
    if kind == "pullback":
        H = _sub(G, b)
        phi = inclusion(H, G)
        reps = [("regular", GRep.regular(G)), ("natural", GRep.permutation(FiniteGSet.natural(G)))]
    else:
        phi = quotient_hom(G, _sub(G, b))
        H, Q = G, phi.codomain
        reps = [("regular", GRep.regular(Q))]
    for t in H.class_reps:
        for vname, V in reps:
            reports = [compat_pullback(V, phi, t, v) for v in VARIANTS]
            key = f"{kind} | {a} {'>=' if kind == 'pullback' else '/'} {b} | {vname} | tau={format_perm(t)}"
            out.append(_rec(key, all(r.passed for r in reports), failures=[r.to_dict() for r in reports if not r.passed]))
    return out


# characters


def _characters_jobs(corpus: Corpus):
    jobs = [("characters", "table", G.label(), "") for G in corpus.groups()]
    jobs += [("characters", "frobenius", G.label(), H.label()) for G, H in corpus.pairs()]
    jobs.append(("characters", "quaternion", "Q8", ""))
    return jobs


def _row_orthogonal(table) -> bool:
    G = table.group
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            total = Cyclotomic.rational(0)
            for k, size in enumerate(G.class_sizes):
                total = total + a.values[k] * b.values[k].conj() * size
            if total != Cyclotomic.rational(G.order if i == j else 0):
                return False
    return True


def _characters(kind: str, glabel: str, hlabel: str) -> list[dict]:
    G = _g(glabel)
    if kind == "table":
        table = character_table(G)
        rows = _row_orthogonal(table)
        cols = column_orthogonality_holds(table)
        sq = sum(d * d for d in table.degrees)
        # sum of indicator * degree counts square roots of the identity
        invol = sum(1 for g in G.elements if compose(g, g) == G.identity)
        fs = sum(fs_indicator(chi) * d for chi, d in zip(table, table.degrees))
        return [
            _rec(
                f"table | {glabel}",
                rows and cols and sq == G.order and fs == invol,
                degrees=list(table.degrees),
                rows=rows,
                columns=cols,
            )
        ]
    if kind == "frobenius":
        H = _sub(G, hlabel)
        tg, th = character_table(G), character_table(H)
        ok, n = True, 0
        for chi in th:
            ind = induce_character(chi, G)
            for psi in tg:
                n += 1
                if inner_product(ind, psi) != inner_product(chi, restrict_character(psi, H)):
                    ok = False
        return [_rec(f"frobenius | {glabel} >= {hlabel}", ok, triples=n)]
    table = character_table(G)
    two = table.degrees.index(2)
    ind = fs_indicator(table[two])
    others = [fs_indicator(chi) for i, chi in enumerate(table) if i != two]
    return [
        _rec("Q8 two-dimensional indicator", ind == -1 and others == [1] * 4, indicator=ind),
        _rec("Q8 trivial character first", table[0] == trivial_character(G)),
    ]


# driver

_JOBS = {
    "lemma-cl": (_lemma_cl_jobs, _lemma_cl),
    "phases": (_phases_jobs, _phases),
    "change-of-group": (_change_jobs, _change),
    "functoriality": (_functoriality_jobs, _functoriality),
    "worked-instance": (_worked_jobs, _worked),
    "faithful": (_faithful_jobs, _faithful),
    "compat": (_compat_jobs, _compat),
    "characters": (_characters_jobs, _characters),
}


def run_job(job: tuple) -> tuple[str, list[dict]]:
    suite, *args = job
    runner = _JOBS[suite][1]
    try:
        return suite, runner(*args)
    except Exception as exc:  # a crash is a failed instance, not a crashed report
        key = " | ".join(str(a) for a in args) or suite
        return suite, [_rec(key, False, error=f"{type(exc).__name__}: {exc}")]


def suite_jobs(suite: str, corpus: Corpus) -> list[tuple]:
    names = SUITES if suite == "all" else (suite,)
    jobs = []
    for name in names:
        if name not in _JOBS:
            raise KeyError(f"unknown suite {name!r}")
        jobs.extend(_JOBS[name][0](corpus))
    return jobs


def run_suite(suite: str, corpus: Corpus, *, jobs: int = 1) -> dict:
    """Run a suite (or ``all``) and assemble a deterministic report."""
    work = suite_jobs(suite, corpus)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_job, work, chunksize=4))
    else:
        results = [run_job(j) for j in work]
    by_suite: dict[str, list[dict]] = {}
    for name, recs in results:
        by_suite.setdefault(name, []).extend(recs)
    names = SUITES if suite == "all" else (suite,)
    suites = []
    for name in names:
        recs = sorted(by_suite.get(name, []), key=lambda r: r["key"])
        failed = sum(1 for r in recs if not r["pass"])
        suites.append(
            {
                "suite": name,
                "instances": len(recs),
                "passed": len(recs) - failed,
                "failed": failed,
                "results": recs,
            }
        )
    return {
        "corpus": corpus.name,
        "selected": suite,
        "ok": all(s["failed"] == 0 for s in suites),
        "suites": suites,
    }


__all__ = [
    "SUITES",
    "commuting_pairs_class_count",
    "fixed_orbit_oracle",
    "run_job",
    "run_suite",
    "suite_jobs",
]
