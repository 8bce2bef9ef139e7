"""The ``qec`` command line.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .characters import character_table, fs_indicator
from .checks import SUITES, run_suite
from .corpus import load_corpus
from .dsl import ParseError, parse_group, parse_gset
from .faithful import VARIANTS, GRep, NotRealError, lambda_kernel, v_sigma_variants
from .groups import DEFAULT_CAP, CapExceededError, FiniteGroup
from .gsets import FiniteGSet, NotAnActionError
from .perm import format_perm, order, parse_cycles
from .qell import QEllDecomposition, qell_of_gset

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    gset: str | None = None
    fmt: str = "table"
    corpus: str = "default"
    cap: int = DEFAULT_CAP
    jobs: int = 1


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


# QEll decompositions


def decomposition(group: str, gset: str, *, cap: int = DEFAULT_CAP) -> QEllDecomposition:
    G = parse_group(group, cap=cap)
    return qell_of_gset(G, parse_gset(gset, G))


def load_decomposition(data: dict, *, cap: int = DEFAULT_CAP) -> QEllDecomposition:
    """Rebuild a decomposition from its JSON form, checking that it reproduces exactly."""
    d = decomposition(data["group"], data["gset"], cap=cap)
    if d.to_dict() != data:
        raise ValueError("JSON does not match the recomputed decomposition")
    return d


def render_decomposition(d: QEllDecomposition) -> str:
    lines = [
        f"group: {d.group.label()} (order {d.group.order})",
        f"gset:  {d.gset.label()} ({len(d.gset)} points)",
    ]
    for ci, rep in enumerate(d.group.class_reps):
        lines.append(f"class {format_perm(rep)}: rank {d.class_rank(ci)}")
        for fi in d.class_factors[ci]:
            f = d.factors[fi]
            basis = ", ".join(f"chi{i} q^{f.basis.phase_label(i)}" for i in range(f.rank))
            lines.append(
                f"  orbit of {d.gset.labels[f.orbit_rep]}: |S_x| = {f.stabilizer.order}, "
                f"rank {f.rank}: {basis}"
            )
    lines.append(f"total rank: {d.total_rank}")
    return "\n".join(lines)


def cmd_point(cfg: RunConfig) -> int:
    return cmd_gset(RunConfig("gset", cfg.group, "pt", cfg.fmt, cap=cfg.cap))


def cmd_gset(cfg: RunConfig) -> int:
    d = decomposition(cfg.group, cfg.gset, cap=cfg.cap)
    print(_dump(d.to_dict()) if cfg.fmt == "json" else render_decomposition(d))
    return EXIT_OK


# checks


def cmd_check(cfg: RunConfig, suite: str) -> int:
    corpus = load_corpus(cfg.corpus, cap=cfg.cap)
    report = run_suite(suite, corpus, jobs=cfg.jobs)
    if cfg.fmt == "json":
        print(_dump(report))
    else:
        for s in report["suites"]:
            status = "PASS" if s["failed"] == 0 else "FAIL"
            print(f"{status} {s['suite']}: {s['passed']}/{s['instances']} instances")
            for r in s["results"]:
                if not r["pass"]:
                    print(f"  failed: {r['key']}")
    return EXIT_OK if report["ok"] else EXIT_FAIL


# representations


def parse_rep(text: str, G: FiniteGroup) -> GRep:
    """``regular``, ``trivial``, ``irrep <i>``, ``natural``, ``coset <gens>``, joined by ``+``."""
    rep = None
    for term in text.split("+"):
        term = term.strip()
        if term == "regular":
            r = GRep.regular(G)
        elif term == "trivial":
            r = GRep.trivial(G)
        elif term.startswith("irrep"):
            try:
                i = int(term[5:])
            except ValueError:
                raise InputError(f"bad irreducible index in {term!r}") from None
            if not 0 <= i < len(character_table(G)):
                raise InputError(f"irreducible index {i} out of range")
            r = GRep.irreducible(G, i)
        elif term == "natural" or term.startswith("coset"):
            r = GRep.permutation(parse_gset(term, G))
        else:
            raise InputError(f"unknown representation {term!r}")
        rep = r if rep is None else rep + r
    if rep is None:
        raise InputError("empty representation spec")
    return rep


def cmd_rep(cfg: RunConfig, sigma: str, rep: str, variant: str) -> int:
    G = parse_group(cfg.group, cap=cfg.cap)
    try:
        s = parse_cycles(sigma, G.degree)
    except ValueError as exc:
        raise InputError(f"bad element {sigma!r}: {exc}") from None
    if s not in G:
        raise InputError(f"{format_perm(s)} is not in {G.label()}")
    V = parse_rep(rep, G)
    d = v_sigma_variants(V, s, variant)
    kernel = lambda_kernel(d)
    faithful = kernel.is_trivial()
    table = d.table
    if cfg.fmt == "json":
        print(
            _dump(
                {
                    "group": G.label(),
                    "sigma": format_perm(s),
                    "rep": rep,
                    "variant": variant,
                    "rep_degree": V.degree,
                    "descriptor": d.to_dict(),
                    "canonical": d.to_ring_element().to_json(),
                    "kernel": kernel.to_dict(),
                    "faithful": faithful,
                }
            )
        )
        return EXIT_OK
    print(f"group: {G.label()}  sigma: {format_perm(s)} (order {order(s)})  variant: {variant}")
    print(f"centralizer order: {d.group.order}  rep degree: {V.degree}")
    for i, n, e in d.components:
        print(f"  {n} x chi{i} (dim {table.degrees[i]}) q^{e}")
    print(f"degree: {d.degree}")
    print(f"faithful: {'true' if faithful else 'false'}")
    return EXIT_OK


# character tables


def cmd_table(cfg: RunConfig) -> int:
    G = parse_group(cfg.group, cap=cfg.cap)
    table = character_table(G)
    reps = [format_perm(g) for g in G.class_reps]
    if cfg.fmt == "json":
        print(
            _dump(
                {
                    "group": G.label(),
                    "classes": [
                        {"rep": r, "size": n, "order": order(g)}
                        for r, n, g in zip(reps, G.class_sizes, G.class_reps)
                    ],
                    "characters": [
                        {"degree": d, "indicator": fs_indicator(chi), "values": [str(v) for v in chi.values]}
                        for d, chi in zip(table.degrees, table)
                    ],
                }
            )
        )
        return EXIT_OK
    rows = [["", *reps], ["size", *map(str, G.class_sizes)]]
    rows += [[f"chi{i}", *vals] for i, vals in enumerate(table.to_rows())]
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    print(f"{G.label()} (order {G.order})")
    for r in rows:
        print("  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip())
    return EXIT_OK


# argument handling


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on group orders")

    p = argparse.ArgumentParser(prog="qec", description="Quasi-elliptic cohomology of finite G-sets.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("point", parents=[common], help="QEll of a point")
    sp.add_argument("--group", required=True)

    sg = sub.add_parser("gset", parents=[common], help="QEll of a G-set")
    sg.add_argument("--group", required=True)
    sg.add_argument("--gset", required=True)

    sc = sub.add_parser("check", parents=[common], help="run verification suites")
    sc.add_argument("suite", choices=(*SUITES, "all"))
    sc.add_argument("--corpus", default="default")
    sc.add_argument("--jobs", type=int, default=1)

    sr = sub.add_parser("rep", help="Lambda-representations built from G-representations")
    rsub = sr.add_subparsers(dest="rep_command", required=True)
    sv = rsub.add_parser("vsigma", parents=[common])
    sv.add_argument("--group", required=True)
    sv.add_argument("--sigma", required=True, help="element in cycle notation")
    sv.add_argument("--rep", required=True, help="regular | trivial | irrep <i> | natural | coset <gens>, joined by +")
    sv.add_argument("--variant", choices=VARIANTS, default="i")

    st = sub.add_parser("table", parents=[common], help="character table")
    st.add_argument("group")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        args.command,
        group=getattr(args, "group", None),
        gset=getattr(args, "gset", None),
        fmt=args.format,
        corpus=getattr(args, "corpus", "default"),
        cap=args.cap,
        jobs=getattr(args, "jobs", 1),
    )
    if cfg.jobs < 1 or cfg.cap < 1:
        print("error: --jobs and --cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "point":
            return cmd_point(cfg)
        if args.command == "gset":
            return cmd_gset(cfg)
        if args.command == "check":
            return cmd_check(cfg, args.suite)
        if args.command == "rep":
            return cmd_rep(cfg, args.sigma, args.rep, args.variant)
        return cmd_table(cfg)
    except (ParseError, CapExceededError, NotAnActionError, NotRealError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


__all__ = [
    "RunConfig",
    "build_parser",
    "decomposition",
    "load_decomposition",
    "main",
    "parse_rep",
    "render_decomposition",
    "run",
]
