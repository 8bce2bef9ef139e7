"""The nine acceptance criteria, each run exactly and reported as one PASS/FAIL line.

Criteria 1-8 read the report of a full ``qec check all`` run over the default
corpus and add direct in-process checks; criterion 9 compares two such runs
byte for byte.
"""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from qec.characters import character_table, fs_indicator
from qec.corpus import default_corpus, group_from_label
from qec.faithful import GRep, compat_direct_sum, compat_pullback, is_faithful, v_sigma_variants
from qec.groups import direct_product, make_hom, pair_element
from qec.gsets import FiniteGSet
from qec.perm import parse_cycles
from qec.qell import change_of_group, qell_of_gset, verify_change_of_group_iso

CHECK_ALL = [sys.executable, "-m", "qec", "check", "all", "--format", "json"]


@pytest.fixture(scope="module")
def runs():
    out = []
    for _ in range(2):
        proc = subprocess.run(CHECK_ALL, capture_output=True, timeout=1200)
        out.append(proc)
    return out


@pytest.fixture(scope="module")
def suites(runs):
    report = json.loads(runs[0].stdout)
    return {s["suite"]: s for s in report["suites"]}


def clean(suite) -> bool:
    return suite["failed"] == 0 and all(r["pass"] for r in suite["results"])


def test_criterion_1_lemma_cl(suites, verdict):
    s = suites["lemma-cl"]
    corpus = default_corpus()
    expected = sum(G.order for G in corpus.groups())  # every g in every G
    ok = clean(s) and s["instances"] == expected and all(
        r["rank"] == r["classes"] == r["oracle"] for r in s["results"]
    )
    verdict(1, f"free-module rank, {s['instances']} (G, g) instances", ok)
    assert ok


def test_criterion_2_phase_integrity(suites, verdict):
    s = suites["phases"]
    expected = sum(G.order for G in default_corpus().groups())
    ok = clean(s) and s["instances"] == expected and all(r["entries"] > 0 for r in s["results"])
    verdict(2, f"canonical-basis phases, {s['instances']} bases", ok)
    assert ok


def test_criterion_3_change_of_group(suites, verdict):
    s = suites["change-of-group"]
    certs = [r["certificate"] for r in s["results"]]
    kinds = {r["key"].split("X=")[1].split()[0] for r in s["results"]}
    ok = (
        clean(s)
        and s["instances"] >= 100
        and all(c["square"] and c["unit"] for c in certs)
        and kinds == {"pt", "regular", "coset"}
        and all(r["choice_independent"] for r in s["results"])
    )
    S3 = group_from_label("S3")
    H = S3.generated_subgroup([parse_cycles("(0 1)", 3)])
    direct = change_of_group(H, S3, FiniteGSet.point(H)).map
    ok = ok and direct.is_square() and direct.source.total_rank == 4 and verify_change_of_group_iso(direct)[0]
    verdict(3, f"change-of-group isomorphism, {s['instances']} instances with unit determinant", ok)
    assert ok


def test_criterion_4_functoriality(suites, verdict):
    s = suites["functoriality"]
    kinds = [r["key"].split(" | ")[0] for r in s["results"]]
    composable = sum(1 for k in kinds if k in ("chain", "quotient"))
    ok = clean(s) and composable >= 25 and "identity" in kinds
    verdict(4, f"Id* = Id and composition, {composable} composable instances", ok)
    assert ok


def test_criterion_5_worked_instance(suites, verdict):
    (rec,) = [r for r in suites["worked-instance"]["results"] if r["key"] == "S3 on S3/<(0 1)>"]
    S3 = group_from_label("S3")
    d = qell_of_gset(S3, FiniteGSet.cosets(S3, S3.generated_subgroup([parse_cycles("(0 1)", 3)])))
    ok = (
        rec["pass"]
        and rec["total_rank"] == 4
        and rec["class_ranks"] == rec["oracle"] == [2, 2, 0]
        and d.total_rank == 4
        and d.class_ranks() == [2, 2, 0]
    )
    verdict(5, "QEll of S3/<(0 1)> has rank 4 with factor ranks (2, 2, 0)", ok)
    assert ok


def test_criterion_6_faithful(suites, verdict):
    s = suites["faithful"]
    tags = {r["key"].split(" | ", 2)[2] for r in s["results"]}
    needed = {"regular | i", "regular | ii", "regular | iii", "regular | real", "regular+triv | i",
              "control non-rotating", "control trivial | i", "control trivial | iii", "real basis count"}
    ok = clean(s) and needed <= tags
    # direct: positives true and negatives false through the kernel solver
    for label in ("S3", "Q8", "C4"):
        G = group_from_label(label)
        for sigma in G.class_reps:
            reg = GRep.regular(G)
            ok = ok and all(is_faithful(v_sigma_variants(reg, sigma, v)) for v in ("i", "ii", "iii", "real"))
            ok = ok and is_faithful(v_sigma_variants(reg + GRep.trivial(G), sigma, "i"))
            ok = ok and not is_faithful(v_sigma_variants(GRep.trivial(G), sigma, "iii"))
    verdict(6, f"faithfulness of (V)_sigma variants and controls, {s['instances']} instances", ok)
    assert ok


def test_criterion_7_compat(suites, verdict):
    s = suites["compat"]
    keys = [r["key"] for r in s["results"]]
    product = any(k.startswith("sum") and "C2 x C2" in k for k in keys)
    z2_in_s3 = any(k.startswith("pullback | S3 >= perm 3: (1 2)") for k in keys)
    ok = clean(s) and s["instances"] >= 20 and product and z2_in_s3
    # direct: Z/2 x Z/2 direct sum and the inclusion generator -> (0 1)
    C2, S3 = group_from_label("C2"), group_from_label("S3")
    for a in C2.elements:
        for b in C2.elements:
            for v in ("i", "ii", "iii"):
                ok = ok and compat_direct_sum(GRep.regular(C2), GRep.irreducible(C2, 1), a, b, v).passed
    phi = make_hom(C2, S3, [parse_cycles("(0 1)", 3)])
    for tau in C2.elements:
        for v in ("i", "ii", "iii"):
            ok = ok and compat_pullback(GRep.regular(S3), phi, tau, v).passed
    verdict(7, f"direct-sum and pullback compatibility, {s['instances']} instances", ok)
    assert ok


def test_criterion_8_characters(suites, verdict):
    s = suites["characters"]
    tables = [r for r in s["results"] if r["key"].startswith("table")]
    orders = {G.label(): G.order for G in default_corpus().groups()}
    triples = sum(r.get("triples", 0) for r in s["results"] if r["key"].startswith("frobenius"))
    ok = clean(s) and len(tables) == len(orders) and triples >= 50
    ok = ok and all(
        r["rows"] and r["columns"] and sum(d * d for d in r["degrees"]) == orders[r["key"].split(" | ", 1)[1]]
        for r in tables
    )
    Q8 = group_from_label("Q8")
    two = [chi for chi in character_table(Q8) if chi.int_degree() == 2]
    ok = ok and len(two) == 1 and fs_indicator(two[0]) == -1
    verdict(8, f"orthogonality and sum of squares on {len(tables)} tables, {triples} reciprocity triples, Q8 indicator -1", ok)
    assert ok


def test_criterion_9_determinism(runs, verdict):
    a, b = runs
    ok = a.returncode == b.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    verdict(9, f"two runs of qec check all give byte-identical JSON ({len(a.stdout)} bytes)", ok)
    assert ok
