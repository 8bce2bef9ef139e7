import json

import pytest

from qec.checks import SUITES, commuting_pairs_class_count, fixed_orbit_oracle, run_job, run_suite, suite_jobs
from qec.corpus import Corpus, default_corpus, group_from_label
from qec.groups import quaternion8, symmetric
from qec.gsets import FiniteGSet

TINY = Corpus("tiny", [group_from_label("C2"), group_from_label("S3")])


def test_oracles():
    S3 = symmetric(3)
    assert commuting_pairs_class_count(S3) == 3
    assert commuting_pairs_class_count(quaternion8()) == 5
    Z = S3.generated_subgroup([(1, 0, 2)])
    assert fixed_orbit_oracle(S3, FiniteGSet.cosets(S3, Z)) == [2, 2, 0]
    assert fixed_orbit_oracle(S3, FiniteGSet.point(S3)) == [3, 2, 3]


def test_default_corpus():
    c = default_corpus()
    labels = [G.label() for G in c.top]
    assert labels[:12] == [f"C{n}" for n in range(1, 13)]
    assert {"S3", "S4", "A4", "D4", "D6", "Q8", "C2 x C2"} <= set(labels)
    assert len(c.pairs()) >= 50


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_on_tiny_corpus(suite):
    report = run_suite(suite, TINY)
    (s,) = report["suites"]
    assert report["ok"], [r for r in s["results"] if not r["pass"]]
    assert s["instances"] == s["passed"] > 0
    keys = [r["key"] for r in s["results"]]
    assert keys == sorted(keys)


def test_all_is_concatenation_and_deterministic():
    a = run_suite("all", TINY)
    b = run_suite("all", TINY)
    assert json.dumps(a) == json.dumps(b)
    assert [s["suite"] for s in a["suites"]] == list(SUITES)


def test_parallel_matches_sequential():
    assert run_suite("lemma-cl", TINY, jobs=2) == run_suite("lemma-cl", TINY)


def test_crash_becomes_failed_record():
    suite, recs = run_job(("lemma-cl", "no such group"))
    assert suite == "lemma-cl" and len(recs) == 1
    assert not recs[0]["pass"] and "error" in recs[0]
    with pytest.raises(KeyError):
        suite_jobs("bogus", TINY)
