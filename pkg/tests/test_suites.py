import random

import pytest

from implicitrep.families import class_spec, cycle, member, universal_chain
from implicitrep.graph import bipartition
from implicitrep.structure import contains_side_respecting
from implicitrep.suites import SUITES, plant, run_suite, scheme_exhaustive, suite_fault_injection


SMALL = {
    "lemma1": {"max_vertices": 6},
    "lemma-degree-bound": {"max_side": 3},
    "ftt-sd": {"max_side": 3, "samples": 10},
    "symdif-bounds": {"max_n": 5},
    "y-roundtrip": {"samples": 10},
    "z-sd": {"samples": 5},
    "x-layers": {"samples": 5},
    "hypercube": {"samples": 5},
    "speed": {"max_n": 4},
    "schemes": {"samples": 3, "max_side": 2},
    "fault-injection": {"per_pattern": 1},
}


def test_every_suite_has_a_small_run():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_small_run_ok(name):
    rep = run_suite(name, **SMALL[name])
    assert rep["suite"] == name
    assert rep["ok"], rep["failures"][:3]
    assert rep["failure_count"] == 0


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope")


def test_reports_are_deterministic():
    a = run_suite("schemes", samples=2, max_side=2, seed=9)
    b = run_suite("schemes", samples=2, max_side=2, seed=9)
    for rep in (a, b):
        for case in rep["cases"].values():
            case.pop("seconds")
    assert a == b


def test_workers_give_same_report():
    a = run_suite("schemes", samples=2, max_side=2, only="chain")
    b = run_suite("schemes", samples=2, max_side=2, only="chain", workers=2)
    for rep in (a, b):
        for case in rep["cases"].values():
            case.pop("seconds")
    assert a == b


def test_exhaustive_corpus_is_in_class():
    spec = class_spec("ftt", t=2)
    graphs = list(scheme_exhaustive("ftt", {"t": 2}, max_side=2))
    assert graphs and all(member(spec, g).ok for g in graphs)


def test_plant_keeps_pattern_induced():
    pat = bipartition(cycle(6))
    rng = random.Random(1)
    for _ in range(5):
        g = plant(pat, universal_chain(3), rng, 0.5)
        assert g.n == 12
        assert contains_side_respecting(g, pat) is not None


def test_fault_injection_counts():
    rep = suite_fault_injection(per_pattern=2, seed=3)
    assert rep["ok"]
    for tally in rep["outcomes"].values():
        assert tally["certified"] > 0


def test_symdif_refuses_sizes_beyond_the_atlas():
    with pytest.raises(ValueError, match="atlas"):
        run_suite("symdif-bounds", max_n=8)
