from __future__ import annotations

import pytest

from corpus import random_corpus, web_corpus
from skeincalc import apply_move, find_move_sites, invariance_report, random_tangle
from skeincalc.moves import StaleSite, TangleSpec, move_library
from skeincalc.tangles import InfeasibleSpec


def test_library_sizes():
    lib = move_library(True)
    kinds = [m.kind for m in lib]
    assert len(lib) == 80
    assert kinds.count("RIII") == 48 and kinds.count("RI") == 8
    assert {m.kind for m in move_library(False)} == {"RI", "RII", "RIII"}


def test_moves_preserve_validity_and_signature():
    for d in list(random_corpus(8, 6, 40)) + list(web_corpus(6)):
        for site in find_move_sites(d)[:25]:
            out = apply_move(d, site)
            assert out.validate() == []
            assert out.boundary == d.boundary


def test_stale_site_rejected():
    d, other = random_corpus(2, 6, 41)
    site = find_move_sites(d, "RI")[0]
    with pytest.raises(StaleSite):
        apply_move(other, site)


def test_seed_repeatability():
    spec = TangleSpec(strands=2, rows=10, seed=5, vertex_density=0.2)
    assert random_tangle(spec).map_key() == random_tangle(spec).map_key()
    assert random_tangle(strands=0, closed=True, rows=0).boundary == ()


def test_infeasible_spec():
    with pytest.raises(InfeasibleSpec):
        random_tangle(strands=2, closed=True)


def test_invariance_report_counts():
    rep = invariance_report(random_corpus(3, 5, 42)[1], "kauffman")
    assert rep.ok
    assert sum(n for _, n in rep.counts().values()) == len(rep.results)
