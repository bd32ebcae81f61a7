from __future__ import annotations

import pytest

from corpus import named_diagrams, random_corpus, web_corpus
from skeincalc import braid_closure, kink, parse_tangle, serialize, strand
from skeincalc.diagram import ValidationError


def test_faces_of_trefoil_satisfy_euler():
    d = braid_closure([1, 1, 1], 2)
    v, e = len(d.crossings()), 2 * len(d.crossings())
    assert v - e + len(d.faces()) == 2


def test_writhe_and_signs():
    assert braid_closure([1, 1, 1], 2).writhe() == 3
    assert kink(-1).writhe() == -1
    assert strand().writhe() == 0


@pytest.mark.parametrize("d", list(random_corpus(30)) + list(web_corpus(10)))
def test_random_diagrams_validate_and_round_trip(d):
    assert d.validate() == []
    again = parse_tangle(serialize(d))
    assert again.map_key() == d.map_key()


def test_map_key_ignores_names():
    d = random_corpus(5)[3]
    text = serialize(d)
    for name in sorted(d.crossings(), key=len, reverse=True):
        text = text.replace(f" {name}.", f" z{name}.").replace(f"cross {name}\n", f"cross z{name}\n")
    renamed = parse_tangle(text)
    assert set(renamed.crossings()) != set(d.crossings())
    assert renamed.map_key() == d.map_key()


def test_symmetries_are_involutions():
    for d in list(web_corpus(5)) + list(named_diagrams().values()):
        assert d.adjoint().adjoint().map_key() == d.map_key()
        assert d.mirror().mirror().map_key() == d.map_key()
        assert d.mirror().writhe() == -d.writhe()


def test_rotation_changes_key_for_asymmetric_boundary():
    d = web_corpus(6)[1]
    if d.n:
        assert d.rotate_boundary(d.n).map_key() == d.map_key()


def test_invalid_orientation_is_reported():
    bad = "boundary: + +\nedge e1: b0 -> b1\n"
    with pytest.raises(ValidationError):
        parse_tangle(bad)


def test_measure_decreases_under_smoothing():
    from skeincalc.kauffman import smooth

    d = braid_closure([1, 1], 2, oriented=False)
    c = d.crossings()[0]
    assert smooth(d, c, 1).measure() < d.measure()


def test_canonical_key_requires_crossing_free():
    from skeincalc import HasCrossings

    with pytest.raises(HasCrossings):
        kink(1).canonical_key()
