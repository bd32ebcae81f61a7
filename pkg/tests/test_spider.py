from __future__ import annotations

import pytest

from corpus import named_diagrams, web_corpus
from skeincalc import LaurentPoly, StateVector, normalized_invariant, reidemeister_expand_check, su3_params, su3_rewrite
from skeincalc.basis import is_non_elliptic
from skeincalc.spider import (
    KhovanovRequiresVertexFree,
    MOVE_KINDS,
    TwistSpec,
    ZeroParameter,
    find_features,
    symbolic_params,
    twist_conjugate,
)
from skeincalc.tangles import TangleBuilder

Y = LaurentPoly.var("y")


def theta():
    b = TangleBuilder(0, True)
    b.cup(0, 1)
    b.split(0)
    b.merge(0)
    b.cap(0)
    return b.finish()


def test_closed_values():
    rs = su3_params(1, "y")
    assert su3_rewrite(named_diagrams()["unknot"], rs).scalar() == Y ** 6 + 1 + Y ** -6
    assert su3_rewrite(theta(), rs).scalar() == -(Y ** 9) - 2 * Y ** 3 - 2 * Y ** -3 - Y ** -9


def test_normal_forms_are_non_elliptic():
    for d in web_corpus(10):
        z = su3_rewrite(d, symbolic_params())
        for key, coeff in z.items():
            assert is_non_elliptic(z.reps[key]) and not find_features(z.reps[key])
            assert coeff != 0


@pytest.mark.parametrize("move", MOVE_KINDS)
def test_local_moves_hold_symbolically(move):
    assert reidemeister_expand_check(move).passed


def test_parameter_guards():
    with pytest.raises(ZeroParameter):
        su3_params(0, "y")
    with pytest.raises(KhovanovRequiresVertexFree):
        normalized_invariant(theta(), "khovanov")
    with pytest.raises(ValueError):
        normalized_invariant(theta(), "bogus")


def test_vertex_twist_is_conjugation():
    d = web_corpus(5)[0]
    z = su3_rewrite(d)
    t = LaurentPoly.var("t")
    back = twist_conjugate(twist_conjugate(z, d, TwistSpec(vertex_factor=t)), d, TwistSpec(vertex_factor=t.inverse()))
    assert back == z


def test_basis_webs_are_fixed():
    from skeincalc import enumerate_webs

    for el in enumerate_webs("+-+-+-", 12):
        assert su3_rewrite(el.diagram) == StateVector.basis(el.diagram)
