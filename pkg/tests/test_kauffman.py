from __future__ import annotations

import random

import pytest

from corpus import named_diagrams, random_corpus
from skeincalc import KauffmanParams, LaurentPoly, bracket_oracle, bracket_rewrite, kauffman_uniqueness_residuals
from skeincalc import kernels
from skeincalc.kauffman import NotKauffman, TooManyCrossings, enumerate_states, substitute_params
from skeincalc.tangles import TangleBuilder

A = LaurentPoly.var("A")


def test_named_values():
    named = named_diagrams(oriented=False)
    assert bracket_rewrite(named["unknot"]).scalar() == -(A ** 2) - A ** -2
    assert bracket_rewrite(named["hopf"]).scalar() == A ** 6 + A ** 2 + A ** -2 + A ** -6
    assert bracket_rewrite(named["trefoil"]).scalar() == A ** 7 + A ** 3 + A ** -1 - A ** -9


def test_generic_parameters_agree_with_oracle():
    params = KauffmanParams.generic()
    for d in random_corpus(15, 5, 77):
        assert bracket_rewrite(d, params) == bracket_oracle(d, params)


def test_random_orders_agree():
    d = random_corpus(10, 7, 3)[4]
    base = bracket_rewrite(d)
    assert all(bracket_rewrite(d, rng=random.Random(k)) == base for k in range(20))


def test_backends_agree():
    if kernels.state_sum_compiled is None:
        pytest.skip("compiled kernel not built")
    for d in random_corpus(10, 8, 5):
        assert bracket_oracle(d, backend=kernels.state_sum_py) == bracket_oracle(d, backend=kernels.state_sum_compiled)


def test_state_listing_matches_count():
    d = named_diagrams(False)["trefoil"]
    assert len(enumerate_states(d)) == 8


def test_uniqueness_residuals():
    ident, turn = kauffman_uniqueness_residuals()[:2]
    a, b, dd = (LaurentPoly.var(v) for v in "ABd")
    assert ident == a * b - 1
    assert turn == a * a + b * b + a * b * dd
    std = substitute_params([ident, turn], B="A^-1", d="-A^2 + -A^-2")
    assert std == [0, 0]


def test_guards():
    b = TangleBuilder((1, 1), True)
    b.merge(0)
    with pytest.raises(NotKauffman):
        bracket_rewrite(b.finish())
    big = TangleBuilder(2, False)
    for _ in range(17):
        big.crossing(0)
    with pytest.raises(TooManyCrossings):
        bracket_oracle(big.finish())


def test_mirror_inverts_A():
    for d in random_corpus(20, 6, 88):
        z = bracket_rewrite(d)
        expected = z.map_diagrams(lambda k: k.mirror()).substitute("A", A ** -1)
        assert bracket_rewrite(d.mirror()) == expected
