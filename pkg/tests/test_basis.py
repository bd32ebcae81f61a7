from __future__ import annotations

import pytest

from skeincalc import enumerate_matchings, enumerate_webs, sl3_invariant_dimension
from skeincalc.basis import basis_for, catalan, is_non_elliptic


@pytest.mark.parametrize("n", range(0, 13))
def test_matching_counts(n):
    expected = catalan(n // 2) if n % 2 == 0 else 0
    assert len(enumerate_matchings(n)) == expected


@pytest.mark.parametrize("sig", ["", "+-", "+++", "++--", "+-+-", "+++--", "++++-", "+-+-+-", "+++---",
                                 "++++++", "+-+-+-+-", "++++----"])
def test_web_counts_match_sl3_dimension(sig):
    webs = enumerate_webs(sig, 12)
    assert len(webs) == sl3_invariant_dimension(sig)
    assert all(is_non_elliptic(w.diagram) and w.diagram.validate() == [] for w in webs)


def test_keys_sorted_and_unique():
    keys = [w.canonical_key for w in enumerate_webs("+-+-+-", 12)]
    assert keys == sorted(set(keys))


def test_basis_for_dispatch():
    assert len(basis_for(4)) == 2
    assert len(basis_for("++-", 12)) == 0
    assert len(basis_for("", oriented=False)) == 1


def test_bad_signature():
    with pytest.raises(ValueError):
        enumerate_webs("+x", 12)
