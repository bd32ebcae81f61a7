from __future__ import annotations

import pytest

from skeincalc import kink, parse_tangle, serialize
from skeincalc.textformat import TangleSyntaxError


def test_round_trip_is_stable():
    text = serialize(kink(1))
    assert serialize(parse_tangle(text)) == text


@pytest.mark.parametrize("text, fragment", [
    ("boundary: + -\nfoo\n", "unknown directive"),
    ("boundary: + -\nedge e1: b0 -> b7\n", "out of range"),
])
def test_syntax_errors_carry_positions(text, fragment):
    with pytest.raises(TangleSyntaxError) as exc:
        parse_tangle(text)
    assert fragment in str(exc.value) and "line 2" in str(exc.value)
