from __future__ import annotations

import io
import json

import pytest

from skeincalc import braid_closure, serialize
from skeincalc.cli import run


@pytest.fixture
def trefoil(tmp_path):
    p = tmp_path / "trefoil.tangle"
    p.write_text(serialize(braid_closure([1, 1, 1], 2, oriented=False)))
    return str(p)


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_eval_json(trefoil):
    code, text = _run("eval", "--theory", "kauffman", trefoil)
    doc = json.loads(text)
    assert code == 0 and doc["version"] == 1 and doc["diagnostics"] == []
    assert doc["result"]["basis"][0]["coeff"] == "A^7 + A^3 + A^-1 + -A^-9"


def test_identities_text():
    code, text = _run("identities", "--theory", "su3")
    assert code == 0 and text.count("PASS") == 6


def test_basis_and_check(tmp_path):
    code, text = _run("basis", "--points", "6", "--mode", "kauffman")
    assert code == 0 and text.startswith("5 basis elements")
    p = tmp_path / "w.tangle"
    p.write_text(serialize(braid_closure([1, -2], 3)))
    code, text = _run("check", "--theory", "su3", "--max-sites", "1", str(p))
    assert code == 0 and text.rstrip().endswith("PASS")


def test_errors_exit_one(tmp_path):
    bad = tmp_path / "bad.tangle"
    bad.write_text("boundary: + +\nedge e1: b0 -> b1\n")
    code, text = _run("eval", str(bad))
    assert code == 1 and json.loads(text)["diagnostics"][0]["module"] == "diagram"


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        run(["eval", "--theory", "nonsense", "x"])
    assert exc.value.code == 2


def test_seed_env_override(monkeypatch, trefoil):
    monkeypatch.setenv("SKEIN_SEED", "3")
    code, text = _run("oracle-compare", trefoil, "--random", "2", "--json")
    assert code == 0
    assert [r["input"] for r in json.loads(text)["result"]][1:] == ["random[3]", "random[4]"]
