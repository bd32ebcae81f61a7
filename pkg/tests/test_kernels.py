from __future__ import annotations

import subprocess
import sys

from corpus import random_corpus
from skeincalc import kernels
from skeincalc.kauffman import _index, as_kauffman


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_fallback_selected_by_env():
    code = "import skeincalc.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={"SKEINCALC_PURE": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_tallies_identical():
    if kernels.state_sum_compiled is None:
        return
    for d in random_corpus(12, 8, 9):
        args = _index(as_kauffman(d))
        assert kernels.state_sum_py(*args) == kernels.state_sum_compiled(*args)
