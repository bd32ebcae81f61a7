"""End-to-end acceptance checks.  Each test records one PASS/FAIL line that
is echoed in the terminal summary (and printed for ``-s`` runs)."""

from __future__ import annotations

import cmath
import random
from fractions import Fraction
from functools import lru_cache

import pytest

from conftest import ACCEPTANCE_LINES
from corpus import full_corpus, named_diagrams, random_corpus, web_corpus
from skeincalc import (
    KauffmanParams,
    LaurentPoly,
    StateVector,
    TwistSpec,
    apply_move,
    bracket_oracle,
    bracket_rewrite,
    catalan,
    enumerate_matchings,
    enumerate_webs,
    find_move_sites,
    invariance_report,
    normalized_invariant,
    random_tangle,
    reidemeister_expand_check,
    strand,
    su3_identity_suite,
    su3_params,
    su3_rewrite,
    twist_conjugate,
)
from skeincalc.kauffman import evaluate_vector as kauffman_project
from skeincalc.moves import move_library
from skeincalc.spider import IllegalCrossingTwist, evaluate_vector as su3_project, symbolic_params
from skeincalc.tangles import TangleBuilder

NUMERIC_TOL = 1e-9
A = LaurentPoly.var("A")
Y = LaurentPoly.var("y")
Q = LaurentPoly.var("q")


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


@lru_cache(maxsize=None)
def _rs():
    return symbolic_params()


@lru_cache(maxsize=None)
def _z(d):
    return su3_rewrite(d, _rs())


def _crossing_triple(oriented: bool = True):
    """Two upward parallel strands with a positive crossing, a negative
    crossing, and no crossing."""
    out = []
    for sign in (1, -1, 0):
        b = TangleBuilder((1, 1), oriented)
        if sign:
            b.signed_crossing(0, sign)
        out.append(b.finish())
    return out


def test_01_oracle_equivalence():
    corpus = full_corpus()
    mismatched = [i for i, d in enumerate(corpus) if bracket_rewrite(d) != bracket_oracle(d)]
    trefoil = bracket_rewrite(named_diagrams()["trefoil"]).scalar()
    expected = A ** 7 + A ** 3 + A ** -1 - A ** -9
    ok = not mismatched and trefoil == expected
    record(1, "rewrite = oracle on the Kauffman corpus, trefoil value", ok,
           f"{len(corpus)} diagrams, {len(mismatched)} mismatches, trefoil {trefoil}")
    assert ok


def test_02_reidemeister_invariance():
    bad, sites = [], 0
    for i, d in enumerate(full_corpus()):
        rep = invariance_report(d, "kauffman")
        sites += len(rep.results)
        if not rep.ok:
            bad.append(("kauffman", i))
    su3_sites, su3_kinds = 0, set()
    su3_corpus = web_corpus(20) + random_corpus(20, 5, 31)
    for i, d in enumerate(su3_corpus):
        rep = invariance_report(d, "su3", _rs(), max_sites=2, seed=i)
        su3_sites += len(rep.results)
        su3_kinds |= {r.site.kind for r in rep.results}
        if not rep.ok:
            bad.append(("su3", i))
    named = named_diagrams()
    strand_k = bracket_rewrite(_strand(False))
    kink_ok = (
        bracket_rewrite(named["kink+"]) == strand_k.scale(-A ** 3)
        and bracket_rewrite(named["kink-"]) == strand_k.scale(-A ** -3)
        and _z(named["kink+"]) == _z(_strand(True)).scale(_rs().a ** -4 * Y ** -8)
        and _z(named["kink-"]) == _z(_strand(True)).scale(_rs().a ** 4 * Y ** 8)
    )
    ok = not bad and kink_ok and {"R41", "RIII"} <= {k.split("-")[0] for k in su3_kinds}
    record(2, "every move site preserves Z; RI scales by the kink factor", ok,
           f"kauffman {sites} sites, su3 {su3_sites} sampled sites, failures {bad}")
    assert ok


def _strand(oriented: bool):
    return strand(oriented=oriented)


def _kauffman_library_fails(params: KauffmanParams) -> list[str]:
    fails = []
    for mv in move_library(False):
        if mv.kind == "RI":
            continue
        if bracket_rewrite(mv.more, params) != bracket_rewrite(mv.fewer, params):
            fails.append(mv.name)
    return fails


def test_03_uniqueness_falsification():
    std = KauffmanParams.standard()
    results = {"kauffman B=A": _kauffman_library_fails(KauffmanParams(A, A, std.d))}
    assert not _kauffman_library_fails(std)
    for name in ("x", "u", "v", "beta", "tau"):
        check = reidemeister_expand_check("all", _rs().perturbed(name, 1))
        nonzero = [k for k, r in check.residuals.items() if not r.is_zero()]
        results[f"{name}+1"] = nonzero
    ok = all(results.values()) and reidemeister_expand_check("all", _rs()).passed
    record(3, "each perturbed rule set breaks some move", ok,
           ", ".join(f"{k}: {len(v)} failing variants" for k, v in results.items()))
    assert ok


def test_04_identity_suite():
    suite = su3_identity_suite(_rs())
    nonzero = [name for name, r in suite if r != 0]
    constructor_ok = su3_params(LaurentPoly.var("a"), "y", check=True) == _rs()
    broken = _rs().perturbed("x", 1).residuals()
    ok = len(suite) == 6 and not nonzero and constructor_ok and any(r != 0 for r in broken.values())
    record(4, "six SU(3) coefficient identities vanish symbolically", ok,
           f"{len(suite)} identities, nonzero: {nonzero}")
    assert ok


def _signed_words(n: int):
    for k in range(1 << n):
        yield "".join("+" if k >> i & 1 else "-" for i in range(n))


def test_05_projection():
    checked, bad = 0, []
    for n in range(0, 7):
        for el in enumerate_matchings(n):
            v = StateVector.basis(el.diagram)
            checked += 1
            if kauffman_project(v) != v:
                bad.append(el.canonical_key)
        for sig in _signed_words(n):
            for el in enumerate_webs(sig, 12):
                v = StateVector.basis(el.diagram)
                checked += 1
                if su3_project(v, _rs()) != v:
                    bad.append(el.canonical_key)
    for d in random_corpus(20, 5, 31):
        z = _z(d)
        if su3_project(z, _rs()) != z or kauffman_project(bracket_rewrite(d)) != bracket_rewrite(d):
            bad.append(repr(d))
    ok = not bad
    record(5, "Z is a projection on every basis element, |signature| <= 6", ok,
           f"{checked} basis elements, {len(bad)} failures")
    assert ok


def test_06_basis_counts():
    matchings = [len(enumerate_matchings(2 * n)) for n in range(5)]
    webs = {sig: len(enumerate_webs(sig, 12)) for sig in ("+-", "+-+-", "++--", "++++-")}
    ok = matchings == [catalan(n) for n in range(5)] == [1, 1, 2, 5, 14] and list(webs.values()) == [1, 2, 2, 3]
    record(6, "matching and web basis sizes", ok, f"matchings {matchings}, webs {webs}")
    assert ok


def test_07_homfly_relation():
    rs = su3_params(1, "y")
    pos, neg, par = _crossing_triple()
    lhs = su3_rewrite(pos, rs).scale(Y ** -1) - su3_rewrite(neg, rs).scale(Y)
    rhs = StateVector.basis(par).scale(Y ** -3 - Y ** 3)
    ok = lhs == rhs
    record(7, "HOMFLY-type relation at a = 1", ok, f"lhs {lhs!r}")
    assert ok


def _q(num: int, den: int = 1) -> LaurentPoly:
    return LaurentPoly.var("q", Fraction(num, den))


ADAPTERS = {
    "kuperberg": (_q(-1, 6), _q(1, 6), _q(-1, 2) - _q(1, 2)),
    "oy": (Q, Q ** -1, Q ** 3 - Q ** -3),
    "sikora": (_q(1, 3), _q(-1, 3), Q - Q ** -1),
}


def test_08_adapter_relations():
    pos, neg, par = _crossing_triple()
    rels = {}
    for name, (cp, cn, rhs) in ADAPTERS.items():
        diff = normalized_invariant(pos, name).scale(cp) - normalized_invariant(neg, name).scale(cn)
        rels[name] = diff == StateVector.basis(par).scale(rhs)
    checked, bad = 0, 0
    for i in range(50):
        d = random_corpus(50, 6, 900)[i]
        base = normalized_invariant(d, "khovanov")
        sites = find_move_sites(d, "RI")
        for s in random.Random(i).sample(sites, min(3, len(sites))):
            checked += 1
            bad += normalized_invariant(apply_move(d, s), "khovanov") != base
    ok = all(rels.values()) and not bad and checked > 0
    record(8, "normalization skein relations and Khovanov RI invariance", ok,
           f"{rels}, khovanov RI sites {checked}, failures {bad}")
    assert ok


def test_09_confluence():
    rs = _rs()
    diagrams = [
        random_tangle(strands=2 if i % 2 else 0, closed=not i % 2, rows=5,
                      vertex_density=0.3, seed=100 + i, max_crossings=3)
        for i in range(20)
    ]
    distinct = []
    for d in diagrams:
        forms = {repr(su3_rewrite(d, rs, random.Random(k))) for k in range(1000)}
        distinct.append(len(forms))
    ok = all(n == 1 for n in distinct)
    record(9, "1000 random reduction orders agree on every corpus diagram", ok,
           f"20 diagrams, distinct normal forms per diagram: max {max(distinct)}")
    assert ok


def test_10_adjoint_and_mirror():
    img = (Y * LaurentPoly.var("a")).inverse()
    corpus = full_corpus() + web_corpus(20)
    adj_bad = mir_bad = 0
    for d in corpus:
        z = _z(d)
        adj_bad += su3_rewrite(d.adjoint(), _rs()) != z.map_diagrams(lambda k: k.adjoint())
        mir_bad += su3_rewrite(d.mirror(), _rs()) != z.map_diagrams(lambda k: k.mirror()).substitute("y", img)
    ok = not adj_bad and not mir_bad
    record(10, "Z commutes with adjoint; mirror matches y -> 1/(ya)", ok,
           f"{len(corpus)} diagrams, adjoint failures {adj_bad}, mirror failures {mir_bad}")
    assert ok


def test_11_twist_theorems():
    rng = random.Random(11)
    rs1 = su3_params(1, "y")
    worst = 0.0
    for d in (web_corpus(12) + random_corpus(8, 5, 31)):
        za, z1 = _z(d), su3_rewrite(d, rs1)
        for _ in range(5):
            a = cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))
            y = cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))
            zeta = a ** 0.25
            lhs = twist_conjugate(za.evaluate({"a": a, "y": y}), d, TwistSpec(vertex_factor=1 / zeta))
            rhs = z1.evaluate({"y": zeta ** 2 * y})
            worst = max(worst, lhs.max_abs_diff(rhs))
    omega = cmath.exp(2j * cmath.pi / 3)
    c = cmath.exp(0.4j)
    cube_ok = generic_fails = refused = True
    for mv in move_library(True):
        if not mv.kind.startswith("R41"):
            continue
        zm, zf = _z(mv.more).evaluate({"a": 1.3, "y": 0.7}), _z(mv.fewer).evaluate({"a": 1.3, "y": 0.7})
        tm = twist_conjugate(zm, mv.more, TwistSpec(crossing_factor=omega))
        tf = twist_conjugate(zf, mv.fewer, TwistSpec(crossing_factor=omega))
        cube_ok &= tm.max_abs_diff(tf) < NUMERIC_TOL
        gm = zm.scale(c ** mv.more.writhe())
        gf = zf.scale(c ** mv.fewer.writhe())
        generic_fails &= gm.max_abs_diff(gf) > 1e-3
        try:
            twist_conjugate(zm, mv.more, TwistSpec(crossing_factor=c))
            refused = False
        except IllegalCrossingTwist:
            pass
    imbalance = abs(omega ** 2 - omega ** -1) < NUMERIC_TOL and abs(c ** 2 - c ** -1) > 1e-3
    ok = worst < NUMERIC_TOL and cube_ok and generic_fails and refused and imbalance
    record(11, "vertex twist by 1/a^(1/4); crossing twist only for c^3 = 1", ok,
           f"max |diff| {worst:.2e} over 20 diagrams x 5 samples, tol {NUMERIC_TOL}")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-v"]))
