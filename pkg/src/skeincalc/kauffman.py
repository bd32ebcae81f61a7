"""The Kauffman bracket: state-sum oracle and rewriting engine."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .basis import matching_diagram
from .diagram import Diagram, bname
from .ring import LaurentPoly
from .statevector import StateVector
from .tangles import TangleBuilder

MAX_ORACLE_CROSSINGS = 16


class NoSuchCrossing(KeyError):
    pass


class TooManyCrossings(ValueError):
    pass


class NotKauffman(ValueError):
    pass


@dataclass(frozen=True)
class KauffmanParams:
    """Coefficients of the two smoothings and the value of a circle."""

    A: LaurentPoly
    B: LaurentPoly
    d: LaurentPoly

    @classmethod
    def standard(cls, var: str = "A") -> KauffmanParams:
        a = LaurentPoly.var(var)
        return cls(a, a.inverse(), -(a ** 2) - a ** -2)

    @classmethod
    def generic(cls) -> KauffmanParams:
        return cls(LaurentPoly.var("A"), LaurentPoly.var("B"), LaurentPoly.var("d"))


@dataclass(frozen=True)
class SmoothingState:
    choice: tuple[int, ...]
    p: int
    n: int
    circles: int
    matching_key: str


def as_kauffman(d: Diagram) -> Diagram:
    """Drop orientation data; trivalent vertices are not allowed here."""
    if d.trivalent():
        raise NotKauffman("the Kauffman theory has no trivalent vertices")
    if not d.oriented:
        return d
    kinds = {v: k for v, k in d.kinds.items() if k != "boundary"}
    return Diagram((None,) * d.n, kinds, d.mate, (), [None] * len(d.loops), False)


def smooth(d: Diagram, crossing: str, sign: int) -> Diagram:
    """Replace ``crossing`` by its positive (A) or negative (B) smoothing."""
    if d.kinds.get(crossing) != "cross":
        raise NoSuchCrossing(crossing)
    c = crossing
    pairs = ((1, 2), (3, 0)) if sign > 0 else ((0, 1), (2, 3))
    links = [((c, i), (c, j), False) for i, j in pairs]
    return d.splice(remove=[c], links=links)


# oracle ------------------------------------------------------------------

def _index(d: Diagram):
    darts = sorted(d.mate, key=lambda x: (x[0], x[1]))
    idx = {x: i for i, x in enumerate(darts)}
    mate = [idx[d.mate[x]] for x in darts]
    crossings = [tuple(idx[(c, p)] for p in range(4)) for c in d.crossings()]
    bdarts = [idx[(bname(k), 0)] for k in range(d.n)]
    return mate, crossings, bdarts


def smoothing_states(d: Diagram, backend=None):
    """Tally of states: ``{(matching, p - n, circles): multiplicity}``.
    Circles include the free loops of ``d``."""
    d = as_kauffman(d)
    nc = len(d.crossings())
    if nc > MAX_ORACLE_CROSSINGS:
        raise TooManyCrossings(f"{nc} crossings exceed the oracle guard of {MAX_ORACLE_CROSSINGS}")
    fn = backend or kernels.state_sum
    mate, crossings, bdarts = _index(d)
    tally = fn(mate, crossings, bdarts)
    loops = len(d.loops)
    return {(m, pn, c + loops): k for (m, pn, c), k in tally.items()}


@lru_cache(maxsize=4096)
def _matching_of(match: tuple[int, ...]) -> tuple[Diagram, str]:
    d = matching_diagram(len(match), [(i, j) for i, j in enumerate(match) if i < j])
    return d, d.canonical_key()


def _powers(base: LaurentPoly, top: int) -> list[LaurentPoly]:
    out = [LaurentPoly.const(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


@lru_cache(maxsize=64)
def _delta_power(c: int) -> dict[int, int]:
    """(-A^2 - A^-2)^c as {exponent: coefficient}."""
    out = {0: 1}
    for _ in range(c):
        nxt: dict[int, int] = {}
        for e, k in out.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - k
            nxt[e - 2] = nxt.get(e - 2, 0) - k
        out = nxt
    return out


def _standard_sum(d: Diagram, tally) -> StateVector:
    acc: dict[tuple, dict[int, int]] = {}
    for (match, pn, circles), mult in tally.items():
        poly = acc.setdefault(match, {})
        for e, k in _delta_power(circles).items():
            poly[e + pn] = poly.get(e + pn, 0) + k * mult
    coeffs, reps = {}, {}
    for match in sorted(acc):
        diagram, key = _matching_of(match)
        terms = {((("A", e),) if e else ()): k for e, k in acc[match].items() if k}
        coeffs[key] = LaurentPoly(terms)
        reps[key] = diagram
    return StateVector(d.boundary, coeffs, reps)


def bracket_oracle(d: Diagram, params: KauffmanParams | None = None, backend=None) -> StateVector:
    """Brute-force state sum: Σ_s A^p(s) B^n(s) d^c(s) · matching(s)."""
    d = as_kauffman(d)
    nc = len(d.crossings())
    tally = smoothing_states(d, backend)
    if params is None or params == KauffmanParams.standard():
        return _standard_sum(d, tally)
    top_c = max((c for _, _, c in tally), default=0)
    pa, pb, pd = _powers(params.A, nc), _powers(params.B, nc), _powers(params.d, top_c)
    coeffs: dict[str, LaurentPoly] = {}
    reps: dict[str, Diagram] = {}
    for (match, pn, circles), mult in sorted(tally.items()):
        p = (nc + pn) // 2
        diagram, key = _matching_of(match)
        term = pa[p] * pb[nc - p] * pd[circles] * mult
        coeffs[key] = coeffs[key] + term if key in coeffs else term
        reps[key] = diagram
    return StateVector(d.boundary, coeffs, reps)


def enumerate_states(d: Diagram) -> list[SmoothingState]:
    """Explicit per-state listing (small diagrams; used for inspection)."""
    d = as_kauffman(d)
    cs = d.crossings()
    if len(cs) > MAX_ORACLE_CROSSINGS:
        raise TooManyCrossings(f"{len(cs)} crossings")
    out = []
    for mask in range(1 << len(cs)):
        cur = d
        choice = tuple(1 if mask >> i & 1 else -1 for i in range(len(cs)))
        for c, s in zip(cs, choice):
            cur = smooth(cur, c, s)
        p = choice.count(1)
        out.append(SmoothingState(choice, p, len(cs) - p, len(cur.loops), cur.without_loops().canonical_key()))
    return out


# rewriting engine --------------------------------------------------------

def resolve_crossings(terms, params: KauffmanParams, which=None, rng: random.Random | None = None):
    """Apply the crossing rule to the listed crossings (all by default) of
    every term, merging identical intermediate diagrams."""
    work: dict[str, list] = {}
    for diagram, coeff in terms:
        key = diagram.map_key()
        if key in work:
            work[key][1] = work[key][1] + coeff
        else:
            work[key] = [diagram, coeff]
    targets = None if which is None else set(which)
    while True:
        pending = {}
        done = True
        for key, (diagram, coeff) in work.items():
            cs = [c for c in diagram.crossings() if targets is None or c in targets]
            if not cs:
                pending.setdefault(key, [diagram, 0])
                pending[key][1] = pending[key][1] + coeff
                continue
            done = False
            c = rng.choice(cs) if rng else cs[0]
            for sign, weight in ((1, params.A), (-1, params.B)):
                nd = smooth(diagram, c, sign)
                assert nd.measure() < diagram.measure()
                k = nd.map_key()
                if k in pending:
                    pending[k][1] = pending[k][1] + coeff * weight
                else:
                    pending[k] = [nd, coeff * weight]
        work = {k: v for k, v in pending.items() if v[1] != 0}
        if done:
            return [(dg, c) for dg, c in work.values()]


def remove_circles(terms, params: KauffmanParams):
    for diagram, coeff in terms:
        yield diagram.without_loops(), coeff * params.d ** len(diagram.loops)


def bracket_rewrite(d: Diagram, params: KauffmanParams | None = None, rng: random.Random | None = None) -> StateVector:
    """Normal form by the crossing rule, then the circle rule."""
    params = params or KauffmanParams.standard()
    d = as_kauffman(d)
    terms = resolve_crossings([(d, LaurentPoly.const(1))], params, rng=rng)
    return StateVector.from_terms(d.boundary, remove_circles(terms, params))


def evaluate_vector(v: StateVector, params: KauffmanParams | None = None) -> StateVector:
    """Apply the bracket to every basis diagram of ``v`` (a projection)."""
    out = StateVector(v.signature)
    for key, coeff in v.items():
        out = out + bracket_rewrite(v.reps[key], params).scale(coeff)
    return out


# uniqueness ----------------------------------------------------------------

def reidemeister_two(oriented: bool = False) -> tuple[Diagram, Diagram]:
    """The two sides of an RII move on two strands."""
    b = TangleBuilder(2, oriented)
    b.crossing(0, "left")
    b.crossing(0, "right")
    return b.finish(), TangleBuilder(2, oriented).finish()


def kauffman_uniqueness_residuals(params: KauffmanParams | None = None) -> list[LaurentPoly]:
    """Residuals of RII invariance for the crossing rule A·(+) + B·(−) and
    circle value d.  With generic A, B, d the result is
    ``[A*B - 1, A^2 + B^2 + A*B*d]``: the coefficient on the identity matching
    minus one, then the coefficient on the turn-back matching."""
    params = params or KauffmanParams.generic()
    lhs, rhs = reidemeister_two()
    diff = bracket_rewrite(lhs, params) - bracket_rewrite(rhs, params)
    ident = rhs.canonical_key()
    other = [k for k in diff.keys() if k != ident]
    turn = matching_diagram(4, [(0, 1), (2, 3)]).canonical_key()
    keys = [ident, turn] + [k for k in other if k != turn]
    return [LaurentPoly.coerce(diff[k]) for k in keys]


def substitute_params(polys, **images) -> list[LaurentPoly]:
    out = []
    for p in polys:
        for var, img in images.items():
            p = p.substitute(var, LaurentPoly.coerce(img))
        out.append(p)
    return out


def kink_factor(writhe: int) -> LaurentPoly:
    """(-A^3)^w: the effect of adding curls of total writhe w."""
    return (-LaurentPoly.var("A", 3)) ** writhe if writhe >= 0 else (-LaurentPoly.var("A", -3)) ** -writhe


__all__ = [
    "KauffmanParams", "SmoothingState", "NoSuchCrossing", "TooManyCrossings", "NotKauffman",
    "smooth", "bracket_oracle", "bracket_rewrite", "enumerate_states", "smoothing_states",
    "resolve_crossings", "evaluate_vector", "kauffman_uniqueness_residuals", "reidemeister_two",
    "substitute_params", "kink_factor", "as_kauffman",
]
