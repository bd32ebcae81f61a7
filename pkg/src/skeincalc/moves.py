"""Reidemeister-type moves: the local move library, site finding,
application, random diagrams and the invariance harness."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .diagram import DEGREE, Diagram, bname
from .tangles import InfeasibleSpec, TangleBuilder, kink, strand

ORIENTED_KINDS = ("RI", "RII-parallel", "RII-antiparallel", "RIII", "R41", "R41-reversed")
UNORIENTED_KINDS = ("RI", "RII", "RIII")


class StaleSite(ValueError):
    pass


@dataclass(frozen=True)
class LocalMove:
    """Two tangles with the same boundary that a move exchanges.  ``more``
    has at least as many crossings as ``fewer``."""

    kind: str
    name: str
    fewer: Diagram
    more: Diagram
    writhe: int = 0

    @property
    def delta(self) -> int:
        return len(self.more.crossings()) - len(self.fewer.crossings())


def forget_orientation(d: Diagram) -> Diagram:
    kinds = {v: k for v, k in d.kinds.items() if k != "boundary"}
    return Diagram((None,) * d.n, kinds, d.mate, (), [None] * len(d.loops), False)


def _over(left_is_over: bool) -> str:
    return "left" if left_is_over else "right"


def _ri_moves():
    for sign, orient, side in product((1, -1), (1, -1), ("right", "left")):
        yield LocalMove("RI", f"RI{'+' if sign > 0 else '-'}{orient:+d}{side[0]}",
                        strand(orient), kink(sign, orient, True, side), sign)


def _rii_moves():
    for (o1, o2), first in product(product((1, -1), repeat=2), ("left", "right")):
        b = TangleBuilder((o1, o2))
        b.crossing(0, first)
        b.crossing(0, "right" if first == "left" else "left")
        kind = "RII-parallel" if o1 == o2 else "RII-antiparallel"
        yield LocalMove(kind, f"{kind}{o1:+d}{o2:+d}{first[0]}", TangleBuilder((o1, o2)).finish(), b.finish())


def _riii_moves():
    # strands A, B, C start at positions 0, 1, 2; ab/ac/bc say which strand
    # of each pair is on top
    for orients, (ab, ac, bc) in product(product((1, -1), repeat=3), product((True, False), repeat=3)):
        if (ab and bc and not ac) or (not ab and not bc and ac):
            continue  # cyclic over-relation: not a Reidemeister III move
        left = TangleBuilder(orients)
        left.crossing(0, _over(ab))        # A over B?  A left
        left.crossing(1, _over(ac))        # A left, C right
        left.crossing(0, _over(bc))        # B left, C right
        right = TangleBuilder(orients)
        right.crossing(1, _over(bc))       # B left, C right
        right.crossing(0, _over(ac))       # A left, C right
        right.crossing(1, _over(ab))       # A left, B right
        tag = "".join("+" if o > 0 else "-" for o in orients) + "".join("1" if x else "0" for x in (ab, ac, bc))
        yield LocalMove("RIII", f"RIII{tag}", left.finish(), right.finish())


def _r41_moves():
    """A strand S slides past a trivalent vertex; the two-crossing side has
    S crossing both legs, the other side S crossing the stem."""
    for s_or, leg_or, s_over, from_right in product((1, -1), (1, -1), (True, False), (True, False)):
        if from_right:
            two = TangleBuilder((leg_or, leg_or, s_or))
            two.crossing(1, _over(not s_over))
            two.crossing(0, _over(not s_over))
            two.merge(1)
            one = TangleBuilder((leg_or, leg_or, s_or))
            one.merge(0)
            one.crossing(0, _over(not s_over))
        else:
            two = TangleBuilder((s_or, leg_or, leg_or))
            two.crossing(0, _over(s_over))
            two.crossing(1, _over(s_over))
            two.merge(0)
            one = TangleBuilder((s_or, leg_or, leg_or))
            one.merge(1)
            one.crossing(0, _over(s_over))
        more = two.finish()
        signs = {more.crossing_sign(c) for c in more.crossings()}
        assert len(signs) == 1
        kind = "R41" if signs == {1} else "R41-reversed"
        tag = f"{s_or:+d}{leg_or:+d}{'o' if s_over else 'u'}{'r' if from_right else 'l'}"
        yield LocalMove(kind, f"{kind}{tag}", one.finish(), more)


@lru_cache(maxsize=None)
def move_library(oriented: bool = True) -> tuple[LocalMove, ...]:
    moves = list(_ri_moves()) + list(_rii_moves()) + list(_riii_moves())
    if oriented:
        return tuple(moves + list(_r41_moves()))
    out, seen = [], set()
    for m in moves:
        kind = "RII" if m.kind in ("RII-parallel", "RII-antiparallel") else m.kind
        f, g = forget_orientation(m.fewer), forget_orientation(m.more)
        key = (kind, f.map_key(), g.map_key())
        if key in seen:
            continue
        seen.add(key)
        out.append(LocalMove(kind, m.name, f, g, m.writhe))
    return tuple(out)


def kinds_for(oriented: bool) -> tuple[str, ...]:
    return ORIENTED_KINDS if oriented else UNORIENTED_KINDS


# pattern matching ----------------------------------------------------------------

def _match(pattern: Diagram, d: Diagram):
    """Rotation-preserving embeddings of the (connected) internal part of
    ``pattern`` into ``d``.  Yields ``{pattern vertex: (d vertex, offset)}``."""
    pverts = pattern.internal_vertices()
    if not pverts:
        return
    root = pverts[0]
    rkind = pattern.kinds[root]
    offsets = (0, 2) if rkind == "cross" else tuple(range(DEGREE[rkind]))
    for w in d.vertices_of_kind(rkind):
        for o in offsets:
            m = _extend(pattern, d, {root: (w, o)})
            if m is not None:
                yield m


def _extend(pattern: Diagram, d: Diagram, m: dict):
    used = {w for w, _ in m.values()}
    stack = list(m)
    while stack:
        v = stack.pop()
        w, o = m[v]
        deg = DEGREE[pattern.kinds[v]]
        for p in range(deg):
            pd, dd = (v, p), (w, (p + o) % deg)
            if pattern.oriented and (pd in pattern.heads) != (dd in d.heads):
                return None
            v2, p2 = pattern.mate[pd]
            if pattern.kinds[v2] == "boundary":
                continue
            w2, q2 = d.mate[dd]
            k = pattern.kinds[v2]
            if d.kinds[w2] != k:
                return None
            deg2 = DEGREE[k]
            o2 = (q2 - p2) % deg2
            if k == "cross" and o2 % 2:
                return None
            if v2 in m:
                if m[v2] != (w2, o2):
                    return None
                continue
            if w2 in used:
                return None
            m[v2] = (w2, o2)
            used.add(w2)
            stack.append(v2)
    if len(m) != len(pattern.internal_vertices()):
        return None
    return m


# sites ----------------------------------------------------------------------

@dataclass(frozen=True)
class MoveSite:
    """Where and how a move applies.

    ``direction`` is ``insert`` when the move adds crossings, ``remove``
    when it deletes them and ``swap`` for the crossing-neutral RIII.
    ``location`` names the vertices (pattern sites) or darts (insertion
    sites) involved; ``ext`` lists, for each boundary point of the
    replacement, the dart of ``d`` it is glued to.
    """

    kind: str
    direction: str
    variant: str
    location: tuple
    ext: tuple
    replacement: Diagram = field(compare=False)
    cut: tuple = ()
    diagram_key: str = field(default="", compare=False)
    writhe: int = 0


def _pattern_sites(d: Diagram, moves, kinds) -> list[MoveSite]:
    out, seen = [], set()
    for mv in moves:
        if mv.kind not in kinds:
            continue
        sides = [(mv.more, mv.fewer, "remove" if mv.delta else "swap")]
        if mv.fewer.internal_vertices():
            sides.append((mv.fewer, mv.more, "insert" if mv.delta else "swap"))
        for pattern, repl, direction in sides:
            for m in _match(pattern, d):
                ext = []
                for k in range(pattern.n):
                    v, p = pattern.mate[(bname(k), 0)]
                    w, o = m[v]
                    ext.append((w, (p + o) % DEGREE[pattern.kinds[v]]))
                loc = tuple(sorted(w for w, _ in m.values()))
                key = (mv.kind, loc, repl.map_key(), tuple(ext))
                if key in seen:
                    continue
                seen.add(key)
                out.append(MoveSite(mv.kind, direction, mv.name, loc, tuple(ext), repl,
                                    diagram_key=d.map_key(), writhe=mv.writhe))
    return out


def _ri_insert_sites(d: Diagram, moves) -> list[MoveSite]:
    out = []
    variants = [mv for mv in moves if mv.kind == "RI" and (not d.oriented or mv.fewer.boundary[0] == "+")]
    for t, h in d.edges():
        for mv in variants:
            out.append(MoveSite("RI", "insert", mv.name, (t, h), (t, h), mv.more, cut=(t,),
                                diagram_key=d.map_key(), writhe=mv.writhe))
    return out


def _rii_insert_sites(d: Diagram, moves, kinds) -> list[MoveSite]:
    out = []
    key = d.map_key()
    bigons = {}
    for mv in moves:
        if mv.kind in kinds and mv.kind in ("RII", "RII-parallel", "RII-antiparallel"):
            o = tuple(mv.fewer.boundary[:2])
            bigons.setdefault(o, []).append(mv)
    for face in d.faces():
        real = [x for x in face.darts if x in d.mate]
        for i in range(len(real)):
            for j in range(i + 1, len(real)):
                d1, d2 = real[i], real[j]
                if d.mate[d1] == d2:
                    continue  # the same edge seen from both sides
                # counterclockwise around the finger-move disk
                ext = (d2, d.mate[d1], d1, d.mate[d2])
                if d.oriented:
                    o1 = "+" if d.mate[d2] in d.heads else "-"
                    o2 = "+" if d1 in d.heads else "-"
                    candidates = bigons.get((o1, o2), [])
                else:
                    candidates = bigons.get((None, None), [])
                for mv in candidates:
                    out.append(MoveSite(mv.kind, "insert", mv.name, (d1, d2), ext, mv.more,
                                        cut=(d1, d2), diagram_key=key))
    return out


def find_move_sites(d: Diagram, kind: str = "all", directions=("insert", "remove", "swap")) -> list[MoveSite]:
    """All sites for ``kind`` (a move kind, a prefix such as ``RII``, or
    ``all``), in a deterministic order."""
    kinds = tuple(k for k in kinds_for(d.oriented) if kind == "all" or k == kind or k.startswith(kind + "-"))
    moves = move_library(d.oriented)
    sites = []
    if "remove" in directions or "swap" in directions or "insert" in directions:
        sites += [s for s in _pattern_sites(d, moves, kinds) if s.direction in directions]
    if "insert" in directions:
        if "RI" in kinds:
            sites += _ri_insert_sites(d, moves)
        sites += _rii_insert_sites(d, moves, kinds)
    return sites


def apply_move(d: Diagram, site: MoveSite, check: bool = True) -> Diagram:
    if site.diagram_key and site.diagram_key != d.map_key():
        raise StaleSite("site was found on a different diagram")
    r = site.replacement
    rverts = r.internal_vertices()
    names = dict(zip(rverts, d.fresh_names(len(rverts), "m")))

    def img(x):
        v, p = x
        if r.kinds[v] == "boundary":
            return site.ext[int(v[1:])]
        return (names[v], p)

    links = [(img(t), img(h), d.oriented) for t, h in r.edges()]
    remove = () if site.cut else site.location
    out = d.splice(remove=remove, cut=site.cut, new_vertices={names[v]: r.kinds[v] for v in rverts},
                   links=links, extra_loops=r.loops)
    return out.check() if check else out


# random diagrams -------------------------------------------------------------------

@dataclass(frozen=True)
class TangleSpec:
    strands: int = 2
    rows: int = 8
    vertex_density: float = 0.0
    crossing_density: float = 0.5
    seed: int = 0
    oriented: bool = True
    closed: bool = False
    max_crossings: int | None = None
    cup_density: float = 0.15
    cap_density: float = 0.15


def _close_up(b: TangleBuilder, rng: random.Random, allow_vertices: bool) -> None:
    while b.width:
        o = b.orientations()
        caps = [i for i in range(b.width - 1) if not b.oriented or o[i] == -o[i + 1]]
        if caps:
            b.cap(rng.choice(caps))
            continue
        merges = [i for i in range(b.width - 1) if o[i] == o[i + 1]]
        if not allow_vertices or not merges:
            raise InfeasibleSpec("the open ends cannot be closed off")
        b.merge(rng.choice(merges))


def random_tangle(spec: TangleSpec | dict | None = None, **kw) -> Diagram:
    """A planar diagram stacked from random elementary rows; deterministic
    for a given spec."""
    if spec is None:
        spec = TangleSpec(**kw)
    elif isinstance(spec, dict):
        spec = TangleSpec(**{**spec, **kw})
    rng = random.Random(spec.seed)
    if spec.vertex_density and not spec.oriented:
        raise InfeasibleSpec("trivalent vertices need an oriented diagram")
    if spec.closed and spec.strands:
        raise InfeasibleSpec("a closed diagram starts with no strands")
    bottom = tuple(rng.choice((1, -1)) for _ in range(spec.strands)) if spec.oriented else spec.strands
    b = TangleBuilder(bottom, spec.oriented)
    crossings = 0
    cap_limit = spec.max_crossings if spec.max_crossings is not None else 10 ** 9
    for _ in range(spec.rows):
        r = rng.random()
        w = b.width
        o = b.orientations()
        if w < 2 or r < spec.cup_density:
            b.cup(rng.randrange(w + 1), rng.choice((1, -1)))
            continue
        r -= spec.cup_density
        if r < spec.crossing_density:
            if crossings < cap_limit:
                b.signed_crossing(rng.randrange(w - 1), rng.choice((1, -1)))
                crossings += 1
            continue
        r -= spec.crossing_density
        if r < spec.vertex_density:
            merges = [i for i in range(w - 1) if o[i] == o[i + 1]]
            if merges and rng.random() < 0.5:
                b.merge(rng.choice(merges))
            else:
                b.split(rng.randrange(w))
            continue
        r -= spec.vertex_density
        if r < spec.cap_density:
            caps = [i for i in range(w - 1) if not spec.oriented or o[i] == -o[i + 1]]
            if caps:
                b.cap(rng.choice(caps))
    if spec.closed:
        _close_up(b, rng, spec.vertex_density > 0)
    return b.finish()


# invariance harness ------------------------------------------------------------------

@dataclass
class SiteResult:
    site: MoveSite
    passed: bool
    factor: object
    residual: object = None


@dataclass
class InvarianceReport:
    theory: str
    results: list = field(default_factory=list)

    @property
    def failures(self) -> list[SiteResult]:
        return [r for r in self.results if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[tuple[str, str], tuple[int, int]]:
        out: dict = {}
        for r in self.results:
            k = (r.site.kind, r.site.direction)
            p, n = out.get(k, (0, 0))
            out[k] = (p + r.passed, n + 1)
        return out


def framing_factor(theory: str, writhe: int, params=None):
    """The exact scalar a change of writhe by ``writhe`` curls introduces."""
    from .ring import LaurentPoly

    if theory == "kauffman":
        from .kauffman import kink_factor
        return kink_factor(writhe)
    rs = params
    k = rs.a ** -4 * rs.y ** -8 if writhe >= 0 else rs.a ** 4 * rs.y ** 8
    return k ** abs(writhe) if writhe else LaurentPoly.const(1)


def make_evaluator(theory: str, params=None):
    if theory == "kauffman":
        from .kauffman import bracket_oracle, bracket_rewrite
        return lambda d: (bracket_oracle(d, params) if len(d.crossings()) <= 12 else bracket_rewrite(d, params))
    if theory == "su3":
        from .spider import su3_rewrite, symbolic_params
        rs = params or symbolic_params()
        return lambda d: su3_rewrite(d, rs)
    raise ValueError(f"unknown theory {theory!r}")


def invariance_report(d: Diagram, theory: str = "kauffman", params=None, kinds="all",
                      max_sites: int | None = None, seed: int = 0, expect_framing: bool = True) -> InvarianceReport:
    """Evaluate ``d`` before and after every applicable move and compare.

    RI sites pass when the value changes by exactly the framing factor of
    the curl (``expect_framing``); all other moves must leave it unchanged.
    ``max_sites`` samples that many sites per move kind (seeded)."""
    if theory == "su3":
        from .spider import symbolic_params
        params = params or symbolic_params()
    if theory == "kauffman" and d.oriented:
        d = forget_orientation(d)
    evaluate = make_evaluator(theory, params)
    base = evaluate(d)
    sites = find_move_sites(d, kinds)
    if max_sites is not None:
        rng = random.Random(seed)
        by_kind: dict = {}
        for s in sites:
            by_kind.setdefault((s.kind, s.direction), []).append(s)
        sites = []
        for k in sorted(by_kind):
            group = by_kind[k]
            sites += group if len(group) <= max_sites else rng.sample(group, max_sites)
    report = InvarianceReport(theory)
    for s in sites:
        after_d = apply_move(d, s)
        after = evaluate(after_d)
        dw = after_d.writhe() - d.writhe() if d.oriented else _curl_writhe(s)
        factor = framing_factor(theory, dw, params) if (s.kind == "RI" and expect_framing) else 1
        expected = base.scale(factor)
        residual = after - expected
        report.results.append(SiteResult(s, residual.is_zero(), factor, None if residual.is_zero() else residual))
    return report


def _curl_writhe(site: MoveSite) -> int:
    w = site.writhe
    return -w if site.direction == "remove" else w
