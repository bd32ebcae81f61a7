"""State-space bases: crossingless matchings and non-elliptic webs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .diagram import Diagram, bname


@dataclass(frozen=True)
class BasisElement:
    canonical_key: str
    diagram: Diagram


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def signature_of(sig) -> tuple:
    """Normalize a signature: an int is an unsigned point count, a string
    like ``"++-"`` or a sequence of signs is an SU(3) signature."""
    if isinstance(sig, int):
        return (None,) * sig
    return tuple(None if s in (".", None) else s for s in sig)


# matchings ---------------------------------------------------------------

def _pairings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for j in range(1, len(points), 2):
        inside, outside = points[1:j], points[j + 1:]
        for a in _pairings(inside):
            for b in _pairings(outside):
                yield ((first, points[j]),) + a + b


def matching_diagram(n: int, pairs) -> Diagram:
    mate = {}
    for i, j in pairs:
        mate[(bname(i), 0)] = (bname(j), 0)
        mate[(bname(j), 0)] = (bname(i), 0)
    return Diagram((None,) * n, {}, mate, (), (), oriented=False)


def enumerate_matchings(sig) -> list[BasisElement]:
    n = len(signature_of(sig))
    if n % 2:
        return []
    out = {}
    for pairs in _pairings(tuple(range(n))):
        d = matching_diagram(n, pairs)
        out[d.canonical_key()] = d
    return [BasisElement(k, out[k]) for k in sorted(out)]


# webs --------------------------------------------------------------------

def _flip(s: str) -> str:
    return "-" if s == "+" else "+"


def _build(sig, kinds, links) -> Diagram:
    """Oriented diagram from undirected dart pairs; direction follows from the
    vertex kinds and boundary signs."""
    mate, heads = {}, set()
    for a, b in links:
        mate[a] = b
        mate[b] = a
    for d in mate:
        v, _ = d
        k = kinds.get(v)
        if k == "sink" or (k is None and sig[int(v[1:])] == "-"):
            heads.add(d)
    return Diagram(sig, kinds, mate, heads, (), True)


def _shift_links(w: Diagram, old_to_new: dict[int, str]):
    """Edges of ``w`` with boundary darts renamed, plus the mates of the
    boundary points that are about to be replaced."""
    links = []
    seen = set()
    for d, e in w.mate.items():
        if d in seen:
            continue
        seen.add(e)
        links.append((d, e))

    def rename(x):
        if w.kinds.get(x[0]) == "boundary":
            return (old_to_new[int(x[0][1:])], 0)
        return x

    return [(rename(a), rename(b)) for a, b in links]


def _insert_cap(w: Diagram, i: int, s: str) -> Diagram:
    n = w.n
    old = {k: bname(k if k < i else k + 2) for k in range(n)}
    sig = w.boundary[:i] + (s, _flip(s)) + w.boundary[i:]
    links = _shift_links(w, old) + [((bname(i), 0), (bname(i + 1), 0))]
    kinds = {v: k for v, k in w.kinds.items() if k != "boundary"}
    return _build(sig, kinds, links)


def _insert_y(w: Diagram, i: int) -> Diagram:
    n = w.n
    t = w.boundary[i]
    v = w.fresh_names(1, "v")[0]
    old = {k: bname(k if k < i else k + 1) for k in range(n)}
    old[i] = v
    sig = w.boundary[:i] + (_flip(t), _flip(t)) + w.boundary[i + 1:]
    links = []
    for a, b in _shift_links(w, old):
        # the old edge at point i now ends on port 1 of the new vertex
        a = (v, 1) if a == (v, 0) else a
        b = (v, 1) if b == (v, 0) else b
        links.append((a, b))
    links += [((v, 0), (bname(i + 1), 0)), ((v, 2), (bname(i), 0))]
    kinds = {x: k for x, k in w.kinds.items() if k != "boundary"}
    kinds[v] = "source" if t == "+" else "sink"
    return _build(sig, kinds, links)


def _insert_h(w: Diagram, i: int) -> Diagram:
    t, s = w.boundary[i], w.boundary[i + 1]
    u, v = w.fresh_names(2, "v")
    old = {k: bname(k) for k in range(w.n)}
    old[i], old[i + 1] = u, v
    sig = w.boundary[:i] + (_flip(t), _flip(s)) + w.boundary[i + 2:]
    links = []
    for a, b in _shift_links(w, old):
        fix = {(u, 0): (u, 1), (v, 0): (v, 1)}
        links.append((fix.get(a, a), fix.get(b, b)))
    links += [((u, 0), (v, 2)), ((u, 2), (bname(i), 0)), ((v, 0), (bname(i + 1), 0))]
    kinds = {x: k for x, k in w.kinds.items() if k != "boundary"}
    kinds[u] = "source" if t == "+" else "sink"
    kinds[v] = "source" if s == "+" else "sink"
    return _build(sig, kinds, links)


def is_non_elliptic(d: Diagram) -> bool:
    return not d.loops and all(f.sides >= 6 for f in d.faces() if f.interior)


def _rotate(sig: tuple, r: int) -> tuple:
    return sig[r:] + sig[:r]


@lru_cache(maxsize=None)
def _webs(sig: tuple, budget: int) -> dict[str, Diagram]:
    """Non-elliptic webs on the cyclic word ``sig`` with at most ``budget``
    trivalent vertices.

    Every non-elliptic web with nonempty boundary has a cap, a Y or an H
    touching the boundary; peeling it off leaves a smaller non-elliptic web,
    so growing from smaller signatures reaches every web."""
    n = len(sig)
    if n == 0:
        empty = Diagram((), {}, {}, (), (), True)
        return {empty.canonical_key(): empty}
    out: dict[str, Diagram] = {}
    for r in range(n if n > 2 else 1):
        # the structure sits on points r, r+1 of sig = points 0, 1 of rs
        rs = _rotate(sig, r)
        a, b = rs[0], rs[1 % n]
        candidates = []
        if n >= 2 and a != b:
            for w in _webs(rs[2:], budget).values():
                candidates.append(_insert_cap(w, 0, a))
            if budget >= 2:
                for w in _webs((_flip(a), _flip(b)) + rs[2:], budget - 2).values():
                    candidates.append(_insert_h(w, 0))
        elif n >= 2 and budget >= 1:
            for w in _webs((_flip(a),) + rs[2:], budget - 1).values():
                candidates.append(_insert_y(w, 0))
        for d in candidates:
            if is_non_elliptic(d):
                d = d.rotate_boundary(r) if r else d
                out.setdefault(d.canonical_key(), d)
    return out


def enumerate_webs(sig, max_vertices: int = 12) -> list[BasisElement]:
    """All non-elliptic webs on ``sig`` with at most ``max_vertices`` trivalent
    vertices, in canonical-key order."""
    sig = signature_of(sig)
    if any(s not in ("+", "-") for s in sig):
        raise ValueError("web signatures need '+'/'-' signs")
    found = _webs(sig, max_vertices)
    return [BasisElement(k, found[k]) for k in sorted(found)]


def sl3_invariant_dimension(sig) -> int:
    """dim Inv(V^{s_1} ⊗ ... ⊗ V^{s_n}) for sl3, counted by dominant weight
    paths; ``+`` is the defining representation, ``-`` its dual."""
    weights = {(0, 0): 1}
    for s in signature_of(sig):
        steps = ((1, 0), (-1, 1), (0, -1)) if s == "+" else ((0, 1), (1, -1), (-1, 0))
        nxt: dict[tuple[int, int], int] = {}
        for (a, b), c in weights.items():
            for da, db in steps:
                w = (a + da, b + db)
                if w[0] >= 0 and w[1] >= 0:
                    nxt[w] = nxt.get(w, 0) + c
        weights = nxt
    return weights.get((0, 0), 0)


def basis_for(sig, max_vertices: int = 12, oriented: bool | None = None) -> list[BasisElement]:
    """Matchings for unsigned signatures, webs for signed ones.  The empty
    signature is ambiguous; ``oriented`` picks the theory (default SU(3))."""
    sig = signature_of(sig)
    if (sig and sig[0] is None) or (not sig and oriented is False):
        return enumerate_matchings(len(sig))
    return enumerate_webs(sig, max_vertices)
