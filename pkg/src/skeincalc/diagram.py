"""Tangle diagrams in a marked disk as decorated planar combinatorial maps.

Vertices carry ports numbered counterclockwise.  A dart is ``(vertex, port)``;
``mate`` pairs darts into edges and, for oriented diagrams, ``heads`` holds the
head dart of every edge.  Boundary points are vertices ``b0 .. b{n-1}`` in
counterclockwise order with a single real port 0.  For face tracing each
boundary vertex also gets two pseudo ports along the boundary circle:
port 1 toward the next point and port 2 toward the previous one, with
rotation ``1 -> 0 -> 2``.

A crossing keeps its under-strand on ports 0 and 2 and its over-strand on
ports 1 and 3.  A crossing is positive when the over-strand direction is the
under-strand direction turned a quarter-turn counterclockwise.

Components that do not reach the boundary are closed; their value is a scalar
multiple of the empty diagram, so where they sit is irrelevant for evaluation
and they are treated as living on the sphere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Dart = tuple

DEGREE = {"source": 3, "sink": 3, "cross": 4, "boundary": 1}
KIND_CODE = {"source": "S", "sink": "T", "cross": "X", "boundary": "B"}
_BNAME = re.compile(r"b(\d+)$")


class HasCrossings(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class SpliceError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: str = ""

    def __str__(self) -> str:
        return f"{self.code}: {self.message}" + (f" [{self.where}]" if self.where else "")


@dataclass(frozen=True)
class Face:
    darts: tuple
    sides: int
    interior: bool
    empty: bool = True

    @property
    def vertices(self) -> tuple:
        return tuple(d[0] for d in self.darts)


def bname(k: int) -> str:
    return f"b{k}"


_DIGITS = re.compile(r"(\d+)")


@lru_cache(maxsize=65536)
def natural_key(name: str):
    return tuple(int(t) if t.isdigit() else t for t in _DIGITS.split(name))


def dart_key(d: Dart):
    return (natural_key(d[0]), d[1])


class Diagram:
    """Immutable tangle diagram.  Build through :func:`make_diagram`, the parser,
    :class:`skeincalc.tangles.TangleBuilder` or :meth:`splice`."""

    __slots__ = ("boundary", "kinds", "mate", "heads", "loops", "oriented",
                 "containment", "_bidx", "_cache")

    def __init__(self, boundary, kinds, mate, heads=frozenset(), loops=(), oriented=True, containment=()):
        self.boundary = tuple(boundary)
        self.kinds = dict(kinds)
        for k in range(len(self.boundary)):
            self.kinds[bname(k)] = "boundary"
        self.mate = dict(mate)
        self.heads = frozenset(heads) if oriented else frozenset()
        self.loops = tuple(loops)
        self.oriented = oriented
        self.containment = tuple(containment)
        self._bidx = {bname(k): k for k in range(len(self.boundary))}
        self._cache = {}

    # basic queries -----------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.boundary)

    def internal_vertices(self) -> list[str]:
        return sorted((v for v, k in self.kinds.items() if k != "boundary"), key=natural_key)

    def vertices_of_kind(self, *kinds: str) -> list[str]:
        return [v for v in self.internal_vertices() if self.kinds[v] in kinds]

    def crossings(self) -> list[str]:
        return self.vertices_of_kind("cross")

    def trivalent(self) -> list[str]:
        return self.vertices_of_kind("source", "sink")

    def darts(self) -> list[Dart]:
        return [(v, p) for v, k in self.kinds.items() for p in range(DEGREE[k])]

    def is_head(self, d: Dart) -> bool:
        return d in self.heads

    def edges(self) -> list[tuple[Dart, Dart]]:
        """Edges as ``(tail, head)`` (unoriented: dart-sorted ends), sorted."""
        seen, out = set(), []
        for d, e in self.mate.items():
            if d in seen:
                continue
            seen.add(d)
            seen.add(e)
            if self.oriented:
                out.append((e, d) if d in self.heads else (d, e))
            else:
                out.append(tuple(sorted((d, e), key=dart_key)))
        return sorted(out, key=lambda t: (dart_key(t[0]), dart_key(t[1])))

    def writhe(self) -> int:
        return sum(self.crossing_sign(c) for c in self.crossings())

    def crossing_sign(self, c: str) -> int:
        """+1 / -1 for an oriented crossing (see module docstring)."""
        if not self.oriented:
            raise ValueError("crossing sign needs an oriented diagram")
        under_in = 0 if (c, 0) in self.heads else 2
        over_in = 1 if (c, 1) in self.heads else 3
        # under 0->2 with over 1->3, or under 2->0 with over 3->1
        return 1 if (over_in - under_in) % 4 == 1 else -1

    def is_crossing_free(self) -> bool:
        return not any(k == "cross" for k in self.kinds.values())

    # map structure ------------------------------------------------------
    def alpha(self, d: Dart) -> Dart:
        v, p = d
        if p and v in self._bidx:
            k, n = self._bidx[v], self.n
            return (bname((k + 1) % n), 2) if p == 1 else (bname((k - 1) % n), 1)
        return self.mate[d]

    def sigma(self, d: Dart) -> Dart:
        v, p = d
        kind = self.kinds[v]
        if kind == "boundary":
            return (v, (2, 0, 1)[p])
        return (v, (p + 1) % DEGREE[kind])

    def all_darts(self) -> list[Dart]:
        out = self.darts()
        for v in self._bidx:
            out.append((v, 1))
            out.append((v, 2))
        return out

    def _orbits(self) -> list[tuple]:
        if "orbits" in self._cache:
            return self._cache["orbits"]
        seen, orbits = set(), []
        for d in sorted(self.all_darts(), key=dart_key):
            if d in seen:
                continue
            orbit = []
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                d = self.sigma(self.alpha(d))
            orbits.append(tuple(orbit))
        self._cache["orbits"] = orbits
        return orbits

    def faces(self) -> list[Face]:
        """Faces of the diagram inside the disk (the region outside the
        boundary circle is omitted).  Free loops are not faces; see
        :attr:`loops`."""
        if "faces" in self._cache:
            return self._cache["faces"]
        used = {f for (_, f) in self.containment}
        out = []
        for orbit in self._orbits():
            if self.n and orbit[0][0] in self._bidx and orbit[0][1] == 1 and all(
                v in self._bidx and p == 1 for v, p in orbit
            ):
                continue
            interior = not any(v in self._bidx for v, _ in orbit)
            empty = not any(f in orbit for f in used)
            out.append(Face(orbit, len(orbit), interior, empty))
        self._cache["faces"] = out
        return out

    def components(self) -> list[set[str]]:
        """Vertex sets of connected components; all boundary points share one."""
        parent = {v: v for v in self.kinds}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for d, e in self.mate.items():
            union(d[0], e[0])
        names = list(self._bidx)
        for a, b in zip(names, names[1:]):
            union(a, b)
        groups: dict[str, set[str]] = {}
        for v in self.kinds:
            groups.setdefault(find(v), set()).add(v)
        return sorted(groups.values(), key=lambda g: min(natural_key(v) for v in g))

    def closed_components(self) -> list[set[str]]:
        return [g for g in self.components() if not any(v in self._bidx for v in g)]

    # validation ---------------------------------------------------------
    def validate(self) -> list[Violation]:
        out: list[Violation] = []
        for v, k in self.kinds.items():
            if k not in DEGREE:
                out.append(Violation("kind", f"unknown vertex kind {k!r}", v))
            elif k == "boundary" and v not in self._bidx:
                out.append(Violation("kind", "boundary kind on non-boundary name", v))
            elif k != "boundary" and _BNAME.match(v):
                out.append(Violation("name", "internal vertex uses a reserved boundary name", v))
            if not self.oriented and k in ("source", "sink"):
                out.append(Violation("mode", "trivalent vertex in an unoriented diagram", v))
        if out:
            return out
        darts = set(self.darts())
        for d in sorted(darts, key=dart_key):
            e = self.mate.get(d)
            if e is None:
                out.append(Violation("dart", "port is not attached to any edge", f"{d[0]}.{d[1]}"))
            elif e == d or self.mate.get(e) != d:
                out.append(Violation("dart", "edge ends are inconsistent", f"{d[0]}.{d[1]}"))
        for d in self.mate:
            if d not in darts:
                out.append(Violation("dart", "edge end refers to a missing port", f"{d[0]}.{d[1]}"))
        if out:
            return out
        if self.oriented:
            out.extend(self._validate_orientation())
        out.extend(self._validate_planarity())
        if self.oriented and self.is_crossing_free():
            for f in self.faces():
                if f.interior and f.sides % 2:
                    out.append(Violation("parity", f"interior face with {f.sides} sides", _fmt_face(f)))
        out.extend(self._validate_containment())
        return out

    def _validate_orientation(self) -> list[Violation]:
        out = []
        for d, e in self.mate.items():
            if (d in self.heads) == (e in self.heads):
                out.append(Violation("orientation", "edge needs exactly one head", f"{d[0]}.{d[1]}"))
        if self.heads - set(self.mate):
            out.append(Violation("orientation", "head set names unknown darts"))
        for v, k in self.kinds.items():
            if k == "source" and any((v, p) in self.heads for p in range(3)):
                out.append(Violation("orientation", "source vertex has an inward edge", v))
            elif k == "sink" and any((v, p) not in self.heads for p in range(3)):
                out.append(Violation("orientation", "sink vertex has an outward edge", v))
            elif k == "cross":
                for p in (0, 1):
                    if ((v, p) in self.heads) == ((v, p + 2) in self.heads):
                        out.append(Violation("orientation", f"strand through ports {p},{p + 2} is incoherent", v))
            elif k == "boundary":
                sign = self.boundary[self._bidx[v]]
                inward = (v, 0) not in self.heads
                if sign == "+" and not inward:
                    out.append(Violation("orientation", "'+' boundary point must have its edge pointing into the disk", v))
                elif sign == "-" and inward:
                    out.append(Violation("orientation", "'-' boundary point must have its edge pointing out of the disk", v))
                elif sign not in ("+", "-"):
                    out.append(Violation("orientation", f"bad boundary sign {sign!r}", v))
        return out

    def _validate_planarity(self) -> list[Violation]:
        out = []
        orbit_of = {}
        for i, orbit in enumerate(self._orbits()):
            for d in orbit:
                orbit_of[d] = i
        for comp in self.components():
            darts = [d for d in self.all_darts() if d[0] in comp]
            nv = len(comp)
            ne = len(darts) // 2
            nf = len({orbit_of[d] for d in darts})
            if nv - ne + nf != 2:
                who = min(comp, key=natural_key)
                out.append(Violation("planarity", f"V-E+F = {nv - ne + nf} (expected 2)", f"component of {who}"))
        return out

    def _validate_containment(self) -> list[Violation]:
        if not self.containment:
            return []
        out = []
        comp_of = {}
        for i, g in enumerate(self.components()):
            for v in g:
                comp_of[v] = i
        orbit_comp = {}
        edges = {}
        for inner, face_dart in self.containment:
            if inner not in comp_of or face_dart[0] not in comp_of:
                out.append(Violation("containment", "unknown vertex", f"{inner} in {face_dart}"))
                continue
            if face_dart not in set(self.all_darts()):
                out.append(Violation("containment", "face reference is not a dart", str(face_dart)))
                continue
            a, b = comp_of[inner], comp_of[face_dart[0]]
            if a == b:
                out.append(Violation("containment", "component contained in its own face", inner))
            if any(v in self._bidx for v in self.components()[a]):
                out.append(Violation("containment", "boundary component cannot float in a face", inner))
            if a in edges and edges[a] != b:
                out.append(Violation("containment", "component placed twice", inner))
            edges[a] = b
            orbit_comp[a] = b
        for start in edges:
            seen, x = set(), start
            while x in edges:
                if x in seen:
                    out.append(Violation("containment", "containment forest has a cycle"))
                    return out
                seen.add(x)
                x = edges[x]
        return out

    def check(self) -> Diagram:
        bad = self.validate()
        if bad:
            raise ValidationError(bad)
        return self

    # symmetries ---------------------------------------------------------
    def adjoint(self) -> Diagram:
        """Reverse every edge, flip boundary signs, swap sources and sinks."""
        if not self.oriented:
            raise ValueError("adjoint needs an oriented diagram")
        swap = {"source": "sink", "sink": "source"}
        kinds = {v: swap.get(k, k) for v, k in self.kinds.items() if k != "boundary"}
        heads = {d for d in self.mate if d not in self.heads}
        flip = {"+": "-", "-": "+"}
        loops = tuple({"cw": "ccw", "ccw": "cw"}.get(o, o) for o in self.loops)
        return Diagram([flip[s] for s in self.boundary], kinds, self.mate, heads, loops, True, self.containment)

    def _remap(self, port_map, bmap, kinds=None, flip_loops=True) -> Diagram:
        def m(d):
            v, p = d
            if v in self._bidx:
                return (bname(bmap(self._bidx[v])), 0)
            return (v, port_map(self.kinds[v], p))

        mate = {m(d): m(e) for d, e in self.mate.items()}
        heads = {m(d) for d in self.heads}
        boundary = [None] * self.n
        for k, s in enumerate(self.boundary):
            boundary[bmap(k)] = s
        loops = tuple({"cw": "ccw", "ccw": "cw"}.get(o, o) for o in self.loops) if flip_loops else self.loops
        containment = tuple((a, m(f) if f[1] == 0 or f[0] not in self._bidx else f) for a, f in self.containment)
        internal = {v: k for v, k in self.kinds.items() if k != "boundary"}
        return Diagram(boundary, kinds or internal, mate, heads, loops, self.oriented, containment)

    def mirror(self) -> Diagram:
        """Planar reflection keeping each crossing's over/under data: the
        mirror-image tangle.  Crossing signs flip."""
        n = self.n
        return self._remap(lambda kind, p: (-p) % DEGREE[kind], lambda k: (-k) % n if n else k)

    def rotate_flip(self) -> Diagram:
        """Reflect the disk and switch every crossing: the diagram of the
        tangle turned over about an axis in the plane.  Crossing signs are kept."""
        n = self.n

        def ports(kind, p):
            if kind == "cross":
                return (1 - p) % 4
            return (-p) % DEGREE[kind]

        return self._remap(ports, lambda k: (-k) % n if n else k)

    def rotate_boundary(self, shift: int) -> Diagram:
        """Relabel boundary point k as k + shift (a rotation of the disk)."""
        n = self.n
        return self._remap(lambda kind, p: p, lambda k: (k + shift) % n, flip_loops=False)

    # canonical form -----------------------------------------------------
    def _code_from(self, roots: list[tuple[str, int]]) -> tuple:
        ids: dict[str, int] = {}
        entry: dict[str, int] = {}
        order: list[str] = []
        for v, p in roots:
            ids[v] = len(order)
            entry[v] = p
            order.append(v)
        i = 0
        code = []
        while i < len(order):
            v = order[i]
            i += 1
            kind = self.kinds[v]
            deg = DEGREE[kind]
            e0 = entry[v]
            tag = KIND_CODE[kind] + (str(e0 % 2) if kind == "cross" else "")
            ports = []
            for j in range(deg):
                d = (v, (e0 + j) % deg)
                w, q = self.mate[d]
                if w not in ids:
                    ids[w] = len(order)
                    entry[w] = q
                    order.append(w)
                off = 0 if self.kinds[w] == "boundary" else (q - entry[w]) % DEGREE[self.kinds[w]]
                ori = ("i" if d in self.heads else "o") if self.oriented else ""
                ports.append(f"{ids[w]}.{off}{ori}")
            code.append(tag + "(" + ",".join(ports) + ")")
        return tuple(code)

    def map_key(self) -> str:
        """Canonical encoding of the embedded diagram rel boundary (crossings allowed)."""
        if "key" in self._cache:
            return self._cache["key"]
        n = self.n
        head = ("O" if self.oriented else "U") + ":" + "".join(s or "." for s in self.boundary)
        parts = [head]
        closed = self.closed_components()
        if n:
            parts.append(" ".join(self._code_from([(bname(k), 0) for k in range(n)])))
        floats = []
        if closed:
            facelen = {}
            for orbit in self._orbits():
                for d in orbit:
                    facelen[d] = len(orbit)
        for comp in closed:
            # only roots with the least isomorphism-invariant label compete
            labels = {}
            for v in comp:
                kind = self.kinds[v]
                deg = DEGREE[kind]
                for p in range(deg):
                    ring = tuple((facelen[(v, (p + j) % deg)], (v, (p + j) % deg) in self.heads) for j in range(deg))
                    labels[(v, p)] = (KIND_CODE[kind], p % 2 if kind == "cross" else 0, ring)
            least = min(labels.values())
            best = None
            for root, lab in labels.items():
                if lab != least:
                    continue
                c = " ".join(self._code_from([root]))
                if best is None or c < best:
                    best = c
            floats.append(best)
        if floats:
            parts.append("F[" + "|".join(sorted(floats)) + "]")
        if self.loops:
            parts.append("L[" + ",".join(sorted(o or "-" for o in self.loops)) + "]")
        key = "/".join(parts)
        self._cache["key"] = key
        return key

    def canonical_key(self) -> str:
        if not self.is_crossing_free():
            raise HasCrossings("canonical_key is defined for crossing-free diagrams")
        return self.map_key()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.boundary, self.kinds, self.mate, self.heads, tuple(sorted(map(str, self.loops))), self.oriented) == (
            other.boundary, other.kinds, other.mate, other.heads, tuple(sorted(map(str, other.loops))), other.oriented)

    def __hash__(self) -> int:
        return hash(self.map_key())

    def __repr__(self) -> str:
        return f"<Diagram n={self.n} vertices={len(self.kinds) - self.n} loops={len(self.loops)}>"

    # counting ----------------------------------------------------------
    def measure(self) -> tuple[int, int, int]:
        """(crossings, trivalent vertices, free loops): the termination measure."""
        c = t = 0
        for k in self.kinds.values():
            if k == "cross":
                c += 1
            elif k != "boundary":
                t += 1
        return (c, t, len(self.loops))

    def fresh_names(self, count: int, prefix: str = "x") -> list[str]:
        out, i = [], 0
        while len(out) < count:
            i += 1
            name = f"{prefix}{i}"
            if name not in self.kinds:
                out.append(name)
        return out

    # local surgery ------------------------------------------------------
    def splice(self, remove=(), cut=(), new_vertices: Mapping[str, str] | None = None,
               links: Iterable = (), drop_loops: int = 0, extra_loops=()) -> Diagram:
        """Generic local rewrite.

        ``remove`` deletes internal vertices; their ports become pass-through
        nodes.  ``cut`` deletes the edges through the given darts, leaving both
        ends exposed.  ``new_vertices`` adds vertices.  ``links`` is a list of
        ``(node_a, node_b, directed)`` joins; nodes are darts of the result,
        ports of removed vertices, or arbitrary scratch nodes.  Chains of links
        and surviving old edges are fused into edges; chains closing up on
        themselves become free loops; chains that end in unlinked scratch on
        both sides vanish.
        """
        new_vertices = dict(new_vertices or {})
        removed = set(remove)
        kinds = {v: k for v, k in self.kinds.items() if v not in removed and k != "boundary"}
        for v, k in new_vertices.items():
            if v in kinds or v in self.kinds and v not in removed:
                raise SpliceError(f"vertex name {v} already in use")
            kinds[v] = k
        real = set()
        for v, k in kinds.items():
            for p in range(DEGREE[k]):
                real.add((v, p))
        for k in range(self.n):
            real.add((bname(k), 0))

        adj: dict = {}
        lid = 0

        def add(a, b, direction):
            # direction: +1 means a -> b, -1 means b -> a, 0 unknown
            nonlocal lid
            lid += 1
            adj.setdefault(a, []).append((b, direction, lid))
            adj.setdefault(b, []).append((a, -direction, lid))

        cut_set = set()
        for d in cut:
            cut_set.add(d)
            cut_set.add(self.mate[d])
        seen = set()
        for d, e in self.mate.items():
            if d in seen or d in cut_set:
                continue
            seen.add(d)
            seen.add(e)
            if self.oriented:
                add(d, e, -1 if d in self.heads else 1)
            else:
                add(d, e, 0)
        for a, b, directed in links:
            add(a, b, 1 if directed else 0)

        for node, nbrs in adj.items():
            if len(nbrs) > 2 or (node in real and len(nbrs) != 1):
                raise SpliceError(f"node {node} has {len(nbrs)} attachments")
        for d in real:
            if d not in adj:
                raise SpliceError(f"dart {d} left unattached")

        mate, heads = {}, set()
        visited = set()
        for start in sorted(real, key=dart_key):
            if start in visited:
                continue
            visited.add(start)
            evidence = set()
            nxt, dirn, via = adj[start][0]
            while True:
                if dirn:
                    evidence.add(dirn)
                cur = nxt
                if cur in real:
                    break
                visited.add(cur)
                nbrs = adj[cur]
                if len(nbrs) == 1:
                    raise SpliceError(f"chain from {start} dangles at {cur}")
                nxt, dirn, via = nbrs[1] if nbrs[0][2] == via else nbrs[0]
            visited.add(cur)
            if cur == start:
                raise SpliceError(f"real dart {start} linked to itself")
            mate[start] = cur
            mate[cur] = start
            if self.oriented:
                if len(evidence) != 1:
                    raise SpliceError(f"incoherent or missing orientation on chain {start}..{cur}")
                heads.add(cur if evidence.pop() == 1 else start)
        new_loops = 0
        for node in adj:
            if node in visited or node in real:
                continue
            # walk a scratch chain; a closed cycle is a free loop
            chain, ends = {node}, 0
            stack = [node]
            while stack:
                x = stack.pop()
                if len(adj[x]) == 1:
                    ends += 1
                for y, _, _ in adj[x]:
                    if y not in chain:
                        chain.add(y)
                        stack.append(y)
            visited |= chain
            if ends == 0:
                new_loops += 1
        loops = list(self.loops)
        for _ in range(drop_loops):
            loops.pop()
        loops.extend([None] * new_loops)
        loops.extend(extra_loops)
        return Diagram(self.boundary, kinds, mate, heads, loops, self.oriented)

    def without_loops(self, count: int | None = None) -> Diagram:
        keep = [] if count is None else list(self.loops[:len(self.loops) - count])
        return Diagram(self.boundary, {v: k for v, k in self.kinds.items() if k != "boundary"},
                       self.mate, self.heads, keep, self.oriented, self.containment)

    def split_closed(self) -> tuple[Diagram, list[Diagram]]:
        """Separate closed components into their own boundary-free diagrams."""
        closed = self.closed_components()
        if not closed:
            return self, []
        pieces = []
        drop = set()
        for comp in closed:
            drop |= comp
            kinds = {v: self.kinds[v] for v in comp}
            mate = {d: e for d, e in self.mate.items() if d[0] in comp}
            heads = {d for d in self.heads if d[0] in comp}
            pieces.append(Diagram((), kinds, mate, heads, (), self.oriented))
        kinds = {v: k for v, k in self.kinds.items() if v not in drop and k != "boundary"}
        mate = {d: e for d, e in self.mate.items() if d[0] not in drop}
        heads = {d for d in self.heads if d[0] not in drop}
        return Diagram(self.boundary, kinds, mate, heads, self.loops, self.oriented), pieces


def _fmt_face(f: Face) -> str:
    return " ".join(f"{v}.{p}" for v, p in f.darts)


def make_diagram(boundary, vertices: Mapping[str, str], edges: Iterable[tuple[Dart, Dart]],
                 loops=(), oriented=True, containment=(), check=True) -> Diagram:
    """Build from ``(tail, head)`` edge pairs.  Boundary darts may be given as
    ``("b3", 0)`` or the string ``"b3"``."""

    def dart(x):
        return (x, 0) if isinstance(x, str) else tuple(x)

    mate, heads = {}, set()
    for t, h in edges:
        t, h = dart(t), dart(h)
        mate[t] = h
        mate[h] = t
        heads.add(h)
    d = Diagram(boundary, vertices, mate, heads, loops, oriented, containment)
    return d.check() if check else d


def empty_diagram(oriented=True) -> Diagram:
    return Diagram((), {}, {}, (), (), oriented)


def faces(d: Diagram) -> list[Face]:
    return d.faces()


def adjoint(d: Diagram) -> Diagram:
    return d.adjoint()


def mirror(d: Diagram) -> Diagram:
    return d.mirror()


def validate(d: Diagram) -> list[Violation]:
    return d.validate()


def canonical_key(d: Diagram) -> str:
    return d.canonical_key()
