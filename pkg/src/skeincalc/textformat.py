"""Line-oriented text format for tangle diagrams.

::

    boundary: + - + -          # CCW signs; "boundary:" alone = closed diagram
    vertex v1 sink             # ports 0,1,2 counterclockwise
    cross  c1                  # ports 0..3 counterclockwise, under-strand 0-2
    edge e1: b0 -> v1.0        # tail -> head; bK = boundary point K
    loop l1 ccw                # vertex-less circle (orientation optional)
    contain componentOf(v2) in face(v1, 2)

Files starting with ``mode: unoriented`` use ``--`` between edge ends, may
give the boundary as a point count, and have no trivalent vertices.
"""

from __future__ import annotations

import re

from .diagram import DEGREE, Diagram, ValidationError, Violation, bname, dart_key, natural_key


class TangleSyntaxError(SyntaxError):
    def __init__(self, msg: str, line: int, col: int, text: str = ""):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.lineno = line
        self.offset = col
        self.text = text


_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_END = re.compile(rf"(?:b(\d+)|({_NAME})\.(\d+))$")
_EDGE = re.compile(rf"edge\s+({_NAME})\s*:\s*(\S+)\s*(->|--)\s*(\S+)$")
_CONTAIN = re.compile(rf"contain\s+componentOf\(\s*({_NAME})\s*\)\s+in\s+face\(\s*({_NAME})\s*,\s*(\d+)\s*\)$")


def parse_tangle(text: str, check: bool = True) -> Diagram:
    mode = None
    boundary: list | None = None
    kinds: dict[str, str] = {}
    raw_edges = []
    loops = []
    contain = []
    used = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1

        def err(msg, at=col):
            raise TangleSyntaxError(msg, lineno, at, raw)

        head = stripped.split()[0]
        if head.startswith("mode:"):
            value = stripped[5:].strip()
            if value not in ("oriented", "unoriented"):
                err(f"unknown mode {value!r}")
            mode = value
        elif head.startswith("boundary:"):
            if boundary is not None:
                err("duplicate boundary line")
            toks = stripped[9:].split()
            if len(toks) == 1 and toks[0].isdigit():
                boundary = [None] * int(toks[0])
            else:
                for t in toks:
                    if t not in ("+", "-", "."):
                        err(f"bad boundary sign {t!r}", col + stripped.index(t))
                boundary = [None if t == "." else t for t in toks]
        elif head in ("vertex", "cross", "loop"):
            toks = stripped.split()
            if len(toks) < 2 or not re.fullmatch(_NAME, toks[1]):
                err(f"{head} needs a name")
            name = toks[1]
            if re.fullmatch(r"b\d+", name):
                err(f"name {name!r} is reserved for boundary points")
            if name in used:
                err(f"duplicate name {name!r}")
            used.add(name)
            if head == "vertex":
                if len(toks) != 3 or toks[2] not in ("source", "sink"):
                    err("vertex kind must be 'source' or 'sink'")
                kinds[name] = toks[2]
            elif head == "cross":
                if len(toks) != 2:
                    err("cross takes only a name")
                kinds[name] = "cross"
            else:
                if len(toks) > 3 or (len(toks) == 3 and toks[2] not in ("cw", "ccw")):
                    err("loop orientation must be 'cw' or 'ccw'")
                loops.append(toks[2] if len(toks) == 3 else None)
        elif head == "edge":
            m = _EDGE.match(stripped)
            if not m:
                err("expected 'edge NAME: END -> END'")
            name, a, arrow, b = m.groups()
            if name in used:
                err(f"duplicate name {name!r}")
            used.add(name)
            ends = []
            for tok in (a, b):
                em = _END.match(tok)
                if not em:
                    err(f"bad edge end {tok!r}", col + stripped.index(tok))
                ends.append((bname(int(em.group(1))), 0) if em.group(1) is not None else (em.group(2), int(em.group(3))))
            raw_edges.append((ends[0], ends[1], arrow, lineno, col))
        elif head == "contain":
            m = _CONTAIN.match(stripped)
            if not m:
                err("expected 'contain componentOf(V) in face(W, P)'")
            contain.append((m.group(1), (m.group(2), int(m.group(3)))))
        else:
            err(f"unknown directive {head!r}")

    oriented = mode != "unoriented"
    boundary = boundary or []
    if oriented and any(s is None for s in boundary):
        raise TangleSyntaxError("oriented diagrams need signed boundary points", 1, 1)
    if not oriented:
        boundary = [None] * len(boundary)
    mate, heads = {}, set()
    n = len(boundary)
    for t, h, arrow, lineno, col in raw_edges:
        if oriented and arrow != "->":
            raise TangleSyntaxError("oriented edges use '->'", lineno, col)
        for d in (t, h):
            if d[0].startswith("b") and re.fullmatch(r"b\d+", d[0]):
                if int(d[0][1:]) >= n:
                    raise TangleSyntaxError(f"boundary point {d[0]} out of range", lineno, col)
            elif d[0] not in kinds:
                raise TangleSyntaxError(f"unknown vertex {d[0]!r}", lineno, col)
            elif not 0 <= d[1] < DEGREE[kinds[d[0]]]:
                raise TangleSyntaxError(f"port {d[1]} out of range for {d[0]}", lineno, col)
            if d in mate:
                raise ValidationError([Violation("dart", "port used by two edges", f"{d[0]}.{d[1]}")])
        mate[t] = h
        mate[h] = t
        heads.add(h)
    d = Diagram(boundary, kinds, mate, heads, loops, oriented, contain)
    return d.check() if check else d


def _fmt_dart(d) -> str:
    return d[0] if re.fullmatch(r"b\d+", d[0]) else f"{d[0]}.{d[1]}"


def serialize(d: Diagram) -> str:
    lines = []
    if not d.oriented:
        lines.append("mode: unoriented")
        lines.append(f"boundary: {d.n}" if d.n else "boundary:")
    else:
        lines.append(("boundary: " + " ".join(d.boundary)).rstrip())
    for v in d.internal_vertices():
        k = d.kinds[v]
        lines.append(f"cross {v}" if k == "cross" else f"vertex {v} {k}")
    for i, o in enumerate(sorted(d.loops, key=lambda o: o or ""), 1):
        lines.append(f"loop l{i}" + (f" {o}" if o else ""))
    arrow = "->" if d.oriented else "--"
    for i, (t, h) in enumerate(d.edges(), 1):
        lines.append(f"edge e{i}: {_fmt_dart(t)} {arrow} {_fmt_dart(h)}")
    for inner, (w, p) in sorted(d.containment, key=lambda c: (natural_key(c[0]), dart_key(c[1]))):
        lines.append(f"contain componentOf({inner}) in face({w}, {p})")
    return "\n".join(lines) + "\n"
