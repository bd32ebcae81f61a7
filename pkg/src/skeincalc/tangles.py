"""Row-by-row construction of planar tangle diagrams.

Strands run upward through a horizontal slice; every operation acts on
adjacent strand positions, so the result is planar by construction.  Strand
orientation is +1 (flowing up) or -1 (flowing down); unoriented builds use 0.
Bottom endpoints become boundary points ``b0 .. b{m-1}`` left to right, top
endpoints continue the counterclockwise order right to left.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, bname


class InfeasibleSpec(ValueError):
    pass


@dataclass(eq=False)
class _End:
    orient: int
    dart: tuple | None = None
    partner: _End | None = None


@dataclass
class TangleBuilder:
    bottom: tuple = ()
    oriented: bool = True
    ends: list = field(default_factory=list)

    def __post_init__(self):
        if isinstance(self.bottom, int):
            self.bottom = (1,) * self.bottom if self.oriented else (0,) * self.bottom
        self.bottom = tuple(self.bottom if self.oriented else [0] * len(self.bottom))
        self.kinds: dict[str, str] = {}
        self.mate: dict = {}
        self.heads: set = set()
        self.loops: list = []
        self._count = {"c": 0, "v": 0}
        self.ends = [_End(o, (bname(k), 0)) for k, o in enumerate(self.bottom)]

    # bookkeeping ---------------------------------------------------------
    def _name(self, prefix: str) -> str:
        self._count[prefix] += 1
        return f"{prefix}{self._count[prefix]}"

    def _edge(self, tail, head):
        self.mate[tail] = head
        self.mate[head] = tail
        if self.oriented:
            self.heads.add(head)

    def _attach(self, end: _End, port) -> None:
        """Connect a strand end to a new port lying above it."""
        if end.dart is not None:
            if end.orient >= 0:
                self._edge(end.dart, port)
            else:
                self._edge(port, end.dart)
        else:
            end.partner.dart = port
            end.partner.partner = None

    def _pair(self, i: int) -> tuple[_End, _End]:
        if not 0 <= i < len(self.ends) - 1:
            raise InfeasibleSpec(f"no strands at positions {i}, {i + 1}")
        return self.ends[i], self.ends[i + 1]

    @property
    def width(self) -> int:
        return len(self.ends)

    def orientations(self) -> list[int]:
        return [e.orient for e in self.ends]

    # elementary rows ----------------------------------------------------
    def crossing(self, i: int, over: str = "left") -> str:
        left, right = self._pair(i)
        c = self._name("c")
        self.kinds[c] = "cross"
        if over == "left":
            bl, br, tr, tl = (c, 3), (c, 0), (c, 1), (c, 2)
        elif over == "right":
            bl, br, tr, tl = (c, 0), (c, 1), (c, 2), (c, 3)
        else:
            raise ValueError(f"over must be 'left' or 'right', not {over!r}")
        self._attach(left, bl)
        self._attach(right, br)
        self.ends[i:i + 2] = [_End(right.orient, tl), _End(left.orient, tr)]
        return c

    def signed_crossing(self, i: int, sign: int) -> str:
        """Oriented crossing of the given sign on strands i, i+1."""
        left, right = self._pair(i)
        if not self.oriented:
            return self.crossing(i, "right" if sign > 0 else "left")
        right_over_sign = left.orient * right.orient
        return self.crossing(i, "right" if right_over_sign == sign else "left")

    def merge(self, i: int) -> str:
        left, right = self._pair(i)
        if not self.oriented or left.orient != right.orient:
            raise InfeasibleSpec("a trivalent vertex needs two equally oriented strands")
        v = self._name("v")
        self.kinds[v] = "sink" if left.orient > 0 else "source"
        self._attach(left, (v, 2))
        self._attach(right, (v, 0))
        self.ends[i:i + 2] = [_End(-left.orient, (v, 1))]
        return v

    def split(self, i: int) -> str:
        if not self.oriented or not 0 <= i < len(self.ends):
            raise InfeasibleSpec("split needs an oriented strand")
        end = self.ends[i]
        v = self._name("v")
        self.kinds[v] = "sink" if end.orient > 0 else "source"
        self._attach(end, (v, 2))
        self.ends[i:i + 1] = [_End(-end.orient, (v, 1)), _End(-end.orient, (v, 0))]
        return v

    def cup(self, i: int, orient: int = 1) -> None:
        if not 0 <= i <= len(self.ends):
            raise InfeasibleSpec(f"cannot open a cup at {i}")
        if not self.oriented:
            orient = 0
        a, b = _End(orient), _End(-orient)
        a.partner, b.partner = b, a
        self.ends[i:i] = [a, b]

    def cap(self, i: int) -> None:
        left, right = self._pair(i)
        if self.oriented and left.orient != -right.orient:
            raise InfeasibleSpec("a cap needs oppositely oriented strands")
        del self.ends[i:i + 2]
        if left.dart is not None and right.dart is not None:
            if left.orient >= 0:
                self._edge(left.dart, right.dart)
            else:
                self._edge(right.dart, left.dart)
        elif left.dart is not None:
            right.partner.dart = left.dart
            right.partner.partner = None
        elif right.dart is not None:
            left.partner.dart = right.dart
            left.partner.partner = None
        elif left.partner is right:
            self.loops.append(None)
        else:
            p, q = left.partner, right.partner
            p.partner, q.partner = q, p

    def identity(self, i: int = 0) -> None:
        pass

    def free_loop(self, orientation=None) -> None:
        self.loops.append(orientation)

    # result --------------------------------------------------------------
    def finish(self, check: bool = True) -> Diagram:
        m = len(self.bottom)
        top = self.ends
        t = len(top)
        signs = ["+" if o > 0 else "-" for o in self.bottom] if self.oriented else [None] * m
        top_darts = {}
        for j, end in enumerate(top):
            top_darts[id(end)] = (bname(m + t - 1 - j), 0)
        top_signs = [None] * t
        done = set()
        for j, end in enumerate(top):
            k = t - 1 - j
            top_signs[k] = ("-" if end.orient > 0 else "+") if self.oriented else None
            bd = top_darts[id(end)]
            if end.dart is not None:
                if end.orient >= 0:
                    self._edge(end.dart, bd)
                else:
                    self._edge(bd, end.dart)
            elif id(end) not in done:
                other = top_darts[id(end.partner)]
                done.add(id(end.partner))
                if end.orient >= 0:
                    # flow leaves the disk here, so it entered at the partner
                    self._edge(other, bd)
                else:
                    self._edge(bd, other)
        d = Diagram(signs + top_signs, self.kinds, self.mate, self.heads, self.loops, self.oriented)
        return d.check() if check else d


def braid_closure(word, strands: int, oriented: bool = True) -> Diagram:
    """Closure of a braid word; generator ``+k`` is a positive crossing on
    strands k-1, k (1-based), ``-k`` a negative one.  All strands run upward."""
    b = TangleBuilder((), oriented)
    for k in range(strands):
        b.cup(k, 1)
    for g in word:
        b.signed_crossing(abs(g) - 1, 1 if g > 0 else -1)
    for _ in range(strands):
        b.cap(b.width // 2 - 1)
    return b.finish()


def strand(orient: int = 1, oriented: bool = True) -> Diagram:
    return TangleBuilder((orient,), oriented).finish()


def kink(sign: int, orient: int = 1, oriented: bool = True, side: str = "right") -> Diagram:
    """A single strand carrying one curl of the given writhe sign."""
    b = TangleBuilder((orient,), oriented)
    if side == "right":
        b.cup(1, orient)
        b.signed_crossing(0, sign)
        b.cap(1)
    else:
        b.cup(0, -orient)
        b.signed_crossing(1, sign)
        b.cap(0)
    return b.finish()
