"""Seeded diagram corpora shared by the test modules."""

from __future__ import annotations

from functools import lru_cache

from skeincalc import braid_closure, kink, random_tangle, strand
from skeincalc.diagram import Diagram
from skeincalc.tangles import TangleBuilder


def unknot(oriented: bool = True) -> Diagram:
    b = TangleBuilder(0, oriented)
    b.free_loop("ccw" if oriented else None)
    return b.finish()


def named_diagrams(oriented: bool = True) -> dict[str, Diagram]:
    return {
        "unknot": unknot(oriented),
        "kink+": kink(1, oriented=oriented),
        "kink-": kink(-1, oriented=oriented),
        "hopf": braid_closure([1, 1], 2, oriented),
        "trefoil": braid_closure([1, 1, 1], 2, oriented),
    }


def _spec(i: int, seed: int, **extra) -> dict:
    strands = (0, 2, 4)[i % 3]
    return dict(strands=strands, closed=strands == 0, rows=10 + i % 5, seed=seed, **extra)


@lru_cache(maxsize=None)
def random_corpus(count: int = 200, max_crossings: int = 8, seed: int = 2024) -> tuple[Diagram, ...]:
    """Oriented, vertex-free diagrams with at most ``max_crossings`` crossings."""
    return tuple(random_tangle(_spec(i, seed + i, max_crossings=max_crossings)) for i in range(count))


@lru_cache(maxsize=None)
def web_corpus(count: int = 20, max_crossings: int = 4, seed: int = 7000) -> tuple[Diagram, ...]:
    """Oriented diagrams with trivalent vertices and crossings."""
    out = []
    i = 0
    while len(out) < count:
        d = random_tangle(_spec(i, seed + i, max_crossings=max_crossings, vertex_density=0.3))
        i += 1
        if d.trivalent() or i > 5 * count:
            out.append(d)
    return tuple(out)


def full_corpus() -> tuple[Diagram, ...]:
    return tuple(named_diagrams().values()) + random_corpus()


__all__ = ["unknot", "named_diagrams", "random_corpus", "web_corpus", "full_corpus", "strand"]
