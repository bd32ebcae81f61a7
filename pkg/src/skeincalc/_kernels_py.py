"""Pure-Python state-sum kernel (fallback for the compiled ``_kernels``)."""

from __future__ import annotations


def state_sum(mate, crossings, bdarts):
    """Tally the smoothing states of an unoriented diagram.

    ``mate[d]`` is the other end of dart ``d``'s edge; ``crossings`` lists the
    four port darts of each crossing; ``bdarts`` the boundary darts in order.
    Bit i of a state set means crossing i takes the positive smoothing, which
    joins ports (1,2) and (3,0).  Returns ``{(matching, p - n, circles): count}``
    where ``matching[i]`` is the boundary point paired with point i.
    """
    ndarts = len(mate)
    nc = len(crossings)
    nb = len(bdarts)
    bindex = [-1] * ndarts
    for i, b in enumerate(bdarts):
        bindex[b] = i
    cdarts = [d for ports in crossings for d in ports]
    partner = [-1] * ndarts
    out: dict = {}
    for mask in range(1 << nc):
        plus = 0
        for i, (p0, p1, p2, p3) in enumerate(crossings):
            if mask >> i & 1:
                plus += 1
                partner[p1] = p2
                partner[p2] = p1
                partner[p3] = p0
                partner[p0] = p3
            else:
                partner[p0] = p1
                partner[p1] = p0
                partner[p2] = p3
                partner[p3] = p2
        seen = [False] * ndarts
        match = [-1] * nb
        for i, b in enumerate(bdarts):
            if seen[b]:
                continue
            seen[b] = True
            d = mate[b]
            while bindex[d] < 0:
                seen[d] = True
                d = partner[d]
                seen[d] = True
                d = mate[d]
            seen[d] = True
            j = bindex[d]
            match[i] = j
            match[j] = i
        circles = 0
        for d in cdarts:
            if seen[d]:
                continue
            circles += 1
            while not seen[d]:
                seen[d] = True
                d = partner[d]
                seen[d] = True
                d = mate[d]
        key = (tuple(match), 2 * plus - nc, circles)
        out[key] = out.get(key, 0) + 1
    return out
