# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled state-sum kernel; same contract as ``_kernels_py.state_sum``."""

from libc.stdlib cimport malloc, free


def state_sum(mate, crossings, bdarts):
    cdef Py_ssize_t ndarts = len(mate)
    cdef Py_ssize_t nc = len(crossings)
    cdef Py_ssize_t nb = len(bdarts)
    cdef int *cmate = <int *> malloc(max(ndarts, 1) * sizeof(int))
    cdef int *bindex = <int *> malloc(max(ndarts, 1) * sizeof(int))
    cdef int *partner = <int *> malloc(max(ndarts, 1) * sizeof(int))
    cdef char *seen = <char *> malloc(max(ndarts, 1) * sizeof(char))
    cdef int *ports = <int *> malloc(max(4 * nc, 1) * sizeof(int))
    cdef int *bd = <int *> malloc(max(nb, 1) * sizeof(int))
    cdef int *match = <int *> malloc(max(nb, 1) * sizeof(int))
    cdef Py_ssize_t i, k
    cdef long mask, nstates
    cdef int d, j, plus, circles, p0, p1, p2, p3
    out = {}
    try:
        for i in range(ndarts):
            cmate[i] = mate[i]
            bindex[i] = -1
        for i in range(nb):
            bd[i] = bdarts[i]
            bindex[bd[i]] = i
        for i in range(nc):
            for k in range(4):
                ports[4 * i + k] = crossings[i][k]
        nstates = 1 << nc
        for mask in range(nstates):
            plus = 0
            for i in range(nc):
                p0 = ports[4 * i]
                p1 = ports[4 * i + 1]
                p2 = ports[4 * i + 2]
                p3 = ports[4 * i + 3]
                if (mask >> i) & 1:
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
            for i in range(ndarts):
                seen[i] = 0
            for i in range(nb):
                match[i] = -1
            for i in range(nb):
                d = bd[i]
                if seen[d]:
                    continue
                seen[d] = 1
                d = cmate[d]
                while bindex[d] < 0:
                    seen[d] = 1
                    d = partner[d]
                    seen[d] = 1
                    d = cmate[d]
                seen[d] = 1
                j = bindex[d]
                match[i] = j
                match[j] = i
            circles = 0
            for k in range(4 * nc):
                d = ports[k]
                if seen[d]:
                    continue
                circles += 1
                while not seen[d]:
                    seen[d] = 1
                    d = partner[d]
                    seen[d] = 1
                    d = cmate[d]
            key = (tuple([match[i] for i in range(nb)]), 2 * plus - nc, circles)
            out[key] = out.get(key, 0) + 1
    finally:
        free(cmate); free(bindex); free(partner); free(seen); free(ports); free(bd); free(match)
    return out
