# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled ordering search kernel (n <= 64, one uint64 mask per vertex).

Mirror of _kernels_py.search_order: same traversal order, same node
accounting, same return convention.  Keep the two in sync.
"""

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

IS_COMPILED = True

FOUND = 0
NOT_MEMBER = 1
EXHAUSTED = 2


def search_order(nbr_masks, long long budget):
    """See _kernels_py.search_order."""
    cdef int n = len(nbr_masks)
    if n == 0:
        return (0, [], 0)
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")

    cdef unsigned long long nbr[64]
    cdef unsigned long long rankmask[64]
    cdef int order[64]
    cdef int resume[65]
    cdef unsigned long long used = 0, W, mv, u, x, one = 1
    cdef long long nodes = 0
    cdef int m = 0, w, k, low, limit, viol, i

    for i in range(n):
        nbr[i] = nbr_masks[i]
        rankmask[i] = 0
    resume[0] = 0

    while True:
        w = resume[m]
        limit = n - 1 if (m == 0 and n > 1) else n
        placed = 0
        while w < limit:
            if (used >> w) & one:
                w += 1
                continue
            if m == n - 1 and n > 1 and w < order[0]:
                w += 1
                continue
            if nodes >= budget:
                return (2, [], nodes)
            nodes += 1
            W = rankmask[w]
            viol = 0
            if m >= 3 and W != 0:
                for k in range(2, m):
                    mv = rankmask[order[k]]
                    if mv == 0:
                        continue
                    low = __builtin_ctzll(mv)
                    u = W & ~mv & ((one << k) - 1)
                    if u >> (low + 1):
                        viol = 1
                        break
            if viol:
                w += 1
                continue
            resume[m] = w + 1
            order[m] = w
            used |= one << w
            x = nbr[w]
            while x:
                rankmask[__builtin_ctzll(x)] |= one << m
                x &= x - 1
            if m == n - 1:
                return (0, [order[i] for i in range(n)], nodes)
            m += 1
            resume[m] = 0
            placed = 1
            break
        if placed:
            continue
        if m == 0:
            return (1, [], nodes)
        m -= 1
        w = order[m]
        used &= ~(one << w)
        x = nbr[w]
        while x:
            rankmask[__builtin_ctzll(x)] &= ~(one << m)
            x &= x - 1
