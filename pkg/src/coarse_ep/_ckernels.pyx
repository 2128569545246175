# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled traversal kernels; statement-for-statement twin of ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cdef int INF = 1 << 30


cdef list _tree_path(int[::1] parent, int v):
    cdef list path = [v]
    while parent[v] >= 0:
        v = parent[v]
        path.append(v)
    return path


def bfs(const int[::1] indptr, const int[::1] indices, sources,
        const unsigned char[::1] alive, int maxdepth):
    cdef int n = indptr.shape[0] - 1
    cdef cnp.ndarray[int, ndim=1] dist_a = np.full(n, -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] parent_a = np.full(n, -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] queue_a = np.empty(max(n, 1), dtype=np.intc)
    cdef int[::1] dist = dist_a
    cdef int[::1] parent = parent_a
    cdef int[::1] queue = queue_a
    cdef int head = 0, tail = 0, x, y, dx, p, s
    for s in sources:
        if alive[s] and dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        dx = dist[x]
        if dx == maxdepth:
            continue
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if alive[y] and dist[y] < 0:
                dist[y] = dx + 1
                parent[y] = x
                queue[tail] = y
                tail += 1
    return dist_a.tolist(), parent_a.tolist()


def girth_cycle(const int[::1] indptr, const int[::1] indices,
                const unsigned char[::1] alive):
    cdef int n = indptr.shape[0] - 1
    cdef int best = INF
    cdef list cycle = []
    cdef cnp.ndarray[int, ndim=1] dist_a = np.full(max(n, 1), -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] parent_a = np.full(max(n, 1), -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] queue_a = np.empty(max(n, 1), dtype=np.intc)
    cdef int[::1] dist = dist_a
    cdef int[::1] parent = parent_a
    cdef int[::1] queue = queue_a
    cdef int r, head, tail, x, y, dx, p, i
    cdef list left, right
    for r in range(n):
        if not alive[r]:
            continue
        dist[r] = 0
        head = 0
        tail = 1
        queue[0] = r
        while head < tail:
            x = queue[head]
            head += 1
            dx = dist[x]
            if 2 * dx >= best:
                break
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if not alive[y]:
                    continue
                if dist[y] < 0:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue[tail] = y
                    tail += 1
                elif y != parent[x] and dx + dist[y] + 1 < best:
                    best = dx + dist[y] + 1
                    left = _tree_path(parent, x)
                    right = _tree_path(parent, y)
                    cycle = left[::-1] + right[:-1]
        # every visited vertex sits in queue[0:tail]
        for i in range(tail):
            dist[queue[i]] = -1
            parent[queue[i]] = -1
    return cycle


def cycle_through(const int[::1] indptr, const int[::1] indices,
                  const unsigned char[::1] alive, int v, int limit):
    cdef int n = indptr.shape[0] - 1
    cdef int best = limit
    cdef list cycle = []
    cdef cnp.ndarray[int, ndim=1] dist_a = np.full(max(n, 1), -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] parent_a = np.full(max(n, 1), -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] queue_a = np.empty(max(n, 1), dtype=np.intc)
    cdef int[::1] dist = dist_a
    cdef int[::1] parent = parent_a
    cdef int[::1] queue = queue_a
    cdef int px, x, head, tail, u, du, p, y, i
    cdef bint found
    for px in range(indptr[v], indptr[v + 1]):
        x = indices[px]
        if not alive[x]:
            continue
        dist[x] = 0
        head = 0
        tail = 1
        queue[0] = x
        found = False
        while head < tail and not found:
            u = queue[head]
            head += 1
            du = dist[u]
            if du + 2 >= best:
                break
            for p in range(indptr[u], indptr[u + 1]):
                y = indices[p]
                if y == v:
                    if u == x:
                        continue
                    best = du + 2
                    cycle = [v] + _tree_path(parent, u)[::-1]
                    found = True
                    break
                if alive[y] and dist[y] < 0:
                    dist[y] = du + 1
                    parent[y] = u
                    queue[tail] = y
                    tail += 1
        for i in range(tail):
            dist[queue[i]] = -1
            parent[queue[i]] = -1
    return cycle


def shortest_hpath(const int[::1] indptr, const int[::1] indices,
                   const unsigned char[::1] interior,
                   const unsigned char[::1] ends,
                   const unsigned char[::1] hedge):
    cdef int n = indptr.shape[0] - 1
    cdef int best = INF
    cdef list path = []
    cdef cnp.ndarray[int, ndim=1] dist_a = np.full(max(n, 1), -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] parent_a = np.full(max(n, 1), -1, dtype=np.intc)
    cdef cnp.ndarray[int, ndim=1] queue_a = np.empty(max(n, 1), dtype=np.intc)
    cdef int[::1] dist = dist_a
    cdef int[::1] parent = parent_a
    cdef int[::1] queue = queue_a
    cdef int a, head, tail, p, y, u, du, hit, i
    for a in range(n):
        if not ends[a]:
            continue
        if best == 1:
            break
        dist[a] = 0
        head = 0
        tail = 1
        queue[0] = a
        for p in range(indptr[a], indptr[a + 1]):
            y = indices[p]
            if ends[y]:
                if not hedge[p] and 1 < best:
                    best = 1
                    path = [a, y]
            elif interior[y] and dist[y] < 0:
                dist[y] = 1
                parent[y] = a
                queue[tail] = y
                tail += 1
        head = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if du + 1 >= best:
                break
            hit = -1
            for p in range(indptr[u], indptr[u + 1]):
                y = indices[p]
                if ends[y]:
                    if y != a:
                        hit = y
                        break
                elif interior[y] and dist[y] < 0:
                    dist[y] = du + 1
                    parent[y] = u
                    queue[tail] = y
                    tail += 1
            if hit >= 0:
                best = du + 1
                path = _tree_path(parent, u)[::-1] + [hit]
                break
        for i in range(tail):
            dist[queue[i]] = -1
            parent[queue[i]] = -1
    return path
