"""Pure-Python traversal kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
statement for statement so both backends return identical objects.

Masks are ``bytearray``s indexed by vertex (or by CSR edge position for
``hedge``); a non-zero byte means "allowed" / "marked".
"""

from collections import deque

INF = 1 << 30


def bfs(adj, sources, alive, maxdepth):
    n = len(adj)
    dist = [-1] * n
    parent = [-1] * n
    queue = deque()
    for s in sources:
        if alive[s] and dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if dx == maxdepth:
            continue
        for y in adj[x]:
            if alive[y] and dist[y] < 0:
                dist[y] = dx + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def _tree_path(parent, v):
    path = [v]
    while parent[v] >= 0:
        v = parent[v]
        path.append(v)
    return path


def girth_cycle(adj, alive):
    n = len(adj)
    best = INF
    cycle = []
    dist = [-1] * n
    parent = [-1] * n
    for r in range(n):
        if not alive[r]:
            continue
        touched = [r]
        dist[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if 2 * dx >= best:
                break
            for y in adj[x]:
                if not alive[y]:
                    continue
                if dist[y] < 0:
                    dist[y] = dx + 1
                    parent[y] = x
                    touched.append(y)
                    queue.append(y)
                elif y != parent[x] and dx + dist[y] + 1 < best:
                    best = dx + dist[y] + 1
                    left = _tree_path(parent, x)
                    right = _tree_path(parent, y)
                    cycle = left[::-1] + right[:-1]
        for v in touched:
            dist[v] = -1
            parent[v] = -1
    return cycle


def cycle_through(adj, alive, v, limit):
    n = len(adj)
    best = limit
    cycle = []
    dist = [-1] * n
    parent = [-1] * n
    for x in adj[v]:
        if not alive[x]:
            continue
        touched = [x]
        dist[x] = 0
        queue = deque([x])
        found = False
        while queue and not found:
            u = queue.popleft()
            du = dist[u]
            if du + 2 >= best:
                break
            for y in adj[u]:
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
                    touched.append(y)
                    queue.append(y)
        for w in touched:
            dist[w] = -1
            parent[w] = -1
    return cycle


def shortest_hpath(adj, offsets, interior, ends, hedge):
    n = len(adj)
    best = INF
    path = []
    dist = [-1] * n
    parent = [-1] * n
    for a in range(n):
        if not ends[a]:
            continue
        if best == 1:
            break
        touched = [a]
        dist[a] = 0
        queue = deque()
        base = offsets[a]
        for i, y in enumerate(adj[a]):
            if ends[y]:
                if not hedge[base + i] and 1 < best:
                    best = 1
                    path = [a, y]
            elif interior[y] and dist[y] < 0:
                dist[y] = 1
                parent[y] = a
                touched.append(y)
                queue.append(y)
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du + 1 >= best:
                break
            hit = -1
            for y in adj[u]:
                if ends[y]:
                    if y != a:
                        hit = y
                        break
                elif interior[y] and dist[y] < 0:
                    dist[y] = du + 1
                    parent[y] = u
                    touched.append(y)
                    queue.append(y)
            if hit >= 0:
                best = du + 1
                path = _tree_path(parent, u)[::-1] + [hit]
                break
        for w in touched:
            dist[w] = -1
            parent[w] = -1
    return path
