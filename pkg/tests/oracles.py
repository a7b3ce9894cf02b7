"""Slow, independent reference implementations used only by tests."""

from collections import deque
from itertools import combinations, product


def distances(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for s in range(n):
        d = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in d:
                    d[y] = d[x] + 1
                    q.append(y)
        out.append([d[v] for v in range(n)])
    return out


def resolves(dist, labels, t):
    n = len(labels)
    seen = set()
    for v in range(n):
        rep = tuple(min(dist[v][u] for u in range(n) if labels[u] == k) for k in range(t))
        if rep in seen:
            return False
        seen.add(rep)
    return True


def brute_pd(n, edges):
    """Smallest t such that some surjective labeling V -> {0..t-1} resolves."""
    dist = distances(n, edges)
    for t in range(1, n + 1):
        for labels in product(range(t), repeat=n):
            if len(set(labels)) == t and resolves(dist, labels, t):
                return t


def brute_dim(n, edges):
    dist = distances(n, edges)
    for k in range(0, n):
        for s in combinations(range(n), k):
            if len({tuple(dist[v][w] for w in s) for v in range(n)}) == n:
                return k


def set_partitions(items):
    """Every set partition of ``items`` (recursive, independent of RGS code)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
