"""Simple undirected graphs, hop distances, recognizers and block decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import Disconnected, DuplicateEdge, NotGeneralizedTree, OutOfRange, SelfLoop


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1`` with sorted adjacency."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    @cached_property
    def _adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise OutOfRange(f"vertex count must be >= 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Dense ``n x n`` hop-distance matrix (read-only)."""
    return cached(g, "dist", _distance_matrix)


def _distance_matrix(g: Graph) -> np.ndarray:
    n, adj = g.n, g.adj
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        order = [s]
        for u in order:
            du = dist[u] + 1
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du
                    order.append(w)
        if len(order) != n:
            raise Disconnected("graph is not connected")
        rows.append(dist)
    dm = np.array(rows, dtype=np.int64)
    dm.flags.writeable = False
    return dm


def cached(g: Graph, key: str, compute):
    """Compute ``compute(g)`` once per graph instance."""
    # Graph is immutable, so derived values are cached on the instance.
    cache = g.__dict__.setdefault("_derived", {})
    if key not in cache:
        cache[key] = compute(g)
    return cache[key]


def is_connected(g: Graph) -> bool:
    return cached(g, "connected", lambda g: all(d >= 0 for d in bfs_distances(g, 0)))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and max(g.degrees, default=0) <= 2


def is_star_graph(g: Graph) -> bool:
    return g.n >= 3 and is_tree(g) and max(g.degrees) == g.n - 1


def leaves(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if len(g.adj[v]) == 1)


def tree_path(g: Graph, u: int, v: int) -> list[int]:
    """Vertices of the (unique, in a tree) shortest ``u``-``v`` path, ends included."""
    parent = [-1] * g.n
    parent[u] = u
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in g.adj[x]:
            if parent[w] < 0:
                parent[w] = x
                queue.append(w)
    if parent[v] < 0:
        raise Disconnected(f"no path between {u} and {v}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    extreme_vertices: frozenset[int]

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def _biconnected_blocks(g: Graph) -> list[set[int]]:
    # Iterative Hopcroft-Tarjan with an explicit edge stack.
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[set[int]] = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not g.adj[root]:
            disc[root] = counter
            counter += 1
            blocks.append({root})
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (parent, u):
                            break
                    blocks.append(block)
    return blocks


def block_decomposition(g: Graph) -> BlockDecomposition:
    if not is_connected(g):
        raise Disconnected("block decomposition needs a connected graph")
    return cached(g, "blocks", _block_decomposition)


def _block_decomposition(g: Graph) -> BlockDecomposition:
    raw = _biconnected_blocks(g)
    blocks = tuple(sorted((tuple(sorted(b)) for b in raw), key=lambda b: (b[0], b)))
    count = [0] * g.n
    for b in blocks:
        for v in b:
            count[v] += 1
    cut = frozenset(v for v in range(g.n) if count[v] >= 2)
    extreme = frozenset(v for v in range(g.n) if _closed_nbhd_complete(g, v))
    return BlockDecomposition(blocks, cut, extreme)


def _closed_nbhd_complete(g: Graph, v: int) -> bool:
    nb = g.adj[v]
    return all(g.has_edge(a, b) for i, a in enumerate(nb) for b in nb[i + 1 :])


def _is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    k = len(vertices)
    return all(g.has_edge(vertices[i], vertices[j]) for i in range(k) for j in range(i + 1, k))


def generalized_tree_failure(g: Graph) -> str | None:
    """Reason ``g`` is not a generalized tree, or ``None`` if it is one."""
    return cached(g, "gentree_failure", _gentree_failure)


def _gentree_failure(g: Graph) -> str | None:
    if not is_connected(g):
        return "graph is not connected"
    bd = block_decomposition(g)
    for b in bd.blocks:
        if not _is_clique(g, b):
            return f"block {list(b)} is not a complete graph"
    if len(bd.blocks) < 2:
        return "a single complete graph is not built from two or more gluing steps"
    return None


def is_generalized_tree(g: Graph) -> bool:
    return generalized_tree_failure(g) is None


def require_generalized_tree(g: Graph) -> BlockDecomposition:
    reason = generalized_tree_failure(g)
    if reason is not None:
        raise NotGeneralizedTree(reason)
    return block_decomposition(g)


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves_count: int) -> Graph:
    """``K_{1,t}`` with center 0."""
    return from_edge_list(leaves_count + 1, [(0, i) for i in range(1, leaves_count + 1)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
