"""Structural parameters of trees and generalized trees.

Tree side: leaves, major vertices (degree >= 3), terminal vertices, exterior
majors with their legs, kappa/tau, supports and xi/theta.
Generalized-tree side: support cut vertices with their exterior extreme
vertices, the blocks with several cut and several extreme vertices, and the
counts zeta, vartheta, phi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IsAPath, NotATree
from .graph import (
    BlockDecomposition,
    Graph,
    all_pairs_distances,
    cached,
    is_path_graph,
    is_tree,
    leaves as leaf_vertices,
    require_generalized_tree,
)


@dataclass(frozen=True)
class ExteriorMajor:
    major: int
    terminals: tuple[int, ...]
    # legs[j] runs from a neighbour of ``major`` out to ``terminals[j]``
    legs: tuple[tuple[int, ...], ...]

    @property
    def terminal_degree(self) -> int:
        return len(self.terminals)


@dataclass(frozen=True)
class SupportProfile:
    supports: tuple[int, ...]
    theta: int
    theta_support: int | None

    @property
    def xi(self) -> int:
        return len(self.supports)


@dataclass(frozen=True)
class TreeAnatomy:
    leaves: tuple[int, ...]
    majors: tuple[int, ...]
    terminal_of: dict[int, int]
    exterior_majors: tuple[ExteriorMajor, ...]
    S: tuple[ExteriorMajor, ...]
    supports: tuple[int, ...]
    theta: int
    theta_support: int | None

    @property
    def n1(self) -> int:
        return len(self.leaves)

    @property
    def ex(self) -> int:
        return len(self.exterior_majors)

    @property
    def kappa(self) -> int:
        return len(self.S)

    @property
    def tau(self) -> int:
        return max(e.terminal_degree for e in self.S)

    @property
    def xi(self) -> int:
        return len(self.supports)


def support_profile(g: Graph) -> SupportProfile:
    """Supports (vertices adjacent to a leaf) and the largest leaf count on one support.

    Defined for any tree with at least two vertices, paths included.
    """
    if g.n < 2:
        return SupportProfile((), 0, None)
    is_leaf = [len(a) == 1 for a in g.adj]
    counts = {}
    for v in range(g.n):
        k = sum(1 for w in g.adj[v] if is_leaf[w])
        if k:
            counts[v] = k
    supports = tuple(sorted(counts))
    theta = max(counts.values())
    best = min(v for v in supports if counts[v] == theta)
    return SupportProfile(supports, theta, best)


def _walk_leg(g: Graph, leaf: int) -> list[int]:
    """Walk from ``leaf`` through degree-2 vertices; returns [leaf, ..., first vertex of degree >= 3]."""
    walk = [leaf]
    prev, cur = -1, leaf
    while True:
        nxt = [w for w in g.adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
        walk.append(cur)
        if len(g.adj[cur]) >= 3:
            return walk


def tree_anatomy(g: Graph, dm: np.ndarray | None = None) -> TreeAnatomy:
    if not is_tree(g):
        raise NotATree("tree anatomy needs a tree")
    if is_path_graph(g):
        raise IsAPath("a path has no major vertex")
    return cached(g, "tree_anatomy", lambda g: _tree_anatomy(g, all_pairs_distances(g) if dm is None else dm))


def _tree_anatomy(g: Graph, dm: np.ndarray) -> TreeAnatomy:
    leaves = leaf_vertices(g)
    majors = tuple(v for v in range(g.n) if len(g.adj[v]) >= 3)
    rows = dm.tolist()

    terminal_of: dict[int, int] = {}
    legs_of: dict[int, list[tuple[int, ...]]] = {}
    for u in leaves:
        row = rows[u]
        best = min(row[m] for m in majors)
        closest = [m for m in majors if row[m] == best]
        # strict inequality: a leaf tied between two majors is terminal to neither
        if len(closest) != 1:
            continue
        v = closest[0]
        walk = _walk_leg(g, u)
        if walk[-1] != v:
            raise AssertionError(f"leaf {u}: nearest major {v} disagrees with leg walk")
        terminal_of[u] = v
        legs_of.setdefault(v, []).append(tuple(reversed(walk[:-1])))
    if len(terminal_of) != len(leaves):
        raise AssertionError("every leaf of a non-path tree is terminal to exactly one major")

    exterior = []
    for v in sorted(legs_of):
        legs = sorted(legs_of[v], key=lambda leg: (-len(leg), leg[-1]))
        exterior.append(ExteriorMajor(v, tuple(leg[-1] for leg in legs), tuple(legs)))
    exterior_t = tuple(exterior)
    prof = support_profile(g)
    return TreeAnatomy(
        leaves=leaves,
        majors=majors,
        terminal_of=terminal_of,
        exterior_majors=exterior_t,
        S=tuple(e for e in exterior_t if e.terminal_degree > 1),
        supports=prof.supports,
        theta=prof.theta,
        theta_support=prof.theta_support,
    )


@dataclass(frozen=True)
class SupportCutVertex:
    vertex: int
    exterior_extremes: tuple[int, ...]


@dataclass(frozen=True)
class QBlock:
    block: tuple[int, ...]
    extremes: tuple[int, ...]


@dataclass(frozen=True)
class GenTreeAnatomy:
    blocks: BlockDecomposition
    support_cut_vertices: tuple[SupportCutVertex, ...]
    q_blocks: tuple[QBlock, ...]

    @property
    def zeta(self) -> int:
        return len(self.support_cut_vertices)

    @property
    def vartheta(self) -> int:
        return len(self.q_blocks)

    @property
    def phi(self) -> int:
        sizes = [len(s.exterior_extremes) for s in self.support_cut_vertices]
        sizes += [len(q.extremes) for q in self.q_blocks]
        return max(sizes, default=0)


def gen_tree_anatomy(g: Graph, bd: BlockDecomposition | None = None) -> GenTreeAnatomy:
    checked = require_generalized_tree(g)
    return cached(g, "gen_tree_anatomy", lambda g: _gen_tree_anatomy(g, checked if bd is None else bd))


def _gen_tree_anatomy(g: Graph, bd: BlockDecomposition) -> GenTreeAnatomy:
    cut = bd.cut_vertices
    extreme = bd.extreme_vertices

    support = sorted(
        {b_cut[0] for b in bd.blocks if len(b_cut := [v for v in b if v in cut]) == 1}
    )
    exterior: dict[int, list[int]] = {s: [] for s in support}
    for x in sorted(extreme):
        cut_nbrs = [w for w in g.adj[x] if w in cut]
        if len(cut_nbrs) == 1 and cut_nbrs[0] in exterior:
            exterior[cut_nbrs[0]].append(x)

    q_blocks = []
    for b in bd.blocks:
        ext = tuple(v for v in b if v in extreme)
        if sum(1 for v in b if v in cut) > 1 and len(ext) > 1:
            q_blocks.append(QBlock(b, ext))
    return GenTreeAnatomy(
        blocks=bd,
        support_cut_vertices=tuple(SupportCutVertex(s, tuple(exterior[s])) for s in support),
        q_blocks=tuple(q_blocks),
    )
