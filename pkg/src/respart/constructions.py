"""Explicit resolving partitions for paths, stars, trees and generalized trees.

Every builder checks that its output is an exact cover of V and that it
resolves the graph before returning it; a failure there means a bug, not bad
input, and raises :class:`VerificationFailed`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .anatomy import GenTreeAnatomy, TreeAnatomy, gen_tree_anatomy, tree_anatomy
from .errors import (
    InvalidPartition,
    IsAPath,
    IsAStar,
    NotAPath,
    NotASpider,
    NotAStar,
    NotATree,
    PreconditionViolated,
    TooFewLeaves,
    VerificationFailed,
)
from .graph import (
    Graph,
    all_pairs_distances,
    is_generalized_tree,
    is_path_graph,
    is_star_graph,
    is_tree,
    leaves,
    tree_path,
)
from .resolver import VertexPartition, is_resolving_partition


def _finish(g: Graph, classes: list[list[int]], dm: np.ndarray | None, verify: bool, name: str) -> VertexPartition:
    pi = VertexPartition.of(classes)
    try:
        pi.validate(g.n)
    except InvalidPartition as exc:
        raise VerificationFailed(f"{name}: classes are not a partition of V ({exc})") from exc
    if verify:
        verdict = is_resolving_partition(all_pairs_distances(g) if dm is None else dm, pi)
        if not verdict.resolving:
            raise VerificationFailed(f"{name}: vertices {verdict.witness} share a representation in {pi.as_lists()}")
    return pi


def construct_path(g: Graph, dm: np.ndarray | None = None, *, verify: bool = True) -> VertexPartition:
    if not is_path_graph(g) or g.n < 2:
        raise NotAPath("graph is not a path on at least two vertices")
    end = min(v for v in range(g.n) if len(g.adj[v]) == 1)
    return _finish(g, [[end], [v for v in range(g.n) if v != end]], dm, verify, "path")


def construct_star(g: Graph, dm: np.ndarray | None = None, *, verify: bool = True) -> VertexPartition:
    if not is_star_graph(g):
        raise NotAStar("graph is not a star")
    center = max(range(g.n), key=lambda v: len(g.adj[v]))
    lv = sorted(g.adj[center])
    classes = [[center, lv[0]]] + [[u] for u in lv[1:]]
    return _finish(g, classes, dm, verify, "star")


def _require_non_path_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotATree("graph is not a tree")
    if is_path_graph(g):
        raise IsAPath("graph is a path; this construction needs a tree that is not a path")


def thm1_leg_order(legs: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Anatomy order (longest first) rotated so the longest leg comes last."""
    return legs[1:] + legs[:1]


def construct_thm1(
    g: Graph,
    anat: TreeAnatomy | None = None,
    dm: np.ndarray | None = None,
    *,
    reorder: bool = True,
    verify: bool = True,
) -> VertexPartition:
    """``kappa + tau - 1`` classes: one class per first leg, one per leg index
    ``2..tau-1`` across all majors with terminal degree > 1, and the rest.

    With ``reorder=False`` the legs are taken in the order stored in ``anat``.
    """
    _require_non_path_tree(g)
    if dm is None:
        dm = all_pairs_distances(g)
    if anat is None:
        anat = tree_anatomy(g, dm)
    tau = anat.tau
    first: list[list[int]] = []
    middle: list[list[int]] = [[] for _ in range(2, tau)]
    for rec in anat.S:
        legs = thm1_leg_order(rec.legs) if reorder else rec.legs
        first.append(list(legs[0]))
        for j in range(2, tau):
            if j <= len(legs):
                middle[j - 2].extend(legs[j - 1])
    used = {v for c in first + middle for v in c}
    rest = [v for v in range(g.n) if v not in used]
    return _finish(g, [rest] + first + middle, dm, verify, "thm1")


def spider_leaf_order(g: Graph, anat: TreeAnatomy) -> tuple[int, tuple[int, ...], dict[int, tuple[int, ...]]]:
    """(center, leaves u_1..u_t, leg per leaf); u_t is a farthest leaf, others by id."""
    (rec,) = anat.exterior_majors
    leg = dict(zip(rec.terminals, rec.legs))
    far = max(len(p) for p in rec.legs)
    last = min(u for u in rec.terminals if len(leg[u]) == far)
    order = tuple(sorted(u for u in rec.terminals if u != last)) + (last,)
    return rec.major, order, leg


def construct_spider(
    g: Graph,
    anat: TreeAnatomy | None = None,
    dm: np.ndarray | None = None,
    *,
    verify: bool = True,
) -> VertexPartition:
    """``n1 - 1`` classes for a tree with one exterior major that is not a star."""
    if not is_tree(g):
        raise NotATree("graph is not a tree")
    if is_path_graph(g):
        raise NotASpider("a path has no exterior major vertex")
    if dm is None:
        dm = all_pairs_distances(g)
    if anat is None:
        anat = tree_anatomy(g, dm)
    if anat.ex != 1:
        raise NotASpider(f"needs exactly one exterior major vertex, found {anat.ex}")
    if is_star_graph(g):
        raise IsAStar("stars need n1 classes; use the star construction")
    if anat.n1 < 4:
        raise TooFewLeaves(f"needs at least 4 leaves, found {anat.n1}")
    _, u, leg = spider_leaf_order(g, anat)
    t = len(u)
    p, q, r = leg[u[t - 1]], leg[u[0]], leg[u[1]]
    a1 = list(q) + list(p[1:])
    a2 = list(r) + [p[0]]
    singles = [[u[i]] for i in range(2, t - 2)]
    used = set(a1) | set(a2) | {s[0] for s in singles}
    rest = [v for v in range(g.n) if v not in used]
    return _finish(g, [a1, a2] + singles + [rest], dm, verify, "spider")


def thm3_precondition(g: Graph, anat: TreeAnatomy | None = None) -> bool:
    """Every vertex on a path between two members of S is itself in S."""
    if not is_tree(g):
        raise NotATree("graph is not a tree")
    if is_path_graph(g):
        return True
    if anat is None:
        anat = tree_anatomy(g)
    s = [rec.major for rec in anat.S]
    members = set(s)
    return all(set(tree_path(g, a, b)) <= members for a, b in combinations(s, 2))


def thm3_class_count(anat: TreeAnatomy) -> int:
    return max(anat.kappa, anat.tau + 1)


def construct_thm3(
    g: Graph,
    anat: TreeAnatomy | None = None,
    dm: np.ndarray | None = None,
    *,
    verify: bool = True,
) -> VertexPartition:
    """``max(kappa, tau + 1)`` classes: class i holds s_i and, from each s_j,
    at most one whole leg, never the leg of s_i itself.

    Paths are delegated to :func:`construct_path`.
    """
    if not is_tree(g):
        raise NotATree("graph is not a tree")
    if is_path_graph(g):
        return construct_path(g, dm, verify=verify)
    if dm is None:
        dm = all_pairs_distances(g)
    if anat is None:
        anat = tree_anatomy(g, dm)
    if not thm3_precondition(g, anat):
        raise PreconditionViolated(
            "some vertex between two exterior majors of terminal degree > 1 is not itself "
            "an exterior major of terminal degree > 1"
        )
    t = thm3_class_count(anat)
    classes: list[list[int]] = [[] for _ in range(t)]
    for i, rec in enumerate(anat.S):
        classes[i].append(rec.major)
    for j, rec in enumerate(anat.S):
        # anatomy already lists legs longest first
        slots = (i for i in range(t) if i != j)
        for leg, slot in zip(rec.legs, slots):
            classes[slot].extend(leg)
    covered = sum(len(c) for c in classes)
    if covered != g.n:
        raise PreconditionViolated(
            f"the classes cover {covered} of {g.n} vertices (an exterior major of terminal degree one "
            "or a non-exterior major lies outside the construction)"
        )
    return _finish(g, classes, dm, verify, "thm3")


def gentree_class_count(ganat: GenTreeAnatomy) -> int:
    if ganat.phi >= 3:
        return ganat.zeta + ganat.vartheta + ganat.phi - 1
    return ganat.zeta + ganat.vartheta + 1


def construct_gentree(
    g: Graph,
    ganat: GenTreeAnatomy | None = None,
    dm: np.ndarray | None = None,
    *,
    verify: bool = True,
) -> VertexPartition:
    """Singletons for the first exterior extreme of each support cut vertex and
    the first extreme of each Q block; when ``phi >= 3`` the j-th members
    (j = 2..phi-1) are pooled into one class per j; everything else forms one class.
    """
    if ganat is None:
        ganat = gen_tree_anatomy(g)
    phi = ganat.phi
    a_classes = [[s.exterior_extremes[0]] for s in ganat.support_cut_vertices]
    b_classes = [[q.extremes[0]] for q in ganat.q_blocks]
    c_classes: list[list[int]] = []
    if phi >= 3:
        c_classes = [[] for _ in range(2, phi)]
        lists = [s.exterior_extremes for s in ganat.support_cut_vertices]
        lists += [q.extremes for q in ganat.q_blocks]
        for members in lists:
            for j in range(2, min(len(members), phi - 1) + 1):
                c_classes[j - 2].append(members[j - 1])
    used = {v for c in a_classes + b_classes + c_classes for v in c}
    rest = [v for v in range(g.n) if v not in used]
    return _finish(g, [rest] + a_classes + b_classes + c_classes, dm, verify, "gentree")


@dataclass(frozen=True)
class Method:
    name: str
    bound: str
    build: Callable[[Graph], VertexPartition]
    applies: Callable[[Graph], bool]
    guaranteed: Callable[[Graph], int]


def _is_nonpath_tree(g: Graph) -> bool:
    return is_tree(g) and not is_path_graph(g)


def _spider_applies(g: Graph) -> bool:
    if not _is_nonpath_tree(g) or is_star_graph(g):
        return False
    anat = tree_anatomy(g)
    return anat.ex == 1 and anat.n1 >= 4


def _thm3_applies(g: Graph) -> bool:
    return _is_nonpath_tree(g) and thm3_precondition(g) and _thm3_covers(g)


def _thm3_covers(g: Graph) -> bool:
    anat = tree_anatomy(g)
    return len(anat.S) + sum(len(leg) for rec in anat.S for leg in rec.legs) == g.n


METHODS: dict[str, Method] = {
    "path": Method("path", "path_char", construct_path, lambda g: is_path_graph(g) and g.n >= 2, lambda g: 2),
    "star": Method("star", "pd_le_n1", construct_star, is_star_graph, lambda g: len(leaves(g))),
    "thm1": Method(
        "thm1", "thm1", construct_thm1, _is_nonpath_tree, lambda g: tree_anatomy(g).kappa + tree_anatomy(g).tau - 1
    ),
    "thm3": Method("thm3", "thm3", construct_thm3, _thm3_applies, lambda g: thm3_class_count(tree_anatomy(g))),
    "spider": Method("spider", "star_char", construct_spider, _spider_applies, lambda g: len(leaves(g)) - 1),
    "gentree": Method(
        "gentree", "gentree", construct_gentree, is_generalized_tree, lambda g: gentree_class_count(gen_tree_anatomy(g))
    ),
}


def choose_method(g: Graph) -> Method:
    """Method used by ``auto``: path, then star, then the best tree
    construction (ties go to thm1), then the generalized-tree one."""
    for name in ("path", "star"):
        if METHODS[name].applies(g):
            return METHODS[name]
    if is_tree(g):
        candidates = [METHODS[m] for m in ("thm1", "thm3", "spider") if METHODS[m].applies(g)]
        return min(candidates, key=lambda m: m.guaranteed(g))
    if METHODS["gentree"].applies(g):
        return METHODS["gentree"]
    raise PreconditionViolated("no construction applies: graph is neither a tree nor a generalized tree")
