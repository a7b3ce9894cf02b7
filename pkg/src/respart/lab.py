"""Instance generators, exhaustive tree enumeration and bound-checking sweeps."""

from __future__ import annotations

import heapq
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .anatomy import gen_tree_anatomy, tree_anatomy
from .bounds import bounds_report
from .constructions import (
    construct_gentree,
    construct_path,
    construct_spider,
    construct_star,
    construct_thm1,
    construct_thm3,
    gentree_class_count,
    thm3_class_count,
    thm3_precondition,
)
from .errors import InvalidRange, OutOfRange, PreconditionViolated, RespartError, TooLarge
from .graph import (
    Graph,
    all_pairs_distances,
    from_edge_list,
    is_generalized_tree,
    is_path_graph,
    is_star_graph,
    is_tree,
)
from .resolver import metric_dimension_exact, partition_dimension_exact

MAX_ENUM_N = 9


# --- trees ----------------------------------------------------------------


def tree_from_prufer(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise OutOfRange(f"Pruefer entry {x} is outside 0..{n - 1}")
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return from_edge_list(n, edges)


def tree_to_prufer(g: Graph) -> list[int]:
    if not is_tree(g) or g.n < 2:
        raise PreconditionViolated("Pruefer encoding needs a tree on at least two vertices")
    degree = list(g.degrees)
    removed = [False] * g.n
    heap = [v for v in range(g.n) if degree[v] == 1]
    heapq.heapify(heap)
    seq = []
    for _ in range(g.n - 2):
        leaf = heapq.heappop(heap)
        removed[leaf] = True
        (nbr,) = [w for w in g.adj[leaf] if not removed[w]]
        seq.append(nbr)
        degree[nbr] -= 1
        if degree[nbr] == 1:
            heapq.heappush(heap, nbr)
    return seq


def all_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, once each (n^(n-2) of them)."""
    for seq in _prufer_sequences(n):
        yield tree_from_prufer(seq)


def _prufer_sequences(n: int) -> Iterator[tuple[int, ...]]:
    if not 2 <= n <= MAX_ENUM_N:
        raise TooLarge(f"labeled tree enumeration supports 2 <= n <= {MAX_ENUM_N}, got {n}")
    return itertools.product(range(n), repeat=n - 2)


def random_tree(n: int, seed: int) -> Graph:
    if n < 2:
        raise InvalidRange("a random tree needs n >= 2")
    rng = random.Random(seed)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def tree_canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string for a tree (AHU encoding rooted at a center)."""
    if g.n == 1:
        return "()"
    degree = list(g.degrees)
    layer = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in g.adj[v]:
                if degree[w] > 0:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return min(_ahu(g, c) for c in layer)


def _ahu(g: Graph, root: int) -> str:
    order = [root]
    parent = {root: -1}
    for v in order:
        for w in g.adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    code: dict[int, list[str]] = {v: [] for v in order}
    for v in reversed(order):
        s = "(" + "".join(sorted(code[v])) + ")"
        if v == root:
            return s
        code[parent[v]].append(s)
    raise AssertionError("unreachable")


# --- generalized trees ----------------------------------------------------


@dataclass(frozen=True)
class BuildStep:
    size: int
    attach: int | None = None


@dataclass(frozen=True)
class BuildSequence:
    """Complete graphs glued one at a time, each at one existing vertex."""

    steps: tuple[BuildStep, ...]

    def validate(self) -> None:
        if len(self.steps) < 2:
            raise InvalidRange("a generalized tree is built from at least two complete graphs")
        created = 0
        for i, s in enumerate(self.steps):
            if s.size < 2:
                raise InvalidRange(f"step {i}: complete graphs need at least 2 vertices")
            if i == 0:
                if s.attach is not None:
                    raise InvalidRange("the first complete graph is not attached to anything")
            elif s.attach is None or not 0 <= s.attach < created:
                raise InvalidRange(f"step {i}: attach vertex must be one of 0..{created - 1}")
            created += s.size if i == 0 else s.size - 1

    def encode(self) -> str:
        return " ".join(f"K{s.size}" if s.attach is None else f"K{s.size}@{s.attach}" for s in self.steps)


def build_generalized_tree(seq: BuildSequence) -> Graph:
    """Realize a build sequence; each new block's fresh vertices get the next ids."""
    seq.validate()
    edges: list[tuple[int, int]] = []
    n = 0
    for i, step in enumerate(seq.steps):
        if i == 0:
            members = list(range(step.size))
        else:
            members = [step.attach] + list(range(n, n + step.size - 1))
        n = max(n, max(members) + 1)
        edges.extend(itertools.combinations(members, 2))
    return from_edge_list(n, edges)


def random_generalized_tree(
    max_blocks: int,
    block_size_range: tuple[int, int] = (2, 5),
    seed: int = 0,
    max_vertices: int | None = None,
) -> tuple[Graph, BuildSequence]:
    """Random build sequence with 2..max_blocks blocks; sizes shrink to respect ``max_vertices``."""
    lo, hi = block_size_range
    if max_blocks < 2:
        raise InvalidRange("a generalized tree needs at least two blocks")
    if lo < 2 or hi < lo:
        raise InvalidRange(f"invalid block size range {block_size_range}")
    if max_vertices is not None and max_vertices < 3:
        raise InvalidRange("two blocks need at least 3 vertices")
    rng = random.Random(seed)
    k = rng.randint(2, max_blocks)
    steps: list[BuildStep] = []
    n = 0
    for i in range(k):
        size = rng.randint(lo, hi)
        budget = None if max_vertices is None else max_vertices - n + (1 if i else 0)
        if budget is not None:
            # leave room for a second block when placing the first one
            if i == 0:
                budget -= 1
            if budget < 2:
                break
            size = min(size, budget)
        if i == 0:
            steps.append(BuildStep(size))
            n = size
        else:
            steps.append(BuildStep(size, rng.randrange(n)))
            n += size - 1
    seq = BuildSequence(tuple(steps))
    return build_generalized_tree(seq), seq


# --- sweeps ---------------------------------------------------------------


@dataclass
class Violation:
    instance: str
    bound: str
    expected: str
    observed: dict


@dataclass
class SweepResult:
    tested: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: SweepResult) -> None:
        self.tested += other.tested
        self.violations.extend(other.violations)


class OracleCache:
    """Exact pd/dim memoized per tree isomorphism class.

    Both values are graph invariants, so one oracle run per class is enough
    for every labeling of it.
    """

    def __init__(self, seed_lower_bound: bool = False):
        self.seed_lower_bound = seed_lower_bound
        self._pd: dict[str, int] = {}
        self._dim: dict[str, int] = {}

    def pd(self, key: str, g: Graph, dm: np.ndarray) -> int:
        if key not in self._pd:
            self._pd[key] = partition_dimension_exact(g, dm, seed_lower_bound=self.seed_lower_bound)[0]
        return self._pd[key]

    def dim(self, key: str, g: Graph, dm: np.ndarray) -> int:
        if key not in self._dim:
            self._dim[key] = metric_dimension_exact(g, dm)[0]
        return self._dim[key]


def _check_construction(name, build, expected, g, label, result: SweepResult, **kw) -> None:
    try:
        pi = build(g, **kw)
    except RespartError as exc:
        result.violations.append(Violation(label, name, "construction succeeds", {"error": repr(exc)}))
        return
    if len(pi) != expected:
        result.violations.append(
            Violation(label, name, f"{expected} classes", {"classes": len(pi), "partition": pi.as_lists()})
        )


def check_tree_constructions(g: Graph, label: str, result: SweepResult, dm: np.ndarray | None = None) -> None:
    """Run every applicable tree construction (each self-verifies) and compare class counts."""
    if dm is None:
        dm = all_pairs_distances(g)
    if is_path_graph(g):
        _check_construction("construct_path", construct_path, 2, g, label, result, dm=dm)
        return
    anat = tree_anatomy(g, dm)
    _check_construction("construct_thm1", construct_thm1, anat.kappa + anat.tau - 1, g, label, result, anat=anat, dm=dm)
    if is_star_graph(g):
        _check_construction("construct_star", construct_star, anat.n1, g, label, result, dm=dm)
    elif anat.ex == 1 and anat.n1 >= 4:
        _check_construction("construct_spider", construct_spider, anat.n1 - 1, g, label, result, anat=anat, dm=dm)
    if thm3_precondition(g, anat):
        covered = anat.kappa + sum(len(leg) for rec in anat.S for leg in rec.legs)
        if covered == g.n:
            _check_construction("construct_thm3", construct_thm3, thm3_class_count(anat), g, label, result, anat=anat, dm=dm)


def _check_invariants(g: Graph, label: str, result: SweepResult, report) -> None:
    p = report.params
    if "kappa" in p:
        if p["kappa"] < 1:
            result.violations.append(Violation(label, "kappa_positive", "kappa >= 1", dict(p)))
        if p["kappa"] + p["tau"] > p["xi"] + p["theta"]:
            result.violations.append(Violation(label, "kappa_tau_le_xi_theta", "kappa + tau <= xi + theta", dict(p)))
    if "zeta" in p and is_tree(g):
        if (p["zeta"], p["phi"], p["vartheta"]) != (p["xi"], p["theta"], 0):
            result.violations.append(
                Violation(label, "tree_as_gentree", "zeta = xi, phi = theta, vartheta = 0", dict(p))
            )


def _sweep_tree_shard(n: int, start: int, stop: int, pd_max_n: int, dim_max_n: int, constructions: bool,
                      offsets: dict[str, int] | None) -> SweepResult:
    result = SweepResult()
    cache = OracleCache()
    seqs = itertools.islice(_prufer_sequences(n), start, stop)
    for seq in seqs:
        label = f"prufer n={n} {list(seq)}"
        try:
            g = tree_from_prufer(seq)
            dm = all_pairs_distances(g)
            key = tree_canonical_form(g)
            pd = cache.pd(key, g, dm) if n <= pd_max_n else None
            dim = cache.dim(key, g, dm) if n <= dim_max_n else None
            if pd is None:
                # only the dim formula is checked at this size
                if not is_path_graph(g):
                    anat = tree_anatomy(g, dm)
                    if anat.n1 - anat.ex + (offsets or {}).get("eq2", 0) != dim:
                        result.violations.append(
                            Violation(label, "eq2", "dim = n1 - ex", {"dim": dim, "n1": anat.n1, "ex": anat.ex})
                        )
            else:
                report = bounds_report(g, exact_pd=pd, exact_dim=dim, dm=dm, offsets=offsets)
                for e in report.violations():
                    result.violations.append(
                        Violation(label, e.name, e.statement, {"value": e.value, "pd": pd, "dim": dim})
                    )
                _check_invariants(g, label, result, report)
                if constructions:
                    check_tree_constructions(g, label, result, dm)
        except Exception as exc:  # recorded, never aborts the sweep
            result.violations.append(Violation(label, "error", "no exception", {"error": repr(exc)}))
        result.tested += 1
    return result


def sweep_trees(
    n_min: int = 2,
    n_max: int = 8,
    *,
    pd_max_n: int = 8,
    dim_max_n: int = 9,
    constructions: bool = True,
    workers: int = 1,
    shard_size: int = 50_000,
    offsets: dict[str, int] | None = None,
) -> SweepResult:
    """Exhaustive sweep over all labeled trees with ``n_min <= n <= n_max``.

    Trees with ``n <= pd_max_n`` get the full bounds report against exact
    pd and dim; larger ones up to ``dim_max_n`` only check the dim formula.
    """
    shards = []
    for n in range(n_min, n_max + 1):
        total = n ** (n - 2)
        shards += [(n, lo, min(total, lo + shard_size)) for lo in range(0, total, shard_size)]
    args = [(n, lo, hi, pd_max_n, dim_max_n, constructions, offsets) for n, lo, hi in shards]
    result = SweepResult()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_sweep_tree_shard, *zip(*args)):
                result.merge(part)
    else:
        for a in args:
            result.merge(_sweep_tree_shard(*a))
    return result


def sweep_random_tree_constructions(count: int = 500, n_max: int = 16, seed_start: int = 0) -> SweepResult:
    """Construction checks (no oracle) on seeded random trees with 3 <= n <= n_max."""
    result = SweepResult()
    for seed in range(seed_start, seed_start + count):
        n = random.Random(seed).randint(3, n_max)
        g = random_tree(n, seed)
        label = f"random_tree n={n} seed={seed} prufer={tree_to_prufer(g)}"
        try:
            check_tree_constructions(g, label, result)
        except Exception as exc:
            result.violations.append(Violation(label, "error", "no exception", {"error": repr(exc)}))
        result.tested += 1
    return result


def sweep_gentrees(
    count: int = 200,
    seed_start: int = 0,
    *,
    max_blocks: int = 6,
    block_size_range: tuple[int, int] = (2, 5),
    max_vertices: int = 12,
    exact: bool = True,
    offsets: dict[str, int] | None = None,
) -> SweepResult:
    """Seeded random generalized trees: construction, class count and oracle bound."""
    result = SweepResult()
    for seed in range(seed_start, seed_start + count):
        label = f"gentree seed={seed}"
        try:
            g, seq = random_generalized_tree(max_blocks, block_size_range, seed, max_vertices)
            label = f"gentree seed={seed} {seq.encode()}"
            if not is_generalized_tree(g):
                result.violations.append(Violation(label, "recognizer", "is_generalized_tree", {}))
                continue
            dm = all_pairs_distances(g)
            ganat = gen_tree_anatomy(g)
            bound = gentree_class_count(ganat) + (offsets or {}).get("gentree", 0)
            pi = construct_gentree(g, ganat, dm)
            if len(pi) != bound:
                result.violations.append(
                    Violation(label, "gentree_count", f"{bound} classes", {"classes": len(pi)})
                )
            if exact:
                pd = partition_dimension_exact(g, dm, seed_lower_bound=False)[0]
                if pd > bound:
                    result.violations.append(
                        Violation(label, "gentree", "pd <= bound", {"pd": pd, "bound": bound})
                    )
                if (pd == 2) != is_path_graph(g):
                    result.violations.append(
                        Violation(label, "path_char", "pd = 2 iff path", {"pd": pd, "path": is_path_graph(g)})
                    )
            if is_tree(g):
                report = bounds_report(g, dm=dm)
                _check_invariants(g, label, result, report)
        except Exception as exc:
            result.violations.append(Violation(label, "error", "no exception", {"error": repr(exc)}))
        finally:
            result.tested += 1
    return result


def sweep(kind: str, **params) -> SweepResult:
    if kind == "trees":
        return sweep_trees(**params)
    if kind == "gentrees":
        return sweep_gentrees(**params)
    if kind == "random-trees":
        return sweep_random_tree_constructions(**params)
    raise InvalidRange(f"unknown sweep kind {kind!r}")
