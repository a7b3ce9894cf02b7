"""Representations, resolving checks and exact (brute-force) dimensions.

The exact searches are the ground truth every bound and construction in the
package is checked against, so they stay deliberately simple: enumerate
candidates in a fixed canonical order and evaluate them in vectorized chunks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import Disconnected, InvalidPartition, TooLarge
from .graph import Graph, all_pairs_distances, is_connected, is_path_graph

DEFAULT_PD_LIMIT = 12
DEFAULT_DIM_LIMIT = 14
LIMIT_ENV = "RESPART_EXACT_LIMIT"

_CHUNK = 1 << 14


@dataclass(frozen=True)
class VertexPartition:
    """Ordered partition; class order fixes the coordinate order of representations."""

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> VertexPartition:
        return cls(tuple(tuple(sorted(c)) for c in classes))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> VertexPartition:
        t = max(labels) + 1
        classes: list[list[int]] = [[] for _ in range(t)]
        for v, c in enumerate(labels):
            classes[c].append(v)
        return cls(tuple(tuple(c) for c in classes))

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.classes)

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for i, c in enumerate(self.classes):
            if not c:
                raise InvalidPartition(f"class {i} is empty")
            for v in c:
                if not 0 <= v < n:
                    raise InvalidPartition(f"vertex {v} is out of range 0..{n - 1}")
                if v in seen:
                    raise InvalidPartition(f"vertex {v} appears in more than one class")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise InvalidPartition(f"vertices {missing} are not covered")

    def labels(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=np.int64)
        for i, c in enumerate(self.classes):
            out[list(c)] = i
        return out

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise InvalidPartition(f"vertex {v} is not covered")

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


@dataclass(frozen=True)
class ResolutionVerdict:
    resolving: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.resolving


# --- representations ------------------------------------------------------


def partition_representation(dm: np.ndarray, pi: VertexPartition, v: int) -> tuple[int, ...]:
    pi.validate(dm.shape[0])
    return tuple(int(dm[v, list(c)].min()) for c in pi.classes)


def metric_representation(dm: np.ndarray, s: Sequence[int], v: int) -> tuple[int, ...]:
    _check_set(dm.shape[0], s)
    return tuple(int(dm[v, w]) for w in s)


def partition_representations(dm: np.ndarray, pi: VertexPartition) -> np.ndarray:
    """``n x t`` matrix whose row ``v`` is the representation of ``v``."""
    pi.validate(dm.shape[0])
    return np.stack([dm[:, list(c)].min(axis=1) for c in pi.classes], axis=1)


def _first_collision(reps: np.ndarray) -> tuple[int, int] | None:
    first: dict[tuple[int, ...], int] = {}
    best: tuple[int, int] | None = None
    for v, row in enumerate(map(tuple, reps.tolist())):
        if row in first:
            pair = (first[row], v)
            if best is None or pair < best:
                best = pair
        else:
            first[row] = v
    return best


def is_resolving_partition(dm: np.ndarray, pi: VertexPartition) -> ResolutionVerdict:
    # Lexicographically least colliding pair: smallest u, then smallest v > u.
    reps = partition_representations(dm, pi)
    pair = _first_collision(reps)
    return ResolutionVerdict(pair is None, pair)


def _check_set(n: int, s: Sequence[int]) -> None:
    if len(set(s)) != len(s):
        raise InvalidPartition("resolving set contains a repeated vertex")
    for v in s:
        if not 0 <= v < n:
            raise InvalidPartition(f"vertex {v} is out of range 0..{n - 1}")


def is_resolving_set(dm: np.ndarray, s: Sequence[int]) -> ResolutionVerdict:
    _check_set(dm.shape[0], s)
    reps = dm[:, list(s)] if s else np.zeros((dm.shape[0], 0), dtype=np.int64)
    pair = _first_collision(reps)
    return ResolutionVerdict(pair is None, pair)


# --- exact search ---------------------------------------------------------


def exact_limits() -> tuple[int, int]:
    """(partition-dimension limit, metric-dimension limit), env override applied."""
    raw = os.environ.get(LIMIT_ENV)
    if raw:
        lim = int(raw)
        return lim, lim
    return DEFAULT_PD_LIMIT, DEFAULT_DIM_LIMIT


def twin_lower_bound(g: Graph) -> int:
    """Size of the largest set of pairwise twins.

    Twins (equal open or equal closed neighbourhoods) are at equal distance
    from every other vertex, so a resolving partition must separate them.
    For trees this is at least the largest number of leaves on one support.
    """
    best = 1
    for key in (lambda v: g.adj[v], lambda v: tuple(sorted(g.adj[v] + (v,)))):
        groups: dict[tuple[int, ...], int] = {}
        for v in range(g.n):
            k = key(v)
            groups[k] = groups.get(k, 0) + 1
        best = max(best, max(groups.values()))
    return best


def rgs_count(n: int, t: int) -> int:
    """Stirling number of the second kind ``S(n, t)``."""
    return _stirling2(n, t)


@lru_cache(maxsize=None)
def _stirling2(n: int, t: int) -> int:
    if n == t:
        return 1
    if t == 0 or t > n:
        return 0
    return t * _stirling2(n - 1, t) + _stirling2(n - 1, t - 1)


def _grow(arr: np.ndarray, mx: np.ndarray, n: int, t: int, exact: bool) -> tuple[np.ndarray, np.ndarray]:
    """Extend every RGS row in ``arr`` (current maxima ``mx``) up to length ``n``.

    Rows keep lexicographic order. With ``exact`` only completions using
    exactly ``t`` blocks survive; otherwise at most ``t`` blocks are used.
    """
    for pos in range(arr.shape[1], n):
        counts = np.minimum(mx + 1, t - 1) + 1
        rows = np.repeat(np.arange(arr.shape[0]), counts)
        vals = np.arange(rows.size) - np.repeat(np.cumsum(counts) - counts, counts)
        newmax = np.maximum(mx[rows], vals)
        if exact:
            keep = newmax + 1 + (n - pos - 1) >= t
            rows, vals, newmax = rows[keep], vals[keep], newmax[keep]
        new = np.empty((rows.size, pos + 1), dtype=np.int8)
        new[:, :pos] = arr[rows]
        new[:, pos] = vals
        arr, mx = new, newmax
    return arr, mx


def restricted_growth_strings(n: int, t: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """All set partitions of ``range(n)`` into exactly ``t`` blocks, as RGS rows.

    Yields arrays of at most ``chunk`` rows; concatenated they list every
    partition exactly once in lexicographic order of the growth string.
    """
    if t < 1 or t > n:
        return
    # Fixing a prefix keeps each suffix expansion bounded in memory.
    p = max(1, n - 10)
    prefixes, pmax = _grow(np.zeros((1, 1), dtype=np.int8), np.zeros(1, dtype=np.int64), p, t, exact=False)
    for row, m in zip(prefixes, pmax):
        if m + 1 + (n - p) < t:
            continue
        block, _ = _grow(row[None, :], np.array([m]), n, t, exact=True)
        for lo in range(0, block.shape[0], chunk):
            yield block[lo : lo + chunk]


def _collisions(reps: np.ndarray, base: int) -> np.ndarray:
    """For a ``(c, n, k)`` batch of representation matrices, flag batches with a repeated row."""
    c, n, k = reps.shape
    if k == 0:
        return np.full(c, n > 1)
    if base ** k < 2**62:
        weights = base ** np.arange(k, dtype=np.int64)
        codes = reps.astype(np.int64) @ weights
        codes.sort(axis=1)
        return (codes[:, 1:] == codes[:, :-1]).any(axis=1)
    out = np.empty(c, dtype=bool)
    for i in range(c):
        out[i] = np.unique(reps[i], axis=0).shape[0] < n
    return out


def _partition_batch_collisions(dm: np.ndarray, labels: np.ndarray, t: int) -> np.ndarray:
    n = dm.shape[0]
    # distance to class k = min over u of dm[v, u] + penalty[k, u]
    penalty = np.where(labels[:, None, :] != np.arange(t)[None, :, None], np.int16(2 * n), np.int16(0))
    reps = (dm.astype(np.int16)[None, :, None, :] + penalty[:, None, :, :]).min(axis=3)
    return _collisions(reps, n + 1)


def _validate_exact(g: Graph, dm: np.ndarray | None, limit: int, what: str) -> np.ndarray:
    if g.n > limit:
        raise TooLarge(f"{what} search is capped at n <= {limit} (n = {g.n}); set {LIMIT_ENV} to raise it")
    if not is_connected(g):
        raise Disconnected("exact search needs a connected graph")
    return all_pairs_distances(g) if dm is None else dm


def partition_dimension_exact(
    g: Graph,
    dm: np.ndarray | None = None,
    *,
    limit: int | None = None,
    seed_lower_bound: bool = True,
) -> tuple[int, VertexPartition]:
    """Minimum number of classes of a resolving partition, with a witness.

    Candidates with exactly ``t`` classes are tried for ascending ``t``.
    With ``seed_lower_bound`` the search starts at a proven lower bound
    (twin classes, and 3 for non-paths); turn it off when the result is used
    to check those very bounds.
    """
    limit = exact_limits()[0] if limit is None else limit
    dm = _validate_exact(g, dm, limit, "partition dimension")
    n = g.n
    if n == 1:
        return 1, VertexPartition(((0,),))
    t0 = 2
    if seed_lower_bound:
        t0 = max(t0, twin_lower_bound(g))
        if not is_path_graph(g):
            t0 = max(t0, 3)
    for t in range(t0, n + 1):
        for labels in restricted_growth_strings(n, t):
            bad = _partition_batch_collisions(dm, labels, t)
            good = np.flatnonzero(~bad)
            if good.size:
                return t, VertexPartition.from_labels(labels[good[0]].tolist())
    raise AssertionError("the all-singletons partition always resolves")


def metric_dimension_exact(
    g: Graph,
    dm: np.ndarray | None = None,
    *,
    limit: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Minimum resolving set size; subsets tried by size, then lexicographically."""
    limit = exact_limits()[1] if limit is None else limit
    dm = _validate_exact(g, dm, limit, "metric dimension")
    n = g.n
    if n == 1:
        return 0, ()
    for k in range(1, n):
        combos = np.array(list(combinations(range(n), k)), dtype=np.int64)
        for lo in range(0, combos.shape[0], _CHUNK):
            part = combos[lo : lo + _CHUNK]
            reps = dm[:, part].transpose(1, 0, 2)
            good = np.flatnonzero(~_collisions(reps, n + 1))
            if good.size:
                return k, tuple(int(v) for v in part[good[0]])
    raise AssertionError("n-1 vertices always resolve a connected graph")


__all__ = [
    "VertexPartition",
    "ResolutionVerdict",
    "partition_representation",
    "partition_representations",
    "metric_representation",
    "is_resolving_partition",
    "is_resolving_set",
    "partition_dimension_exact",
    "metric_dimension_exact",
    "restricted_growth_strings",
    "twin_lower_bound",
    "exact_limits",
    "rgs_count",
]
