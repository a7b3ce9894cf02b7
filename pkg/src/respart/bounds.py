"""Every bound and characterization for pd and dim, evaluated on one instance."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .anatomy import TreeAnatomy, gen_tree_anatomy, support_profile, tree_anatomy
from .constructions import gentree_class_count, thm3_class_count, thm3_precondition
from .errors import IsAPath
from .graph import (
    Graph,
    all_pairs_distances,
    is_generalized_tree,
    is_path_graph,
    is_star_graph,
    is_tree,
    leaves,
)
from .resolver import exact_limits, metric_dimension_exact, partition_dimension_exact

UPPER, LOWER, EQUALITY, CHARACTERIZATION = "upper", "lower", "equality", "characterization"


@dataclass
class BoundEntry:
    name: str
    kind: str
    statement: str
    target: str = "pd"
    applicable: bool = False
    value: int | None = None
    satisfied: bool | None = None
    tight: bool | None = None
    note: str = ""


@dataclass
class BoundsReport:
    entries: list[BoundEntry]
    exact_pd: int | None = None
    exact_dim: int | None = None
    pd_witness: list[list[int]] | None = None
    dim_witness: list[int] | None = None
    theta_support: int | None = None
    params: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and e.satisfied is False]

    def to_dict(self) -> dict:
        return asdict(self)


def dim_formula(anat: TreeAnatomy) -> int:
    """Metric dimension of a tree that is not a path: leaves minus exterior majors."""
    if anat.ex == 0:
        raise IsAPath("the formula needs a tree that is not a path")
    return anat.n1 - anat.ex


def _judge(e: BoundEntry, pd: int | None, dim: int | None) -> None:
    actual = pd if e.target == "pd" else dim
    if not e.applicable or e.value is None or actual is None or e.kind == CHARACTERIZATION:
        return
    if e.kind == UPPER:
        e.satisfied = actual <= e.value
    elif e.kind == LOWER:
        e.satisfied = actual >= e.value
    else:
        e.satisfied = actual == e.value
    e.tight = actual == e.value


def bounds_report(
    g: Graph,
    compute_exact: bool = False,
    *,
    exact_pd: int | None = None,
    exact_dim: int | None = None,
    dm: np.ndarray | None = None,
    anat: TreeAnatomy | None = None,
    seed_lower_bound: bool = True,
    offsets: dict[str, int] | None = None,
) -> BoundsReport:
    """Evaluate all bounds on ``g``.

    Exact values come from ``exact_pd``/``exact_dim`` when given, otherwise
    from the brute-force oracle if ``compute_exact`` is set and ``g`` is
    within the oracle limits. ``offsets`` shifts bound values and exists only
    to test that sweeps catch a wrong bound.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    report = BoundsReport(entries=[])
    pd_limit, dim_limit = exact_limits()
    if compute_exact and exact_pd is None and g.n <= pd_limit:
        exact_pd, wit = partition_dimension_exact(g, dm, limit=pd_limit, seed_lower_bound=seed_lower_bound)
        report.pd_witness = wit.as_lists()
    if compute_exact and exact_dim is None and g.n <= dim_limit:
        exact_dim, dwit = metric_dimension_exact(g, dm, limit=dim_limit)
        report.dim_witness = list(dwit)
    report.exact_pd, report.exact_dim = exact_pd, exact_dim

    tree = is_tree(g)
    path = tree and is_path_graph(g)
    star = tree and is_star_graph(g)
    nontrivial = g.n >= 2
    if tree and not path and anat is None:
        anat = tree_anatomy(g, dm)
    prof = support_profile(g) if tree else None
    n1 = len(leaves(g)) if tree else None
    if prof is not None:
        report.theta_support = prof.theta_support
        report.params.update(n1=n1, xi=prof.xi, theta=prof.theta)
    if anat is not None:
        report.params.update(ex=anat.ex, kappa=anat.kappa, tau=anat.tau)

    entries: list[BoundEntry] = []

    e = BoundEntry("eq1", UPPER, "pd <= dim + 1", applicable=nontrivial)
    if nontrivial and exact_dim is not None:
        e.value = exact_dim + 1
    entries.append(e)

    e = BoundEntry("eq2", EQUALITY, "dim = n1 - ex (tree, not a path)", target="dim", applicable=anat is not None)
    if anat is not None:
        e.value = dim_formula(anat)
    entries.append(e)

    e = BoundEntry("eq3", UPPER, "pd <= n1 - ex + 1 (tree, not a path)", applicable=anat is not None)
    if anat is not None:
        e.value = anat.n1 - anat.ex + 1
    entries.append(e)

    e = BoundEntry("thm1", UPPER, "pd <= kappa + tau - 1 (tree, not a path)", applicable=anat is not None)
    if anat is not None:
        e.value = anat.kappa + anat.tau - 1
    entries.append(e)

    tree2 = tree and nontrivial
    e = BoundEntry("cor2", UPPER, "pd <= xi + theta - 1 (tree, n >= 2)", applicable=tree2)
    if tree2:
        e.value = prof.xi + prof.theta - 1
    entries.append(e)

    e = BoundEntry("pd_le_n1", UPPER, "pd <= n1 (tree, n >= 2)", applicable=tree2)
    if tree2:
        e.value = n1
    entries.append(e)

    e = BoundEntry("pd_ge_theta", LOWER, "pd >= theta (tree, n >= 2)", applicable=tree2)
    if tree2:
        e.value = prof.theta
        e.note = f"support {prof.theta_support} carries {prof.theta} leaves, which must lie in distinct classes"
    entries.append(e)

    applies = tree and g.n >= 4 and n1 == 3
    e = BoundEntry("n1_eq_3", EQUALITY, "n1 = 3 implies pd = 3 (tree, n >= 4)", applicable=applies)
    if applies:
        e.value = 3
    entries.append(e)

    applies = tree and n1 is not None and n1 >= 4
    e = BoundEntry("star_char", CHARACTERIZATION, "pd = n1 iff star (tree, n1 >= 4)", applicable=applies)
    if applies:
        e.value = n1
        e.note = "star" if star else "not a star"
        if exact_pd is not None:
            e.satisfied = (exact_pd == n1) == star
    entries.append(e)

    e = BoundEntry("path_char", CHARACTERIZATION, "pd = 2 iff path", applicable=nontrivial)
    if nontrivial:
        e.value = 2
        e.note = "path" if path else "not a path"
        if exact_pd is not None:
            e.satisfied = (exact_pd == 2) == path
    entries.append(e)

    applies = tree and nontrivial and thm3_precondition(g, anat)
    e = BoundEntry("thm3", UPPER, "pd <= max(kappa, tau + 1) when S is path-closed", applicable=applies)
    if applies:
        # a path counts as kappa = 1, tau = 2
        e.value = 3 if path else thm3_class_count(anat)
    entries.append(e)

    applies = is_generalized_tree(g)
    e = BoundEntry("gentree", UPPER, "pd <= zeta+vartheta+phi-1 (phi >= 3), zeta+vartheta+1 (phi <= 2)", applicable=applies)
    if applies:
        ganat = gen_tree_anatomy(g)
        e.value = gentree_class_count(ganat)
        report.params.update(zeta=ganat.zeta, vartheta=ganat.vartheta, phi=ganat.phi)
    entries.append(e)

    for e in entries:
        if offsets and e.name in offsets and e.value is not None:
            e.value += offsets[e.name]
        _judge(e, exact_pd, exact_dim)
    report.entries = entries
    return report
