"""Text formats: edge lists, generalized-tree build files, partitions, DOT."""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError, RespartError
from .graph import Graph, from_edge_list
from .lab import BuildSequence, BuildStep, build_generalized_tree
from .resolver import VertexPartition

# Colours cycle when a partition has more classes than entries here.
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not t.lstrip("-").isdigit())
        raise ParseError(f"expected an integer vertex id, got {bad!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    """``n <count>`` header (optional), then one ``u v`` pair per line; ``#`` starts a comment."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    first = True
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if first and tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError("header must read 'n <count>'", lineno)
            (n,) = _ints(tokens[1:], lineno)
            first = False
            continue
        first = False
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _ints(tokens, lineno)
        edges.append((u, v))
    if n is None:
        if not edges:
            raise ParseError("empty edge list without an 'n <count>' header")
        n = max(max(e) for e in edges) + 1
    try:
        return from_edge_list(n, edges)
    except RespartError as exc:
        raise ParseError(str(exc)) from exc


def parse_build_sequence(text: str) -> BuildSequence:
    """``K <n1>`` then ``K <ni> @ <attach-id>`` lines."""
    steps = []
    for lineno, line in _content_lines(text):
        tokens = line.replace("@", " @ ").split()
        if tokens[0] != "K":
            raise ParseError(f"expected a 'K <size>' line, got {line!r}", lineno)
        if len(tokens) == 2 and not steps:
            steps.append(BuildStep(_ints(tokens[1:2], lineno)[0]))
        elif len(tokens) == 4 and tokens[2] == "@" and steps:
            size, attach = _ints([tokens[1], tokens[3]], lineno)
            steps.append(BuildStep(size, attach))
        else:
            raise ParseError("expected 'K <n1>' first and 'K <ni> @ <attach-id>' afterwards", lineno)
    seq = BuildSequence(tuple(steps))
    try:
        seq.validate()
    except RespartError as exc:
        raise ParseError(str(exc)) from exc
    return seq


def parse_graph(text: str) -> Graph:
    """Edge list or build file, told apart by the first content line."""
    for _, line in _content_lines(text):
        if line.split()[0] == "K":
            return build_generalized_tree(parse_build_sequence(text))
        break
    return parse_edge_list(text)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def parse_partition(text: str) -> VertexPartition:
    """One class per line, space-separated ids; line order is class order."""
    classes = [_ints(line.split(), lineno) for lineno, line in _content_lines(text)]
    return VertexPartition(tuple(tuple(c) for c in classes))


def read_partition(path: str | Path) -> VertexPartition:
    return parse_partition(Path(path).read_text())


def format_partition(pi: VertexPartition) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in pi.classes)


def format_edge_list(g: Graph) -> str:
    return f"n {g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def to_dot(g: Graph, pi: VertexPartition | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [style=filled, fillcolor=white];"]
    for v in range(g.n):
        if pi is None:
            lines.append(f"  {v};")
        else:
            k = pi.class_of(v)
            lines.append(f'  {v} [fillcolor="{PALETTE[k % len(PALETTE)]}", group={k}, label="{v}\\nP{k + 1}"];')
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
