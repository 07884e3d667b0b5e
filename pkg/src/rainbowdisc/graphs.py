"""Core graph types, file parsing, and cut predicates.

Vertices are 0-indexed in memory and 1-indexed in files (DIMACS
convention). Edge ids are 0..m-1 in input order and stay stable across
every operation in the package; all types are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphFormatError, InvalidInputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with stable vertex and edge identifiers.

    Rejects self-loops and parallel edges. ``adjacency[v]`` lists
    ``(edge_id, neighbor)`` pairs in edge insertion order.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise InvalidInputError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInputError(f"edge {eid}: endpoint out of range")
            if u == v:
                raise InvalidInputError(f"edge {eid}: self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidInputError(f"edge {eid}: parallel edge {key}")
            seen.add(key)
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise InvalidInputError(f"vertex {v} out of range")

    def check_edge_ids(self, ids: Iterable[int]) -> None:
        for e in ids:
            if not (0 <= e < self.edge_count):
                raise InvalidInputError(f"edge id {e} out of range")


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of color ids to edge ids.

    ``palette`` is the number of color ids available; it defaults to
    ``max(colors) + 1`` (the convention used when reading colored files,
    where the palette is implicit).
    """

    colors: tuple[int, ...]
    palette: int = -1

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if self.palette < 0:
            object.__setattr__(self, "palette", (max(colors) + 1) if colors else 0)
        for eid, col in enumerate(colors):
            if not (0 <= col < self.palette):
                raise InvalidInputError(
                    f"edge {eid}: color {col} outside palette of size {self.palette}")

    @property
    def color_count(self) -> int:
        """Number of distinct color ids actually used."""
        return len(set(self.colors))


@dataclass(frozen=True)
class CutCertificate:
    """An edge cut together with the vertex bipartition witnessing it.

    ``cut_edges`` contains every edge crossing the bipartition (it may
    contain more); removing them disconnects ``side_s`` from ``side_t``.
    """

    cut_edges: frozenset[int]
    side_s: frozenset[int]
    side_t: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cut_edges", frozenset(self.cut_edges))
        object.__setattr__(self, "side_s", frozenset(self.side_s))
        object.__setattr__(self, "side_t", frozenset(self.side_t))


def parse_graph(text: str) -> tuple[Graph, EdgeColoring | None]:
    """Parse the graph file format.

    Header ``p edge <n> <m>``, comment lines whose first token is ``c``,
    then ``m`` edge lines ``e <u> <v>`` (1-indexed endpoints) or
    ``e <u> <v> <color>``. Edge lines must be uniformly colored or
    uniformly uncolored; returns the coloring only in the former case.
    """
    n = -1
    declared = -1
    edges: list[tuple[int, int]] = []
    colors: list[int] = []
    colored: bool | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n >= 0:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"line {lineno}: malformed header")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header") from None
            if n < 0 or declared < 0:
                raise GraphFormatError(f"line {lineno}: malformed header")
        elif parts[0] == "e":
            if n < 0:
                raise GraphFormatError(f"line {lineno}: edge line before header")
            if len(parts) not in (3, 4):
                raise GraphFormatError(f"line {lineno}: malformed edge line")
            try:
                u, v = int(parts[1]), int(parts[2])
                color = int(parts[3]) if len(parts) == 4 else None
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge line") from None
            has_color = color is not None
            if colored is None:
                colored = has_color
            elif colored != has_color:
                raise GraphFormatError(
                    f"line {lineno}: mixed colored and uncolored edge lines")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
            seen.add(key)
            if has_color and color < 0:
                raise GraphFormatError(f"line {lineno}: negative color")
            edges.append((u - 1, v - 1))
            if has_color:
                colors.append(color)
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line type {parts[0]!r}")
    if n < 0:
        raise GraphFormatError("missing header")
    if len(edges) != declared:
        raise GraphFormatError(
            f"header declares {declared} edges, found {len(edges)}")
    graph = Graph(n, tuple(edges))
    coloring = EdgeColoring(tuple(colors)) if colored else None
    return graph, coloring


def serialize_graph(g: Graph, coloring: EdgeColoring | None = None) -> str:
    """Serialize in the graph file format; inverse of ``parse_graph``."""
    if coloring is not None and len(coloring.colors) != g.edge_count:
        raise InvalidInputError("coloring length does not match edge count")
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    for eid, (u, v) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"e {u + 1} {v + 1}")
        else:
            lines.append(f"e {u + 1} {v + 1} {coloring.colors[eid]}")
    return "\n".join(lines) + "\n"


def components(g: Graph, removed: Iterable[int] = ()) -> tuple[tuple[int, ...], ...]:
    """Connected components of g with the given edge ids deleted.

    Components are ordered by their smallest vertex id; vertices within a
    component are ascending.
    """
    gone = frozenset(removed)
    g.check_edge_ids(gone)
    seen = [False] * g.vertex_count
    comps: list[tuple[int, ...]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            x = stack.pop()
            for eid, y in g.adjacency[x]:
                if eid not in gone and not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def reachable_from(g: Graph, start: int, removed: Iterable[int] = ()) -> frozenset[int]:
    """Vertices reachable from start once the given edge ids are deleted."""
    gone = frozenset(removed)
    g.check_edge_ids(gone)
    g.check_vertex(start)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for eid, y in g.adjacency[x]:
            if eid not in gone and y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def separates(g: Graph, cut: Iterable[int], s: int, t: int) -> bool:
    """True iff removing the cut edges leaves no s-t path."""
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise InvalidInputError("s and t must differ")
    return t not in reachable_from(g, s, cut)


def is_rainbow(coloring: EdgeColoring, cut: Iterable[int]) -> bool:
    """True iff the cut's edges all have pairwise distinct colors."""
    seen: set[int] = set()
    for e in set(cut):
        if not (0 <= e < len(coloring.colors)):
            raise InvalidInputError(f"edge id {e} out of range")
        col = coloring.colors[e]
        if col in seen:
            return False
        seen.add(col)
    return True


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    return len(reachable_from(g, 0)) == g.vertex_count


def certificate_from_side(g: Graph, side_s: Iterable[int]) -> CutCertificate:
    """Minimal certificate for a vertex bipartition: the cut is exactly the
    boundary of side_s."""
    side = frozenset(side_s)
    cut = frozenset(eid for eid, (u, v) in enumerate(g.edges)
                    if (u in side) != (v in side))
    return CutCertificate(cut, side, frozenset(range(g.vertex_count)) - side)


def check_cut_certificate(g: Graph, cert: CutCertificate, s: int, t: int) -> None:
    """Raise InvalidInputError unless cert witnesses an s-t separation in g."""
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise InvalidInputError("s and t must differ")
    g.check_edge_ids(cert.cut_edges)
    if s not in cert.side_s or t not in cert.side_t:
        raise InvalidInputError("certificate sides do not contain s and t")
    if cert.side_s & cert.side_t:
        raise InvalidInputError("certificate sides overlap")
    if cert.side_s | cert.side_t != frozenset(range(g.vertex_count)):
        raise InvalidInputError("certificate sides do not cover all vertices")
    for eid, (u, v) in enumerate(g.edges):
        if (u in cert.side_s) != (v in cert.side_s) and eid not in cert.cut_edges:
            raise InvalidInputError(f"crossing edge {eid} missing from cut_edges")
    for comp in components(g, cert.cut_edges):
        block = set(comp)
        if block & cert.side_s and block & cert.side_t:
            raise InvalidInputError("removing cut_edges does not separate the sides")
