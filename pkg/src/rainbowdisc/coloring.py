"""Proper edge colorings: a constructive max_degree+1 coloring and the exact
chromatic index."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DEFAULT_NODE_BUDGET, BudgetExceededError, InvalidInputError
from .graphs import EdgeColoring, Graph


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    """True iff no two edges sharing a vertex have the same color."""
    if len(c.colors) != g.edge_count:
        raise InvalidInputError("coloring length does not match edge count")
    for adj in g.adjacency:
        seen: set[int] = set()
        for eid, _ in adj:
            col = c.colors[eid]
            if col in seen:
                return False
            seen.add(col)
    return True


def proper_coloring_delta_plus_one(g: Graph) -> EdgeColoring:
    """Proper edge coloring with palette max_degree + 1, built by fan rotations.

    Edges are colored in id order. For edge (u, v): build the maximal fan of
    u starting at v (each next fan edge's color must be free at the previous
    fan vertex; candidates scanned in ascending neighbor order). Let c be the
    smallest color free at u and d the smallest free at the fan's last
    vertex. If d is busy at u, collect the maximal alternating d/c path
    starting at u and swap its colors, which frees d at u without breaking
    properness elsewhere. Then take the first fan prefix that is still a fan
    under the current colors and whose last vertex has d free, rotate the
    prefix's colors one step toward the uncolored edge, and give the prefix's
    last edge color d. Deterministic throughout: smallest color, smallest
    neighbor, first valid prefix.
    """
    m = g.edge_count
    if m == 0:
        raise InvalidInputError("graph has no edges")
    k = g.max_degree + 1
    color = [-1] * m
    used: list[set[int]] = [set() for _ in range(g.vertex_count)]
    sorted_adj = [sorted((w, eid) for eid, w in g.adjacency[v])
                  for v in range(g.vertex_count)]

    def rebuild(v: int) -> None:
        used[v] = {color[eid] for eid, _ in g.adjacency[v] if color[eid] != -1}

    def smallest_free(v: int) -> int:
        for col in range(k):
            if col not in used[v]:
                return col
        raise RuntimeError("no free color at a vertex; degree bound violated")

    for e0 in range(m):
        u, v0 = g.edges[e0]
        fan: list[tuple[int, int]] = [(v0, e0)]
        in_fan = {v0}
        while True:
            last = fan[-1][0]
            ext = None
            for w, eid in sorted_adj[u]:
                if w in in_fan or color[eid] == -1:
                    continue
                if color[eid] not in used[last]:
                    ext = (w, eid)
                    break
            if ext is None:
                break
            fan.append(ext)
            in_fan.add(ext[0])
        c = smallest_free(u)
        d = smallest_free(fan[-1][0])
        if d in used[u]:
            # collect the whole alternating path first, then flip it; properness
            # keeps at most one edge of each color at a vertex, so the walk is
            # forced and cannot revisit an edge
            path: list[int] = []
            x, want = u, d
            while True:
                step = None
                for eid, y in g.adjacency[x]:
                    if color[eid] == want:
                        step = (eid, y)
                        break
                if step is None:
                    break
                path.append(step[0])
                x = step[1]
                want = c if want == d else d
            touched: set[int] = set()
            for eid in path:
                color[eid] = c if color[eid] == d else d
                a, b = g.edges[eid]
                touched.add(a)
                touched.add(b)
            for x in touched:
                rebuild(x)
            if d in used[u]:
                raise RuntimeError("alternating path inversion failed to free d at u")
        j = None
        for idx, (w, eid) in enumerate(fan):
            if idx > 0 and (color[eid] == -1 or color[eid] in used[fan[idx - 1][0]]):
                break  # the prefix stops being a fan here
            if d not in used[w]:
                j = idx
                break
        if j is None:
            raise RuntimeError("no fan prefix accepts the free color")
        for idx in range(j):
            color[fan[idx][1]] = color[fan[idx + 1][1]]
        color[fan[j][1]] = d
        rebuild(u)
        for w, _ in fan[:j + 1]:
            rebuild(w)
    return EdgeColoring(tuple(color), k)


def find_proper_k_coloring(g: Graph, k: int,
                           node_budget: int = DEFAULT_NODE_BUDGET) -> EdgeColoring | None:
    """Backtracking search for a proper edge coloring with k colors.

    Edges are processed in descending max-endpoint-degree order (ties broken
    by edge id); the i-th processed edge may only take colors 0..min(i, k-1),
    which breaks color permutation symmetry. Every color attempt costs one
    node of the budget; exceeding it raises rather than guessing.
    """
    m = g.edge_count
    if m == 0:
        raise InvalidInputError("graph has no edges")
    if k <= 0:
        return None
    degs = g.degrees
    order = sorted(range(m),
                   key=lambda e: (-max(degs[g.edges[e][0]], degs[g.edges[e][1]]), e))
    vmask = [0] * g.vertex_count
    assigned = [-1] * m
    nodes = 0

    def dfs(i: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        eid = order[i]
        u, v = g.edges[eid]
        forbidden = vmask[u] | vmask[v]
        for col in range(min(i, k - 1) + 1):
            bit = 1 << col
            if forbidden & bit:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("proper edge coloring search", node_budget)
            vmask[u] |= bit
            vmask[v] |= bit
            assigned[eid] = col
            if dfs(i + 1):
                return True
            vmask[u] ^= bit
            vmask[v] ^= bit
            assigned[eid] = -1
        return False

    if dfs(0):
        return EdgeColoring(tuple(assigned), k)
    return None


@dataclass(frozen=True)
class ChromaticIndexResult:
    """Exact chromatic index with a witness coloring using that many colors."""

    chi_prime: int
    witness: EdgeColoring
    vizing_class: int


def chromatic_index_exact(g: Graph,
                          node_budget: int = DEFAULT_NODE_BUDGET) -> ChromaticIndexResult:
    """Exact chromatic index: max_degree if a proper coloring with that many
    colors exists (class 1), else max_degree + 1 (class 2, witnessed by the
    constructive coloring)."""
    if g.edge_count == 0:
        raise InvalidInputError("graph has no edges")
    delta = g.max_degree
    witness = find_proper_k_coloring(g, delta, node_budget)
    if witness is not None:
        return ChromaticIndexResult(delta, witness, 1)
    return ChromaticIndexResult(delta + 1, proper_coloring_delta_plus_one(g), 2)
