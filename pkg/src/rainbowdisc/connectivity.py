"""Exact edge connectivity: pairwise max-flow with cut certificates, global
and upper edge connectivity, and Gomory-Hu trees."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .graphs import CutCertificate, Graph, certificate_from_side, is_connected


def _max_flow(g: Graph, s: int, t: int) -> tuple[int, list[bool]]:
    """Unit-capacity max flow by shortest augmenting paths.

    Each undirected edge becomes two opposite arcs of capacity 1 (arc ids
    2*eid and 2*eid+1). Returns the flow value and, per vertex, whether it
    is reachable from s in the final residual network; that reachable set
    is the canonical minimum cut side.
    """
    n = g.vertex_count
    cap = [1] * (2 * g.edge_count)
    value = 0
    while True:
        parent_arc = [-1] * n
        parent_arc[s] = -2
        queue = [s]
        reached_t = False
        for x in queue:
            if reached_t:
                break
            for eid, y in g.adjacency[x]:
                arc = 2 * eid + (0 if g.edges[eid][0] == x else 1)
                if cap[arc] > 0 and parent_arc[y] == -1:
                    parent_arc[y] = arc
                    if y == t:
                        reached_t = True
                        break
                    queue.append(y)
        if not reached_t:
            return value, [parent_arc[v] != -1 for v in range(n)]
        y = t
        while y != s:
            arc = parent_arc[y]
            cap[arc] -= 1
            cap[arc ^ 1] += 1
            eid, direction = divmod(arc, 2)
            y = g.edges[eid][direction]
        value += 1


def local_edge_connectivity(g: Graph, s: int, t: int) -> tuple[int, CutCertificate]:
    """Minimum number of edges separating s from t, with a minimum cut.

    The certificate is canonical: side_s is the set of vertices reachable
    from s in the final residual network.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise InvalidInputError("s and t must differ")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")
    value, side = _max_flow(g, s, t)
    cert = certificate_from_side(
        g, frozenset(v for v in range(g.vertex_count) if side[v]))
    if len(cert.cut_edges) != value:
        raise RuntimeError("max-flow value and min-cut size disagree")
    return value, cert


def global_edge_connectivity(g: Graph) -> int:
    """Minimum over all vertex pairs of the pairwise edge connectivity.

    Fixing one endpoint suffices: the global minimum cut separates vertex 0
    from something.
    """
    if g.vertex_count < 2:
        raise InvalidInputError("graph must have at least two vertices")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")
    return min(_max_flow(g, 0, t)[0] for t in range(1, g.vertex_count))


@dataclass(frozen=True)
class GomoryHuTree:
    """Flow-equivalent tree: the minimum flow value on the unique s-t tree
    path equals the s-t edge connectivity of the original graph.

    parent[0] is None (the root); flow[v] is the value attached to the tree
    edge between v and parent[v] (flow[0] is unused).
    """

    parent: tuple[int | None, ...]
    flow: tuple[int, ...]

    def connectivity(self, s: int, t: int) -> int:
        """Minimum flow value along the s-t tree path."""
        n = len(self.parent)
        if not (0 <= s < n and 0 <= t < n):
            raise InvalidInputError("vertex out of range")
        if s == t:
            raise InvalidInputError("s and t must differ")
        chain_min: dict[int, int | None] = {}
        v: int | None = s
        cur: int | None = None
        while v is not None:
            chain_min[v] = cur
            p = self.parent[v]
            if p is not None:
                cur = self.flow[v] if cur is None else min(cur, self.flow[v])
            v = p
        v = t
        climb: int | None = None
        while v not in chain_min:
            climb = self.flow[v] if climb is None else min(climb, self.flow[v])
            v = self.parent[v]
        candidates = [x for x in (chain_min[v], climb) if x is not None]
        return min(candidates)


def gomory_hu(g: Graph) -> GomoryHuTree:
    """Gomory-Hu tree via Gusfield's construction: n-1 max-flow calls on the
    original graph, no vertex contraction."""
    if g.vertex_count < 1:
        raise InvalidInputError("graph must have at least one vertex")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")
    n = g.vertex_count
    parent: list[int | None] = [None] + [0] * (n - 1)
    flow = [0] * n
    for i in range(1, n):
        p = parent[i]
        assert p is not None
        value, side = _max_flow(g, i, p)
        flow[i] = value
        for j in range(i + 1, n):
            if side[j] and parent[j] == p:
                parent[j] = i
        gp = parent[p]
        if gp is not None and side[gp]:
            # i separates its parent from its grandparent: splice i between them
            parent[i] = gp
            parent[p] = i
            flow[i] = flow[p]
            flow[p] = value
    return GomoryHuTree(tuple(parent), tuple(flow))


def upper_edge_connectivity(g: Graph) -> int:
    """Maximum over all vertex pairs of the pairwise edge connectivity.

    Equals the largest flow value in a Gomory-Hu tree: every tree edge value
    is realized by its endpoints, and no pair can exceed the maximum since
    its connectivity is a minimum over a tree path.
    """
    if g.vertex_count < 2:
        raise InvalidInputError("graph must have at least two vertices")
    tree = gomory_hu(g)
    return max(tree.flow[1:])
