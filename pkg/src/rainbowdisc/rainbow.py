"""Rainbow cut search, rainbow disconnection checking, the exact rainbow
disconnection number, and the cubic-graph decision and certification
machinery.

A cut is rainbow when its edges carry pairwise distinct colors. A coloring
rainbow-disconnects a graph when every vertex pair has a rainbow cut
separating it; the rainbow disconnection number is the least number of
colors achieving that. It always sits between the largest pairwise edge
connectivity and max_degree + 1 (a proper coloring of the star of a
max-degree endpoint of each pair is a rainbow cut).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coloring import chromatic_index_exact, is_proper, proper_coloring_delta_plus_one
from .connectivity import global_edge_connectivity, upper_edge_connectivity
from .errors import DEFAULT_NODE_BUDGET, BudgetExceededError, InvalidInputError
from .graphs import (CutCertificate, EdgeColoring, Graph, certificate_from_side,
                     components, is_connected, is_rainbow, reachable_from)

DEFAULT_SMALL_PALETTE = 6


def _check_colored(g: Graph, c: EdgeColoring) -> None:
    if len(c.colors) != g.edge_count:
        raise InvalidInputError("coloring length does not match edge count")


def _check_pair(g: Graph, s: int, t: int) -> None:
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise InvalidInputError("s and t must differ")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")


class _Budget:
    """Decrementing node counter; raises once exhausted."""

    __slots__ = ("remaining", "total", "label")

    def __init__(self, total: int, label: str):
        self.remaining = total
        self.total = total
        self.label = label

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceededError(self.label, self.total)


def find_rainbow_cut_fixed_k(g: Graph, c: EdgeColoring, s: int, t: int,
                             k: int) -> CutCertificate | None:
    """Rainbow s-t cut search for colorings with at most k distinct colors.

    A rainbow cut picks at most one edge per color class, so all candidate
    cuts are enumerated as one choice (or skip) per class. The first
    separating candidate is minimized to the boundary of s's component,
    which stays rainbow because it is a subset.
    """
    _check_colored(g, c)
    _check_pair(g, s, t)
    if k < 1:
        raise InvalidInputError("k must be positive")
    if c.color_count > k:
        raise InvalidInputError(
            f"coloring uses {c.color_count} distinct colors, more than k={k}")
    classes: dict[int, list[int]] = {}
    for eid, col in enumerate(c.colors):
        classes.setdefault(col, []).append(eid)
    option_lists: list[list[int | None]] = [
        [None] + classes[col] for col in sorted(classes)]
    for combo in itertools.product(*option_lists):
        cut = frozenset(e for e in combo if e is not None)
        if not cut:
            continue
        side = reachable_from(g, s, cut)
        if t in side:
            continue
        cert = certificate_from_side(g, side)
        if not is_rainbow(c, cert.cut_edges):
            raise RuntimeError("minimized cut lost rainbowness")
        return cert
    return None


def find_rainbow_cut_exact(g: Graph, c: EdgeColoring, s: int, t: int,
                           node_budget: int = DEFAULT_NODE_BUDGET) -> CutCertificate | None:
    """Complete rainbow s-t cut search for arbitrary palettes.

    Branches over vertex bipartitions (each undecided vertex joins s's or
    t's side), tracking color multiplicities among crossing edges and
    pruning as soon as any color repeats. Complete because the boundary of
    the s side of any rainbow cut is itself a rainbow s-t cut.
    """
    _check_colored(g, c)
    _check_pair(g, s, t)
    n = g.vertex_count
    budget = _Budget(node_budget, "rainbow cut search")
    side = [-1] * n
    counts = [0] * max(c.palette, 1)
    colors = c.colors
    adjacency = g.adjacency
    collisions = 0

    def place(v: int, x: int) -> list[int]:
        nonlocal collisions
        bumped: list[int] = []
        for eid, w in adjacency[v]:
            if side[w] == 1 - x:
                col = colors[eid]
                counts[col] += 1
                if counts[col] == 2:
                    collisions += 1
                bumped.append(col)
        side[v] = x
        return bumped

    def unplace(v: int, bumped: list[int]) -> None:
        nonlocal collisions
        side[v] = -1
        for col in bumped:
            if counts[col] == 2:
                collisions -= 1
            counts[col] -= 1

    place(s, 0)
    place(t, 1)
    order = [v for v in range(n) if v != s and v != t]

    def dfs(i: int) -> frozenset[int] | None:
        if i == len(order):
            return frozenset(v for v in range(n) if side[v] == 0)
        v = order[i]
        for x in (0, 1):
            budget.spend()
            bumped = place(v, x)
            result = dfs(i + 1) if collisions == 0 else None
            unplace(v, bumped)
            if result is not None:
                return result
        return None

    if collisions:
        return None
    found = dfs(0)
    if found is None:
        return None
    cert = certificate_from_side(g, found)
    if not is_rainbow(c, cert.cut_edges):
        raise RuntimeError("search returned a non-rainbow cut")
    return cert


@dataclass(frozen=True)
class RainbowDisconnectionCheck:
    """Outcome of checking every vertex pair for a rainbow cut."""

    ok: bool
    certificates: dict[tuple[int, int], CutCertificate]
    failing_pair: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.ok


def is_rainbow_disconnected(g: Graph, c: EdgeColoring, *,
                            small_palette_threshold: int = DEFAULT_SMALL_PALETTE,
                            node_budget: int = DEFAULT_NODE_BUDGET) -> RainbowDisconnectionCheck:
    """Check that every vertex pair has a rainbow cut under c.

    Pairs are visited in lexicographic order and the first failure is
    reported. Colorings with few distinct colors use the per-class
    enumeration; larger palettes use the bipartition search.
    """
    _check_colored(g, c)
    if g.vertex_count < 2:
        raise InvalidInputError("graph must have at least two vertices")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")
    distinct = c.color_count
    certificates: dict[tuple[int, int], CutCertificate] = {}
    for s in range(g.vertex_count):
        for t in range(s + 1, g.vertex_count):
            if distinct <= small_palette_threshold:
                cert = find_rainbow_cut_fixed_k(g, c, s, t, distinct)
            else:
                cert = find_rainbow_cut_exact(g, c, s, t, node_budget)
            if cert is None:
                return RainbowDisconnectionCheck(False, certificates, (s, t))
            certificates[(s, t)] = cert
    return RainbowDisconnectionCheck(True, certificates, None)


def _search_disconnection_coloring(g: Graph, k: int, budget: _Budget) -> EdgeColoring | None:
    """Exhaustive search for a k-color rainbow disconnection coloring.

    Only vertex bipartitions with at most k crossing edges can ever yield a
    rainbow cut, so exactly those are precomputed (canonically: vertex 0 on
    the in-side). During the edge-by-edge color assignment each candidate
    bipartition tracks the colors seen on its crossing edges; once a color
    repeats the candidate is dead for the rest of the branch, and when some
    vertex pair runs out of live candidates the branch is abandoned. Edge i
    may only take colors 0..min(i, k-1), breaking color symmetry.
    """
    n, m = g.vertex_count, g.edge_count
    budget.spend(1 << (n - 1))
    pairs = [(s, t) for s in range(n) for t in range(s + 1, n)]
    subset_pairs: list[list[int]] = []
    edge_subsets: list[list[int]] = [[] for _ in range(m)]
    alive = [0] * len(pairs)
    edges = g.edges
    for mask in range((1 << (n - 1)) - 1):
        inside = [True] + [bool(mask >> b & 1) for b in range(n - 1)]
        crossing = [eid for eid, (u, v) in enumerate(edges) if inside[u] != inside[v]]
        if len(crossing) > k:
            continue
        sid = len(subset_pairs)
        members = []
        for pid, (s, t) in enumerate(pairs):
            if inside[s] != inside[t]:
                members.append(pid)
                alive[pid] += 1
        subset_pairs.append(members)
        for eid in crossing:
            edge_subsets[eid].append(sid)
    if not all(alive):
        return None

    smask = [0] * len(subset_pairs)
    scoll = [False] * len(subset_pairs)
    assigned = [0] * m

    def dfs(i: int) -> bool:
        if i == m:
            return True
        for col in range(min(i, k - 1) + 1):
            budget.spend()
            bit = 1 << col
            dead = False
            trail: list[tuple[int, int]] = []
            for sid in edge_subsets[i]:
                if scoll[sid]:
                    continue
                if smask[sid] & bit:
                    scoll[sid] = True
                    trail.append((sid, -1))
                    for pid in subset_pairs[sid]:
                        alive[pid] -= 1
                        if alive[pid] == 0:
                            dead = True
                else:
                    smask[sid] |= bit
                    trail.append((sid, bit))
            assigned[i] = col
            if not dead and dfs(i + 1):
                return True
            for sid, b in trail:
                if b < 0:
                    scoll[sid] = False
                    for pid in subset_pairs[sid]:
                        alive[pid] += 1
                else:
                    smask[sid] ^= b
        return False

    if dfs(0):
        return EdgeColoring(tuple(assigned), k)
    return None


@dataclass(frozen=True)
class RdResult:
    """Exact rainbow disconnection number with a witness coloring and one
    rainbow cut certificate per vertex pair."""

    rd_value: int
    witness: EdgeColoring
    per_pair_cuts: dict[tuple[int, int], CutCertificate]


def rd_exact(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> RdResult:
    """Exact rainbow disconnection number by increasing-k exhaustive search.

    k starts at the largest pairwise edge connectivity (a lower bound: some
    pair needs that many cut edges, all distinctly colored) and ends at
    max_degree + 1, where the constructive proper coloring always works, so
    no search is needed at the top level. Intended for small graphs; the
    search is exhaustive per level.
    """
    if g.vertex_count < 2:
        raise InvalidInputError("graph must have at least two vertices")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")
    lo = upper_edge_connectivity(g)
    hi = g.max_degree + 1
    budget = _Budget(node_budget, "rainbow disconnection number search")
    value, witness = hi, None
    for k in range(lo, hi):
        found = _search_disconnection_coloring(g, k, budget)
        if found is not None:
            value, witness = k, found
            break
    if witness is None:
        witness = proper_coloring_delta_plus_one(g)
    check = is_rainbow_disconnected(g, witness, node_budget=node_budget)
    if not check.ok:
        raise RuntimeError("witness coloring failed verification")
    return RdResult(value, witness, check.certificates)


@dataclass(frozen=True)
class CubicRdDecision:
    """Decision for 3-edge-connected cubic graphs: rd is 3 or 4."""

    rd_value: int
    witness: EdgeColoring


def decide_rd_cubic(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CubicRdDecision:
    """Rainbow disconnection number of a 3-edge-connected cubic graph.

    It is 3 exactly when the graph has a proper 3-edge-coloring, and 4
    otherwise; the witness is the corresponding proper coloring (proper
    colorings rainbow-disconnect via vertex stars, and connectivity 3 rules
    out anything smaller).
    """
    if g.vertex_count == 0 or any(d != 3 for d in g.degrees):
        raise InvalidInputError("graph is not cubic")
    if not is_connected(g) or global_edge_connectivity(g) < 3:
        raise InvalidInputError("graph is not 3-edge-connected")
    result = chromatic_index_exact(g, node_budget)
    return CubicRdDecision(result.chi_prime, result.witness)


@dataclass(frozen=True)
class SplitPair:
    """The two colored graphs obtained by splitting along a rainbow 3-cut.

    Each part keeps one component's vertices (relabeled in ascending order)
    plus one fresh vertex standing in for the removed side, joined by the
    three cut edges with their original colors. new_vertex_1 and
    new_vertex_2 are the fresh vertices' local ids.
    """

    part_1: tuple[Graph, EdgeColoring]
    part_2: tuple[Graph, EdgeColoring]
    new_vertex_1: int
    new_vertex_2: int


def _attach_side(g: Graph, c: EdgeColoring, comp: set[int],
                 cut_ids: list[int]) -> tuple[Graph, EdgeColoring, int]:
    order = sorted(comp)
    local = {v: i for i, v in enumerate(order)}
    fresh = len(order)
    edges: list[tuple[int, int]] = []
    colors: list[int] = []
    for eid, (u, v) in enumerate(g.edges):
        if u in comp and v in comp:
            edges.append((local[u], local[v]))
            colors.append(c.colors[eid])
    for eid in cut_ids:
        u, v = g.edges[eid]
        inside = u if u in comp else v
        edges.append((local[inside], fresh))
        colors.append(c.colors[eid])
    return Graph(fresh + 1, tuple(edges)), EdgeColoring(tuple(colors), c.palette), fresh


def split_along_rainbow_cut(g: Graph, c: EdgeColoring,
                            cut: tuple[int, ...] | list[int] | frozenset[int]) -> SplitPair:
    """Split g along a rainbow 3-edge cut with pairwise disjoint endpoints
    whose removal leaves exactly two components, each cut edge crossing them.

    Part 1 holds the component containing the smallest vertex id. Each
    part's fresh vertex has degree 3 with the three distinct cut colors, so
    properness of both parts at every shared vertex matches properness in g.
    """
    _check_colored(g, c)
    cut_ids = sorted(set(cut))
    if len(cut_ids) != 3:
        raise InvalidInputError("cut must consist of exactly three distinct edges")
    g.check_edge_ids(cut_ids)
    if not is_rainbow(c, cut_ids):
        raise InvalidInputError("cut is not rainbow")
    endpoints = [v for eid in cut_ids for v in g.edges[eid]]
    if len(set(endpoints)) != 6:
        raise InvalidInputError("cut edges share a vertex")
    comps = components(g, cut_ids)
    if len(comps) != 2:
        raise InvalidInputError(
            f"removing the cut yields {len(comps)} components, expected 2")
    comp1, comp2 = set(comps[0]), set(comps[1])
    for eid in cut_ids:
        u, v = g.edges[eid]
        if (u in comp1) == (v in comp1):
            raise InvalidInputError(f"cut edge {eid} does not cross the two components")
    g1, c1, x1 = _attach_side(g, c, comp1, cut_ids)
    g2, c2, x2 = _attach_side(g, c, comp2, cut_ids)
    return SplitPair((g1, c1), (g2, c2), x1, x2)


def _smallest_splitting_cut(g: Graph, c: EdgeColoring) -> tuple[int, int, int] | None:
    """Lexicographically smallest edge-id triple that is a rainbow cut with
    pairwise disjoint endpoints splitting g into exactly two components."""
    for trio in itertools.combinations(range(g.edge_count), 3):
        endpoints = {v for eid in trio for v in g.edges[eid]}
        if len(endpoints) != 6:
            continue
        if not is_rainbow(c, trio):
            continue
        comps = components(g, trio)
        if len(comps) != 2:
            continue
        comp1 = set(comps[0])
        if all((g.edges[eid][0] in comp1) != (g.edges[eid][1] in comp1)
               for eid in trio):
            return trio
    return None


def certify_rd3_coloring_proper(g: Graph, c: EdgeColoring, *,
                                node_budget: int = DEFAULT_NODE_BUDGET,
                                max_splits: int = 10000) -> bool:
    """Certify that a 3-color rainbow disconnection coloring of a
    3-edge-connected cubic graph is proper, without checking properness of g
    directly.

    Recursively splits along the lexicographically smallest rainbow 3-cut
    whose edges are pairwise non-adjacent and whose removal leaves exactly
    two components (both nontrivial: in a cubic graph three pairwise
    non-adjacent edges cannot isolate a vertex). Graphs with no such cut are
    terminal and are checked for properness directly. Every original vertex
    survives in exactly one terminal graph with its incident colors intact,
    and each fresh vertex is properly colored by rainbowness of its cut, so
    the verdict transfers to g.
    """
    if g.vertex_count == 0 or any(d != 3 for d in g.degrees):
        raise InvalidInputError("graph is not cubic")
    if not is_connected(g) or global_edge_connectivity(g) < 3:
        raise InvalidInputError("graph is not 3-edge-connected")
    _check_colored(g, c)
    if c.color_count > 3:
        raise InvalidInputError("coloring uses more than 3 distinct colors")
    check = is_rainbow_disconnected(g, c, node_budget=node_budget)
    if not check.ok:
        raise InvalidInputError(
            f"not a rainbow disconnection coloring: pair {check.failing_pair} "
            "has no rainbow cut")
    splits = 0
    stack: list[tuple[Graph, EdgeColoring]] = [(g, c)]
    while stack:
        h, hc = stack.pop()
        cut = _smallest_splitting_cut(h, hc)
        if cut is None:
            if not is_proper(h, hc):
                return False
            continue
        splits += 1
        if splits > max_splits:
            raise BudgetExceededError("rainbow cut decomposition", max_splits)
        pair = split_along_rainbow_cut(h, hc, cut)
        for part, pcol in (pair.part_1, pair.part_2):
            if any(d != 3 for d in part.degrees) or global_edge_connectivity(part) < 3:
                raise RuntimeError("split produced a part that is not cubic and "
                                   "3-edge-connected")
            stack.append((part, pcol))
    return True
