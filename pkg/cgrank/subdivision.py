"""
Forbidden-vertex graph Q(S̄) and clique-subdivision (topological minor) search.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .cube import CubePoint, PointSet

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class ForbiddenGraph:
    """Hypercube graph induced on the points outside S; vertices are cube indices."""
    n: int
    verts: Tuple[CubePoint, ...]
    edges: Tuple[Pair, ...]
    graph: nx.Graph = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        if self.graph is None:
            g = nx.Graph()
            g.add_nodes_from(p.index for p in self.verts)
            g.add_edges_from(self.edges)
            object.__setattr__(self, "graph", nx.freeze(g))

    @property
    def order(self) -> int:
        return len(self.verts)

    def is_empty(self) -> bool:
        return not self.verts


def forbidden_graph(S: PointSet) -> ForbiddenGraph:
    """Q(S) as a frozen networkx graph: cube edges between points outside S."""
    outside = S.complement()
    indices = [int(i) for i in outside.indices()]
    present = set(indices)
    edges = []
    for v in indices:
        for bit in range(S.n):
            w = v ^ (1 << bit)
            if w > v and w in present:
                edges.append((v, w))
    verts = tuple(CubePoint.from_index(S.n, v) for v in indices)
    return ForbiddenGraph(S.n, verts, tuple(edges))


def max_subdivision_order(G: ForbiddenGraph) -> int:
    """
    Largest t such that G contains a subdivision of K_{t+1}.

    Graphs without an edge (including the empty graph) give 0. The search runs
    downward from the largest t the degree sequence allows.
    """
    g = G.graph
    if g.number_of_edges() == 0:
        return 0
    degrees = sorted((d for _, d in g.degree()), reverse=True)
    # t+1 branch vertices of degree >= t are needed
    upper = max(t for t in range(len(degrees)) if degrees[t] >= t)
    upper = min(upper, G.n)
    for t in range(upper, 1, -1):
        if contains_clique_subdivision(g, t + 1):
            logger.debug(f"K_{t + 1} subdivision found in a graph on {g.number_of_nodes()} vertices")
            return t
    return 1


def contains_clique_subdivision(g: nx.Graph, k: int) -> bool:
    """True iff g contains a subdivision of K_k."""
    if k <= 1:
        return g.number_of_nodes() >= k
    if k == 2:
        return g.number_of_edges() > 0
    candidates = sorted(v for v, d in g.degree() if d >= k - 1)
    if len(candidates) < k:
        return False
    for branch in itertools.combinations(candidates, k):
        if _route_all_pairs(g, branch):
            return True
    return False


def find_clique_subdivision(g: nx.Graph, k: int) -> Optional[Dict[Pair, List[int]]]:
    """Branch-pair -> path mapping of some K_k subdivision, or None."""
    if k < 3:
        raise ValueError("explicit witnesses are only produced for k >= 3")
    candidates = sorted(v for v, d in g.degree() if d >= k - 1)
    for branch in itertools.combinations(candidates, k):
        routes: Dict[Pair, List[int]] = {}
        if _route_all_pairs(g, branch, routes):
            return routes
    return None


def _route_all_pairs(g: nx.Graph, branch: Sequence[int], routes: Optional[Dict] = None) -> bool:
    pairs = list(itertools.combinations(branch, 2))
    # adjacent branch pairs are routed over their edge first
    pairs.sort(key=lambda uv: (not g.has_edge(*uv), uv))
    return _backtrack(g, frozenset(branch), pairs, 0, set(), routes)


def _feasible(g: nx.Graph, branch: FrozenSet[int], pairs: List[Pair], start: int, used: Set[int]) -> bool:
    """Prune: each branch vertex keeps enough free neighbours and every open pair stays connected."""
    remaining = pairs[start:]
    need: Dict[int, int] = {}
    open_pairs = set()
    for u, v in remaining:
        need[u] = need.get(u, 0) + 1
        need[v] = need.get(v, 0) + 1
        open_pairs.add(frozenset((u, v)))
    for b, count in need.items():
        free = 0
        for w in g.neighbors(b):
            if w in used:
                continue
            if w in branch and frozenset((b, w)) not in open_pairs:
                continue
            free += 1
        if free < count:
            return False
    for u, v in remaining:
        blocked = used | (branch - {u, v})
        view = nx.restricted_view(g, blocked, [])
        if not nx.has_path(view, u, v):
            return False
    return True


def _backtrack(
    g: nx.Graph,
    branch: FrozenSet[int],
    pairs: List[Pair],
    i: int,
    used: Set[int],
    routes: Optional[Dict],
) -> bool:
    if i == len(pairs):
        return True
    if not _feasible(g, branch, pairs, i, used):
        return False
    u, v = pairs[i]
    blocked = used | (branch - {u, v})
    view = nx.restricted_view(g, blocked, [])
    for path in nx.shortest_simple_paths(view, u, v):
        interior = set(path[1:-1])
        used |= interior
        if routes is not None:
            routes[(u, v)] = path
        if _backtrack(g, branch, pairs, i + 1, used, routes):
            return True
        used -= interior
        if routes is not None:
            routes.pop((u, v), None)
    return False

