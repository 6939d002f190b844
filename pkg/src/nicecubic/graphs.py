"""Immutable multigraph container and structural primitives.

Graphs live on vertex ids 0..n-1. Parallel edges are first class (vertex-set
contractions create them); loops are rejected everywhere. All operations are
pure functions over immutable values, so evaluating them in parallel across
distinct graphs is safe.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import DomainError

VertexSet = frozenset[int]


class Graph:
    """Undirected multigraph on vertices 0..n-1, immutable after construction.

    Edges are normalized to (min, max) pairs and stored sorted, so an edge is
    identified by its index into ``edges``. Equality and hashing compare the
    vertex count and the edge multiset.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not supported")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor lists, sorted, with multiplicity."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[VertexSet, ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex list of (edge index, other endpoint), sorted by index."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((i, v))
            inc[v].append((i, u))
        return tuple(tuple(entry) for entry in inc)

    @cached_property
    def simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    @cached_property
    def is_cubic(self) -> bool:
        return self.n > 0 and all(d == 3 for d in self.degrees)

    def multiplicity(self, u: int, v: int) -> int:
        return self._multiplicity.get((u, v) if u < v else (v, u), 0)

    @cached_property
    def _multiplicity(self) -> dict[tuple[int, int], int]:
        return dict(Counter(self.edges))

    def closed_neighborhood(self, u: int) -> VertexSet:
        return self.neighbor_sets[u] | {u}


@dataclass(frozen=True)
class Bipartition:
    a: VertexSet
    b: VertexSet


@dataclass(frozen=True)
class EdgeCut:
    """Edge cut of a graph: the edges with exactly one end in ``side``.

    ``edge_indices`` index into the owning graph's edge tuple. ``nontrivial``
    means both sides have at least two vertices.
    """

    side: VertexSet
    edge_indices: tuple[int, ...]
    nontrivial: bool


@dataclass(frozen=True)
class ConnectivityProfile:
    connected: bool
    two_connected: bool
    three_connected: bool
    cubic: bool
    bipartition: Bipartition | None


@dataclass(frozen=True)
class Contraction:
    """Result of contracting a vertex set into the single vertex ``merged``.

    ``old_to_new`` maps every vertex outside the contracted set to its id in
    the new graph, so witnesses computed on the contraction can be pulled
    back to the host.
    """

    graph: Graph
    old_to_new: dict[int, int]
    merged: int


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of g minus the given vertices, ordered by smallest member."""
    removed_set = set(removed)
    seen = set(removed_set)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbor_sets[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(connected_components(g)) == 1


def _connected_ignoring_edges(g: Graph, banned: tuple[int, ...]) -> bool:
    banned_set = set(banned)
    if g.n == 0:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for i, y in g.incidence[x]:
            if i not in banned_set and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


def bipartition(g: Graph) -> Bipartition | None:
    """Two-coloring of g, or None if an odd cycle exists.

    Deterministic: within each component the lowest vertex goes to side a.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbor_sets[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return Bipartition(
        a=frozenset(v for v in range(g.n) if color[v] == 0),
        b=frozenset(v for v in range(g.n) if color[v] == 1),
    )


def _vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    # Brute force over deletion sets of size < k; adequate at desk scale.
    if not is_connected(g):
        return False
    if g.n <= k:
        return False
    for size in range(1, k):
        for cut in combinations(range(g.n), size):
            if len(connected_components(g, cut)) > 1:
                return False
    return True


def _edge_connectivity_at_least(g: Graph, k: int) -> bool:
    if not is_connected(g):
        return False
    m = len(g.edges)
    for size in range(1, k):
        for banned in combinations(range(m), size):
            if not _connected_ignoring_edges(g, banned):
                return False
    return True


def connectivity_profile(g: Graph) -> ConnectivityProfile:
    """Vertex-connectivity classes up to 3, cubic flag and bipartition.

    For simple cubic graphs the 2-/3-connectivity answers are computed through
    edge connectivity (for cubic graphs vertex and edge connectivity agree,
    and edge cuts are cheaper to sweep).
    """
    connected = is_connected(g)
    if g.simple and g.is_cubic and g.n >= 4:
        two = connected and _edge_connectivity_at_least(g, 2)
        three = two and _edge_connectivity_at_least(g, 3)
    else:
        two = g.n >= 3 and _vertex_connectivity_at_least(g, 2)
        three = g.n >= 4 and two and _vertex_connectivity_at_least(g, 3)
    return ConnectivityProfile(
        connected=connected,
        two_connected=two,
        three_connected=three,
        cubic=g.is_cubic,
        bipartition=bipartition(g),
    )


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by s, relabeled to 0..|s|-1.

    Returns (subgraph, old_ids) where old_ids[new] is the host vertex the new
    vertex came from (old ids in increasing order).
    """
    vs = sorted(set(s))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertex set not contained in graph")
    old_to_new = {old: new for new, old in enumerate(vs)}
    keep = set(vs)
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in g.edges
        if u in keep and v in keep
    ]
    return Graph(len(vs), edges), tuple(vs)


def contract(g: Graph, x: Iterable[int]) -> Contraction:
    """Contract the vertex set x into a single vertex.

    Edges inside x vanish, edges crossing the cut survive (parallel edges
    allowed). Vertices outside x keep their relative order at ids 0..k-1; the
    merged vertex gets id k.
    """
    xs = set(x)
    if not xs:
        raise ValueError("cannot contract an empty vertex set")
    if not all(0 <= v < g.n for v in xs):
        raise ValueError("vertex set not contained in graph")
    if len(xs) == g.n:
        raise ValueError("cannot contract the whole vertex set")
    outside = sorted(v for v in range(g.n) if v not in xs)
    old_to_new = {old: new for new, old in enumerate(outside)}
    merged = len(outside)
    edges = []
    for u, v in g.edges:
        u_in, v_in = u in xs, v in xs
        if u_in and v_in:
            continue
        edges.append((old_to_new.get(u, merged), old_to_new.get(v, merged)))
    return Contraction(Graph(merged + 1, edges), old_to_new, merged)


def edge_cut(g: Graph, side: Iterable[int]) -> EdgeCut:
    """The cut determined by a side, with its edge indices."""
    xs = frozenset(side)
    if not xs or len(xs) == g.n:
        raise ValueError("cut side must be a nonempty proper vertex subset")
    indices = tuple(
        i for i, (u, v) in enumerate(g.edges) if (u in xs) != (v in xs)
    )
    nontrivial = len(xs) >= 2 and g.n - len(xs) >= 2
    return EdgeCut(side=xs, edge_indices=indices, nontrivial=nontrivial)


def enumerate_cuts(g: Graph, k: int, nontrivial_only: bool = False) -> list[EdgeCut]:
    """All edge cuts with exactly k edges, one representative per {X, X-bar}.

    The representative side is the one containing vertex 0. Works by sweeping
    k-subsets F of edges: F is a cut of some side iff the components of G - F
    admit a 2-coloring in which every F edge crosses; each 2-coloring of the
    F-component multigraph yields one side.
    """
    if not is_connected(g):
        raise DomainError("cut enumeration requires a connected graph")
    if k < 1:
        raise ValueError("cut size must be positive")
    m = len(g.edges)
    found: list[EdgeCut] = []
    for subset in combinations(range(m), k):
        comp_id = _component_ids_without_edges(g, subset)
        t = max(comp_id) + 1
        if t < 2:
            continue
        links = []
        ok = True
        for i in subset:
            u, v = g.edges[i]
            cu, cv = comp_id[u], comp_id[v]
            if cu == cv:
                ok = False
                break
            links.append((cu, cv))
        if not ok:
            continue
        colorings = _cross_colorings(t, links, comp_id[0])
        for coloring in colorings:
            side = frozenset(v for v in range(g.n) if coloring[comp_id[v]])
            cut = EdgeCut(
                side=side,
                edge_indices=subset,
                nontrivial=len(side) >= 2 and g.n - len(side) >= 2,
            )
            if not nontrivial_only or cut.nontrivial:
                found.append(cut)
    found.sort(key=lambda c: (c.edge_indices, sorted(c.side)))
    return found


def _component_ids_without_edges(g: Graph, banned: tuple[int, ...]) -> list[int]:
    banned_set = set(banned)
    comp_id = [-1] * g.n
    next_id = 0
    for start in range(g.n):
        if comp_id[start] != -1:
            continue
        comp_id[start] = next_id
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for i, y in g.incidence[x]:
                if i not in banned_set and comp_id[y] == -1:
                    comp_id[y] = next_id
                    queue.append(y)
        next_id += 1
    return comp_id


def _cross_colorings(t: int, links: list[tuple[int, int]], anchor: int) -> list[list[bool]]:
    """2-colorings of components 0..t-1 in which every link crosses.

    The connected part containing ``anchor`` is pinned to color True, so each
    {X, X-bar} pair appears once, with the anchor's side selected.
    """
    adj: list[list[int]] = [[] for _ in range(t)]
    for a, b in links:
        adj[a].append(b)
        adj[b].append(a)
    color = [-1] * t
    parts: list[list[int]] = []
    for start in range(t):
        if color[start] != -1:
            continue
        color[start] = 0
        part = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    part.append(y)
                    queue.append(y)
                elif color[y] == color[x]:
                    return []
        parts.append(part)
    anchor_part = next(idx for idx, part in enumerate(parts) if anchor in part)
    free = [idx for idx in range(len(parts)) if idx != anchor_part]
    out = []
    for bits in range(1 << len(free)):
        assign = [False] * t
        for node in parts[anchor_part]:
            assign[node] = color[node] == color[anchor]
        for pos, idx in enumerate(free):
            flip = bool(bits >> pos & 1)
            for node in parts[idx]:
                assign[node] = (color[node] == 0) != flip
        out.append(assign)
    return out
