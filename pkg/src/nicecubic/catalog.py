"""Fixed small-graph catalog.

Edge lists are embedded literally; the splicing identities relating them
(prism = K4 spliced with K4, and so on) are verified by the test suite
rather than assumed. The two non-nice vertices of the K3,3-with-triangle
graph are located computationally, not hard-coded.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph
from .nice import nice_vertices


def k4() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> Graph:
    return Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def triangular_prism() -> Graph:
    """Two triangles joined by a perfect matching; the unique non-bipartite
    connected cubic graph on 6 vertices."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def k33_triangle() -> Graph:
    """K3,3 with one vertex expanded into a triangle (K3,3 spliced with K4).

    Vertices 0..1: the remaining size-2 color class; 2..4: the independent
    barrier; 5..7: the triangle.
    """
    return Graph(
        8,
        [
            (0, 2), (0, 3), (0, 4),
            (1, 2), (1, 3), (1, 4),
            (2, 5), (3, 6), (4, 7),
            (5, 6), (5, 7), (6, 7),
        ],
    )


def r8() -> Graph:
    """The 8-vertex graph obtained by splicing the prism with K4."""
    return Graph(
        8,
        [
            (0, 1), (0, 3), (1, 4), (2, 3), (2, 4), (3, 4),
            (0, 5), (1, 6), (2, 7),
            (5, 6), (5, 7), (6, 7),
        ],
    )


def h44() -> Graph:
    """K4,4 minus a perfect matching: the unique 3-connected cubic bipartite
    graph on 8 vertices (uniqueness is established by enumeration in tests)."""
    return Graph(8, [(i, 4 + j) for i in range(4) for j in range(4) if i != j])


@lru_cache(maxsize=1)
def k33_triangle_non_nice() -> tuple[int, int]:
    """The two non-nice vertices of k33_triangle(), found by the definitional
    check at first use."""
    g = k33_triangle()
    report = nice_vertices(g)
    bad = sorted(set(range(g.n)) - report.nice)
    assert len(bad) == 2, "catalog graph must have exactly two non-nice vertices"
    return bad[0], bad[1]


NAMED: dict[str, callable] = {
    "K4": k4,
    "K33": k33,
    "prism": triangular_prism,
    "K33_triangle": k33_triangle,
    "R8": r8,
    "H44": h44,
}


def named_graph(name: str) -> Graph:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(
            f"unknown catalog graph {name!r}; available: {sorted(NAMED)}"
        ) from None
