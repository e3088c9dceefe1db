"""
Ground-truth triangle enumerators. Every other algorithm in the package is
tested against these two.
"""

from bisect import bisect_right
import itertools

from FPT_Triangles.Graph.graph import Triangle, TriangleSet
from FPT_Triangles.errors import OracleTooLarge


# ------------------------------------------------------------------------------
def enumerate_triples(graph, limit=500) -> TriangleSet:
    """
    Checks every three-vertex subset. Triangles come out in ascending
    lexicographic order.

    Inputs:
    --------
    graph (Graph):
        The input graph.

    limit (int):
        Largest n accepted. Defaults to 500.

    Raises:
    --------
    OracleTooLarge:
        If n > limit.
    """
    n = graph.n
    if n > limit:
        raise OracleTooLarge(n, limit)

    triangles = []
    for a, b in itertools.combinations(range(n), 2):
        # no c completes a triple whose first pair is a non-edge
        if not graph.has_edge(a, b):
            continue
        for c in range(b + 1, n):
            if graph.has_edge(a, c) and graph.has_edge(b, c):
                triangles.append(Triangle(a, b, c))

    return TriangleSet(triangles)


# ------------------------------------------------------------------------------
def enumerate_edge_intersect(graph) -> TriangleSet:
    """
    For every edge {u, v} with u < v emits {u, v, w} for each common neighbor
    w > v, found by merging the two sorted adjacency lists. O(m^1.5).
    """
    triangles = []
    for u, v in graph.edges():
        adj_u = graph.neighbors(u)
        adj_v = graph.neighbors(v)
        i = bisect_right(adj_u, v)
        j = bisect_right(adj_v, v)
        while i < len(adj_u) and j < len(adj_v):
            x, y = adj_u[i], adj_v[j]
            if x == y:
                triangles.append(Triangle(u, v, x))
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1

    return TriangleSet(triangles)
