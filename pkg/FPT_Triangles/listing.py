"""
Low-level listing routines shared by the kernels and the solvers.
"""

import logging

from FPT_Triangles.Graph.graph import Triangle
from FPT_Triangles.Graph.structure import degeneracy_ordering


# ------------------------------------------------------------------------------
def list_by_degeneracy(graph, ordering=None):
    """
    Chiba-Nishizeki forward listing over a degeneracy ordering.

    Every triangle x <_o y <_o z is found exactly once, from x through y:
    mark the later neighbors of x, then test the later neighbors of each
    marked y. With degeneracy d this costs O(m * d).

    Inputs:
    --------
    graph (Graph):
        The input graph.

    ordering (DegeneracyOrdering, optional):
        Precomputed ordering of graph. Computed when None.

    Returns:
    --------
    list of Triangle
    """
    if ordering is None:
        ordering = degeneracy_ordering(graph)
    position = ordering.position
    later = [
        [u for u in graph.neighbors(v) if position[u] > position[v]] for v in graph.vertices()
    ]

    marked = [False] * graph.n
    triangles = []
    for x in ordering.order:
        later_x = later[x]
        if len(later_x) < 2:
            continue
        for y in later_x:
            marked[y] = True
        for y in later_x:
            for z in later[y]:
                if marked[z]:
                    triangles.append(Triangle.of(x, y, z))
        for y in later_x:
            marked[y] = False

    logging.debug(f"Forward listing found {len(triangles)} triangles (degeneracy {ordering.degeneracy})")

    return triangles


# ------------------------------------------------------------------------------
def list_touching(graph, K):
    """
    Triangles with at least one vertex in K, each exactly once.

    For each v in K (ascending) all neighbors of v are marked and every edge
    {u, w} with both ends marked closes a triangle {v, u, w}. It is kept only
    if v is the smallest K-vertex of the triangle. O(m * |K|).
    """
    K = frozenset(K)
    marked = [False] * graph.n
    triangles = []
    for v in sorted(K):
        neighbors = graph.neighbors(v)
        if len(neighbors) < 2:
            continue
        for u in neighbors:
            marked[u] = True
        for u, w in graph.edges():
            if not (marked[u] and marked[w]):
                continue
            if (u in K and u < v) or (w in K and w < v):
                continue
            triangles.append(Triangle.of(v, u, w))
        for u in neighbors:
            marked[u] = False

    return triangles
