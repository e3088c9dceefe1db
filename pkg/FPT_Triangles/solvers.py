"""
End-to-end triangle enumeration algorithms parameterized by degeneracy,
feedback edge number, distance to d-degenerate graphs and distance to
bipartite graphs, chordal graphs and cographs.

Every solver returns a TriangleSet in the ids of its input graph.
"""

import itertools
import logging

from FPT_Triangles.Graph.cotree import CotreeLeaf, build_cotree, cograph_deletion_set
from FPT_Triangles.Graph.graph import Triangle, TriangleSet
from FPT_Triangles.Graph.structure import perfect_elimination_ordering, two_coloring
from FPT_Triangles.errors import TreeGraphMismatch
from FPT_Triangles.kernels import (
    require_degenerate_set,
    dtdd_kernelize,
    fes_kernelize,
    solve_via_kernel,
)
from FPT_Triangles.listing import list_by_degeneracy, list_touching


# ------------------------------------------------------------------------------
def solve_degeneracy(graph) -> TriangleSet:
    return TriangleSet(list_by_degeneracy(graph))


# ------------------------------------------------------------------------------
def solve_fes(graph) -> TriangleSet:
    """
    Feedback edge kernel, edge-intersect listing on the kernel, expansion.
    O(k^1.5 + n + m).
    """
    return solve_via_kernel(fes_kernelize(graph))


# ------------------------------------------------------------------------------
def solve_dtdd(graph, deletion_set, limit=20) -> TriangleSet:
    """
    Deletion-set kernel with at most |D| + 2^|D| + 3 vertices, listed and
    expanded. Refuses |D| > limit.
    """
    return solve_via_kernel(dtdd_kernelize(graph, deletion_set, limit=limit))


# ------------------------------------------------------------------------------
def solve_dtdd_maxdeg(graph, deletion_set) -> TriangleSet:
    """
    Enumerates triangles in O(|D| * Delta_D^2 + n * d^2) time.

    1. Triangles of G - D by forward listing over a degeneracy ordering.
    2. Rank the vertices of D first. For each u in D, every pair v, w of
       neighbors with rank u < v < w and {v, w} an edge closes a triangle;
       u is its lowest-ranked vertex, so it is emitted once.

    Raises:
    --------
    NotDeletionSet:
        If G - D is not d-degenerate.
    """
    require_degenerate_set(graph, deletion_set)
    D = sorted(deletion_set.vertices)

    inner = list_by_degeneracy(graph.without_vertices(D))

    rank = [0] * graph.n
    d_set = set(D)
    order = D + [v for v in graph.vertices() if v not in d_set]
    for i, v in enumerate(order):
        rank[v] = i

    touching = []
    for u in D:
        later = sorted((v for v in graph.neighbors(u) if rank[v] > rank[u]), key=rank.__getitem__)
        for i, v in enumerate(later):
            v_neighbors = graph.neighbor_set(v)
            for w in later[i + 1 :]:
                if w in v_neighbors:
                    touching.append(Triangle.of(u, v, w))

    logging.info(f"Max-degree solver: {len(inner)} triangles in G - D, {len(touching)} touching D")

    return TriangleSet(inner + touching)


# ------------------------------------------------------------------------------
def triangles_touching(graph, K) -> TriangleSet:
    """
    Triangles with at least one vertex in K, each once. O(m * |K|).
    """
    return TriangleSet(list_touching(graph, K))


# ------------------------------------------------------------------------------
def solve_with_deletion_set(graph, deletion_set, inner) -> TriangleSet:
    """
    Triangles touching K, plus inner(G - K). The two parts are disjoint.

    Inputs:
    --------
    graph (Graph):
        The input graph.

    deletion_set (DeletionSet or iterable of int):
        K. G - K must belong to the class `inner` handles.

    inner (callable):
        Graph -> iterable of Triangle, enumerating G - K. It raises the
        class's precondition error when G - K is not in the class.
    """
    K = getattr(deletion_set, "vertices", deletion_set)
    K = frozenset(K)

    touching = list_touching(graph, K)
    remaining = list(inner(graph.without_vertices(K)))

    triangles = TriangleSet(touching + remaining)
    assert not triangles.has_duplicates(), "the two phases overlap"
    logging.info(
        f"Deletion set of size {len(K)}: {len(touching)} triangles touch K, "
        f"{len(remaining)} in G - K"
    )

    return triangles


################################################################################
#
# Class solvers for G - K
#
################################################################################


def enumerate_bipartite(graph):
    """
    Bipartite graphs are triangle-free. The 2-coloring only checks the input.
    """
    two_coloring(graph)
    return []


# ------------------------------------------------------------------------------
def enumerate_chordal(graph):
    """
    Walks a perfect elimination ordering: the later neighbors of v form a
    clique, so every pair of them closes a triangle with v. Processed
    vertices are skipped instead of deleted. O(#T + n + m).

    Raises:
    --------
    NotChordal
    """
    ordering = perfect_elimination_ordering(graph)
    processed = [False] * graph.n
    triangles = []
    for v in ordering:
        later = [u for u in graph.neighbors(v) if not processed[u]]
        for x, y in itertools.combinations(later, 2):
            triangles.append(Triangle.of(v, x, y))
        processed[v] = True

    return triangles


# ------------------------------------------------------------------------------
def enumerate_cograph(graph):
    """
    Raises:
    --------
    NotCograph
    """
    return list(cotree_dp(build_cotree(graph), graph))


# ------------------------------------------------------------------------------
def solve_bipartite_deletion(graph, deletion_set) -> TriangleSet:
    return solve_with_deletion_set(graph, deletion_set, enumerate_bipartite)


# ------------------------------------------------------------------------------
def solve_chordal_deletion(graph, deletion_set) -> TriangleSet:
    return solve_with_deletion_set(graph, deletion_set, enumerate_chordal)


# ------------------------------------------------------------------------------
def solve_cograph(graph, p4_limit=2000) -> TriangleSet:
    """
    Computes K by deleting whole induced P4s (|K| <= 4 * distance to
    cographs) and runs the cotree dynamic program on G - K.
    """
    deletion_set = cograph_deletion_set(graph, p4_limit=p4_limit)
    return solve_with_deletion_set(graph, deletion_set, enumerate_cograph)


################################################################################
#
# Cotree dynamic program
#
################################################################################


def _subtree_vertices(node):
    stack = [node]
    while stack:
        node = stack.pop()
        if isinstance(node, CotreeLeaf):
            yield node.vertex
        else:
            stack.append(node.right)
            stack.append(node.left)


# ------------------------------------------------------------------------------
def _subtree_edges(node, edge_count):
    """
    Edges below node; subtrees without edges are skipped, so the work is
    linear in the number of edges produced.
    """
    stack = [node]
    while stack:
        node = stack.pop()
        if isinstance(node, CotreeLeaf) or edge_count[id(node)] == 0:
            continue
        if node.kind == "join":
            right = list(_subtree_vertices(node.right))
            for x in _subtree_vertices(node.left):
                for y in right:
                    yield (x, y) if x < y else (y, x)
        stack.append(node.right)
        stack.append(node.left)


# ------------------------------------------------------------------------------
def cotree_dp(cotree, graph) -> TriangleSet:
    """
    Bottom-up over the cotree. Leaves and unions add no triangles; a join
    node q with children q1, q2 adds V(q1) x E(q2) and V(q2) x E(q1). Every
    triangle is produced once, at the lowest common ancestor of its vertices.

    Vertex and edge sets of subtrees are enumerated on demand, only when
    they contribute to the output.

    Raises:
    --------
    TreeGraphMismatch:
        If the cotree does not evaluate to graph.
    """
    leaves = sorted(cotree.vertices())
    if leaves != list(graph.vertices()):
        raise TreeGraphMismatch("leaf set differs from the vertex set")

    size = {}
    edge_count = {}
    nodes = list(cotree.nodes_postorder())
    for node in nodes:
        if isinstance(node, CotreeLeaf):
            size[id(node)] = 1
            edge_count[id(node)] = 0
            continue
        left, right = id(node.left), id(node.right)
        size[id(node)] = size[left] + size[right]
        edge_count[id(node)] = edge_count[left] + edge_count[right]
        if node.kind == "join":
            edge_count[id(node)] += size[left] * size[right]

    root_edges = edge_count[id(cotree.root)] if cotree.root is not None else 0
    if root_edges != graph.m:
        raise TreeGraphMismatch(f"cotree has {root_edges} edges, graph has {graph.m}")

    triangles = []
    for node in nodes:
        if isinstance(node, CotreeLeaf) or node.kind != "join":
            continue
        right_vertices = list(_subtree_vertices(node.right))
        for x in _subtree_vertices(node.left):
            x_neighbors = graph.neighbor_set(x)
            for y in right_vertices:
                if y not in x_neighbors:
                    raise TreeGraphMismatch(f"join edge {(x, y)} is not an edge of the graph")

        for first, second in ((node.left, node.right), (node.right, node.left)):
            if edge_count[id(second)] == 0:
                continue
            edges = list(_subtree_edges(second, edge_count))
            for x in _subtree_vertices(first):
                for y, z in edges:
                    triangles.append(Triangle.of(x, y, z))

    return TriangleSet(triangles)
