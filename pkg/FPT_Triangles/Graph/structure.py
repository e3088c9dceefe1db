"""
Structural subroutines the solvers depend on: degeneracy orderings, spanning
forests and feedback edges, heuristic deletion sets, modules with respect to a
vertex set, perfect elimination orderings and 2-colorings.

All functions are pure; none mutates its input Graph.
"""

from collections import deque
from dataclasses import dataclass
import heapq
import logging

from FPT_Triangles.Graph.cotree import find_induced_p4
from FPT_Triangles.Graph.graph import DeletionSet
from FPT_Triangles.errors import (
    EdgeOutsideD,
    NotBipartite,
    NotChordal,
    NotDeletionSet,
)


################################################################################
@dataclass(frozen=True)
class DegeneracyOrdering:
    """
    order[i] is the i-th peeled vertex, position[v] its index in order.
    """

    order: tuple
    degeneracy: int
    position: tuple

    # --------------------------------------------------------------------------
    def later_neighbors(self, graph, v):
        position = self.position
        return [u for u in graph.neighbors(v) if position[u] > position[v]]


# ------------------------------------------------------------------------------
def degeneracy_ordering(graph) -> DegeneracyOrdering:
    """
    Min-degree peeling with smallest-id tie-break.

    The degree a vertex has when it is peeled equals its number of later
    neighbors, so the reported degeneracy is the maximum of those counts.
    """
    n = graph.n
    degree = [graph.degree(v) for v in range(n)]
    heap = [(degree[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order = []
    degeneracy = 0

    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        if d > degeneracy:
            degeneracy = d
        for u in graph.neighbors(v):
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))

    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i

    return DegeneracyOrdering(tuple(order), degeneracy, tuple(position))


# ------------------------------------------------------------------------------
def is_d_degenerate(graph, d):
    return degeneracy_ordering(graph).degeneracy <= d


# ------------------------------------------------------------------------------
def connected_components(graph):
    """
    Components as ascending vertex lists, ordered by their smallest vertex.
    """
    seen = [False] * graph.n
    components = []
    for root in graph.vertices():
        if seen[root]:
            continue
        seen[root] = True
        component = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in graph.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    component.append(u)
                    queue.append(u)
        components.append(sorted(component))

    return components


# ------------------------------------------------------------------------------
def bfs_forest(graph):
    """
    Breadth-first spanning forest rooted at the smallest vertex of every
    component.

    Returns:
    --------
    (parent, tree_edges):
        parent[v] is -1 for roots; tree_edges holds (u, v) with u < v.
    """
    n = graph.n
    parent = [-1] * n
    seen = [False] * n
    tree_edges = set()
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in graph.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    tree_edges.add((v, u) if v < u else (u, v))
                    queue.append(u)

    return parent, tree_edges


# ------------------------------------------------------------------------------
def feedback_edge_set(graph):
    """
    Non-forest edges of the BFS spanning forest; |result| = m - n + c.
    """
    _, tree_edges = bfs_forest(graph)
    feedback = frozenset(edge for edge in graph.edges() if edge not in tree_edges)
    logging.debug(f"Feedback edge set of size {len(feedback)}")

    return feedback


# ------------------------------------------------------------------------------
def find_cycle_edge(graph):
    """
    Returns an edge that closes a cycle, or None if the graph is a forest.
    Union-find over the edges in ascending order.
    """
    root = list(range(graph.n))

    def find(v):
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    for u, v in graph.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return (u, v)
        root[ru] = rv

    return None


# ------------------------------------------------------------------------------
def is_forest(graph):
    return find_cycle_edge(graph) is None


# ------------------------------------------------------------------------------
def greedy_ddeg_deletion_set(graph, d) -> DeletionSet:
    """
    Heuristic deletion set to d-degenerate graphs: repeatedly delete a
    maximum-degree vertex (smallest id on ties) of G - D until G - D is
    d-degenerate. The result need not be minimum.

    G - D is d-degenerate iff its (d+1)-core is empty. The core is maintained
    incrementally while vertices are deleted, the degrees in G - D through a
    lazy max-heap.
    """
    assert d >= 0
    n = graph.n
    degree = [graph.degree(v) for v in range(n)]
    deleted = [False] * n

    # (d+1)-core by peeling every vertex of degree <= d
    in_core = [True] * n
    core_degree = list(degree)
    stack = [v for v in range(n) if core_degree[v] <= d]
    for v in stack:
        in_core[v] = False
    core_size = n - len(stack)

    def peel(stack):
        nonlocal core_size
        while stack:
            v = stack.pop()
            for u in graph.neighbors(v):
                if in_core[u]:
                    core_degree[u] -= 1
                    if core_degree[u] <= d:
                        in_core[u] = False
                        core_size -= 1
                        stack.append(u)

    peel(stack)

    heap = [(-degree[v], v) for v in range(n)]
    heapq.heapify(heap)
    chosen = []
    while core_size > 0:
        negative_degree, v = heapq.heappop(heap)
        if deleted[v] or -negative_degree != degree[v]:
            continue
        deleted[v] = True
        chosen.append(v)
        for u in graph.neighbors(v):
            if not deleted[u]:
                degree[u] -= 1
                heapq.heappush(heap, (-degree[u], u))
        if in_core[v]:
            in_core[v] = False
            core_size -= 1
            peel([v])

    logging.info(f"Greedy deletion set to {d}-degenerate graphs has {len(chosen)} vertices")

    return DeletionSet(frozenset(chosen), "degenerate", d)


################################################################################
@dataclass(frozen=True)
class ModulePart:
    """
    Vertices outside D sharing the neighborhood `signature` inside D.
    """

    representative: int
    members: frozenset
    signature: frozenset


# ------------------------------------------------------------------------------
def modules_wrt(graph, D):
    """
    Partition of V \\ D by neighborhood inside D, by partition refinement:
    start from one part and split every part by adjacency to each d in D.

    Inputs:
    --------
    graph (Graph):
        Every edge must have an endpoint in D.

    D (iterable of int):
        The vertex set.

    Raises:
    --------
    EdgeOutsideD:
        If some edge has no endpoint in D.

    Returns:
    --------
    list of ModulePart:
        Ordered by representative, the smallest member of each part.
    """
    D = frozenset(D)
    for u, v in graph.edges():
        if u not in D and v not in D:
            raise EdgeOutsideD((u, v))

    parts = [[v for v in graph.vertices() if v not in D]]
    if not parts[0]:
        return []
    for x in sorted(D):
        neighbors = graph.neighbor_set(x)
        refined = []
        for part in parts:
            inside = [v for v in part if v in neighbors]
            outside = [v for v in part if v not in neighbors]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        parts = refined

    modules = []
    for part in parts:
        representative = min(part)
        signature = frozenset(graph.neighbors(representative))
        modules.append(ModulePart(representative, frozenset(part), signature))
    modules.sort(key=lambda module: module.representative)

    return modules


################################################################################
#
# Chordal graphs
#
################################################################################


def maximum_cardinality_search(graph):
    """
    Visit order of Maximum Cardinality Search, smallest id on ties. Its
    reverse is a perfect elimination ordering iff the graph is chordal.
    """
    n = graph.n
    weight = [0] * n
    visited = [False] * n
    heap = [(0, v) for v in range(n)]
    heapq.heapify(heap)
    visit_order = []
    while heap:
        negative_weight, v = heapq.heappop(heap)
        if visited[v] or -negative_weight != weight[v]:
            continue
        visited[v] = True
        visit_order.append(v)
        for u in graph.neighbors(v):
            if not visited[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))

    return visit_order


# ------------------------------------------------------------------------------
def _chordless_cycle_through(graph, v, x, y):
    """
    Shortest x-y path avoiding v and the other neighbors of v, closed through
    v. Such a path is induced, so with v it is a chordless cycle of length
    >= 4. Returns () if no such path exists.
    """
    blocked = set(graph.neighbors(v)) - {x, y}
    blocked.add(v)
    parent = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in graph.neighbors(u):
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    if y not in parent:
        return ()

    path = []
    u = y
    while u is not None:
        path.append(u)
        u = parent[u]

    return tuple([v] + path[::-1])


# ------------------------------------------------------------------------------
def perfect_elimination_ordering(graph):
    """
    Perfect elimination ordering via Maximum Cardinality Search followed by a
    verification pass; the verification alone decides chordality.

    For every v the earliest later neighbor p must be adjacent to all other
    later neighbors of v; this implies that all later neighbors of every
    vertex form cliques.

    Raises:
    --------
    NotChordal:
        With the failed vertex and, where one is found, a chordless cycle.

    Returns:
    --------
    tuple:
        The ordering.
    """
    order = maximum_cardinality_search(graph)[::-1]
    position = [0] * graph.n
    for i, v in enumerate(order):
        position[v] = i

    for v in order:
        later = [u for u in graph.neighbors(v) if position[u] > position[v]]
        if len(later) < 2:
            continue
        p = min(later, key=lambda u: position[u])
        p_neighbors = graph.neighbor_set(p)
        for u in later:
            if u != p and u not in p_neighbors:
                witness = _chordless_cycle_through(graph, v, p, u)
                raise NotChordal(v, witness)

    return tuple(order)


# ------------------------------------------------------------------------------
def is_chordal(graph):
    try:
        perfect_elimination_ordering(graph)
    except NotChordal:
        return False
    return True


################################################################################
#
# Bipartite graphs
#
################################################################################


def two_coloring(graph):
    """
    BFS 2-coloring. Raises NotBipartite with an odd cycle on failure.

    Returns:
    --------
    list:
        Color 0 or 1 per vertex.
    """
    n = graph.n
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in graph.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    raise NotBipartite(_odd_cycle(parent, depth, v, u))

    return color


# ------------------------------------------------------------------------------
def _odd_cycle(parent, depth, v, u):
    # walk both tree paths up to their lowest common ancestor
    left, right = [v], [u]
    while depth[v] > depth[u]:
        v = parent[v]
        left.append(v)
    while depth[u] > depth[v]:
        u = parent[u]
        right.append(u)
    while v != u:
        v = parent[v]
        u = parent[u]
        left.append(v)
        right.append(u)

    return tuple(left + right[-2::-1])


# ------------------------------------------------------------------------------
def is_bipartite(graph):
    try:
        two_coloring(graph)
    except NotBipartite:
        return False
    return True


################################################################################
#
# Deletion sets
#
################################################################################


def verify_deletion_set(graph, deletion_set):
    """
    Raises NotDeletionSet unless G - D belongs to deletion_set.target_class.
    """

    remainder = deletion_set.remainder(graph)
    target = deletion_set.target_class
    if target == "degenerate":
        degeneracy = degeneracy_ordering(remainder).degeneracy
        if degeneracy > deletion_set.d:
            raise NotDeletionSet(deletion_set.describe(), f"G - D has degeneracy {degeneracy}")
    elif target == "bipartite":
        if not is_bipartite(remainder):
            raise NotDeletionSet(target, "G - D has an odd cycle")
    elif target == "chordal":
        if not is_chordal(remainder):
            raise NotDeletionSet(target, "G - D has a chordless cycle")
    elif target == "cograph":
        p4 = find_induced_p4(remainder)
        if p4 is not None:
            raise NotDeletionSet(target, f"G - D has the induced P4 {list(p4)}")
    else:
        raise ValueError(f"Unknown target class {target}")
