"""
Cotrees of cographs: recognition by complement-connectivity recursion, the
induced-P4 obstruction, and the factor-4 deletion set to cographs.
"""

from dataclasses import dataclass
from typing import Optional, Union
import logging

from FPT_Triangles.Graph.graph import DeletionSet, Graph
from FPT_Triangles.errors import NotCograph, Unsupported


################################################################################
@dataclass(frozen=True)
class CotreeLeaf:
    vertex: int


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class CotreeNode:
    """
    Inner node; kind is "union" or "join". Always exactly two children.
    """

    kind: str
    left: "CotreeNode | CotreeLeaf"
    right: "CotreeNode | CotreeLeaf"


################################################################################
class Cotree:
    # --------------------------------------------------------------------------
    def __init__(self, root: Optional[Union[CotreeNode, CotreeLeaf]]):
        """
        Binary cotree; root is None for the empty graph.
        """
        self.root = root

    # --------------------------------------------------------------------------
    def nodes_postorder(self):
        """
        Yields every node after both of its children.
        """
        if self.root is None:
            return
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if isinstance(node, CotreeLeaf) or expanded:
                yield node
                continue
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))

    # --------------------------------------------------------------------------
    def vertices(self):
        return [node.vertex for node in self.nodes_postorder() if isinstance(node, CotreeLeaf)]

    # --------------------------------------------------------------------------
    def edges(self):
        """
        Evaluates union/join semantics bottom-up; returns (u, v) pairs, u < v.
        """
        below = {}
        edges = set()
        for node in self.nodes_postorder():
            if isinstance(node, CotreeLeaf):
                below[id(node)] = [node.vertex]
                continue
            left = below.pop(id(node.left))
            right = below.pop(id(node.right))
            if node.kind == "join":
                for x in left:
                    for y in right:
                        edges.add((x, y) if x < y else (y, x))
            below[id(node)] = left + right

        return edges

    # --------------------------------------------------------------------------
    def to_graph(self, vertex_count):
        return Graph(vertex_count, sorted(self.edges()))

    # --------------------------------------------------------------------------
    def inner_nodes(self):
        return [node for node in self.nodes_postorder() if isinstance(node, CotreeNode)]


# ------------------------------------------------------------------------------
def _components(graph, vertices):
    allowed = set(vertices)
    groups = []
    for root in vertices:
        if root not in allowed:
            continue
        allowed.discard(root)
        group = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for u in graph.neighbors(v):
                if u in allowed:
                    allowed.discard(u)
                    group.append(u)
                    stack.append(u)
        groups.append(sorted(group))

    return groups


# ------------------------------------------------------------------------------
def _co_components(graph, vertices):
    """
    Connected components of the complement of G[vertices], O(n^2).
    """
    unvisited = set(vertices)
    groups = []
    for root in vertices:
        if root not in unvisited:
            continue
        unvisited.discard(root)
        group = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            neighbors = graph.neighbor_set(v)
            found = [u for u in unvisited if u not in neighbors]
            for u in found:
                unvisited.discard(u)
                group.append(u)
                stack.append(u)
        groups.append(sorted(group))

    return groups


# ------------------------------------------------------------------------------
def find_induced_p4(graph, vertices=None):
    """
    Exhaustive search for an induced path a-b-c-d inside `vertices` (all
    vertices by default), centred on the middle edge {b, c}.

    Returns:
    --------
    tuple or None:
        (a, b, c, d) in path order, the first one in ascending edge order.
    """
    if vertices is None:
        allowed = None
    else:
        allowed = frozenset(vertices)

    for b, c in graph.edges():
        if allowed is not None and (b not in allowed or c not in allowed):
            continue
        b_neighbors = graph.neighbor_set(b)
        c_neighbors = graph.neighbor_set(c)
        ends_b = [a for a in graph.neighbors(b) if a != c and a not in c_neighbors]
        ends_c = [d for d in graph.neighbors(c) if d != b and d not in b_neighbors]
        if allowed is not None:
            ends_b = [a for a in ends_b if a in allowed]
            ends_c = [d for d in ends_c if d in allowed]
        for a in ends_b:
            a_neighbors = graph.neighbor_set(a)
            for d in ends_c:
                if d not in a_neighbors:
                    return (a, b, c, d)

    return None


# ------------------------------------------------------------------------------
def build_cotree(graph, vertices=None) -> Cotree:
    """
    Builds a binary cotree of G[vertices] (all vertices by default).

    A disconnected graph is the union of its components, a graph with a
    disconnected complement the join of its co-components; if both are
    connected the graph holds an induced P4. Multi-way unions and joins are
    chained left-deep into binary nodes.

    Raises:
    --------
    NotCograph:
        With an induced P4 as witness.
    """
    if vertices is None:
        vertices = list(graph.vertices())
    vertices = sorted(vertices)
    if not vertices:
        return Cotree(None)

    result = []
    stack = [("split", vertices, result)]
    while stack:
        action, payload, out = stack.pop()
        if action == "split":
            if len(payload) == 1:
                out.append(CotreeLeaf(payload[0]))
                continue
            kind = "union"
            groups = _components(graph, payload)
            if len(groups) == 1:
                kind = "join"
                groups = _co_components(graph, payload)
                if len(groups) == 1:
                    p4 = find_induced_p4(graph, payload)
                    assert p4 is not None
                    raise NotCograph(p4)
            built = []
            stack.append(("combine", (kind, built), out))
            for group in reversed(groups):
                stack.append(("split", group, built))
        else:
            kind, built = payload
            node = built[0]
            for child in built[1:]:
                node = CotreeNode(kind, node, child)
            out.append(node)

    return Cotree(result[0])


# ------------------------------------------------------------------------------
def is_cograph(graph):
    return find_induced_p4(graph) is None


# ------------------------------------------------------------------------------
def cograph_deletion_set(graph, p4_limit=2000) -> DeletionSet:
    """
    Deletes all four vertices of an induced P4 until none is left. Every P4
    holds a vertex of any optimal set, so |K| <= 4 * optimum.

    Raises:
    --------
    Unsupported:
        If n exceeds p4_limit.
    """
    if graph.n > p4_limit:
        raise Unsupported("cograph_deletion_set", f"n={graph.n} exceeds the P4 search limit {p4_limit}")

    removed = set()
    current = graph
    rounds = 0
    while True:
        p4 = find_induced_p4(current)
        if p4 is None:
            break
        removed.update(p4)
        current = graph.without_vertices(removed)
        rounds += 1

    logging.info(f"Deletion set to cographs: {len(removed)} vertices after {rounds} rounds")

    return DeletionSet(frozenset(removed), "cograph")
