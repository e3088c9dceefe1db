"""
The gadget showing that domination number, chromatic number and diameter
(each at most 3 on the gadget) cannot speed up triangle enumeration: a linear
size transformation that keeps triangle existence.

Layout of G' for an input with n vertices:

    copy i (i = 1, 2, 3) of vertex v    (i - 1) * n + v
    l_i                                  3n + i - 1
    r_i                                  3n + 3 + i - 1
"""

from collections import deque
from dataclasses import asdict, dataclass
import logging

from FPT_Triangles.Graph.graph import Graph, Triangle
from FPT_Triangles.oracle import enumerate_edge_intersect

COPIES = (1, 2, 3)


################################################################################
@dataclass(frozen=True)
class GpGadget:
    g_prime: Graph
    n: int

    # --------------------------------------------------------------------------
    def copy_id(self, v, i):
        """
        Gadget id of copy i (1..3) of input vertex v.
        """
        return (i - 1) * self.n + v

    # --------------------------------------------------------------------------
    @property
    def apex_L(self):
        return tuple(3 * self.n + i - 1 for i in COPIES)

    # --------------------------------------------------------------------------
    @property
    def apex_R(self):
        return tuple(3 * self.n + 3 + i - 1 for i in COPIES)

    # --------------------------------------------------------------------------
    def copy_of(self, x):
        """
        (input vertex, copy index) of a copy vertex, None for apices.
        """
        if x >= 3 * self.n:
            return None
        i, v = divmod(x, self.n)
        return v, i + 1

    # --------------------------------------------------------------------------
    def copy_vertices(self, i):
        return range((i - 1) * self.n, i * self.n)


# ------------------------------------------------------------------------------
def build_gp_gadget(graph) -> GpGadget:
    """
    Three copies V'_1, V'_2, V'_3 of V, each independent; every input edge
    {x, y} becomes the six edges {x^i, y^j} with i != j. Apex l_i and apex
    r_i are joined to all of V'_i, and l_i to r_j for i != j.

    Returns:
    --------
    GpGadget:
        3n + 6 vertices and 6m + 6n + 6 edges.
    """
    n = graph.n
    gadget = GpGadget(Graph(0), n)

    edges = []
    for x, y in graph.edges():
        for i in COPIES:
            for j in COPIES:
                if i != j:
                    edges.append((gadget.copy_id(x, i), gadget.copy_id(y, j)))
    for i, l_i, r_i in zip(COPIES, gadget.apex_L, gadget.apex_R):
        for v in graph.vertices():
            edges.append((l_i, gadget.copy_id(v, i)))
            edges.append((r_i, gadget.copy_id(v, i)))
    for i, l_i in zip(COPIES, gadget.apex_L):
        for j, r_j in zip(COPIES, gadget.apex_R):
            if i != j:
                edges.append((l_i, r_j))

    g_prime = Graph(3 * n + 6, edges)
    logging.info(f"Gadget built: {g_prime.n} vertices, {g_prime.m} edges from n={n}, m={graph.m}")

    return GpGadget(g_prime, n)


# ------------------------------------------------------------------------------
def project_gadget_triangle(gadget, triangle):
    """
    Maps a gadget triangle back to the input triangle it comes from.

    Raises:
    --------
    ValueError:
        If the triangle does not have exactly one vertex in every copy.
    """
    located = [gadget.copy_of(x) for x in triangle]
    if any(item is None for item in located) or sorted(i for _, i in located) != list(COPIES):
        raise ValueError(f"{tuple(triangle)} does not have one vertex per copy")

    return Triangle.of(*(v for v, _ in located))


################################################################################
@dataclass
class GadgetReport:
    """
    Witness-based bounds: domination is checked for the set L and coloring
    for the construction's coloring, not for optimal ones.
    """

    vertices: int
    edges: int
    expected_vertices: int
    expected_edges: int
    size_ok: bool
    triangles_in: int
    triangles_out: int
    triangle_equiv: bool
    correspondence_ok: bool
    independent_ok: bool
    dominating_ok: bool
    coloring_ok: bool
    diameter: object
    diameter_ok: bool

    # --------------------------------------------------------------------------
    def all_ok(self):
        return all(
            (
                self.size_ok,
                self.triangle_equiv,
                self.correspondence_ok,
                self.independent_ok,
                self.dominating_ok,
                self.coloring_ok,
                self.diameter_ok,
            )
        )

    # --------------------------------------------------------------------------
    def as_lines(self):
        lines = ["bounds: witness-based"]
        for key, value in asdict(self).items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif value is None:
                value = "infinite"
            lines.append(f"{key}: {value}")

        return lines


# ------------------------------------------------------------------------------
def _eccentricities(graph):
    """
    BFS from every vertex; None for a vertex that does not reach all others.
    """
    result = []
    for source in graph.vertices():
        distance = [-1] * graph.n
        distance[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in graph.neighbors(v):
                if distance[u] == -1:
                    distance[u] = distance[v] + 1
                    queue.append(u)
        result.append(None if -1 in distance else max(distance))

    return result


# ------------------------------------------------------------------------------
def _is_independent(graph, vertices):
    vertices = set(vertices)
    return not any(u in vertices for v in vertices for u in graph.neighbors(v))


# ------------------------------------------------------------------------------
def construction_coloring(gadget):
    """
    Copy i gets color i; l_i and r_i get color 1 + (i mod 3).
    """
    color = [0] * gadget.g_prime.n
    for i in COPIES:
        for x in gadget.copy_vertices(i):
            color[x] = i
    for i, l_i, r_i in zip(COPIES, gadget.apex_L, gadget.apex_R):
        color[l_i] = 1 + (i % 3)
        color[r_i] = 1 + (i % 3)

    return color


# ------------------------------------------------------------------------------
def verify_gadget(gadget, graph) -> GadgetReport:
    """
    Machine-checks the gadget against its input graph.

    Inputs:
    --------
    gadget (GpGadget):
        Built from graph by build_gp_gadget.

    graph (Graph):
        The input graph.

    Returns:
    --------
    GadgetReport:
        Exact sizes against 3n+6 and 6m+6n+6, triangle existence on both
        sides, projection of every gadget triangle, independence of every
        copy and of every apex neighborhood, domination by L, properness of
        the construction's 3-coloring and the exact diameter.
    """
    g_prime = gadget.g_prime
    n, m = graph.n, graph.m

    triangles_in = enumerate_edge_intersect(graph)
    triangles_out = enumerate_edge_intersect(g_prime)

    correspondence_ok = True
    for triangle in triangles_out:
        try:
            projected = project_gadget_triangle(gadget, triangle)
        except ValueError:
            correspondence_ok = False
            break
        if projected not in triangles_in:
            correspondence_ok = False
            break

    independent_sets = [gadget.copy_vertices(i) for i in COPIES]
    independent_sets += [g_prime.neighbors(apex) for apex in gadget.apex_L + gadget.apex_R]
    independent_ok = all(_is_independent(g_prime, vertices) for vertices in independent_sets)

    dominators = set(gadget.apex_L)
    dominating_ok = all(
        x in dominators or any(u in dominators for u in g_prime.neighbors(x))
        for x in g_prime.vertices()
    )

    color = construction_coloring(gadget)
    coloring_ok = all(color[u] != color[v] for u, v in g_prime.edges())

    eccentricities = _eccentricities(g_prime)
    diameter = None if None in eccentricities else max(eccentricities, default=0)

    report = GadgetReport(
        vertices=g_prime.n,
        edges=g_prime.m,
        expected_vertices=3 * n + 6,
        expected_edges=6 * m + 6 * n + 6,
        size_ok=g_prime.n == 3 * n + 6 and g_prime.m == 6 * m + 6 * n + 6,
        triangles_in=len(triangles_in),
        triangles_out=len(triangles_out),
        triangle_equiv=(len(triangles_in) > 0) == (len(triangles_out) > 0),
        correspondence_ok=correspondence_ok,
        independent_ok=independent_ok,
        dominating_ok=dominating_ok,
        coloring_ok=coloring_ok,
        diameter=diameter,
        diameter_ok=diameter is not None and diameter <= 3,
    )
    if not report.all_ok():
        logging.warning("Gadget verification failed: " + ", ".join(report.as_lines()))

    return report
