"""
Immutable simple undirected graphs, triangles, and the edge-list format.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Optional
import logging
import re

import networkx as nx

from FPT_Triangles.errors import SelfLoop, DuplicateEdge, Malformed


################################################################################
class Triangle(NamedTuple):
    """
    Three dense vertex ids with a < b < c.
    """

    a: int
    b: int
    c: int

    # --------------------------------------------------------------------------
    @classmethod
    def of(cls, x, y, z):
        if x > y:
            x, y = y, x
        if y > z:
            y, z = z, y
            if x > y:
                x, y = y, x

        return cls(x, y, z)


################################################################################
class Graph:
    # --------------------------------------------------------------------------
    def __init__(self, vertex_count, edges=(), original_labels=None):
        """
        Initialize the Graph class.

        Inputs:
        --------
        vertex_count (int):
            Number of vertices n; vertex ids are 0..n-1.

        edges (iterable of pairs):
            The edges. Self-loops and repeated edges raise SelfLoop and
            DuplicateEdge, reporting the position of the edge (1-based).

        original_labels (sequence, optional):
            External label of every dense id. Defaults to the ids themselves.
        """
        adjacency = [[] for _ in range(vertex_count)]
        seen = {}
        for position, (u, v) in enumerate(edges, start=1):
            if u == v:
                raise SelfLoop(position)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(position, seen[key])
            seen[key] = position
            adjacency[u].append(v)
            adjacency[v].append(u)

        self.vertex_count = vertex_count
        self.edge_count = len(seen)
        self.adjacency = tuple(tuple(sorted(neighbors)) for neighbors in adjacency)
        if original_labels is None:
            self.original_labels = tuple(range(vertex_count))
        else:
            self.original_labels = tuple(original_labels)
            assert len(self.original_labels) == vertex_count

        self._neighbor_sets = None
        self._label_index = None

    # --------------------------------------------------------------------------
    @property
    def n(self):
        return self.vertex_count

    # --------------------------------------------------------------------------
    @property
    def m(self):
        return self.edge_count

    # --------------------------------------------------------------------------
    @property
    def max_degree(self):
        return max((len(neighbors) for neighbors in self.adjacency), default=0)

    # --------------------------------------------------------------------------
    def vertices(self):
        return range(self.vertex_count)

    # --------------------------------------------------------------------------
    def neighbors(self, v):
        return self.adjacency[v]

    # --------------------------------------------------------------------------
    def degree(self, v):
        return len(self.adjacency[v])

    # --------------------------------------------------------------------------
    def neighbor_set(self, v):
        """
        Neighbors of v as a frozenset. The sets are built once, on first use.
        """
        if self._neighbor_sets is None:
            self._neighbor_sets = [frozenset(neighbors) for neighbors in self.adjacency]

        return self._neighbor_sets[v]

    # --------------------------------------------------------------------------
    def has_edge(self, u, v):
        return v in self.neighbor_set(u)

    # --------------------------------------------------------------------------
    def edges(self):
        """
        Yields every edge once as (u, v) with u < v, in ascending order.
        """
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if v > u:
                    yield (u, v)

    # --------------------------------------------------------------------------
    def id_of(self, label):
        """
        Dense id of an external label, None if the label is unknown.
        """
        if self._label_index is None:
            self._label_index = {label: i for i, label in enumerate(self.original_labels)}

        return self._label_index.get(label)

    # --------------------------------------------------------------------------
    def without_vertices(self, removed):
        """
        G - removed on the same id space: removed vertices stay as isolated ids
        so that triangles of the result are triangles of self.
        """
        removed = set(removed)
        edges = [(u, v) for u, v in self.edges() if u not in removed and v not in removed]

        return Graph(self.vertex_count, edges, self.original_labels)

    # --------------------------------------------------------------------------
    def without_edges(self, removed):
        removed = {(u, v) if u < v else (v, u) for u, v in removed}
        edges = [edge for edge in self.edges() if edge not in removed]

        return Graph(self.vertex_count, edges, self.original_labels)

    # --------------------------------------------------------------------------
    def edge_set(self):
        return frozenset(self.edges())

    # --------------------------------------------------------------------------
    def labelled_edge_set(self):
        """
        Edges as frozensets of external labels, used to compare graphs up to
        the dense renumbering.
        """
        labels = self.original_labels
        return frozenset(frozenset((labels[u], labels[v])) for u, v in self.edges())

    # --------------------------------------------------------------------------
    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Converts a networkx graph. Dense ids follow nx_graph.nodes order and
        the nodes become the original labels.
        """
        nodes = list(nx_graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges]

        return cls(len(nodes), edges, nodes)

    # --------------------------------------------------------------------------
    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices())
        nx_graph.add_edges_from(self.edges())

        return nx_graph

    # --------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.adjacency == other.adjacency

    # --------------------------------------------------------------------------
    def __hash__(self):
        return hash((self.vertex_count, self.adjacency))

    # --------------------------------------------------------------------------
    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


################################################################################
class TriangleSet:
    """
    An ordered sequence of Triangles; len() is #T. Equality is set equality.
    """

    # --------------------------------------------------------------------------
    def __init__(self, triangles: Iterable[Triangle] = ()):
        self.triangles = list(triangles)
        self._as_set = None

    # --------------------------------------------------------------------------
    def __len__(self):
        return len(self.triangles)

    # --------------------------------------------------------------------------
    def __iter__(self):
        return iter(self.triangles)

    # --------------------------------------------------------------------------
    def __contains__(self, triangle):
        return Triangle.of(*triangle) in self.as_set()

    # --------------------------------------------------------------------------
    def as_set(self):
        if self._as_set is None:
            self._as_set = frozenset(self.triangles)
        return self._as_set

    # --------------------------------------------------------------------------
    def has_duplicates(self):
        return len(self.as_set()) != len(self.triangles)

    # --------------------------------------------------------------------------
    def sorted(self):
        return TriangleSet(sorted(self.triangles))

    # --------------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TriangleSet):
            return self.as_set() == other.as_set()
        if isinstance(other, (set, frozenset)):
            return self.as_set() == other
        return NotImplemented

    # --------------------------------------------------------------------------
    def __or__(self, other):
        return TriangleSet(self.triangles + list(other))

    # --------------------------------------------------------------------------
    def bound_ok(self, edge_count):
        """
        #T <= m^{3/2}.
        """
        return len(self.triangles) <= edge_count**1.5

    # --------------------------------------------------------------------------
    def validate(self, graph):
        """
        Asserts the canonical-form invariants against the host graph: no
        duplicates, a < b < c, all three edges present, and #T <= m^{3/2}.
        """
        assert not self.has_duplicates(), "duplicate triangles"
        for a, b, c in self.triangles:
            assert a < b < c, f"non-canonical triangle {(a, b, c)}"
            assert graph.has_edge(a, b) and graph.has_edge(a, c) and graph.has_edge(b, c), (
                f"{(a, b, c)} is not a triangle of the graph"
            )
        assert self.bound_ok(graph.m), "more than m^1.5 triangles"

    # --------------------------------------------------------------------------
    def __repr__(self):
        return f"TriangleSet({len(self.triangles)} triangles)"


################################################################################
@dataclass(frozen=True)
class DeletionSet:
    """
    A vertex set whose removal puts the graph into target_class, one of
    "degenerate" (with d), "bipartite", "chordal", "cograph".
    """

    vertices: frozenset
    target_class: str
    d: Optional[int] = None

    # --------------------------------------------------------------------------
    def __len__(self):
        return len(self.vertices)

    # --------------------------------------------------------------------------
    def __iter__(self):
        return iter(sorted(self.vertices))

    # --------------------------------------------------------------------------
    def remainder(self, graph):
        return graph.without_vertices(self.vertices)

    # --------------------------------------------------------------------------
    def describe(self):
        if self.target_class == "degenerate":
            return f"{self.d}-degenerate"
        return self.target_class


################################################################################
#
# Edge-list format
#
################################################################################


LABEL = re.compile(r"[0-9]+")


# ------------------------------------------------------------------------------
def _numbered_lines(source):
    """
    Yields (line number, stripped text) for every line of source, decoding
    bytes one line at a time so an undecodable line is reported by number.
    """
    if isinstance(source, (bytes, str)):
        data = source
    else:
        data = source.read()

    newline = b"\n" if isinstance(data, bytes) else "\n"
    for line_number, raw in enumerate(data.split(newline), start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError:
                raise Malformed(line_number, raw.decode("utf-8", errors="replace"), "The file must be UTF-8 text.")
        yield line_number, raw.strip()


# ------------------------------------------------------------------------------
def _is_label(token):
    return LABEL.fullmatch(token) is not None


# ------------------------------------------------------------------------------
def parse_edge_list(source) -> Graph:
    """
    Parses an edge list into a Graph.

    Inputs:
    --------
    source (bytes, str or stream):
        UTF-8 text, one `u v` pair of non-negative integer labels per line.
        Blank lines and lines starting with `#` are skipped.

    Raises:
    --------
    SelfLoop, DuplicateEdge, Malformed:
        With the 1-based line number of the offending line.

    Returns:
    --------
    Graph:
        Labels renumbered to dense ids 0..n-1 in first-appearance order.
    """
    index = {}
    labels = []
    edges = []
    seen = {}

    for line_number, line in _numbered_lines(source):
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_label(token) for token in tokens):
            raise Malformed(line_number, line)

        u_label, v_label = int(tokens[0]), int(tokens[1])
        if u_label == v_label:
            raise SelfLoop(line_number)

        ids = []
        for label in (u_label, v_label):
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
            ids.append(index[label])
        u, v = ids

        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(line_number, seen[key])
        seen[key] = line_number
        edges.append(key)

    graph = Graph(len(labels), edges, labels)
    logging.debug(f"Parsed edge list with n={graph.n}, m={graph.m}")

    return graph


# ------------------------------------------------------------------------------
def read_edge_list(path) -> Graph:
    with open(Path(path), "rb") as fopen:
        return parse_edge_list(fopen)


# ------------------------------------------------------------------------------
def serialize_edge_list(graph) -> str:
    """
    Edge list with the original labels, smaller label first, lines in
    ascending lexicographic order.
    """
    labels = graph.original_labels
    pairs = sorted(
        (min(labels[u], labels[v]), max(labels[u], labels[v])) for u, v in graph.edges()
    )

    return "".join(f"{u} {v}\n" for u, v in pairs)


# ------------------------------------------------------------------------------
def write_edge_list(graph, path):
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fopen:
        fopen.write(serialize_edge_list(graph))

    return path


# ------------------------------------------------------------------------------
def format_triangles(triangles, graph, sort_lines=False):
    """
    One `a b c` line per triangle with the graph's original labels, ascending
    within the triple. With sort_lines the lines are sorted as well.
    """
    labels = graph.original_labels
    rows = [tuple(sorted((labels[a], labels[b], labels[c]))) for a, b, c in triangles]
    if sort_lines:
        rows.sort()

    return [f"{a} {b} {c}" for a, b, c in rows]


# ------------------------------------------------------------------------------
def read_vertex_set(path, graph):
    """
    Reads a deletion-set file (one vertex label per line, `#` comments) and
    returns the dense ids.

    Raises:
    --------
    Malformed:
        If a line is not a label, or names a label that is not a vertex of
        the graph.
    """
    vertices = set()
    with open(Path(path), "rb") as fopen:
        for line_number, line in _numbered_lines(fopen):
            if not line or line.startswith("#"):
                continue
            if not _is_label(line):
                raise Malformed(line_number, line, "Each non-comment line must hold one vertex label.")
            vertex = graph.id_of(int(line))
            if vertex is None:
                raise Malformed(line_number, line, "Every label of a deletion set must be a vertex of the graph.")
            vertices.add(vertex)

    return frozenset(vertices)


# ------------------------------------------------------------------------------
def write_triangles(triangles, graph, stream, sort_lines=False):
    """
    Writes the lines of format_triangles to a text stream.
    """
    lines = format_triangles(triangles, graph, sort_lines=sort_lines)
    if lines:
        stream.write("\n".join(lines) + "\n")

    return len(lines)
