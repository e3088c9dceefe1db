"""
Enum-advice kernelizations for triangle enumeration.

A kernelization shrinks the input to a kernel graph and stores an advice
object; every input triangle is recovered by expanding the kernel's triangles
through the advice, disjointly and completely. The advice refers to input
ids only, so expansion never needs the input graph.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional
import itertools
import json
import logging

from FPT_Triangles.Graph.graph import Graph, Triangle, TriangleSet
from FPT_Triangles.Graph.structure import (
    bfs_forest,
    degeneracy_ordering,
    feedback_edge_set,
    find_cycle_edge,
    modules_wrt,
    verify_deletion_set,
)
from FPT_Triangles.errors import NotDeletionSet, NotFeedbackSet, ParameterTooLarge
from FPT_Triangles.listing import list_by_degeneracy
from FPT_Triangles.oracle import enumerate_edge_intersect


################################################################################
#
# Advice types
#
################################################################################


@dataclass(frozen=True)
class FesAdvice:
    """
    Triangles with at least one edge outside the feedback edge set F.
    """

    outside_triangles: TriangleSet


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class DtddMaxdegAdvice:
    """
    Triangles of G - D with a vertex that has no neighbor in D.
    """

    outside_triangles: TriangleSet


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class DtddAdvice:
    """
    t1 holds the triangles with at most one vertex in D. module_map maps a
    representative (input id) to the vertices it stands for, sentinel_ids are
    the kernel ids of the three fresh vertices a, b, c.
    """

    t1: TriangleSet
    module_map: dict
    sentinel_ids: tuple


################################################################################
@dataclass(frozen=True)
class EnumAdviceKernel:
    """
    Kernel graph plus advice. The kernel graph has its own dense ids; its
    original_labels map each kernel id to the input id, sentinel vertices to
    n, n+1, n+2.

    kind is one of "fes", "dtdd-maxdeg", "dtdd".
    """

    kind: str
    kernel_graph: Graph
    advice: object
    param_in: int
    param_out: int
    sentinel: Optional[Triangle]
    vertex_bound: int
    edge_bound: Optional[int] = None
    input_n: int = 0
    details: dict = field(default_factory=dict)

    # --------------------------------------------------------------------------
    def expand(self, triangle):
        """
        Input triangles represented by one kernel triangle.
        """
        labels = self.kernel_graph.original_labels
        if self.kind == "dtdd":
            return dtdd_expand(triangle, self.advice, labels=labels)
        return fes_expand(triangle, self.advice, self.sentinel, labels=labels)

    # --------------------------------------------------------------------------
    def expand_all(self, kernel_triangles=None):
        """
        Expands every kernel triangle; lists the kernel's triangles with the
        edge-intersect enumerator when none are given.
        """
        if kernel_triangles is None:
            kernel_triangles = enumerate_edge_intersect(self.kernel_graph)

        triangles = []
        for triangle in kernel_triangles:
            triangles.extend(self.expand(triangle))

        return TriangleSet(triangles)

    # --------------------------------------------------------------------------
    def vertices_ok(self):
        return self.kernel_graph.n <= self.vertex_bound

    # --------------------------------------------------------------------------
    def edges_ok(self):
        return self.edge_bound is None or self.kernel_graph.m <= self.edge_bound

    # --------------------------------------------------------------------------
    def check_bounds(self):
        return self.vertices_ok() and self.edges_ok()

    # --------------------------------------------------------------------------
    def advice_size(self):
        if self.kind == "dtdd":
            return len(self.advice.t1)
        return len(self.advice.outside_triangles)


# ------------------------------------------------------------------------------
def _kernel_graph(vertices, edges, sentinel_labels=(), sentinel_edges=False):
    """
    Builds a kernel graph on `vertices` (input ids) followed by one kernel id
    per sentinel label.

    Returns:
    --------
    (Graph, sentinel kernel ids)
    """
    index = {v: i for i, v in enumerate(vertices)}
    kernel_edges = [(index[u], index[v]) for u, v in edges]
    first = len(vertices)
    sentinel_ids = tuple(range(first, first + len(sentinel_labels)))
    if sentinel_edges:
        a, b, c = sentinel_ids
        kernel_edges += [(a, b), (a, c), (b, c)]

    labels = list(vertices) + list(sentinel_labels)
    graph = Graph(len(labels), kernel_edges, labels)

    return graph, sentinel_ids


# ------------------------------------------------------------------------------
def _map_triangle(triangle, labels):
    if labels is None:
        return Triangle.of(*triangle)
    a, b, c = triangle
    return Triangle.of(labels[a], labels[b], labels[c])


################################################################################
#
# Feedback edge number
#
################################################################################


def lemma_festri(graph, F) -> TriangleSet:
    """
    Lists the triangles with at least one edge outside the feedback edge set F,
    each once, in O(n + m) time. There are at most 2|F| of them.

    Root every tree of G - F and write p(v) for the parent of v. A triangle has
    one or two forest edges.

    1. One forest edge {w, p(w)}: the third vertex v sees w and p(w) through
       F. For every v, mark its F-neighbors and test p(w) for each marked w.
    2. Two forest edges: the F edge {u, v} has p(u) = p(v), p(p(u)) = v or
       p(p(v)) = u.

    Raises:
    --------
    NotFeedbackSet:
        If G - F still has a cycle.
    """
    F = {(u, v) if u < v else (v, u) for u, v in F}
    forest = graph.without_edges(F)
    cycle_edge = find_cycle_edge(forest)
    if cycle_edge is not None:
        raise NotFeedbackSet(cycle_edge)

    parent, _ = bfs_forest(forest)
    f_neighbors = [[] for _ in range(graph.n)]
    for u, v in F:
        f_neighbors[u].append(v)
        f_neighbors[v].append(u)

    triangles = []

    # Step 1
    # ---------------
    marked = [False] * graph.n
    for v in graph.vertices():
        if len(f_neighbors[v]) < 2:
            continue
        for w in f_neighbors[v]:
            marked[w] = True
        for w in f_neighbors[v]:
            p = parent[w]
            if p != -1 and marked[p]:
                triangles.append(Triangle.of(v, w, p))
        for w in f_neighbors[v]:
            marked[w] = False

    # Step 2
    # ---------------
    for u, v in sorted(F):
        pu, pv = parent[u], parent[v]
        if pu != -1 and pu == pv:
            triangles.append(Triangle.of(u, v, pu))
        elif pu != -1 and parent[pu] == v:
            triangles.append(Triangle.of(u, pu, v))
        elif pv != -1 and parent[pv] == u:
            triangles.append(Triangle.of(v, pv, u))

    assert len(triangles) <= 2 * len(F)

    return TriangleSet(triangles)


# ------------------------------------------------------------------------------
def fes_kernelize(graph) -> EnumAdviceKernel:
    """
    Kernel with at most 2k+3 vertices and k+3 edges for the feedback edge
    number k = m - n + c.

    The kernel graph consists of the endpoints and edges of a feedback edge
    set F, plus a fresh sentinel triangle when the advice (the triangles with
    an edge outside F) is nonempty. The sentinel expands to the advice.
    """
    F = feedback_edge_set(graph)
    k = len(F)
    advice = lemma_festri(graph, F)

    endpoints = sorted({v for edge in F for v in edge})
    has_advice = len(advice) > 0
    sentinel_labels = (graph.n, graph.n + 1, graph.n + 2) if has_advice else ()
    kernel_graph, sentinel_ids = _kernel_graph(
        endpoints, sorted(F), sentinel_labels, sentinel_edges=has_advice
    )
    sentinel = Triangle(*sentinel_ids) if has_advice else None
    k_out = len(feedback_edge_set(kernel_graph))

    kernel = EnumAdviceKernel(
        kind="fes",
        kernel_graph=kernel_graph,
        advice=FesAdvice(advice),
        param_in=k,
        param_out=k_out,
        sentinel=sentinel,
        vertex_bound=2 * k + 3,
        edge_bound=k + 3,
        input_n=graph.n,
    )
    logging.info(
        f"Feedback edge kernel: k={k}, k'={k_out}, {kernel_graph.n} vertices, "
        f"{kernel_graph.m} edges, {len(advice)} advice triangles"
    )

    return kernel


# ------------------------------------------------------------------------------
def fes_expand(triangle, advice, sentinel, labels=None):
    """
    The sentinel expands to the advice triangles, any other kernel triangle
    to itself in input ids.
    """
    if sentinel is not None and Triangle.of(*triangle) == sentinel:
        assert len(advice.outside_triangles) > 0, "sentinel present with empty advice"
        yield from advice.outside_triangles
    else:
        yield _map_triangle(triangle, labels)


################################################################################
#
# Distance to d-degenerate
#
################################################################################


def require_degenerate_set(graph, deletion_set):
    if deletion_set.target_class != "degenerate":
        raise NotDeletionSet("d-degenerate", f"the deletion set targets {deletion_set.describe()}")
    verify_deletion_set(graph, deletion_set)


# ------------------------------------------------------------------------------
def dtdd_maxdeg_kernelize(graph, deletion_set) -> EnumAdviceKernel:
    """
    Kernel on D and its neighborhood, O(|D| * Delta_D * d) in size.

    Inputs:
    --------
    graph (Graph):
        The input graph.

    deletion_set (DeletionSet):
        D with target class "degenerate"; G - D must be d-degenerate.

    Raises:
    --------
    NotDeletionSet:
        If G - D is not d-degenerate.

    Returns:
    --------
    EnumAdviceKernel:
        Kernel graph G[D u N(D)] (plus a sentinel triangle iff the advice is
        nonempty). The advice holds the triangles of G - D with a vertex that
        has no neighbor in D; all other triangles lie inside the kernel.
    """
    require_degenerate_set(graph, deletion_set)
    D = deletion_set.vertices
    d = deletion_set.d

    touches_d = [False] * graph.n
    for x in D:
        for y in graph.neighbors(x):
            touches_d[y] = True

    remainder = graph.without_vertices(D)
    advice = TriangleSet(
        triangle
        for triangle in list_by_degeneracy(remainder)
        if not all(touches_d[v] for v in triangle)
    )

    kept = sorted(set(D) | {v for v in graph.vertices() if touches_d[v]})
    kept_set = set(kept)
    edges = [(u, v) for u, v in graph.edges() if u in kept_set and v in kept_set]

    has_advice = len(advice) > 0
    sentinel_labels = (graph.n, graph.n + 1, graph.n + 2) if has_advice else ()
    kernel_graph, sentinel_ids = _kernel_graph(kept, edges, sentinel_labels, sentinel_edges=has_advice)

    max_degree_d = max((graph.degree(x) for x in D), default=0)
    kernel = EnumAdviceKernel(
        kind="dtdd-maxdeg",
        kernel_graph=kernel_graph,
        advice=DtddMaxdegAdvice(advice),
        param_in=len(D),
        param_out=len(D),
        sentinel=Triangle(*sentinel_ids) if has_advice else None,
        vertex_bound=len(D) * (max_degree_d + 1) + 3,
        edge_bound=len(D) * max_degree_d * (d + 1) + 3,
        input_n=graph.n,
        details={"d": d, "delta_d": max_degree_d},
    )
    logging.info(
        f"Deletion-set/max-degree kernel: |D|={len(D)}, Delta_D={max_degree_d}, "
        f"{kernel_graph.n} vertices, {kernel_graph.m} edges, {len(advice)} advice triangles"
    )

    return kernel


# ------------------------------------------------------------------------------
def _triangles_one_in_d(graph, D, remainder, ordering):
    """
    Triangles {v, u, w} with v in D and u, w outside D. The edge {u, w} lies
    in G - D, so w is found once among the later neighbors of u.
    """
    triangles = []
    for v in sorted(D):
        v_neighbors = graph.neighbor_set(v)
        for u in graph.neighbors(v):
            if u in D:
                continue
            for w in ordering.later_neighbors(remainder, u):
                if w in v_neighbors:
                    triangles.append(Triangle.of(v, u, w))

    return triangles


# ------------------------------------------------------------------------------
def dtdd_kernelize(graph, deletion_set, limit=20) -> EnumAdviceKernel:
    """
    Kernel with at most |D| + 2^|D| + 3 vertices.

    1. T1 = triangles with at most one vertex in D: the triangles of G - D
       by forward listing, plus a sweep over v in D, u in N(v) - D and the
       later neighbors of u.
    2. Delete every edge without an endpoint in D and group V - D by
       neighborhood inside D. One representative per group stays in the
       kernel; groups with an empty neighborhood in D are dropped, their
       members lie in no triangle with two D-vertices.
    3. Add three vertices a, b, c, joined to a triangle iff T1 is nonempty.

    Raises:
    --------
    ParameterTooLarge:
        If |D| > limit.

    NotDeletionSet:
        If G - D is not d-degenerate.
    """
    D = deletion_set.vertices
    if len(D) > limit:
        raise ParameterTooLarge(
            "|D|",
            len(D),
            limit,
            resolution="Use --algo=dtdd-maxdeg or --algo=degeneracy for large deletion sets.",
        )
    require_degenerate_set(graph, deletion_set)

    remainder = graph.without_vertices(D)
    ordering = degeneracy_ordering(remainder)
    t1 = list_by_degeneracy(remainder, ordering) + _triangles_one_in_d(graph, D, remainder, ordering)
    t1 = TriangleSet(t1)

    pruned = graph.without_edges(remainder.edges())
    parts = [part for part in modules_wrt(pruned, D) if part.signature]
    module_map = {part.representative: part.members for part in parts}

    kept = sorted(D) + [part.representative for part in parts]
    kept_set = set(kept)
    edges = [(u, v) for u, v in pruned.edges() if u in kept_set and v in kept_set]
    sentinel_labels = (graph.n, graph.n + 1, graph.n + 2)
    has_t1 = len(t1) > 0
    kernel_graph, sentinel_ids = _kernel_graph(kept, edges, sentinel_labels, sentinel_edges=has_t1)

    kernel = EnumAdviceKernel(
        kind="dtdd",
        kernel_graph=kernel_graph,
        advice=DtddAdvice(t1, module_map, sentinel_ids),
        param_in=len(D),
        param_out=len(D),
        sentinel=Triangle(*sentinel_ids) if has_t1 else None,
        vertex_bound=len(D) + 2 ** len(D) + 3,
        input_n=graph.n,
        details={"d": deletion_set.d, "parts": len(parts)},
    )
    logging.info(
        f"Deletion-set kernel: |D|={len(D)}, {len(parts)} module parts, "
        f"{kernel_graph.n} vertices, {kernel_graph.m} edges, |T1|={len(t1)}"
    )

    return kernel


# ------------------------------------------------------------------------------
def dtdd_expand(triangle, advice, labels=None):
    """
    The sentinel expands to T1. Any other kernel triangle {x1, x2, x3}
    expands to all {v1, v2, v3} with vi in M(xi), where M(x) = {x} on D.
    """
    if set(triangle) == set(advice.sentinel_ids):
        assert len(advice.t1) > 0, "sentinel edges present with empty T1"
        yield from advice.t1
        return

    x1, x2, x3 = _map_triangle(triangle, labels)
    module_map = advice.module_map
    groups = [sorted(module_map.get(x, (x,))) for x in (x1, x2, x3)]
    for v1, v2, v3 in itertools.product(*groups):
        yield Triangle.of(v1, v2, v3)


################################################################################
#
# Pipeline and output
#
################################################################################


def solve_via_kernel(kernel) -> TriangleSet:
    """
    Lists the kernel's triangles with the edge-intersect enumerator and
    expands each of them.
    """
    kernel_triangles = enumerate_edge_intersect(kernel.kernel_graph)
    triangles = kernel.expand_all(kernel_triangles)
    logging.info(
        f"{len(kernel_triangles)} kernel triangles expanded to {len(triangles)} triangles"
    )

    return triangles


# ------------------------------------------------------------------------------
def _verdict(ok):
    return "ok" if ok else "VIOLATED"


# ------------------------------------------------------------------------------
def write_kernel_files(kernel, graph, base):
    """
    Writes `<base>.kernel.edges`, `<base>.advice.json` and `<base>.meta`.

    Both the kernel edge list and the advice file use the input graph's
    labels. The sentinel vertices, which have no input label, are written as
    the three labels following the largest input label and are listed under
    `sentinel_ids`.

    Returns:
    --------
    list of Path:
        The files written.
    """
    base = Path(base)
    labels = graph.original_labels
    kernel_graph = kernel.kernel_graph
    first_sentinel = max(labels, default=-1) + 1

    def external(kernel_vertex):
        vertex = kernel_graph.original_labels[kernel_vertex]
        if vertex < graph.n:
            return labels[vertex]
        return first_sentinel + vertex - graph.n

    # Kernel
    # ---------------
    kernel_out = base.with_name(f"{base.name}.kernel.edges")
    pairs = sorted(
        (min(external(u), external(v)), max(external(u), external(v))) for u, v in kernel_graph.edges()
    )
    with open(kernel_out, "w", encoding="utf-8") as f:
        f.write(f"# {kernel.kind} kernel, input labels, sentinels from {first_sentinel}\n")
        f.write("".join(f"{u} {v}\n" for u, v in pairs))

    # Advice
    # ---------------
    def label_triangle(triangle):
        return sorted(labels[v] for v in triangle)

    advice_out = base.with_name(f"{base.name}.advice.json")
    advice = kernel.advice
    advice_json = {"kind": kernel.kind, "labels": list(labels)}
    if kernel.kind == "dtdd":
        advice_json["t1"] = [label_triangle(t) for t in advice.t1.sorted()]
        advice_json["module_map"] = [
            f"{labels[rep]}: " + " ".join(str(labels[v]) for v in sorted(members))
            for rep, members in sorted(advice.module_map.items())
        ]
        advice_json["sentinel_ids"] = [external(i) for i in advice.sentinel_ids]
    else:
        advice_json["triangles"] = [label_triangle(t) for t in advice.outside_triangles.sorted()]
        advice_json["sentinel_ids"] = (
            [external(i) for i in kernel.sentinel] if kernel.sentinel else []
        )
    with open(advice_out, "w", encoding="utf-8") as f:
        json.dump(advice_json, f, ensure_ascii=False, indent=4)

    # Meta
    # ---------------
    meta_out = base.with_name(f"{base.name}.meta")
    lines = [
        f"param={kernel.kind}",
        f"param_in={kernel.param_in}",
        f"param_out={kernel.param_out}",
        f"vertices={kernel_graph.n} bound={kernel.vertex_bound} {_verdict(kernel.vertices_ok())}",
    ]
    if kernel.edge_bound is not None:
        lines.append(f"edges={kernel_graph.m} bound={kernel.edge_bound} {_verdict(kernel.edges_ok())}")
    else:
        lines.append(f"edges={kernel_graph.m}")
    lines.append(f"advice={kernel.advice_size()}")
    for key, value in kernel.details.items():
        lines.append(f"{key}={value}")
    with open(meta_out, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")

    logging.info(f"Kernel written to {kernel_out}, {advice_out}, {meta_out}")

    return [kernel_out, advice_out, meta_out]
