"""
Tests for the enum-advice kernels: size bounds, kernel/input equivalence on
triangle existence, and disjoint and complete expansion.
"""

import json

import numpy as np
import pytest

from FPT_Triangles import generators
from FPT_Triangles.Graph.graph import DeletionSet, Graph, Triangle, TriangleSet, read_edge_list
from FPT_Triangles.Graph.structure import feedback_edge_set, greedy_ddeg_deletion_set
from FPT_Triangles.errors import NotDeletionSet, NotFeedbackSet, ParameterTooLarge
from FPT_Triangles.kernels import (
    dtdd_expand,
    dtdd_kernelize,
    dtdd_maxdeg_kernelize,
    fes_expand,
    fes_kernelize,
    lemma_festri,
    solve_via_kernel,
    write_kernel_files,
)
from FPT_Triangles.oracle import enumerate_edge_intersect
from test.helpers import graph_of, oracle


# ------------------------------------------------------------------------------
def check_axioms(kernel, graph):
    """
    Kernel has a triangle iff the input has one; expansions of distinct
    kernel triangles are disjoint; together they give every input triangle.
    """
    expected = oracle(graph)
    kernel_triangles = enumerate_edge_intersect(kernel.kernel_graph)
    kernel_triangles.validate(kernel.kernel_graph)
    assert (len(kernel_triangles) > 0) == (len(expected) > 0)

    seen = set()
    for triangle in kernel_triangles:
        expanded = list(kernel.expand(triangle))
        assert len(set(expanded)) == len(expanded)
        assert not seen & set(expanded)
        seen |= set(expanded)
    assert seen == expected.as_set()
    TriangleSet(seen).validate(graph)


# ------------------------------------------------------------------------------
def degenerate_set(graph, vertices, d):
    return DeletionSet(frozenset(vertices), "degenerate", d)


################################################################################
#
# Feedback edge number
#
################################################################################


def test_festri_examples(k3, k4):
    tree = generators.random_tree(12, 4)
    assert len(lemma_festri(tree, set())) == 0
    assert lemma_festri(k3, {(0, 1)}) == {Triangle(0, 1, 2)}

    # BFS forest is the star at 0, so {1, 2, 3} lies entirely in F
    F = feedback_edge_set(k4)
    assert F == {(1, 2), (1, 3), (2, 3)}
    triangles = lemma_festri(k4, F)
    assert triangles == {Triangle(0, 1, 2), Triangle(0, 1, 3), Triangle(0, 2, 3)}
    assert len(triangles) <= 2 * len(F)

    # with the path 0-1-2-3 as forest every triangle keeps a forest edge
    path_F = {(0, 2), (0, 3), (1, 3)}
    assert lemma_festri(k4, path_F) == oracle(k4)


def test_festri_needs_a_feedback_set(k4):
    with pytest.raises(NotFeedbackSet):
        lemma_festri(k4, {(0, 1)})


def test_festri_lists_triangles_with_a_forest_edge():
    rng = np.random.default_rng(5)
    for _ in range(50):
        graph = generators.gnp(int(rng.integers(5, 30)), 0.3, rng)
        F = feedback_edge_set(graph)
        found = lemma_festri(graph, F)
        assert not found.has_duplicates()
        assert len(found) <= 2 * len(F)
        expected = {t for t in oracle(graph) if any(edge not in F for edge in ((t.a, t.b), (t.a, t.c), (t.b, t.c)))}
        assert found == expected


def test_fes_kernel_of_a_tree():
    kernel = fes_kernelize(generators.random_tree(20, 9))
    assert kernel.kernel_graph.n == 0
    assert len(kernel.advice.outside_triangles) == 0
    assert kernel.sentinel is None


def test_fes_kernel_of_k3(k3):
    kernel = fes_kernelize(k3)
    assert kernel.param_in == 1
    assert kernel.kernel_graph.n == 5
    assert kernel.vertex_bound == 5
    assert kernel.kernel_graph.m == 4
    assert kernel.edge_bound == 4
    assert kernel.advice.outside_triangles == {Triangle(0, 1, 2)}
    assert kernel.kernel_graph.original_labels[2:] == (3, 4, 5)
    check_axioms(kernel, k3)


def test_fes_kernel_two_triangles():
    graph = generators.disjoint_union(generators.complete(3), generators.complete(3))
    kernel = fes_kernelize(graph)
    assert kernel.param_in == 2
    assert len(kernel.advice.outside_triangles) == 2
    assert kernel.kernel_graph.n <= 7
    check_axioms(kernel, graph)


def test_fes_expand():
    advice_triangles = TriangleSet([Triangle(0, 1, 2), Triangle(1, 2, 3), Triangle(2, 3, 4), Triangle(3, 4, 5)])

    class Advice:
        outside_triangles = advice_triangles

    sentinel = Triangle(6, 7, 8)
    assert list(fes_expand(Triangle(6, 7, 8), Advice, sentinel)) == advice_triangles.triangles
    assert list(fes_expand((2, 1, 0), Advice, sentinel)) == [Triangle(0, 1, 2)]


def test_fes_kernel_bounds_on_random_instances():
    """
    200 trees with at most 10 chords: at most 2k+3 vertices, k+3 edges and
    2k advice triangles, and the enumeration axioms.
    """
    rng = np.random.default_rng(17)
    for _ in range(200):
        n = int(rng.integers(4, 40))
        chords = int(rng.integers(0, 11))
        graph = generators.tree_with_chords(n, chords, rng)
        kernel = fes_kernelize(graph)
        k = kernel.param_in
        assert k <= 10
        assert kernel.kernel_graph.n <= 2 * k + 3
        assert kernel.kernel_graph.m <= k + 3
        assert kernel.check_bounds()
        assert len(kernel.advice.outside_triangles) <= 2 * k
        assert kernel.param_out <= k
        check_axioms(kernel, graph)


################################################################################
#
# Distance to d-degenerate, max-degree kernel
#
################################################################################


def test_maxdeg_kernel_of_k4(k4):
    kernel = dtdd_maxdeg_kernelize(k4, degenerate_set(k4, {0}, 2))
    assert len(kernel.advice.outside_triangles) == 0
    assert kernel.sentinel is None
    assert kernel.kernel_graph == k4
    assert len(enumerate_edge_intersect(kernel.kernel_graph)) == 4
    check_axioms(kernel, k4)


def test_maxdeg_kernel_two_triangles():
    graph = generators.disjoint_union(generators.complete(3), generators.complete(3))
    kernel = dtdd_maxdeg_kernelize(graph, degenerate_set(graph, {0, 3}, 1))
    assert kernel.kernel_graph.n == 6
    check_axioms(kernel, graph)


def test_maxdeg_kernel_keeps_far_triangles_in_advice():
    # triangle {4, 5, 6} hangs off vertex 3, which is the only neighbor of D = {0}
    graph = Graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    kernel = dtdd_maxdeg_kernelize(graph, degenerate_set(graph, {0}, 2))
    assert kernel.advice.outside_triangles == {Triangle(4, 5, 6)}
    assert kernel.sentinel is not None
    check_axioms(kernel, graph)


def test_maxdeg_kernel_triangle_free(c6):
    kernel = dtdd_maxdeg_kernelize(c6, degenerate_set(c6, {0}, 1))
    assert len(kernel.advice.outside_triangles) == 0
    assert len(enumerate_edge_intersect(kernel.kernel_graph)) == 0


def test_maxdeg_kernel_rejects_bad_sets(k4):
    with pytest.raises(NotDeletionSet):
        dtdd_maxdeg_kernelize(k4, degenerate_set(k4, {0}, 1))
    with pytest.raises(NotDeletionSet):
        dtdd_maxdeg_kernelize(k4, DeletionSet(frozenset({0, 1}), "bipartite"))


################################################################################
#
# Distance to d-degenerate, 2^|D| kernel
#
################################################################################


def test_dtdd_kernel_of_star():
    star = generators.star(4)
    kernel = dtdd_kernelize(star, degenerate_set(star, {0}, 0))
    assert len(kernel.advice.t1) == 0
    assert kernel.advice.module_map == {1: frozenset({1, 2, 3, 4})}
    # center, one representative and the three sentinel vertices
    assert kernel.kernel_graph.n == 5
    assert kernel.kernel_graph.m == 1
    assert kernel.sentinel is None
    check_axioms(kernel, star)


def test_dtdd_kernel_of_k4(k4):
    kernel = dtdd_kernelize(k4, degenerate_set(k4, {0, 1}, 1))
    assert kernel.advice.t1 == {Triangle(0, 2, 3), Triangle(1, 2, 3)}
    assert kernel.advice.module_map == {2: frozenset({2, 3})}
    assert kernel.details["parts"] == 1
    assert kernel.kernel_graph.n <= 2 + 4 + 3
    assert sorted(dtdd_expand(Triangle(0, 1, 2), kernel.advice)) == [Triangle(0, 1, 2), Triangle(0, 1, 3)]
    assert solve_via_kernel(kernel) == oracle(k4)
    check_axioms(kernel, k4)


def test_dtdd_kernel_without_deletion_set(k3):
    kernel = dtdd_kernelize(k3, degenerate_set(k3, set(), 2))
    assert kernel.advice.t1 == oracle(k3)
    assert kernel.kernel_graph.n == 3
    assert kernel.kernel_graph.original_labels == (3, 4, 5)
    check_axioms(kernel, k3)


def test_dtdd_expand_product():
    graph = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    kernel = dtdd_kernelize(graph, degenerate_set(graph, {0, 1}, 0))
    assert kernel.advice.module_map == {2: frozenset({2, 3, 4})}
    assert len(list(dtdd_expand(Triangle(0, 1, 2), kernel.advice))) == 3
    check_axioms(kernel, graph)


def test_dtdd_limit(k4):
    with pytest.raises(ParameterTooLarge) as err:
        dtdd_kernelize(k4, degenerate_set(k4, {0, 1, 2}, 0), limit=2)
    assert err.value.value == 3


def test_kernels_on_random_instances():
    """
    200 random instances with |D| <= 8 from the greedy heuristic: the
    |D| + 2^|D| + 3 vertex bound, the max-degree kernel bounds, and the
    enumeration axioms for both.
    """
    rng = np.random.default_rng(23)
    checked = 0
    while checked < 200:
        n = int(rng.integers(5, 40))
        graph = generators.gnp(n, float(rng.choice([0.1, 0.2, 0.3])), rng)
        d = int(rng.integers(0, 3))
        deletion_set = greedy_ddeg_deletion_set(graph, d)
        if len(deletion_set) > 8:
            continue
        checked += 1

        kernel = dtdd_kernelize(graph, deletion_set)
        D = len(deletion_set)
        assert kernel.kernel_graph.n <= D + 2**D + 3
        assert kernel.check_bounds()
        check_axioms(kernel, graph)

        maxdeg = dtdd_maxdeg_kernelize(graph, deletion_set)
        assert maxdeg.check_bounds()
        check_axioms(maxdeg, graph)


################################################################################
#
# Output files
#
################################################################################


def test_write_kernel_files(tmp_path):
    graph = graph_of("10 20\n20 30\n10 30\n")
    kernel = fes_kernelize(graph)
    paths = write_kernel_files(kernel, graph, tmp_path / "k3")
    assert [path.name for path in paths] == ["k3.kernel.edges", "k3.advice.json", "k3.meta"]

    meta = paths[2].read_text(encoding="utf-8")
    assert "vertices=5 bound=5 ok" in meta
    assert "edges=4 bound=4 ok" in meta
    assert "advice=1" in meta

    with open(paths[1], encoding="utf-8") as fopen:
        advice = json.load(fopen)
    assert advice["kind"] == "fes"
    assert advice["triangles"] == [[10, 20, 30]]
    assert advice["sentinel_ids"] == [31, 32, 33]

    kernel_edges = paths[0].read_text(encoding="utf-8").splitlines()
    assert kernel_edges[0].startswith("#")
    assert kernel_edges[1:] == ["20 30", "31 32", "31 33", "32 33"]
    assert read_edge_list(paths[0]).m == 4

    edges = paths[0].read_text(encoding="utf-8").splitlines()
    assert "3 4" in edges and len(edges) == 4


def test_write_dtdd_kernel_files(tmp_path, k4):
    kernel = dtdd_kernelize(k4, degenerate_set(k4, {0, 1}, 1))
    paths = write_kernel_files(kernel, k4, tmp_path / "k4")
    with open(paths[1], encoding="utf-8") as fopen:
        advice = json.load(fopen)
    assert advice["module_map"] == ["2: 2 3"]
    assert advice["t1"] == [[0, 2, 3], [1, 2, 3]]
    assert "parts=1" in paths[2].read_text(encoding="utf-8")
