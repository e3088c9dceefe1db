"""
Tests for k-expression parsing, evaluation, the binarized decomposition and
the clique-width triangle enumeration.
"""

import re

import numpy as np
import pytest

from FPT_Triangles import generators
from FPT_Triangles.Graph.cotree import Cotree, build_cotree
from FPT_Triangles.cliquewidth import (
    binarize_decomposition,
    cotree_to_kexpression,
    cw_enumerate,
    decomposition_nodes,
    eval_kexpression,
    format_kexpression,
    parse_kexpression,
    random_kexpression,
    read_kexpression,
)
from FPT_Triangles.errors import KExpressionSyntax, SameLabelEta, Unsupported
from test.helpers import oracle

K2 = "eta(1,2,u(v(1),v(2)))"
K3 = "eta(1,2,u(rho(2,1,eta(1,2,u(v(1),v(2)))),v(2)))"

# path a-b-c-d with both ends on label 1 and the inner vertices on label 3,
# closed into a 5-cycle by a fresh vertex on label 2
C5 = "eta(1,2,u(rho(2,3,eta(2,3,u(eta(1,2,u(v(1),v(2))),eta(3,1,u(v(3),v(1)))))),v(2)))"


# ------------------------------------------------------------------------------
def strip(text):
    return re.sub(r"\s+", "", text)


################################################################################
#
# Parsing and evaluation
#
################################################################################


def test_parse_and_eval_k2():
    expression = parse_kexpression(K2)
    assert (expression.width, expression.leaf_count) == (2, 2)
    graph = eval_kexpression(expression)
    assert (graph.n, graph.m) == (2, 1)


def test_parse_and_eval_k3():
    graph = eval_kexpression(parse_kexpression(K3))
    assert graph == generators.complete(3)


def test_eval_c5():
    expression = parse_kexpression(C5)
    assert expression.width == 3
    graph = eval_kexpression(expression)
    assert graph.edge_set() == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


def test_eval_edge_cases():
    edgeless = eval_kexpression(parse_kexpression("u(u(v(1),v(2)),v(1))"))
    assert (edgeless.n, edgeless.m) == (3, 0)

    single = parse_kexpression("v(3)")
    assert single.width == 3
    assert eval_kexpression(single).n == 1

    # joining an already joined pair adds no parallel edge
    twice = eval_kexpression(parse_kexpression("eta(1,2,eta(1,2,u(v(1),v(2))))"))
    assert twice.m == 1

    # relabelling a missing label changes nothing
    assert eval_kexpression(parse_kexpression("rho(3,1," + K2 + ")")).m == 1


def test_parse_accepts_whitespace_and_comments():
    text = "# triangle\neta(1, 2,\n  u(rho(2,1, eta(1,2, u(v(1), v(2)))),\n    v(2)))\n"
    assert format_kexpression(parse_kexpression(text)) == K3


def test_same_label_eta():
    with pytest.raises(SameLabelEta) as err:
        parse_kexpression("u(v(1),\neta(1,1,v(1)))")
    assert (err.value.line, err.value.col) == (2, 1)
    assert err.value.label == 1


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("x(1)", 1, 1),
        ("v(0)", 1, 3),
        ("u(v(1))", 1, 1),
        ("v(1) v(2)", 1, 6),
        ("u(v(1),\n  w(2))", 2, 3),
        ("eta(1,2,v(1)", 1, 13),
        ("v(1)$", 1, 5),
    ],
)
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(KExpressionSyntax) as err:
        parse_kexpression(text)
    assert (err.value.line, err.value.col) == (line, col)


def test_empty_input():
    with pytest.raises(KExpressionSyntax):
        parse_kexpression("  # nothing\n")


def test_read_kexpression(tmp_path):
    path = tmp_path / "k3.kexpr"
    path.write_text(K3 + "\n", encoding="utf-8")
    assert format_kexpression(read_kexpression(path)) == K3


def test_format_round_trip():
    for seed in range(20):
        expression = random_kexpression(seed, 15, 3)
        text = format_kexpression(expression)
        assert format_kexpression(parse_kexpression(text)) == text
        assert eval_kexpression(parse_kexpression(text)) == eval_kexpression(expression)


################################################################################
#
# Decomposition
#
################################################################################


def test_binarize_single_vertex():
    root = binarize_decomposition(parse_kexpression("v(2)"))
    assert root.kind == "leaf"
    assert root.h == 1
    assert root.vertices() == [0]


def test_binarize_k2():
    root = binarize_decomposition(parse_kexpression(K2))
    assert root.kind == "union"
    assert root.twin_classes() == {1: [0], 2: [1]}
    assert [type(op).__name__ for op in root.chain] == ["InsertEdges"]


def test_binarize_k3():
    root = binarize_decomposition(parse_kexpression(K3))
    unions = [node for node in decomposition_nodes(root) if node.kind == "union"]
    assert len(unions) == 2
    assert all(node.h <= 2 for node in unions)
    assert unions[0].twin_classes() == {1: [0, 1]}
    assert root.twin_classes() == {1: [0, 1], 2: [2]}


def test_binarize_respects_width():
    rng = np.random.default_rng(4)
    for _ in range(30):
        expression = random_kexpression(rng, 25, 3)
        root = binarize_decomposition(expression)
        nodes = decomposition_nodes(root)
        assert all(node.h <= expression.width for node in nodes)
        assert root.vertices() == list(range(expression.leaf_count))
        assert sum(node.kind == "leaf" for node in nodes) == expression.leaf_count


################################################################################
#
# Triangle enumeration
#
################################################################################


def test_cw_enumerate_examples():
    assert len(cw_enumerate(parse_kexpression(K2))) == 0
    assert cw_enumerate(parse_kexpression(K3)).triangles == [(0, 1, 2)]
    assert len(cw_enumerate(parse_kexpression(C5))) == 0


def test_k4_as_two_expression():
    expression, leaf_vertices = cotree_to_kexpression(build_cotree(generators.complete(4)))
    assert expression.width == 2
    assert sorted(leaf_vertices) == [0, 1, 2, 3]
    triangles = cw_enumerate(expression, verify_twins=True)
    assert len(triangles) == 4


def test_cotree_to_kexpression_matches_the_cograph():
    for seed in range(10):
        graph = generators.random_cograph(25, seed)
        cotree = build_cotree(graph)
        expression, leaf_vertices = cotree_to_kexpression(cotree)
        evaluated = eval_kexpression(expression)
        mapped = {tuple(sorted((leaf_vertices[x], leaf_vertices[y]))) for x, y in evaluated.edges()}
        assert mapped == graph.edge_set()
        assert len(cw_enumerate(expression)) == len(oracle(graph))


def test_cotree_to_kexpression_needs_vertices():
    with pytest.raises(Unsupported):
        cotree_to_kexpression(Cotree(None))


def test_cw_enumerate_agrees_with_the_oracle():
    """
    100 random expressions with at most 40 leaves and width at most 4.
    """
    rng = np.random.default_rng(2718)
    for _ in range(100):
        leaves = int(rng.integers(1, 41))
        width = int(rng.integers(1, 5))
        expression = random_kexpression(rng, leaves, width)
        graph = eval_kexpression(expression)
        triangles = cw_enumerate(expression, verify_twins=True)
        assert not triangles.has_duplicates()
        triangles.validate(graph)
        assert triangles == oracle(graph)


def test_deeply_nested_expression():
    # a star: every new vertex on label 2 is joined to the centre on label 1
    text = "v(1)"
    for _ in range(1500):
        text = f"eta(1,2,u({text},v(2)))"
    expression = parse_kexpression(text)
    assert expression.leaf_count == 1501
    graph = eval_kexpression(expression)
    assert graph.m == 1500
    assert len(cw_enumerate(expression)) == 0
    assert format_kexpression(expression) == strip(text)
