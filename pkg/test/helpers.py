"""
Oracles, instance corpora and hypothesis strategies shared by the tests.
"""

import itertools

import numpy as np
from hypothesis import strategies as st

from FPT_Triangles import generators
from FPT_Triangles.Graph.graph import Graph, parse_edge_list
from FPT_Triangles.oracle import enumerate_triples


# ------------------------------------------------------------------------------
def oracle(graph):
    """
    Brute-force triangle set of a test graph, never limited by size.
    """
    return enumerate_triples(graph, limit=max(graph.n, 1))


# ------------------------------------------------------------------------------
def graph_of(text):
    return parse_edge_list(text)


# ------------------------------------------------------------------------------
def gnp_corpus(count, seed=2024, sizes=(5, 60), densities=(0.1, 0.3, 0.7)):
    """
    count seeded G(n, p) graphs, n uniform in sizes, p cycling through
    densities.
    """
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(sizes[0], sizes[1] + 1))
        p = densities[i % len(densities)]
        yield generators.gnp(n, p, rng)


# ------------------------------------------------------------------------------
def structured_corpus(seed=7):
    """
    Trees with chords, wheels, cographs, interval graphs, apex-over-bipartite
    graphs and a few classics.
    """
    rng = np.random.default_rng(seed)
    graphs = []
    for n in (8, 15, 30):
        graphs.append(generators.tree_with_chords(n, 3, rng))
        graphs.append(generators.random_cograph(n, rng))
        graphs.append(generators.random_interval_graph(n, rng))
        graphs.append(generators.apex_over_bipartite(n // 2, n - n // 2, 0.4, 2, rng)[0])
        graphs.append(generators.random_degenerate(n, 3, rng))
    for rim in (3, 5, 8):
        graphs.append(generators.wheel(rim))
    graphs += [
        generators.complete(6),
        generators.petersen(),
        generators.complete_bipartite(3, 3),
        generators.disjoint_union(generators.complete(3), generators.complete(4)),
    ]

    return graphs


# ------------------------------------------------------------------------------
@st.composite
def graphs(draw, min_n=0, max_n=12):
    """
    Arbitrary simple graphs on up to max_n vertices.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, keep in zip(pairs, chosen) if keep])
