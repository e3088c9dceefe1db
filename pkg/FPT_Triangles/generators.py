"""
Structured and random graph families for tests, benchmarks and the
`generate` command. Random families take a numpy Generator or a seed.
"""

import itertools

import numpy as np

from FPT_Triangles.Graph.graph import Graph


# ------------------------------------------------------------------------------
def _rng(rng):
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


# ------------------------------------------------------------------------------
def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


# ------------------------------------------------------------------------------
def path(n):
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


# ------------------------------------------------------------------------------
def cycle(n):
    assert n >= 3
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


# ------------------------------------------------------------------------------
def star(leaves):
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


# ------------------------------------------------------------------------------
def wheel(rim):
    """
    Hub 0 joined to the cycle 1..rim.
    """
    assert rim >= 3
    edges = [(0, v) for v in range(1, rim + 1)]
    edges += [(v, v % rim + 1) for v in range(1, rim + 1)]
    return Graph(rim + 1, edges)


# ------------------------------------------------------------------------------
def complete_bipartite(a, b):
    return Graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


# ------------------------------------------------------------------------------
def petersen():
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


# ------------------------------------------------------------------------------
def disjoint_union(first, second):
    shift = first.n
    edges = list(first.edges()) + [(u + shift, v + shift) for u, v in second.edges()]
    return Graph(first.n + second.n, edges)


# ------------------------------------------------------------------------------
def with_apices(graph, apices):
    """
    Adds `apices` new vertices, each joined to every old vertex.
    """
    n = graph.n
    edges = list(graph.edges())
    for a in range(n, n + apices):
        edges += [(v, a) for v in range(n)]
    return Graph(n + apices, edges)


################################################################################
#
# Random families
#
################################################################################


def gnp(n, p, rng=None):
    """
    Erdos-Renyi G(n, p).
    """
    rng = _rng(rng)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(len(rows)) < p
    return Graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))


# ------------------------------------------------------------------------------
def random_tree(n, rng=None):
    """
    Random recursive tree: vertex v >= 1 hangs below a uniform earlier vertex.
    """
    rng = _rng(rng)
    if n <= 1:
        return Graph(max(n, 0))
    parents = (rng.random(n - 1) * np.arange(1, n)).astype(int)
    return Graph(n, [(int(p), v) for v, p in zip(range(1, n), parents)])


# ------------------------------------------------------------------------------
def tree_with_chords(n, chords, rng=None):
    """
    Random tree plus `chords` random extra edges; feedback edge number is
    exactly `chords` when the graph is large enough to hold them.
    """
    rng = _rng(rng)
    tree = random_tree(n, rng)
    edges = set(tree.edges())
    target = min(len(edges) + chords, n * (n - 1) // 2)
    while len(edges) < target:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u == v:
            continue
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, sorted(edges))


# ------------------------------------------------------------------------------
def random_degenerate(n, d, rng=None):
    """
    Each vertex v joins between 1 and d distinct earlier vertices, so the
    degeneracy is at most d and m is about n * (d + 1) / 2.
    """
    rng = _rng(rng)
    edges = []
    for v in range(1, n):
        k = min(int(rng.integers(1, d + 1)), v)
        targets = set()
        while len(targets) < k:
            targets.add(int(rng.integers(0, v)))
        edges += [(u, v) for u in sorted(targets)]
    return Graph(max(n, 0), edges)


# ------------------------------------------------------------------------------
def random_cograph(n, rng=None, join_rate=0.5):
    """
    Random cotree: singletons are combined pairwise by union or join.
    """
    rng = _rng(rng)
    pool = [[v] for v in range(n)]
    edges = []
    while len(pool) > 1:
        first = pool.pop(int(rng.integers(len(pool))))
        second = pool.pop(int(rng.integers(len(pool))))
        if rng.random() < join_rate:
            edges += [(min(x, y), max(x, y)) for x in first for y in second]
        pool.append(first + second)
    return Graph(n, edges)


# ------------------------------------------------------------------------------
def random_interval_graph(n, rng=None, span=None):
    """
    Intersection graph of n random intervals; interval graphs are chordal.
    """
    rng = _rng(rng)
    span = span or max(n, 1)
    starts = rng.integers(0, span, size=n)
    lengths = rng.integers(0, max(span // 4, 1) + 1, size=n)
    ends = starts + lengths
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if starts[u] <= ends[v] and starts[v] <= ends[u]
    ]
    return Graph(n, edges)


# ------------------------------------------------------------------------------
def apex_over_bipartite(a, b, p, apices=1, rng=None):
    """
    Random bipartite graph with sides of size a and b, plus apices joined to
    every vertex (and to each other).

    Returns:
    --------
    (Graph, frozenset):
        The graph and its apex vertices, a deletion set to bipartite graphs.
    """
    rng = _rng(rng)
    n = a + b
    edges = [(x, a + y) for x in range(a) for y in range(b) if rng.random() < p]
    apex_ids = range(n, n + apices)
    for apex in apex_ids:
        edges += [(v, apex) for v in range(n)]
    edges += list(itertools.combinations(apex_ids, 2))
    return Graph(n + apices, edges), frozenset(apex_ids)


# ------------------------------------------------------------------------------
FAMILIES = {
    "gnp": lambda args, rng: gnp(args.n, args.p, rng),
    "tree": lambda args, rng: random_tree(args.n, rng),
    "tree-chords": lambda args, rng: tree_with_chords(args.n, args.chords, rng),
    "degenerate": lambda args, rng: random_degenerate(args.n, args.d, rng),
    "cograph": lambda args, rng: random_cograph(args.n, rng),
    "interval": lambda args, rng: random_interval_graph(args.n, rng),
    "apex-bipartite": lambda args, rng: apex_over_bipartite(args.n // 2, args.n - args.n // 2, args.p, 1, rng)[0],
    "wheel": lambda args, rng: wheel(args.n),
    "complete": lambda args, rng: complete(args.n),
    "cycle": lambda args, rng: cycle(args.n),
    "path": lambda args, rng: path(args.n),
    "petersen": lambda args, rng: petersen(),
}
