"""
k-expressions and triangle enumeration along a k-expression.

Syntax (prefix notation, whitespace-insensitive, `#` starts a comment):

    v(i)          create a vertex with label i
    u(E1,E2)      disjoint union
    eta(i,j,E)    join every vertex labelled i to every vertex labelled j
    rho(i,j,E)    relabel i to j

Labels are integers >= 1. Vertices are numbered in leaf order.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional
import logging
import re

import numpy as np

from FPT_Triangles.Graph.cotree import CotreeLeaf
from FPT_Triangles.Graph.graph import Graph, Triangle, TriangleSet
from FPT_Triangles.errors import KExpressionSyntax, SameLabelEta, Unsupported


################################################################################
#
# Syntax tree
#
################################################################################


@dataclass(frozen=True)
class CreateVertex:
    label: int
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class Union:
    left: object
    right: object
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class InsertEdges:
    i: int
    j: int
    child: object
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class Rename:
    i: int
    j: int
    child: object
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class KExpression:
    """
    A parsed expression; width is the largest label used.
    """

    root: object
    width: int
    leaf_count: int


# ------------------------------------------------------------------------------
def _children(node):
    if isinstance(node, Union):
        return (node.left, node.right)
    if isinstance(node, (InsertEdges, Rename)):
        return (node.child,)
    return ()


# ------------------------------------------------------------------------------
def _postorder(root):
    """
    Yields every node after its children, left subtree first.
    """
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        children = _children(node)
        if expanded or not children:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(children):
            stack.append((child, False))


# ------------------------------------------------------------------------------
def _expression(root):
    width = 0
    leaves = 0
    for node in _postorder(root):
        if isinstance(node, CreateVertex):
            leaves += 1
            width = max(width, node.label)
        elif isinstance(node, (InsertEdges, Rename)):
            width = max(width, node.i, node.j)

    return KExpression(root, width, leaves)


################################################################################
#
# Parsing and formatting
#
################################################################################


_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<name>[A-Za-z_]+)|(?P<int>\d+)|(?P<punct>[(),])")
_ARITY = {"v": ("int",), "u": ("expr", "expr"), "eta": ("int", "int", "expr"), "rho": ("int", "int", "expr")}


@dataclass
class _Token:
    kind: str
    value: object
    line: int
    col: int


@dataclass
class _Frame:
    name: str
    line: int
    col: int
    args: list


# ------------------------------------------------------------------------------
def _tokenize(text):
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if match is None:
            raise KExpressionSyntax(line, col, f"unexpected character {text[pos]!r}")
        if match.group("name"):
            yield _Token("name", match.group("name"), line, col)
        elif match.group("int"):
            yield _Token("int", int(match.group("int")), line, col)
        elif match.group("punct"):
            yield _Token(match.group("punct"), match.group("punct"), line, col)
        newlines = text.count("\n", pos, match.end())
        if newlines:
            line += newlines
            line_start = text.rindex("\n", pos, match.end()) + 1
        pos = match.end()

    yield _Token("end", None, line, pos - line_start + 1)


# ------------------------------------------------------------------------------
def _build(frame):
    """
    Checks the arguments collected for one operation and builds its node.
    """
    expected = _ARITY[frame.name]
    args = frame.args
    if len(args) != len(expected):
        raise KExpressionSyntax(
            frame.line, frame.col, f"{frame.name} takes {len(expected)} arguments, got {len(args)}"
        )
    for kind, arg in zip(expected, args):
        if kind == "int" and not isinstance(arg, _Token):
            raise KExpressionSyntax(frame.line, frame.col, f"{frame.name} expects a label, got an expression")
        if kind == "expr" and isinstance(arg, _Token):
            raise KExpressionSyntax(arg.line, arg.col, f"{frame.name} expects an expression, got {arg.value}")
        if kind == "int" and arg.value < 1:
            raise KExpressionSyntax(arg.line, arg.col, "labels start at 1")

    position = {"line": frame.line, "col": frame.col}
    if frame.name == "v":
        return CreateVertex(args[0].value, **position)
    if frame.name == "u":
        return Union(args[0], args[1], **position)

    i, j, child = args[0].value, args[1].value, args[2]
    if frame.name == "eta":
        if i == j:
            raise SameLabelEta(frame.line, frame.col, i)
        return InsertEdges(i, j, child, **position)
    return Rename(i, j, child, **position)


# ------------------------------------------------------------------------------
def parse_kexpression(text) -> KExpression:
    """
    Parses a k-expression without recursion, so deeply nested expressions
    are fine.

    Raises:
    --------
    KExpressionSyntax:
        With line and column of the offending token or operation.

    SameLabelEta:
        For eta(i,i,...).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    tokens = _tokenize(text)
    stack = []
    root = None
    expect_value = True
    token = next(tokens)
    while True:
        if expect_value:
            if token.kind == "name":
                if token.value not in _ARITY:
                    raise KExpressionSyntax(token.line, token.col, f"unknown operation {token.value!r}")
                opening = next(tokens)
                if opening.kind != "(":
                    raise KExpressionSyntax(opening.line, opening.col, "expected '('")
                stack.append(_Frame(token.value, token.line, token.col, []))
            elif token.kind == "int" and stack:
                stack[-1].args.append(token)
                expect_value = False
            elif token.kind == "end":
                raise KExpressionSyntax(token.line, token.col, "unexpected end of input")
            else:
                raise KExpressionSyntax(token.line, token.col, f"unexpected {token.value!r}")
        elif not stack:
            if token.kind != "end":
                raise KExpressionSyntax(token.line, token.col, "trailing input after the expression")
            break
        elif token.kind == ",":
            expect_value = True
        elif token.kind == ")":
            node = _build(stack.pop())
            if stack:
                stack[-1].args.append(node)
            else:
                root = node
        else:
            raise KExpressionSyntax(token.line, token.col, "expected ',' or ')'")
        token = next(tokens)

    expression = _expression(root)
    logging.debug(f"Parsed k-expression with {expression.leaf_count} leaves, width {expression.width}")

    return expression


# ------------------------------------------------------------------------------
def read_kexpression(path) -> KExpression:
    with open(Path(path), "r", encoding="utf-8") as fopen:
        return parse_kexpression(fopen.read())


# ------------------------------------------------------------------------------
def format_kexpression(expression) -> str:
    text = {}
    for node in _postorder(expression.root):
        if isinstance(node, CreateVertex):
            text[id(node)] = f"v({node.label})"
        elif isinstance(node, Union):
            text[id(node)] = f"u({text.pop(id(node.left))},{text.pop(id(node.right))})"
        else:
            name = "eta" if isinstance(node, InsertEdges) else "rho"
            text[id(node)] = f"{name}({node.i},{node.j},{text.pop(id(node.child))})"

    return text[id(expression.root)]


################################################################################
#
# Evaluation
#
################################################################################


def eval_kexpression(expression) -> Graph:
    """
    Builds the graph of the expression. Vertex ids follow leaf order; an
    eta over an already joined pair adds no parallel edge.
    """
    groups = {}
    edges = set()
    vertex_count = 0
    for node in _postorder(expression.root):
        if isinstance(node, CreateVertex):
            groups[id(node)] = {node.label: [vertex_count]}
            vertex_count += 1
        elif isinstance(node, Union):
            merged = groups.pop(id(node.left))
            for label, vertices in groups.pop(id(node.right)).items():
                merged.setdefault(label, []).extend(vertices)
            groups[id(node)] = merged
        elif isinstance(node, InsertEdges):
            current = groups.pop(id(node.child))
            for x in current.get(node.i, ()):
                for y in current.get(node.j, ()):
                    edges.add((x, y) if x < y else (y, x))
            groups[id(node)] = current
        else:
            current = groups.pop(id(node.child))
            if node.i != node.j and node.i in current:
                current.setdefault(node.j, []).extend(current.pop(node.i))
            groups[id(node)] = current

    return Graph(vertex_count, sorted(edges))


################################################################################
#
# Decomposition
#
################################################################################


def _rope_items(rope):
    """
    Vertices of a class rope: an int, or a tuple of at least two ropes.
    """
    stack = [rope]
    while stack:
        item = stack.pop()
        if isinstance(item, int):
            yield item
        else:
            stack.extend(reversed(item))


# ------------------------------------------------------------------------------
def _join_ropes(ropes):
    return ropes[0] if len(ropes) == 1 else tuple(ropes)


################################################################################
@dataclass
class DecompNode:
    """
    Node of the binarized decomposition: a leaf (one vertex) or a union with
    two children, with the unary eta/rho chain above it folded in.

    classes maps every label present at the top of the chain to its twin
    class (a rope of vertices) and a representative vertex. class_maps holds,
    per child, the map child label -> label of the class containing it.
    """

    kind: str
    vertex: Optional[int] = None
    children: tuple = ()
    chain: list = field(default_factory=list)
    classes: dict = field(default_factory=dict)
    class_maps: tuple = ()

    # --------------------------------------------------------------------------
    @property
    def h(self):
        return len(self.classes)

    # --------------------------------------------------------------------------
    def twin_classes(self):
        return {label: sorted(_rope_items(rope)) for label, (rope, _) in self.classes.items()}

    # --------------------------------------------------------------------------
    def vertices(self):
        return sorted(v for rope, _ in self.classes.values() for v in _rope_items(rope))


# ------------------------------------------------------------------------------
def _apply_rename(node, i, j):
    """
    Relabels i to j on the node's classes and on its class maps.
    """
    if i == j or i not in node.classes:
        return
    rope, representative = node.classes.pop(i)
    if j in node.classes:
        other, other_representative = node.classes[j]
        node.classes[j] = ((other, rope), other_representative)
    else:
        node.classes[j] = (rope, representative)
    for class_map in node.class_maps:
        for label, target in class_map.items():
            if target == i:
                class_map[label] = j


# ------------------------------------------------------------------------------
def decomposition_nodes(root):
    """
    Post-order list of a decomposition tree.
    """
    order = []
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not node.children:
            order.append(node)
            continue
        stack.append((node, True))
        for child in reversed(node.children):
            stack.append((child, False))

    return order


# ------------------------------------------------------------------------------
def binarize_decomposition(expression) -> DecompNode:
    """
    Folds every eta/rho chain into the leaf or union below it. The twin
    classes of a node group its vertices by their label at the top of the
    node's chain; all later operations treat such vertices alike.
    """
    current = {}
    vertex_count = 0
    for node in _postorder(expression.root):
        if isinstance(node, CreateVertex):
            decomp = DecompNode("leaf", vertex=vertex_count)
            decomp.classes = {node.label: (vertex_count, vertex_count)}
            vertex_count += 1
        elif isinstance(node, Union):
            left = current.pop(id(node.left))
            right = current.pop(id(node.right))
            decomp = DecompNode("union", children=(left, right))
            decomp.class_maps = ({label: label for label in left.classes}, {label: label for label in right.classes})
            grouped = {}
            for child in (left, right):
                for label, entry in child.classes.items():
                    grouped.setdefault(label, []).append(entry)
            decomp.classes = {
                label: (_join_ropes([rope for rope, _ in entries]), entries[0][1])
                for label, entries in grouped.items()
            }
        elif isinstance(node, InsertEdges):
            decomp = current.pop(id(node.child))
            decomp.chain.append(node)
        else:
            decomp = current.pop(id(node.child))
            decomp.chain.append(node)
            _apply_rename(decomp, node.i, node.j)

        assert decomp.h <= max(expression.width, 1), "more twin classes than labels"
        current[id(node)] = decomp

    return current[id(expression.root)]


################################################################################
#
# Triangle enumeration
#
################################################################################


def _bag_edges(bag):
    """
    Edges of a bag: ("cross", A, B) is the complete bipartite graph between
    class ropes A and B, ("rope", parts) the union of at least two bags.
    """
    stack = [bag]
    while stack:
        kind, *rest = stack.pop()
        if kind == "cross":
            a_rope, b_rope = rest
            b_vertices = list(_rope_items(b_rope))
            for x in _rope_items(a_rope):
                for y in b_vertices:
                    yield (x, y)
        else:
            stack.extend(reversed(rest[0]))


# ------------------------------------------------------------------------------
def _merge_bags(bags):
    return bags[0] if len(bags) == 1 else ("rope", tuple(bags))


# ------------------------------------------------------------------------------
def _collect(target, key, bag):
    a, b = key
    target.setdefault((a, b) if a <= b else (b, a), []).append(bag)


# ------------------------------------------------------------------------------
def cw_enumerate(expression, verify_twins=False) -> TriangleSet:
    """
    Enumerates the triangles of the expression's graph G bottom-up over the
    binarized decomposition in O(n^2 + n * k^2 + #T)-style work.

    For a union node v with children u and w:

    - F(a, b) says whether class a of u and class b of w are joined in G.
      Twin classes are all-or-nothing, so one representative pair decides.
    - E^v(i, j) gathers the edges of G between classes i and j of v: the
      children's edge bags, plus the complete bipartite bags between joined
      classes of u and w, keyed through the class maps.
    - New triangles have two vertices in one child x and one in the other y:
      for an edge bag E^x(o, p) and a class q of y with F(o, q) and F(p, q),
      every edge of the bag and every vertex of q form a triangle. Each
      triangle appears once, at the lowest common ancestor of its vertices.

    Inputs:
    --------
    expression (KExpression):
        A parsed expression.

    verify_twins (bool):
        Check every vertex pair of each class pair the enumeration visits instead of one
        representative pair. Defaults to False.
    """
    graph = eval_kexpression(expression)
    root = binarize_decomposition(expression)

    edge_bags = {}
    triangles = []
    for node in decomposition_nodes(root):
        if node.kind == "leaf":
            edge_bags[id(node)] = {}
            continue

        left, right = node.children
        left_bags = edge_bags.pop(id(left))
        right_bags = edge_bags.pop(id(right))

        joined = {}
        for a, (a_rope, a_rep) in left.classes.items():
            for b, (b_rope, b_rep) in right.classes.items():
                is_joined = graph.has_edge(a_rep, b_rep)
                if verify_twins:
                    for x in _rope_items(a_rope):
                        for y in _rope_items(b_rope):
                            assert graph.has_edge(x, y) == is_joined, (
                                f"classes {a} and {b} are not all-or-nothing at vertices {x}, {y}"
                            )
                joined[(a, b)] = is_joined

        # triangles with an edge in one child and the third vertex in the other
        for x_node, x_bags, y_node, x_is_left in (
            (left, left_bags, right, True),
            (right, right_bags, left, False),
        ):
            for (o, p), bag in x_bags.items():
                for q, (q_rope, _) in y_node.classes.items():
                    if x_is_left:
                        guard = joined[(o, q)] and joined[(p, q)]
                    else:
                        guard = joined[(q, o)] and joined[(q, p)]
                    if not guard:
                        continue
                    q_vertices = list(_rope_items(q_rope))
                    for a, b in _bag_edges(bag):
                        for c in q_vertices:
                            triangles.append(Triangle.of(a, b, c))

        left_map, right_map = node.class_maps
        gathered = {}
        for (a, b), bag in left_bags.items():
            _collect(gathered, (left_map[a], left_map[b]), bag)
        for (a, b), bag in right_bags.items():
            _collect(gathered, (right_map[a], right_map[b]), bag)
        for (a, b), is_joined in joined.items():
            if is_joined:
                cross = ("cross", left.classes[a][0], right.classes[b][0])
                _collect(gathered, (left_map[a], right_map[b]), cross)
        edge_bags[id(node)] = {key: _merge_bags(bags) for key, bags in gathered.items()}

        assert node.h <= expression.width

    logging.info(f"Clique-width enumeration: {len(triangles)} triangles, width {expression.width}")

    return TriangleSet(triangles)


################################################################################
#
# Construction helpers
#
################################################################################


def cotree_to_kexpression(cotree):
    """
    2-expression of a cograph from its cotree. A join relabels the left
    operand to 2, joins labels 1 and 2 and relabels back to 1.

    Returns:
    --------
    (KExpression, list):
        The expression and the cotree vertex of every leaf, in leaf order.
    """
    if cotree.root is None:
        raise Unsupported("cotree_to_kexpression", "the graph has no vertices")

    built = {}
    for node in cotree.nodes_postorder():
        if isinstance(node, CotreeLeaf):
            built[id(node)] = CreateVertex(1)
            continue
        left = built.pop(id(node.left))
        right = built.pop(id(node.right))
        if node.kind == "union":
            built[id(node)] = Union(left, right)
        else:
            built[id(node)] = Rename(2, 1, InsertEdges(1, 2, Union(Rename(1, 2, left), right)))

    return _expression(built[id(cotree.root)]), cotree.vertices()


# ------------------------------------------------------------------------------
def random_kexpression(rng, leaves, width, eta_rate=0.6, rho_rate=0.3) -> KExpression:
    """
    Random well-formed expression with `leaves` vertices and labels in
    1..width: random labelled leaves are merged pairwise at random, and after
    each union an eta and a rho follow with the given rates.

    Inputs:
    --------
    rng (numpy.random.Generator or int):
        Random source, or a seed for one.
    """
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    assert leaves >= 1 and width >= 1

    def label():
        return int(rng.integers(1, width + 1))

    def two_labels():
        i = label()
        j = label()
        while j == i:
            j = label()
        return i, j

    pool = [CreateVertex(label()) for _ in range(leaves)]
    while len(pool) > 1:
        first = pool.pop(int(rng.integers(len(pool))))
        second = pool.pop(int(rng.integers(len(pool))))
        node = Union(first, second)
        if width >= 2 and rng.random() < eta_rate:
            node = InsertEdges(*two_labels(), node)
        if width >= 2 and rng.random() < rho_rate:
            node = Rename(*two_labels(), node)
        if width >= 2 and rng.random() < eta_rate / 2:
            node = InsertEdges(*two_labels(), node)
        pool.append(node)

    return _expression(pool[0])
