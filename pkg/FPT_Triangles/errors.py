"""
Exceptions raised by the triangle enumeration toolkit.

Every input or precondition violation derives from PreconditionError so the
command line can map it to exit code 2 and print the witness.
"""

from FPT_Triangles.utils import format_error


################################################################################
#
# Base classes
#
################################################################################


class TriangleToolError(Exception):
    """
    Base class of all toolkit errors. Subclasses fill in `details` and,
    where there is an obvious fix, `resolution`.
    """

    details = "Unknown error"
    resolution = ""

    def __str__(self):
        return format_error(self.details, self.resolution)


# ------------------------------------------------------------------------------
class PreconditionError(TriangleToolError):
    """
    The input does not satisfy the precondition of the requested operation.
    """


################################################################################
#
# Parsing
#
################################################################################


class SelfLoop(PreconditionError):
    """
    Exception raised when an edge-list line joins a vertex to itself.
    """

    def __init__(self, line):
        self.line = line
        self.details = f"Self-loop on line {line}"
        self.resolution = "Remove the line; only simple graphs are supported."
        super().__init__()


# ------------------------------------------------------------------------------
class DuplicateEdge(PreconditionError):
    """
    Exception raised when an edge appears twice in an edge list.
    """

    def __init__(self, line, first_line=None):
        self.line = line
        self.first_line = first_line
        self.details = f"Duplicate edge on line {line}"
        if first_line is not None:
            self.details += f" (first seen on line {first_line})"
        self.resolution = "Remove the duplicate; parallel edges are not supported."
        super().__init__()


# ------------------------------------------------------------------------------
class Malformed(PreconditionError):
    """
    Exception raised when a line of an edge-list or vertex-set file cannot be
    read as non-negative integer labels.
    """

    def __init__(self, line, content="", resolution="Each non-comment line must hold two non-negative integers."):
        self.line = line
        self.content = content
        self.details = f"Malformed line {line}: {content!r}"
        self.resolution = resolution
        super().__init__()


# ------------------------------------------------------------------------------
class KExpressionSyntax(PreconditionError):
    """
    Exception raised on a syntax error in a k-expression file.
    """

    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        self.message = message
        self.details = f"k-expression syntax error at {line}:{col}: {message}"
        super().__init__()


# ------------------------------------------------------------------------------
class SameLabelEta(PreconditionError):
    """
    Exception raised when an edge insertion joins a label to itself.
    """

    def __init__(self, line, col, label):
        self.line = line
        self.col = col
        self.label = label
        self.details = f"eta({label},{label},...) at {line}:{col} joins a label to itself"
        self.resolution = "Edge insertion needs two different labels."
        super().__init__()


################################################################################
#
# Structure
#
################################################################################


class NotChordal(PreconditionError):
    """
    Exception raised when no perfect elimination ordering exists.

    vertex is the vertex whose later neighbors failed to form a clique,
    witness the chordless cycle through it (empty if none was recovered).
    """

    def __init__(self, vertex, witness=()):
        self.vertex = vertex
        self.witness = tuple(witness)
        self.details = f"Graph is not chordal: later neighbors of vertex {vertex} are not a clique"
        if self.witness:
            self.details += f"; chordless cycle {list(self.witness)}"
        self.resolution = "Supply a deletion set whose removal leaves a chordal graph."
        super().__init__()


# ------------------------------------------------------------------------------
class NotCograph(PreconditionError):
    """
    Exception raised when the graph contains an induced P4.
    """

    def __init__(self, p4):
        self.p4 = tuple(p4)
        self.details = f"Graph is not a cograph: induced P4 {list(self.p4)}"
        super().__init__()


# ------------------------------------------------------------------------------
class NotBipartite(PreconditionError):
    """
    Exception raised when a 2-coloring fails; cycle is an odd cycle.
    """

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        self.details = f"Graph is not bipartite: odd cycle {list(self.cycle)}"
        self.resolution = "Supply a deletion set whose removal leaves a bipartite graph."
        super().__init__()


# ------------------------------------------------------------------------------
class EdgeOutsideD(PreconditionError):
    """
    Exception raised when an edge has no endpoint in the given vertex set.
    """

    def __init__(self, edge):
        self.edge = tuple(edge)
        self.details = f"Edge {self.edge} has no endpoint in D"
        self.resolution = "Delete all edges without an endpoint in D first."
        super().__init__()


# ------------------------------------------------------------------------------
class NotFeedbackSet(PreconditionError):
    """
    Exception raised when removing F still leaves a cycle; edge closes one.
    """

    def __init__(self, edge):
        self.edge = tuple(edge)
        self.details = f"Not a feedback edge set: edge {self.edge} closes a cycle in G - F"
        super().__init__()


# ------------------------------------------------------------------------------
class NotDeletionSet(PreconditionError):
    """
    Exception raised when G - D is not in the target class.
    """

    def __init__(self, target, witness=""):
        self.target = target
        self.witness = witness
        self.details = f"G - D is not {target}"
        if witness:
            self.details += f": {witness}"
        self.resolution = "Use a larger deletion set or a larger d."
        super().__init__()


# ------------------------------------------------------------------------------
class TreeGraphMismatch(PreconditionError):
    """
    Exception raised when a cotree does not evaluate to the given graph.
    """

    def __init__(self, reason):
        self.reason = reason
        self.details = f"Cotree does not match graph: {reason}"
        super().__init__()


################################################################################
#
# Limits
#
################################################################################


class ParameterTooLarge(PreconditionError):
    """
    Exception raised when a parameter exceeds what an algorithm accepts.
    """

    def __init__(self, name, value, limit, resolution=""):
        self.name = name
        self.value = value
        self.limit = limit
        self.details = f"Parameter {name}={value} exceeds the limit {limit}"
        self.resolution = resolution
        super().__init__()


# ------------------------------------------------------------------------------
class Unsupported(PreconditionError):
    """
    Exception raised when an operation refuses an input size.
    """

    def __init__(self, operation, reason):
        self.operation = operation
        self.reason = reason
        self.details = f"{operation} unsupported: {reason}"
        super().__init__()


# ------------------------------------------------------------------------------
class OracleTooLarge(PreconditionError):
    """
    Exception raised when the brute-force oracle is asked for a large graph.
    """

    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        self.details = f"Brute-force oracle refuses n={n} (limit {limit})"
        self.resolution = "Use the edge-intersect enumerator instead."
        super().__init__()


################################################################################
#
# Bench
#
################################################################################


class CountMismatch(TriangleToolError):
    """
    Exception raised when two algorithms disagree on the same input.

    difference holds at most ten triples of the symmetric difference.
    """

    def __init__(self, reference, algorithm, reference_count, count, difference):
        self.reference = reference
        self.algorithm = algorithm
        self.reference_count = reference_count
        self.count = count
        self.difference = list(difference)[:10]
        self.details = (
            f"{algorithm} found {count} triangles, {reference} found {reference_count}; "
            f"symmetric difference starts {self.difference}"
        )
        super().__init__()


################################################################################
#
# Usage
#
################################################################################


class UsageError(TriangleToolError):
    """
    Exception raised for invalid command-line arguments; exit code 1.
    """

    def __init__(self, message, resolution="Run with --help for the accepted flags."):
        self.message = message
        self.details = message
        self.resolution = resolution
        super().__init__()
