"""
Command-line front end.

    fpt-triangles triangles FILE --algo=ALGO [--deletion-set=FILE] [--d=INT]
                                 [--kexpr=FILE] [--count-only] [--sorted]
    fpt-triangles kernelize FILE --param={fes,dtdd,dtdd-maxdeg} [--deletion-set=FILE] [--d=INT]
    fpt-triangles gadget FILE [--verify]
    fpt-triangles params FILE
    fpt-triangles bench FILE [--algos=A,B,...] [--reps=N] [--deletion-set=FILE] [--d=INT] [--kexpr=FILE]
    fpt-triangles generate FAMILY --out=FILE [--n=INT] [--p=FLOAT] [--d=INT] [--chords=INT] [--seed=INT]

Exit codes: 0 success, 1 usage error, 2 precondition violation.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional
import argparse
import logging
import sys

import numpy as np
import pandas as pd
from tqdm import tqdm

from FPT_Triangles import generators
from FPT_Triangles.Graph.cotree import find_induced_p4
from FPT_Triangles.Graph.graph import DeletionSet, read_edge_list, read_vertex_set, write_edge_list, write_triangles
from FPT_Triangles.Graph.structure import (
    connected_components,
    degeneracy_ordering,
    greedy_ddeg_deletion_set,
    is_bipartite,
    is_chordal,
)
from FPT_Triangles.cliquewidth import cw_enumerate, eval_kexpression, read_kexpression
from FPT_Triangles.errors import CountMismatch, PreconditionError, TriangleToolError, UsageError
from FPT_Triangles.hardness import build_gp_gadget, verify_gadget
from FPT_Triangles.kernels import dtdd_kernelize, dtdd_maxdeg_kernelize, fes_kernelize, write_kernel_files
from FPT_Triangles.oracle import enumerate_edge_intersect, enumerate_triples
from FPT_Triangles.solvers import (
    solve_bipartite_deletion,
    solve_chordal_deletion,
    solve_cograph,
    solve_degeneracy,
    solve_dtdd,
    solve_dtdd_maxdeg,
    solve_fes,
)
from FPT_Triangles.utils import Settings, get_settings, setup_logging, timed

ALGORITHMS = (
    "brute",
    "edge",
    "degeneracy",
    "fes",
    "dtdd",
    "dtdd-maxdeg",
    "bipartite",
    "chordal",
    "cograph",
    "cliquewidth",
)
DEGENERATE_ALGORITHMS = ("dtdd", "dtdd-maxdeg")
DELETION_SET_ALGORITHMS = ("dtdd", "dtdd-maxdeg", "bipartite", "chordal")
KERNEL_PARAMS = ("fes", "dtdd", "dtdd-maxdeg")

FORMATS_HELP = """
file formats:
  edge list      one `u v` pair of non-negative integer labels per line;
                 `#` comment lines and blank lines are skipped
  deletion set   one vertex label per line, `#` comments
  k-expression   prefix notation v(i), u(E1,E2), eta(i,j,E), rho(i,j,E);
                 whitespace-insensitive, `#` comments; labels start at 1
  triangles      one `a b c` line per triangle, original labels, ascending
                 within the line; --sorted also sorts the lines
"""


################################################################################
@dataclass
class RunConfig:
    """
    Validated command-line request. validate() runs before any file is read.
    """

    command: str
    input_path: Optional[Path] = None
    algorithm: Optional[str] = None
    deletion_set_path: Optional[Path] = None
    d: Optional[int] = None
    kexpr_path: Optional[Path] = None
    count_only: bool = False
    sorted_output: bool = False
    reps: Optional[int] = None
    algorithms: list = field(default_factory=list)

    # --------------------------------------------------------------------------
    @classmethod
    def from_args(cls, args):
        algorithms = []
        if getattr(args, "algos", None):
            algorithms = [name.strip() for name in args.algos.split(",") if name.strip()]
        return cls(
            command=args.command,
            input_path=Path(args.file) if getattr(args, "file", None) else None,
            algorithm=getattr(args, "algo", None) or getattr(args, "param", None),
            deletion_set_path=Path(args.deletion_set) if getattr(args, "deletion_set", None) else None,
            d=getattr(args, "d", None),
            kexpr_path=Path(args.kexpr) if getattr(args, "kexpr", None) else None,
            count_only=getattr(args, "count_only", False),
            sorted_output=getattr(args, "sorted", False),
            reps=getattr(args, "reps", None),
            algorithms=algorithms,
        )

    # --------------------------------------------------------------------------
    def validate(self):
        """
        Raises UsageError on incompatible flags.
        """
        if self.d is not None and self.d < 0:
            raise UsageError(f"--d must be non-negative, got {self.d}")
        if self.reps is not None and self.reps < 1:
            raise UsageError(f"--reps must be at least 1, got {self.reps}")

        if self.command == "triangles":
            algo = self.algorithm
            if self.kexpr_path is not None and algo != "cliquewidth":
                raise UsageError("--kexpr is only accepted with --algo=cliquewidth")
            if algo == "cliquewidth" and self.kexpr_path is None:
                raise UsageError("--algo=cliquewidth needs --kexpr")
            if self.deletion_set_path is not None and algo not in DELETION_SET_ALGORITHMS:
                raise UsageError(f"--deletion-set is not accepted with --algo={algo}")
            if algo in ("bipartite", "chordal") and self.deletion_set_path is None:
                raise UsageError(
                    f"--algo={algo} needs --deletion-set",
                    resolution="Deletion sets to bipartite and chordal graphs are never computed automatically.",
                )
            if self.d is not None and algo not in DEGENERATE_ALGORITHMS:
                raise UsageError(f"--d is only accepted with --algo=dtdd or --algo=dtdd-maxdeg")
            if self.count_only and self.sorted_output:
                raise UsageError("--count-only and --sorted exclude each other")

        if self.command == "kernelize":
            if self.algorithm == "fes" and (self.deletion_set_path is not None or self.d is not None):
                raise UsageError("--param=fes takes neither --deletion-set nor --d")

        if self.command == "bench":
            unknown = [name for name in self.algorithms if name not in ALGORITHMS]
            if unknown:
                raise UsageError(f"Unknown algorithms: {', '.join(unknown)}")


################################################################################
@dataclass
class SolveContext:
    """
    Everything a solver needs besides the graph.
    """

    settings: Settings
    deletion_vertices: Optional[frozenset] = None
    d: Optional[int] = None
    kexpression: object = None


# ------------------------------------------------------------------------------
def degenerate_deletion_set(graph, context) -> DeletionSet:
    """
    The deletion set to d-degenerate graphs: the given one, with d defaulting
    to the degeneracy of G - D, or the greedy set for d (config default_d).
    """
    if context.deletion_vertices is not None:
        d = context.d
        if d is None:
            d = degeneracy_ordering(graph.without_vertices(context.deletion_vertices)).degeneracy
        return DeletionSet(context.deletion_vertices, "degenerate", d)

    d = context.d if context.d is not None else context.settings.default_d
    return greedy_ddeg_deletion_set(graph, d)


# ------------------------------------------------------------------------------
def _require_deletion_set(context, target):
    if context.deletion_vertices is None:
        raise UsageError(f"--algo={target} needs --deletion-set")
    return DeletionSet(context.deletion_vertices, target)


SOLVERS = {
    "brute": lambda graph, context: enumerate_triples(graph, limit=context.settings.oracle_limit),
    "edge": lambda graph, context: enumerate_edge_intersect(graph),
    "degeneracy": lambda graph, context: solve_degeneracy(graph),
    "fes": lambda graph, context: solve_fes(graph),
    "dtdd": lambda graph, context: solve_dtdd(
        graph, degenerate_deletion_set(graph, context), limit=context.settings.dtdd_limit
    ),
    "dtdd-maxdeg": lambda graph, context: solve_dtdd_maxdeg(graph, degenerate_deletion_set(graph, context)),
    "bipartite": lambda graph, context: solve_bipartite_deletion(
        graph, _require_deletion_set(context, "bipartite")
    ),
    "chordal": lambda graph, context: solve_chordal_deletion(graph, _require_deletion_set(context, "chordal")),
    "cograph": lambda graph, context: solve_cograph(graph, p4_limit=context.settings.p4_limit),
    "cliquewidth": lambda graph, context: cw_enumerate(context.kexpression),
}


# ------------------------------------------------------------------------------
def _load_context(config, graph, settings):
    context = SolveContext(settings=settings, d=config.d)
    if config.deletion_set_path is not None:
        context.deletion_vertices = read_vertex_set(config.deletion_set_path, graph)
    if config.kexpr_path is not None:
        context.kexpression = read_kexpression(config.kexpr_path)
        if context.kexpression.leaf_count != graph.n:
            logging.warning(
                f"The k-expression has {context.kexpression.leaf_count} vertices, "
                f"the edge list {graph.n}; output ids follow the k-expression's leaf order"
            )
    return context


################################################################################
#
# Commands
#
################################################################################


def cmd_enumerate(config, settings, out=sys.stdout):
    graph = read_edge_list(config.input_path)
    context = _load_context(config, graph, settings)

    solver = SOLVERS[config.algorithm]
    triangles, seconds = timed(solver, graph, context)
    logging.info(f"{config.algorithm}: {len(triangles)} triangles in {seconds:.3f}s")

    if config.algorithm == "cliquewidth":
        # output ids are the leaf order of the expression
        graph = eval_kexpression(context.kexpression)

    if config.count_only:
        out.write(f"{len(triangles)}\n")
    else:
        write_triangles(triangles, graph, out, sort_lines=config.sorted_output)

    return 0


# ------------------------------------------------------------------------------
def cmd_kernelize(config, settings, out=sys.stdout, base=None):
    graph = read_edge_list(config.input_path)
    context = _load_context(config, graph, settings)

    if config.algorithm == "fes":
        kernel = fes_kernelize(graph)
    elif config.algorithm == "dtdd":
        kernel = dtdd_kernelize(graph, degenerate_deletion_set(graph, context), limit=settings.dtdd_limit)
    else:
        kernel = dtdd_maxdeg_kernelize(graph, degenerate_deletion_set(graph, context))

    base = Path(base) if base else config.input_path.with_suffix("")
    for path in write_kernel_files(kernel, graph, base):
        out.write(f"{path}\n")

    return 0


# ------------------------------------------------------------------------------
def cmd_gadget(config, settings, out=sys.stdout, verify=False, base=None):
    graph = read_edge_list(config.input_path)
    gadget = build_gp_gadget(graph)

    base = Path(base) if base else config.input_path.with_suffix("")
    path = write_edge_list(gadget.g_prime, base.with_name(f"{base.name}.gadget.edges"))
    out.write(f"{path}\n")

    if verify:
        report = verify_gadget(gadget, graph)
        out.write("\n".join(report.as_lines()) + "\n")

    return 0


# ------------------------------------------------------------------------------
def _yes_no(value):
    return "yes" if value else "no"


# ------------------------------------------------------------------------------
def params_report(graph, settings=Settings()):
    """
    Structural parameters of a graph, in output order.
    """
    components = len(connected_components(graph))
    if graph.n <= settings.p4_limit:
        cograph = _yes_no(find_induced_p4(graph) is None)
    else:
        cograph = "unknown"

    report = {
        "n": graph.n,
        "m": graph.m,
        "delta": graph.max_degree,
        "degeneracy": degeneracy_ordering(graph).degeneracy,
        "fes": graph.m - graph.n + components,
        "bipartite": _yes_no(is_bipartite(graph)),
        "chordal": _yes_no(is_chordal(graph)),
        "cograph": cograph,
    }
    for d in (0, 1, 2):
        deletion_set = greedy_ddeg_deletion_set(graph, d)
        report[f"greedy_d{d}"] = len(deletion_set)
        report[f"delta_D{d}"] = max((graph.degree(v) for v in deletion_set), default=0)

    return report


# ------------------------------------------------------------------------------
def cmd_params(config, settings, out=sys.stdout):
    graph = read_edge_list(config.input_path)
    report = params_report(graph, settings)

    keys = list(report)
    first, second = keys[:8], keys[8:]
    out.write(" ".join(f"{key}={report[key]}" for key in first) + "\n")
    out.write(" ".join(f"{key}={report[key]}" for key in second) + "\n")

    return 0


# ------------------------------------------------------------------------------
def _skip_reason(name, graph, context):
    if name in ("bipartite", "chordal") and context.deletion_vertices is None:
        return "no deletion set given"
    if name == "cliquewidth" and context.kexpression is None:
        return "no k-expression given"
    if name == "brute" and graph.n > context.settings.oracle_limit:
        return f"n={graph.n} exceeds oracle_limit"
    return None


# ------------------------------------------------------------------------------
def run_bench(graph, algorithms, context, reps):
    """
    Times every algorithm `reps` times (parsing excluded) and checks that all
    of them report the same triangles.

    Raises:
    --------
    CountMismatch:
        With the first ten triples of the symmetric difference.

    Returns:
    --------
    (pandas.DataFrame, list of str):
        One row per algorithm that ran, and the skip notices.
    """
    rows = []
    skipped = []
    reference = None
    progress = tqdm(total=len(algorithms) * reps, desc="bench", unit="run", file=sys.stderr)
    for name in algorithms:
        reason = _skip_reason(name, graph, context)
        if reason is not None:
            skipped.append(f"{name} ({reason})")
            progress.update(reps)
            continue

        times = []
        triangles = None
        try:
            for _ in range(reps):
                triangles, seconds = timed(SOLVERS[name], graph, context)
                times.append(seconds)
                progress.update(1)
        except PreconditionError as err:
            skipped.append(f"{name} ({err.details})")
            progress.update(reps - len(times))
            continue

        # cliquewidth numbers vertices by leaf order, only its count is comparable
        comparable = name != "cliquewidth"
        if reference is None and comparable:
            reference = (name, triangles)
        elif comparable and triangles != reference[1]:
            difference = sorted(triangles.as_set() ^ reference[1].as_set())
            raise CountMismatch(reference[0], name, len(reference[1]), len(triangles), difference)
        rows.append(
            {
                "algorithm": name,
                "triangles": len(triangles),
                "median_seconds": float(np.median(times)),
                "reps": reps,
            }
        )
    progress.close()

    table = pd.DataFrame(rows, columns=["algorithm", "triangles", "median_seconds", "reps"])
    counts = set(table["triangles"])
    if len(counts) > 1:
        first = rows[0]
        mismatch = next(row for row in rows if row["triangles"] != first["triangles"])
        raise CountMismatch(first["algorithm"], mismatch["algorithm"], first["triangles"], mismatch["triangles"], [])

    return table, skipped


# ------------------------------------------------------------------------------
def cmd_bench(config, settings, out=sys.stdout):
    graph = read_edge_list(config.input_path)
    context = _load_context(config, graph, settings)
    algorithms = config.algorithms or list(ALGORITHMS)
    reps = config.reps or settings.bench_reps

    table, skipped = run_bench(graph, algorithms, context, reps)
    table.to_csv(out, sep="\t", index=False)
    for notice in skipped:
        out.write(f"# skipped: {notice}\n")

    return 0


# ------------------------------------------------------------------------------
def cmd_generate(args, out=sys.stdout):
    graph = generators.FAMILIES[args.family](args, np.random.default_rng(args.seed))
    isolated = sum(1 for v in graph.vertices() if graph.degree(v) == 0)
    if isolated:
        logging.warning(f"{isolated} isolated vertices cannot be written to an edge list and are dropped")
    path = write_edge_list(graph, args.out)
    out.write(f"{path}\n")

    return 0


################################################################################
#
# Entry point
#
################################################################################


class _ArgumentParser(argparse.ArgumentParser):
    """
    Raises UsageError instead of exiting, so that main() owns the exit code.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ------------------------------------------------------------------------------
def build_parser():
    parser = _ArgumentParser(
        prog="fpt-triangles",
        description="Parameterized triangle enumeration, kernels and hardness gadgets.",
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--config", default=None, help="Config file (default: ~/.fpt_triangles.cfg)")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_command(name, help_text):
        return subparsers.add_parser(
            name, help=help_text, epilog=FORMATS_HELP, formatter_class=argparse.RawDescriptionHelpFormatter
        )

    triangles = add_command("triangles", "enumerate the triangles of an edge list")
    triangles.add_argument("file")
    triangles.add_argument("--algo", choices=ALGORITHMS, required=True)
    triangles.add_argument("--deletion-set", default=None)
    triangles.add_argument("--d", type=int, default=None)
    triangles.add_argument("--kexpr", default=None)
    triangles.add_argument("--count-only", action="store_true")
    triangles.add_argument("--sorted", action="store_true")

    kernelize = add_command("kernelize", "write an enum-advice kernel")
    kernelize.add_argument("file")
    kernelize.add_argument("--param", choices=KERNEL_PARAMS, required=True)
    kernelize.add_argument("--deletion-set", default=None)
    kernelize.add_argument("--d", type=int, default=None)
    kernelize.add_argument("--out", default=None, help="Base path of the output files")

    gadget = add_command("gadget", "write the hardness gadget of an edge list")
    gadget.add_argument("file")
    gadget.add_argument("--verify", action="store_true")
    gadget.add_argument("--out", default=None, help="Base path of the output file")

    params = add_command("params", "print structural parameters")
    params.add_argument("file")

    bench = add_command("bench", "time algorithms and compare their triangles")
    bench.add_argument("file")
    bench.add_argument("--algos", default=None, help="Comma-separated algorithms (default: all)")
    bench.add_argument("--reps", type=int, default=None)
    bench.add_argument("--deletion-set", default=None)
    bench.add_argument("--d", type=int, default=None)
    bench.add_argument("--kexpr", default=None)

    generate = add_command("generate", "write a generated instance as an edge list")
    generate.add_argument("family", choices=sorted(generators.FAMILIES))
    generate.add_argument("--out", required=True)
    generate.add_argument("--n", type=int, default=20)
    generate.add_argument("--p", type=float, default=0.3)
    generate.add_argument("--d", type=int, default=2)
    generate.add_argument("--chords", type=int, default=10)
    generate.add_argument("--seed", type=int, default=None)

    return parser


# ------------------------------------------------------------------------------
def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as err:
        print(err, file=sys.stderr)
        return 1
    except SystemExit as err:
        # --help
        return err.code or 0

    settings = get_settings(args.config)
    level = "DEBUG" if args.verbose else settings.log_level
    setup_logging(log_file=settings.log_file or None, level=level)

    try:
        if args.command == "generate":
            return cmd_generate(args, out=out)

        config = RunConfig.from_args(args)
        config.validate()
        for path in (config.input_path, config.deletion_set_path, config.kexpr_path):
            if path is not None and not path.exists():
                raise UsageError(f"File not found: {path}")

        if args.command == "triangles":
            return cmd_enumerate(config, settings, out=out)
        if args.command == "kernelize":
            return cmd_kernelize(config, settings, out=out, base=args.out)
        if args.command == "gadget":
            return cmd_gadget(config, settings, out=out, verify=args.verify, base=args.out)
        if args.command == "params":
            return cmd_params(config, settings, out=out)
        return cmd_bench(config, settings, out=out)
    except UsageError as err:
        print(err, file=sys.stderr)
        return 1
    except PreconditionError as err:
        print(err, file=sys.stderr)
        return 2
    except CountMismatch as err:
        print(err, file=sys.stderr)
        return 2
    except TriangleToolError as err:
        print(err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
