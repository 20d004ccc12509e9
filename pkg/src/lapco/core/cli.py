# src/lapco/core/cli.py
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .app import LabCore, PACKAGE_LOGGER, THEOREM_FAMILIES
from .formats import (
    GRAPH_SUFFIX,
    GraphFileError,
    dumps_document,
    format_graph_file,
    read_graph_file,
    write_document,
    write_graph_file,
)
from ..forests.oracle import ForestError
from ..graphs.families import FamilySpecError
from ..graphs.graph import GraphError
from ..poset.enumeration import EnumerationGuardError
from ..poset.order import PosetError
from ..poset.verifiers import VerificationError
from ..transforms.receipt import TransformError
from ..utils.config_loader import ConfigError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

INPUT_ERRORS = (
    ConfigError, GraphFileError, GraphError, FamilySpecError, ForestError,
    TransformError, PosetError, EnumerationGuardError, VerificationError, FileNotFoundError,
)


def setup_logging():
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.WARNING)

    app_logger = logging.getLogger(PACKAGE_LOGGER)
    app_logger.setLevel(logging.INFO)
    app_logger.propagate = False

    # stdout carries graph files and report documents
    handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    if not app_logger.handlers:
        app_logger.addHandler(handler)


setup_logging()
logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapco",
        description="Exact Laplacian coefficients and coefficient posets of unicyclic graphs.",
    )
    parser.add_argument("--config", type=str, default=None, help="Path to a configuration file (*.toml)")
    parser.add_argument("--log-level", type=str, default=None, help="Override the configured logging level")
    parser.add_argument("--workers", type=int, default=None, help="Parallel workers for enumeration")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    build = sub.add_parser("build", help="Write the GraphFile of U_{n,l}^{g,p} or BST_{n,l}")
    build.add_argument("--family", choices=["u", "bst"], default="u")
    build.add_argument("--n", type=int, required=True)
    build.add_argument("--l", type=int, required=True)
    build.add_argument("--g", type=int, default=3)
    build.add_argument("--p", type=int, default=0)
    build.add_argument("--out", type=str, default=None, help="Output file (default: stdout)")

    coeffs = sub.add_parser("coeffs", help="Exact Laplacian coefficients of a GraphFile")
    coeffs.add_argument("file")
    coeffs.add_argument("--oracle", action="store_true", help="Cross-check with the spanning-forest sums")

    cmp_ = sub.add_parser("compare", help="Coefficient-wise relation of two graphs")
    cmp_.add_argument("file_a")
    cmp_.add_argument("file_b")

    lel_ = sub.add_parser("lel", help="Laplacian spectrum and Laplacian-like energy")
    lel_.add_argument("file")

    transform = sub.add_parser("transform", help="Apply a coefficient transformation")
    transform.add_argument("file")
    transform.add_argument("--kind", required=True,
                           choices=["xi", "eta", "kappa", "shift", "balance", "merge", "reduce"])
    transform.add_argument("--u", type=int, help="xi: edge end kept; merge: source cycle vertex")
    transform.add_argument("--v", type=int, help="xi: branch end; shift/balance: anchor; merge: target")
    transform.add_argument("--leaf-p", type=int, help="shift: leaf of the longer path; balance: leaf to move")
    transform.add_argument("--leaf-q", type=int, help="shift: leaf to move; balance: leaf of the shorter path")
    transform.add_argument("--out", type=str, default=None, help="Write the resulting GraphFile here")

    enum = sub.add_parser("enumerate", help="All unicyclic graphs of order n up to isomorphism")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--l", type=int, default=None)
    enum.add_argument("--g", type=int, default=None)
    enum.add_argument("--out", type=str, default=None, help="Directory for GraphFiles and index.json")

    minimal = sub.add_parser("minimal", help="Minimal elements of an enumerated family")
    minimal.add_argument("--n", type=int, required=True)
    minimal.add_argument("--l", type=int, default=None)
    minimal.add_argument("--g", type=int, default=None)
    minimal.add_argument("--restriction", choices=["full", "one_attachment", "two_attachments"], default="full")

    verify = sub.add_parser("verify", help="Exhaustive verification report")
    verify.add_argument("--theorem", required=True, choices=sorted(THEOREM_FAMILIES) + ["conjecture", "incomparable"])
    verify.add_argument("--n", type=int, required=True, help="Order (largest order for 'conjecture')")
    verify.add_argument("--l", type=int, default=None)
    verify.add_argument("--g", type=int, default=None)
    verify.add_argument("--p", type=int, default=None)
    verify.add_argument("--q", type=int, default=None)

    sub.add_parser("counterexample", help="The two incomparable order-10 graphs and their coefficients")
    return parser


def _emit(document) -> None:
    sys.stdout.write(dumps_document(document) + "\n")


def _run(core: LabCore, args: argparse.Namespace) -> int:
    command = args.command
    if command == "build":
        graph = core.build(args.family, args.n, args.l, args.g, args.p)
        comment = f"{args.family} n={args.n} l={args.l}" + (f" g={args.g} p={args.p}" if args.family == "u" else "")
        if args.out:
            write_graph_file(Path(args.out), graph, comment)
            logger.info(f"Wrote {args.out}")
        else:
            sys.stdout.write(format_graph_file(graph, comment))
        return EXIT_OK

    # every other command prints one JSON document on stdout
    if command == "coeffs":
        document, passed = core.coefficients(read_graph_file(Path(args.file)), oracle=args.oracle)
        _emit(document)
        return EXIT_OK if passed else EXIT_FAILED

    if command == "compare":
        _emit(core.compare_graphs(read_graph_file(Path(args.file_a)), read_graph_file(Path(args.file_b))))
        return EXIT_OK

    if command == "lel":
        _emit(core.lel_document(read_graph_file(Path(args.file))))
        return EXIT_OK

    if command == "transform":
        graph = read_graph_file(Path(args.file))
        after, document, passed = core.transform(graph, args.kind, args.u, args.v, args.leaf_p, args.leaf_q)
        if args.out:
            write_graph_file(Path(args.out), after, f"{args.kind} of {args.file}")
            document["out"] = args.out
        _emit(document)
        return EXIT_OK if passed else EXIT_FAILED

    if command == "enumerate":
        catalog = core.enumerate(args.n, args.l, args.g)
        index = core.catalog_index(catalog)
        if args.out:
            out_dir = Path(args.out)
            width = max(4, len(str(len(catalog))))
            for i, entry in enumerate(catalog):
                name = f"{i:0{width}d}{GRAPH_SUFFIX}"
                write_graph_file(out_dir / name, entry.graph, entry.form_hex)
                index["members"][i]["file"] = name
            write_document(out_dir / "index.json", index)
            logger.info(f"Wrote {len(catalog)} graphs to {out_dir}")
            _emit({"parameters": index["parameters"], "count": index["count"], "out": str(out_dir)})
        else:
            _emit(index)
        return EXIT_OK

    if command == "minimal":
        _emit(core.minimal(args.n, args.l, args.g, args.restriction))
        return EXIT_OK

    if command == "verify":
        report = core.verify(args.theorem, args.n, args.l, args.g, args.p, args.q)
        _emit(report.to_document())
        logger.info(f"Verification '{report.name}': {report.status}")
        return EXIT_OK if report.passed else EXIT_FAILED

    if command == "counterexample":
        document, passed = core.counterexample()
        _emit(document)
        return EXIT_OK if passed else EXIT_FAILED

    raise ConfigError(f"Unknown command '{command}'")


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the lapco command; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    try:
        # --- Step 1: profile, logging and workers ---
        core = LabCore(config_path=args.config, log_level=args.log_level, workers=args.workers)
        # --- Step 2: run the subcommand ---
        status = _run(core, args)
    except INPUT_ERRORS as e:
        # malformed input, bad parameters or a guard violation
        logger.error(f"{type(e).__name__}: {e}")
        print(f"lapco: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        # anything else is a bug, not bad input
        logger.critical(f"Unhandled top-level exception: {e}", exc_info=True)
        print(f"lapco: unexpected error: {e}", file=sys.stderr)
        return EXIT_FAILED
    return status


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
