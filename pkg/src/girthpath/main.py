"""Command-line entry point for girthpath."""

import argparse
import asyncio
import logging
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from .constructions import (
    CounterexampleParams,
    GenSpec,
    GraphKind,
    build_counterexample,
    counterexample_params_for_girth,
    generate,
)
from .core import GirthPathConfig, build_manifest, dumps, load_config
from .core.errors import (
    ConfigError,
    ConvergenceError,
    GenerationError,
    GirthPathError,
    InvalidDigraphError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .core.file_reader import write_file
from .dichotomy import DichotomyReport, analyze_dichotomy, bound_table, verify_path_bounds
from .graph import Digraph, girth, is_oriented, min_out_degree, read_instance, validate
from .graph.formats import canonical, to_csv, to_dot, to_edge_list, to_json
from .partition import find_long_path, verify_certificate
from .solvers import SolverLimits, longest_path_exact
from .workflows import SUITES, SuiteRequest, VerificationWorkflow, render_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

EXPORT_FORMATS = ("dot", "json", "csv", "edgelist")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girthpath",
        description="Girth, long paths and out-degree in digraphs: constructions, "
        "exact checks and verification suites.",
    )
    parser.add_argument("--config", type=Path, help="Path to a YAML config file")
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Logging level (default: config logging.level)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("generate", help="Write a counterexample or random instance")
    kinds = gen.add_subparsers(dest="generator", required=True)

    counter = kinds.add_parser("counterexample", help="Member of the lifted counterexample family")
    counter.add_argument("--delta", type=int, required=True)
    counter.add_argument("--g", type=int, help="Girth; picks a and b automatically")
    counter.add_argument("--a", type=int)
    counter.add_argument("--b", type=int)
    counter.add_argument("--output", type=Path, help="Edge-list or .json file (default: stdout)")
    counter.add_argument("--dot", type=Path, help="Also write a DOT rendering here")

    rand = kinds.add_parser("random", help="Seeded random instance")
    rand.add_argument("--kind", choices=[kind.value for kind in GraphKind], required=True)
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--d", type=int, required=True)
    rand.add_argument("--C", type=Fraction, default=Fraction(1))
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--output", type=Path)
    rand.add_argument("--dot", type=Path)

    analyze = commands.add_parser("analyze", help="Exact girth, ℓ, bounds and dichotomy report")
    analyze.add_argument("file", type=Path)
    analyze.add_argument("--delta", type=int, help="Out-degree floor (default: δ⁺ of the input)")
    analyze.add_argument(
        "--skip-exact",
        action="store_true",
        help="Skip the exact longest path; report girth and the bound table only",
    )
    analyze.add_argument("--output", type=Path, help="Write the JSON report here too")

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", help=f"One of: {', '.join(SUITES)}")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--output-dir", type=Path)
    verify.add_argument("--count", type=int, help="Override the corpus size")
    verify.add_argument("--d", type=int, help="Out-degree of the partition corpora")
    verify.add_argument("--C", type=Fraction, help="In-degree constant of the partition corpora")
    verify.add_argument("--max-resample-rounds", type=int)

    part = commands.add_parser(
        "partition", help="Partition a (C, d)-regular instance and stitch a long path"
    )
    part.add_argument("file", type=Path)
    part.add_argument("--C", type=Fraction, help="In-degree constant (default: config partition.C)")
    part.add_argument("--d", type=int, help="Out-degree floor (default: config, else δ⁺)")
    part.add_argument("--c-prime", type=Fraction, help="Partition constant (default: config, else grid)")
    part.add_argument("--seed", type=int, help="Permutation seed (default: config partition.seed)")
    part.add_argument("--max-resample-rounds", type=int)
    part.add_argument(
        "--allow-infeasible",
        action="store_true",
        help="Partition even when the local-lemma inequality fails for the chosen t",
    )
    part.add_argument("--output", type=Path, help="Write the JSON run document here too")

    export = commands.add_parser("export", help="Convert an instance file")
    export.add_argument("file", type=Path)
    export.add_argument("--format", choices=EXPORT_FORMATS, required=True)
    export.add_argument("--output", type=Path)

    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emit(text: str, output: Path | None) -> Path | None:
    """Write to ``output`` when given, else to stdout."""
    if output is None:
        sys.stdout.write(text)
        return None
    return write_file(output, text)


def _serialize(digraph: Digraph, output: Path | None, manifest: dict[str, Any]) -> str:
    if output is not None and output.suffix.lower() == ".json":
        return to_json(digraph, manifest)
    return to_edge_list(digraph)


def _load_instance(path: Path) -> Digraph:
    try:
        digraph = read_instance(path)
    except (FileNotFoundError, IsADirectoryError, UnicodeDecodeError) as e:
        raise ParseError(str(e)) from e
    report = validate(digraph)
    if not report.ok:
        raise InvalidDigraphError(f"{path}: {report.summary()}")
    return canonical(digraph)


def _counterexample_params(args: argparse.Namespace) -> CounterexampleParams:
    if args.g is not None:
        if args.a is not None or args.b is not None:
            raise PreconditionError("Give either --g or --a/--b, not both")
        params, _ = counterexample_params_for_girth(args.g, args.delta)
        return params
    if args.a is None or args.b is None:
        raise PreconditionError("Counterexample needs --g, or both --a and --b")
    return CounterexampleParams(args.delta, args.a, args.b)


def _measured_line(
    digraph: Digraph, params: CounterexampleParams, limits: SolverLimits
) -> str:
    """Exact girth and ℓ, or the δb + a − 1 lower bound past the solver limits."""
    shortest = girth(digraph).length
    try:
        ell = longest_path_exact(digraph, limits).length
    except ResourceLimitError:
        logger.info("Counterexample beyond solver limits; reporting the lower bound")
        return f"girth={shortest} ell>={params.longest_path_lower_bound}"
    return f"girth={shortest} ell={ell}"


def cmd_generate(args: argparse.Namespace, config: GirthPathConfig) -> int:
    if args.generator == "counterexample":
        params = _counterexample_params(args)
        digraph = build_counterexample(params)
        parameters: dict[str, Any] = {"delta": params.delta, "a": params.a, "b": params.b}
        seed: int | None = None
        prediction: str | None = _measured_line(digraph, params, config.solver_limits)
    else:
        spec = GenSpec(GraphKind(args.kind), args.n, args.d, args.seed, args.C)
        digraph = generate(spec)
        report = validate(digraph)
        if not report.ok:
            raise InvalidDigraphError(f"Generator produced an invalid digraph: {report.summary()}")
        parameters = {"kind": spec.kind.value, "n": spec.n, "d": spec.d, "C": str(spec.C)}
        seed = spec.seed
        prediction = None

    text = to_edge_list(digraph)
    manifest = build_manifest(
        f"generate {args.generator}", parameters, seed=seed, canonical_instance=text
    )
    written = _emit(_serialize(digraph, args.output, manifest.to_dict()), args.output)
    if args.dot is not None:
        write_file(args.dot, to_dot(digraph))

    line = prediction or (
        f"n={digraph.vertex_count} m={digraph.arc_count} sha256={manifest.instance_digest}"
    )
    # Keep stdout parseable when the instance itself went there
    print(line, file=sys.stdout if written is not None else sys.stderr)
    return EXIT_OK


def _analysis_document(
    args: argparse.Namespace, digraph: Digraph, limits: SolverLimits
) -> tuple[dict[str, Any], bool]:
    n = digraph.vertex_count
    delta = args.delta if args.delta is not None else min_out_degree(digraph)
    shortest = girth(digraph)
    document: dict[str, Any] = {
        "instance_id": args.file.stem,
        "n": n,
        "m": digraph.arc_count,
        "delta": delta,
        "girth": shortest.length,
        "girth_witness": list(shortest.witness.vertices) if shortest.witness else None,
        "oriented": is_oriented(digraph),
    }

    if args.skip_exact:
        document.update(
            {
                "ell": None,
                "outcome": None,
                "bound_table": bound_table(n, delta, shortest.length).to_dict(),
                "bounds": {},
                "claims": [],
                "conjecture_probes": {},
            }
        )
        return document, True

    bounds = verify_path_bounds(digraph, limits)
    document.update(
        {
            "ell": bounds.ell,
            "bounds": bounds.to_dict()["bounds"],
            "bound_table": bounds.bounds.to_dict(),
            "conjecture_probes": bounds.to_dict()["conjecture_probes"],
        }
    )
    passed = bounds.passed

    dichotomy: DichotomyReport | None = None
    if document["oriented"] and delta >= 1:
        dichotomy = analyze_dichotomy(digraph, delta, limits)
    else:
        logger.info("Dichotomy analysis skipped: needs an oriented graph and delta >= 1")

    if dichotomy is not None:
        document["outcome"] = dichotomy.outcome.value
        document["dichotomy"] = dichotomy.to_dict()
        document["claims"] = document["dichotomy"].pop("claims")
        problems = dichotomy.violations()
        document["violations"] = problems
        passed = passed and not problems
    else:
        document["outcome"] = None
        document["claims"] = []
    return document, passed


def cmd_analyze(args: argparse.Namespace, config: GirthPathConfig) -> int:
    digraph = _load_instance(args.file)
    limits = config.solver_limits
    document, passed = _analysis_document(args, digraph, limits)
    parameters = {
        "file": args.file.name,
        "delta": args.delta,
        "skip_exact": args.skip_exact,
        "limits": f"dp={limits.max_dp_vertices},bb={limits.max_bb_vertices},"
        f"budget={limits.node_budget}",
    }
    manifest = build_manifest(
        "analyze",
        parameters,
        canonical_instance=to_edge_list(digraph),
    )
    text = dumps({"manifest": manifest.to_dict(), **document})
    sys.stdout.write(text)
    if args.output is not None:
        write_file(args.output, text)
    return EXIT_OK if passed else EXIT_ASSERTION


def _suite_request(args: argparse.Namespace, config: GirthPathConfig) -> SuiteRequest:
    request = SuiteRequest(
        suite=args.suite,
        seed=args.seed if args.seed is not None else config.sweep_seed,
        workers=max(1, args.workers if args.workers is not None else config.sweep_workers),
        limits=config.solver_limits,
        output_dir=args.output_dir,
        instance_count=args.count,
    )
    partition = replace(
        request.partition,
        C=args.C if args.C is not None else config.partition_C,
        max_resample_rounds=(
            args.max_resample_rounds
            if args.max_resample_rounds is not None
            else config.max_resample_rounds
        ),
    )
    d = args.d if args.d is not None else config.partition_d
    if d is not None:
        partition = replace(partition, degrees=(d,))
    return replace(request, partition=partition)


def cmd_verify(args: argparse.Namespace, config: GirthPathConfig) -> int:
    if args.suite not in SUITES:
        print(f"Unknown suite: {args.suite} (known: {', '.join(SUITES)})", file=sys.stderr)
        return EXIT_USAGE

    workflow = VerificationWorkflow()
    result = asyncio.run(workflow.execute_workflow(_suite_request(args, config)))
    if result.error:
        print(result.error, file=sys.stderr)
        return EXIT_ASSERTION
    sys.stdout.write(render_summary(result))
    return EXIT_OK if result.success else EXIT_ASSERTION


def cmd_export(args: argparse.Namespace, config: GirthPathConfig) -> int:
    digraph = _load_instance(args.file)
    if args.format == "dot":
        text = to_dot(digraph, name=args.file.stem.replace("-", "_") or "D")
    elif args.format == "csv":
        text = to_csv(digraph)
    elif args.format == "edgelist":
        text = to_edge_list(digraph)
    else:
        manifest = build_manifest(
            "export",
            {"file": args.file.name, "format": "json"},
            canonical_instance=to_edge_list(digraph),
        )
        text = to_json(digraph, manifest.to_dict())
    _emit(text, args.output)
    return EXIT_OK


def cmd_partition(args: argparse.Namespace, config: GirthPathConfig) -> int:
    digraph = _load_instance(args.file)
    C = args.C if args.C is not None else config.partition_C
    d = args.d if args.d is not None else config.partition_d
    c_prime = args.c_prime if args.c_prime is not None else config.partition_c_prime
    seed = args.seed if args.seed is not None else config.partition_seed
    rounds = (
        args.max_resample_rounds
        if args.max_resample_rounds is not None
        else config.max_resample_rounds
    )

    run = find_long_path(
        digraph,
        C,
        d=d,
        c_prime=c_prime,
        seed=seed,
        max_resample_rounds=rounds,
        require_inequality=not args.allow_infeasible,
    )
    problems = run.stitch.problems() + run.stitch.path.check(digraph)
    if run.certificate is not None:
        problems += verify_certificate(digraph, run.certificate)

    parameters = {
        "file": args.file.name,
        "C": C,
        "d": d,
        "c_prime": c_prime,
        "max_resample_rounds": rounds,
        "require_inequality": not args.allow_infeasible,
    }
    manifest = build_manifest(
        "partition", parameters, seed=seed, canonical_instance=to_edge_list(digraph)
    )
    text = dumps({"manifest": manifest.to_dict(), **run.to_dict(), "problems": problems})
    sys.stdout.write(text)
    if args.output is not None:
        write_file(args.output, text)
    return EXIT_ASSERTION if problems else EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "export": cmd_export,
    "partition": cmd_partition,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the girthpath CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args.config)
        _configure_logging(args.log_level or config.log_level)
        return COMMANDS[args.command](args, config)
    except ResourceLimitError as e:
        print(f"Resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, InvalidDigraphError, PreconditionError, ConfigError, yaml.YAMLError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GenerationError, ConvergenceError) as e:
        print(f"Failed: {e}", file=sys.stderr)
        return EXIT_ASSERTION
    except GirthPathError as e:
        logger.exception("Unexpected failure")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())
