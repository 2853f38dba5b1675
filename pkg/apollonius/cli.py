"""
Apollonius Command Line Interface
"""

import logging
import re
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterator, List, Optional

import click
import pandas as pd
from rich import traceback
from rich_click import RichCommand, RichGroup, rich_click

from apollonius import __application__, __version__
from apollonius.algorithms import ALGORITHMS, get_algorithm
from apollonius.bench import (
    bench_succeeded,
    complexity_report,
    run_bench,
    write_bench_table,
)
from apollonius.config import (
    BenchConfig,
    FileConfig,
    GeneratorConfig,
    ReassignmentStrategy,
    logging_config,
)
from apollonius.config.logging_config import set_up_logging
from apollonius.containers import DataSet, DataSource, NcarParams
from apollonius.data import (
    FIG8_NOTE,
    load_csv,
    normalize_zscore,
    parse_generator_spec,
    save_csv,
)
from apollonius.density import distance_matrix
from apollonius.exceptions import ApolloniusError, InvalidParameter
from apollonius.io import plot_decision_graph, plot_result, read_result, write_result
from apollonius.ncar import k_sequence_diagnostic, run_ncar_detailed
from apollonius.utils import log_apollonius, parse_int_list, print_table, yaml_file_to_manifest

logging.Logger.apollonius = log_apollonius
logger = logging.getLogger(__name__)

DATA_ERROR_EXIT_CODE: int = 3

rich_click.STYLE_OPTION = "bold green"
rich_click.STYLE_SWITCH = "bold blue"
rich_click.STYLE_METAVAR = "bold red"
rich_click.STYLE_HELPTEXT_FIRST_LINE = "bold blue"
rich_click.STYLE_HELPTEXT = ""
rich_click.STYLE_HEADER_TEXT = "bold green"
rich_click.STYLE_OPTION_DEFAULT = "bold yellow"
rich_click.STYLE_OPTION_HELP = ""
rich_click.STYLE_ERRORS_SUGGESTION = "bold red"
rich_click.STYLE_OPTIONS_TABLE_BOX = "SIMPLE_HEAVY"
rich_click.STYLE_COMMANDS_TABLE_BOX = "SIMPLE_HEAVY"
if logging_config.LOG_HANDLER == "python":
    rich_click.COLOR_SYSTEM = None

try:
    from trogon import tui
except ImportError:

    def tui(*args, **kwargs):
        """
        TUI Placeholder - trogon not installed
        """

        def placeholder(app: click.Group):
            """
            Return the group in place
            """
            return app

        return placeholder


@dataclass
class ApolloniusContext:
    """
    Context Object Passed Around Application
    """

    debug: Optional[bool] = None


debug_option = click.option(
    "--debug/--no-debug", default=None, help="Enable extra debugging output"
)


def _set_up_debug(debug: Optional[bool] = None) -> None:
    """
    Set up the Apollonius Debugging Mode
    """
    if debug is None:
        debug = False
    if debug is True:
        set_up_logging(log_level=logging.DEBUG)
        logger.debug("Setting up apollonius debugging")
        logger.debug("Apollonius Version: %s", __version__)
        logger.debug("Python Version: %s", sys.version.split(" ")[0])
        logger.debug("Platform: %s", sys.platform)
    traceback.install(show_locals=debug, suppress=[click, rich_click])


def _command_debug(context: ApolloniusContext, debug: Optional[bool]) -> None:
    if context.debug is None:
        context.debug = debug
        _set_up_debug(debug=context.debug)


@contextmanager
def _handle_errors() -> Iterator[None]:
    """
    Bad parameters exit 2 with a usage message, every other failure exits 3
    """
    try:
        yield
    except InvalidParameter as invalid:
        raise click.UsageError(str(invalid)) from invalid
    except ApolloniusError as error:
        logger.error("%s: %s", error.__class__.__name__, error)
        sys.exit(DATA_ERROR_EXIT_CODE)


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("_") or "dataset"


@tui()
@click.group(cls=RichGroup)
@debug_option
@click.version_option(version=__version__, prog_name=__application__)
@click.pass_context
def apollonius_command_line(ctx: click.core.Context, debug: bool) -> None:
    """
    Welcome to apollonius, neighborhoods from Apollonius circles.

    apollonius partitions point clouds into groups with the NCAR algorithm:
    dense, well separated target points become the foci of Apollonius circles, the
    points inside a circle form its group and points out of reach of every target
    are reported as outliers. Compare NCAR with kNN graph, epsilon graph and density
    peak baselines, benchmark whole suites and plot the circles.

    \b

    Relative output paths are placed in $APOLLONIUS_OUTPUT_DIR when it is set.
    """
    set_up_logging(log_level=None if debug is False else logging.INFO)
    logger.apollonius("apollonius, neighborhoods from Apollonius circles")
    ctx.obj = ApolloniusContext(debug=debug)
    _set_up_debug(debug=debug)


# Shared Arguments
data_argument = click.option(
    "--data",
    default=None,
    type=click.Path(dir_okay=False, path_type=Path),
    help="CSV file of points, one point per row.",
)
gen_argument = click.option(
    "--gen",
    default=None,
    metavar="SPEC",
    help="Generated dataset: `rings:<clusters>x<points>`, "
    "`blobs:<blobs>x<points>[+<outliers>]` or `fig8`.",
)
label_column_argument = click.option(
    "--label-column",
    default="last",
    show_default=True,
    help="Label column of --data: an index, a header name, `last`, or `none`.",
)
header_argument = click.option(
    "--header", is_flag=True, default=False, help="The first line of --data is a header."
)
delimiter_argument = click.option(
    "--delimiter", default=",", show_default=True, help="Field delimiter of --data."
)
seed_argument = click.option(
    "--seed",
    default=GeneratorConfig.DEFAULT_SEED,
    show_default=True,
    type=click.INT,
    help="Random seed of generated datasets.",
)
zscore_argument = click.option(
    "--zscore",
    is_flag=True,
    default=False,
    help="Scale every feature to mean 0 and standard deviation 1 first.",
)
p_argument = click.option(
    "--p",
    "p",
    default=None,
    type=click.FLOAT,
    help="Neighbor fraction of the local density, defaults to 0.05.",
)
targets_argument = click.option(
    "--targets",
    default=None,
    type=click.IntRange(min=1),
    help="Number of target points (or centers), chosen automatically when absent.",
)
reassignment_argument = click.option(
    "--reassignment",
    default=None,
    type=click.Choice([item.value for item in ReassignmentStrategy], case_sensitive=False),
    help="How NCAR reassigns uncovered and overlapping points.",
)

_dataset_arguments = [
    data_argument,
    gen_argument,
    label_column_argument,
    header_argument,
    delimiter_argument,
    seed_argument,
    zscore_argument,
]


def dataset_options(func: Callable) -> Callable:
    """
    Attach the Shared Dataset Options to a Command
    """
    for option in reversed(_dataset_arguments):
        func = option(func)
    return func


def _label_column(value: str) -> Any:
    if value.lower() == "none":
        return None
    if value.lstrip("-").isdigit():
        return int(value)
    return value


def load_dataset(
    data: Optional[Path],
    gen: Optional[str],
    label_column: str,
    header: bool,
    delimiter: str,
    seed: int,
    zscore: bool,
) -> DataSet:
    """
    Load the DataSet named by --data or --gen
    """
    if (data is None) == (gen is None):
        raise click.UsageError("Provide exactly one of --data or --gen")
    if gen is not None:
        dataset = parse_generator_spec(gen, seed=seed)
    else:
        dataset = load_csv(
            data,
            label_column=_label_column(label_column),
            delimiter=delimiter,
            header=header,
        )
    if zscore:
        dataset = normalize_zscore(dataset).evolve(name=f"{dataset.name}[zscore]")
    return dataset


def _ncar_params(p: Optional[float], targets: Optional[int], reassignment: Optional[str]) -> NcarParams:
    params = {"p": p, "target_count": targets, "reassignment": reassignment}
    try:
        return NcarParams(**{key: value for key, value in params.items() if value is not None})
    except ValueError as validation_error:
        raise InvalidParameter(str(validation_error)) from validation_error


@apollonius_command_line.command(cls=RichCommand)
@dataset_options
@click.option(
    "--algo",
    default="ncar",
    show_default=True,
    type=click.Choice(list(ALGORITHMS.keys()), case_sensitive=False),
    help="Algorithm to run.",
)
@p_argument
@targets_argument
@click.option(
    "--k-fraction",
    default=None,
    type=click.FLOAT,
    help="Neighbor fraction of the kNN graph baselines.",
)
@click.option(
    "--epsilon",
    default=None,
    type=click.FLOAT,
    help="Radius of the epsilon graph, chosen from the k-distance curve when absent.",
)
@reassignment_argument
@click.option(
    "--repeats",
    default=BenchConfig.DEFAULT_REPEATS,
    show_default=True,
    type=click.IntRange(min=1),
    help="Timed repeats, the median is reported.",
)
@click.option("--output", default=None, help="Result file path.")
@debug_option
@click.pass_obj
def run(
    context: ApolloniusContext,
    debug: bool,
    data: Optional[Path],
    gen: Optional[str],
    label_column: str,
    header: bool,
    delimiter: str,
    seed: int,
    zscore: bool,
    algo: str,
    p: Optional[float],
    targets: Optional[int],
    k_fraction: Optional[float],
    epsilon: Optional[float],
    reassignment: Optional[str],
    repeats: int,
    output: Optional[str],
) -> None:
    """
    Run an algorithm on a dataset and write a result file

    The result file holds the group of every point, the metrics (RI and SN only
    when the dataset has labels), the runtime and the Apollonius circles, which
    is everything `apollonius plot` needs.
    """
    _command_debug(context, debug)
    with _handle_errors():
        algorithm = get_algorithm(
            algo,
            p=p,
            target_count=targets,
            k_fraction=k_fraction,
            epsilon=epsilon,
            reassignment=reassignment,
        )
        dataset = load_dataset(data, gen, label_column, header, delimiter, seed, zscore)
        result = algorithm.run(dataset, repeats=repeats)
        output_path = FileConfig.resolve_output(
            output or f"{_slug(dataset.name)}-{algorithm.name}.result"
        )
        write_result(result, output_path)
    report = result.report
    summary = pd.DataFrame(
        [
            {
                "algorithm": report.algorithm,
                "dataset": report.dataset,
                "ri": report.ri,
                "sn": report.sn,
                "vn": report.vn,
                "runtime_seconds": report.runtime_seconds,
            }
        ]
    )
    print_table(summary, title=str(output_path))
    logger.info("Result written to %s", output_path)


@apollonius_command_line.command(cls=RichCommand)
@click.argument(
    "manifest", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option(
    "--output",
    default="bench.csv",
    show_default=True,
    help="Bench table (CSV) path.",
)
@click.option(
    "--no-timing",
    is_flag=True,
    default=False,
    help="Drop the runtime column so tables are byte-identical across runs.",
)
@click.option(
    "--workers",
    default=None,
    type=click.IntRange(min=1),
    help="Rows run concurrently, overrides the manifest.",
)
@debug_option
@click.pass_obj
def bench(
    context: ApolloniusContext,
    debug: bool,
    manifest: Path,
    output: str,
    no_timing: bool,
    workers: Optional[int],
) -> None:
    """
    Benchmark every dataset against every algorithm of a YAML manifest

    One row per (dataset, algorithm) pair, in manifest order, with RI, SN, VN
    and the median runtime. Rows that fail carry an ERROR marker; the command
    still succeeds when at least one row ran.
    """
    _command_debug(context, debug)
    with _handle_errors():
        bench_manifest = yaml_file_to_manifest(manifest)
        if workers is not None:
            bench_manifest = bench_manifest.evolve(workers=workers)
        if no_timing:
            bench_manifest = bench_manifest.evolve(timing=False)
        frame = run_bench(bench_manifest, base_dir=manifest.parent)
        output_path = write_bench_table(frame, FileConfig.resolve_output(output))
    print_table(frame, title=str(output_path))
    if not bench_succeeded(frame):
        logger.error("Every bench row failed")
        sys.exit(DATA_ERROR_EXIT_CODE)
    logger.info("Bench table written to %s", output_path)


@apollonius_command_line.command(cls=RichCommand)
@click.argument(
    "result", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.argument("output", type=click.Path(dir_okay=False))
@click.option(
    "--project",
    is_flag=True,
    default=False,
    help="Plot the first two features of higher dimensional results.",
)
@debug_option
@click.pass_obj
def plot(
    context: ApolloniusContext,
    debug: bool,
    result: Path,
    output: str,
    project: bool,
) -> None:
    """
    Plot a result file as an SVG scatter plot with its Apollonius circles
    """
    _command_debug(context, debug)
    with _handle_errors():
        run_result = read_result(result)
        output_path = plot_result(run_result, FileConfig.resolve_output(output), project=project)
    logger.info("Plot written to %s", output_path)


@apollonius_command_line.command(cls=RichCommand)
@click.argument("spec")
@seed_argument
@click.option("--output", default=None, help="CSV path, named after the spec by default.")
@click.option(
    "--header", is_flag=True, default=False, help="Write a header line."
)
@debug_option
@click.pass_obj
def generate(
    context: ApolloniusContext,
    debug: bool,
    spec: str,
    seed: int,
    output: Optional[str],
    header: bool,
) -> None:
    """
    Write a generated dataset as CSV, labels in the last column

    SPEC is `rings:<clusters>x<points>[,radius=R][,sigma=S]`,
    `blobs:<blobs>x<points>[+<outliers>][,separation=D][,sigma=S]` or `fig8`.
    """
    _command_debug(context, debug)
    with _handle_errors():
        dataset = parse_generator_spec(spec, seed=seed)
        output_path = FileConfig.resolve_output(output or f"{_slug(dataset.name)}.csv")
        save_csv(dataset, output_path, header=header)
    if dataset.source == DataSource.fixture:
        logger.info(FIG8_NOTE)
    logger.info("%s points written to %s", dataset.n, output_path)


@apollonius_command_line.command(cls=RichCommand)
@click.option(
    "--sizes",
    default=",".join(str(size) for size in BenchConfig.DEFAULT_SCALING_SIZES),
    show_default=True,
    help="Comma separated dataset sizes.",
)
@targets_argument
@click.option(
    "--repeats",
    default=BenchConfig.DEFAULT_REPEATS,
    show_default=True,
    type=click.IntRange(min=1),
    help="Timed repeats per size, the median is reported.",
)
@seed_argument
@click.option("--output", default=None, help="Optional CSV path of the table.")
@debug_option
@click.pass_obj
def scaling(
    context: ApolloniusContext,
    debug: bool,
    sizes: str,
    targets: Optional[int],
    repeats: int,
    seed: int,
    output: Optional[str],
) -> None:
    """
    Time NCAR on generated data of growing size

    Reports the median runtime per size and its ratio to the previous size; a
    quadratic algorithm roughly quadruples when the size doubles.
    """
    _command_debug(context, debug)
    try:
        size_list = parse_int_list(sizes)
    except ValueError as value_error:
        raise click.BadParameter(f"not a list of integers: {sizes}", param_hint="--sizes") from value_error
    with _handle_errors():
        frame = complexity_report(
            sizes=size_list,
            targets=targets or BenchConfig.DEFAULT_SCALING_TARGETS,
            repeats=repeats,
            seed=seed,
        )
    print_table(frame, title="NCAR runtime by size")
    if output is not None:
        output_path = write_bench_table(frame, FileConfig.resolve_output(output))
        logger.info("Complexity table written to %s", output_path)


@apollonius_command_line.command(cls=RichCommand)
@dataset_options
@p_argument
@targets_argument
@debug_option
@click.pass_obj
def diagnose(
    context: ApolloniusContext,
    debug: bool,
    data: Optional[Path],
    gen: Optional[str],
    label_column: str,
    header: bool,
    delimiter: str,
    seed: int,
    zscore: bool,
    p: Optional[float],
    targets: Optional[int],
) -> None:
    """
    Print the k-sequence of every target

    For each target, the points closer to it than its partner are removed
    farthest first; every step shows the ratio k of the removed point with the
    mean and variance of the ratios still left.
    """
    _command_debug(context, debug)
    with _handle_errors():
        params = _ncar_params(p, targets, None)
        dataset = load_dataset(data, gen, label_column, header, delimiter, seed, zscore)
        dist = distance_matrix(dataset.points)
        detailed = run_ncar_detailed(dataset, params, dist)
    if not detailed.pairings:
        logger.warning("%s has a single target, there is no k-sequence", dataset.name)
        return
    ids = dataset.point_ids
    target_set = set(detailed.targets)
    non_targets = [index for index in range(dataset.n) if index not in target_set]
    for pairing in sorted(detailed.pairings, key=lambda item: item.target):
        steps = k_sequence_diagnostic(pairing, dist, non_targets)
        frame = pd.DataFrame(
            [
                {
                    "point": ids[step.point],
                    "distance": step.distance,
                    "k": step.k,
                    "mean": step.mean,
                    "variance": step.variance,
                }
                for step in steps
            ],
            columns=["point", "distance", "k", "mean", "variance"],
        )
        print_table(
            frame,
            title=f"target {ids[pairing.target]}, partner {ids[pairing.partner]}",
        )


@apollonius_command_line.command(cls=RichCommand, name="decision-graph")
@dataset_options
@p_argument
@targets_argument
@click.argument("output", type=click.Path(dir_okay=False))
@debug_option
@click.pass_obj
def decision_graph(
    context: ApolloniusContext,
    debug: bool,
    data: Optional[Path],
    gen: Optional[str],
    label_column: str,
    header: bool,
    delimiter: str,
    seed: int,
    zscore: bool,
    p: Optional[float],
    targets: Optional[int],
    output: str,
) -> None:
    """
    Plot local density against separation with the chosen targets highlighted
    """
    _command_debug(context, debug)
    with _handle_errors():
        params = _ncar_params(p, targets, None)
        dataset = load_dataset(data, gen, label_column, header, delimiter, seed, zscore)
        detailed = run_ncar_detailed(dataset, params)
        output_path = plot_decision_graph(
            detailed.profile,
            detailed.targets,
            FileConfig.resolve_output(output),
            point_ids=dataset.point_ids,
            title=f"decision graph of {dataset.name}",
        )
    chosen: List[int] = [dataset.point_ids[target] for target in detailed.targets]
    logger.info("Targets %s, plot written to %s", chosen, output_path)


def cli():
    """
    Apollonius Command Line Utility Wrapper
    """
    try:
        apollonius_command_line()
    except KeyboardInterrupt:
        logger.debug("Handling Exit Request")
    finally:
        logger.apollonius("Exiting apollonius 👋")


if __name__ == "__main__":
    cli()
