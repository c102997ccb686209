"""Consecutive primes in Beatty sequences: experiment CLI."""

import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click

from beattyprimes.basic.errors import BeattyPrimesError, ConfigError
from beattyprimes.basic.my_logger import logger
from beattyprimes.experiment.config import read_mapping
from beattyprimes.workload.tasks.task_factory import TaskFactory
from beattyprimes.workload.workload import Workload


@click.group()
def cli():
    """Counts, predictions and lemma sweeps for primes p, p# in Beatty sequences."""


def parse_parameters(ctx, param, value):
    """Parse key=value pairs into a dictionary."""
    if not value:
        return {}
    params = {}
    for item in value:
        if '=' not in item:
            raise click.BadParameter(f"Invalid format '{item}'. Use key=value")
        key, val = item.split('=', 1)
        params[key] = val
    return params


def common_options(func):
    """Flags shared by every experiment subcommand."""
    options = [
        click.option("--alpha", help="Modulus of B: named constant (sqrt2, golden, e, ...) or decimal"),
        click.option("--beta", help="Shift of B"),
        click.option("--alpha-hat", help="Modulus of B-hat"),
        click.option("--beta-hat", help="Shift of B-hat"),
        click.option("--x", "x", help="Single bound x (e.g. 1e6)"),
        click.option("--checkpoints", help="Comma separated ascending bounds"),
        click.option("--p-max", help="Euler product cutoff for singular series"),
        click.option("--out", type=click.Path(dir_okay=False), help="Report path"),
        click.option("--format", "fmt", type=click.Choice(['csv', 'json'], case_sensitive=False), help="Report format"),
        click.option("--seed-free", is_flag=True, default=False, help="Assert the run uses no random numbers"),
        click.option("--config", "config_path", type=click.Path(dir_okay=False),
                     help="Flat key = value file or YAML mapping; flags override it"),
        click.option("--param", "-p", "extra", multiple=True, callback=parse_parameters,
                     help="Extra task parameters as key=value pairs (can be used multiple times)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _collect(config_path: Optional[str], extra: Dict[str, Any], fmt: Optional[str], **flags) -> Dict[str, Any]:
    params = read_mapping(config_path) if config_path else {}
    params.update(extra)
    flags = {k: v for k, v in flags.items() if v is not None and v is not False}
    if 'x' in flags or 'checkpoints' in flags:
        # a bound given on the command line replaces the configured ones
        params.pop('x', None)
        params.pop('checkpoints', None)
    params.update(flags)
    if fmt is not None:
        params['format'] = fmt.lower()
    return params


def _fail(e: BeattyPrimesError) -> None:
    logger.error(f"{type(e).__name__}: {e}")
    sys.exit(e.exit_code)


def _execute(type_name: str, config_path: Optional[str], extra: Dict[str, Any], fmt: Optional[str],
             **flags) -> None:
    """Run one task; BeattyPrimesError subclasses become exit codes."""
    try:
        params = _collect(config_path, extra, fmt, **flags)
        task = TaskFactory.create(type_name, type_name, {}, params)
        task.execute([])
    except BeattyPrimesError as e:
        _fail(e)


def register(type_name: str, help_text: str, *extra_options) -> click.Command:
    """Attach a subcommand that runs the task type of the same name."""
    def command(config_path, extra, fmt, **flags):
        _execute(type_name, config_path, extra, fmt, **flags)

    command.__doc__ = help_text
    command = common_options(command)
    for option in reversed(extra_options):
        command = option(command)
    return cli.command(name=type_name)(command)


register('count', "pi(x; B, B-hat) at each checkpoint against (alpha alpha_hat)^-1 pi(x).",
         click.option("--progress", is_flag=True, default=False, help="Show a progress bar"))
register('gaps', "Gap histogram S_h(x) beside the Beatty-filtered counts.",
         click.option("--workers", type=int, help="Sieve worker processes"))
register('predict', "Predicted S_h(x) against the sieve histogram.",
         click.option("--h", "h", help="Comma separated even gaps"),
         click.option("--total", is_flag=True, default=False, help="Also predict the sum over even h"),
         click.option("--headline", is_flag=True, default=False, help="Also report the leading headline term"))
register('singular', "Singular series of an offset set, or the pair-sum sweep over h.",
         click.option("--h", "h", help="Comma separated h for the sweep"),
         click.option("--offsets", help="Comma separated offsets, e.g. 0,2,6"))
register('discrepancy', "Extreme discrepancy of {a m + b} over a grid of M (-p M=1000,10000).")
register('mollifier', "Mollifier coefficient decay and truncation error (-p a=.. -p delta=.. -p K=..).")
register('type', "Continued fraction and irrationality-type estimate of alpha.",
         click.option("--n", "n", type=int, help="Number of partial quotients"),
         click.option("--N", "N", help="Largest denominator for the type estimate"))


@cli.command()
@click.argument("suite")
@common_options
def lemma(suite, config_path, extra, fmt, **flags):
    """Run one lemma suite: g0sums, rst, integral, truncation, mollifier, discrepancy."""
    _execute('lemma', config_path, {**extra, 'suite': suite}, fmt, **flags)


@cli.command()
@click.option("--workload", "-w", required=True, help="Path to workload directory (e.g., workloads/headline)")
@click.option("--workload-parameters", "-p", multiple=True, callback=parse_parameters,
              help="Runtime parameters as key=value pairs (can be used multiple times)")
@click.option("--skip-tasks", "-s", multiple=True, help="Task names to skip (can be used multiple times)")
def run(workload: str, workload_parameters: dict, skip_tasks: tuple):
    """Run a workload of experiment tasks."""
    workload_path = Path(workload)

    try:
        if not workload_path.exists():
            raise ConfigError("Workload path not found", path=workload_path)
        # Create workload with runtime parameters (global_params ready immediately)
        wl = Workload(workload_path, runtime_params=workload_parameters)
        wl.parse()
    except BeattyPrimesError as e:
        _fail(e)

    results = wl.run(skip_tasks=set(skip_tasks))

    success_count = sum(1 for r in results if r['status'] == 'success')
    logger.info(f"\nCompleted: {success_count}/{len(results)} tasks succeeded")
    failed = [r for r in results if r['status'] == 'failed']
    if failed:
        sys.exit(failed[0]['exit_code'])


if __name__ == "__main__":
    cli()
