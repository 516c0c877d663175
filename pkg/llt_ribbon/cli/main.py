"""
Command-line entry point: the click group and its commands.
"""
import click
from pydantic import ValidationError

from llt_ribbon.cli.expand import expand
from llt_ribbon.cli.oracle import oracle
from llt_ribbon.cli.syt import syt
from llt_ribbon.cli.verify import verify
from llt_ribbon.core.config import Settings
from llt_ribbon.core.errors import ExitCode
from llt_ribbon.core.logging import configure_logging


LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def load_settings() -> Settings:
    """A fresh Settings so LLT_* environment overrides always apply."""
    try:
        return Settings()
    except ValidationError as exc:
        problems = "; ".join(f"LLT_{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        click.echo(f"error: invalid configuration: {problems}", err=True)
        raise click.exceptions.Exit(int(ExitCode.USAGE))


def print_version(ctx: click.Context, _param: click.Parameter, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return
    settings = load_settings()
    click.echo(f"{settings.PROJECT_NAME} {settings.VERSION}")
    ctx.exit()


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--version", is_flag=True, expose_value=False, is_eager=True, callback=print_version,
              help="Show the version and exit.")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help="Override LLT_LOG_LEVEL.")
@click.pass_context
def cli(ctx: click.Context, log_level):
    """LLT polynomials of unit interval graphs and their ribbon expansions."""
    settings = load_settings()
    configure_logging(log_level or settings.LOG_LEVEL, settings.LOG_CONFIG)
    ctx.obj = settings


cli.add_command(expand)
cli.add_command(verify)
cli.add_command(syt)
cli.add_command(oracle)


def main() -> None:
    cli(prog_name="llt-ribbon")
