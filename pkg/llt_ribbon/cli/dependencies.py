"""
Shared helpers for the CLI commands: settings lookup and error mapping.
"""
import functools
import logging
from typing import Callable, Optional

import click
from pydantic import ValidationError

from llt_ribbon.core.config import Settings
from llt_ribbon.core.errors import ExitCode, LLTError


logger = logging.getLogger(__name__)


def get_settings(ctx: click.Context) -> Settings:
    """The Settings built by the command group for this invocation."""
    settings = ctx.find_root().obj
    if not isinstance(settings, Settings):
        settings = Settings()
        ctx.find_root().obj = settings
    return settings


def resolve_limit(ctx: click.Context, override: Optional[int]) -> int:
    """An explicit --limit/--max-vertices wins over LLT_MAX_VERTICES."""
    return override if override is not None else get_settings(ctx).MAX_VERTICES


def fail(message: str, code: ExitCode) -> None:
    click.echo(f"error: {message}", err=True)
    raise click.exceptions.Exit(int(code))


def handle_errors(command: Callable) -> Callable:
    """Turn library errors into an error line on stderr and the matching exit code."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except LLTError as exc:
            logger.debug("command failed", exc_info=True)
            fail(str(exc), exc.exit_code)
        except ValidationError as exc:
            problems = "; ".join(
                f"{'.'.join(map(str, e['loc'])) or 'input'}: {e['msg']}" for e in exc.errors()
            )
            fail(problems, ExitCode.USAGE)

    return wrapper
