"""
nullcert 子命令
"""

import click

from ..common.utils import finish
from ..runner import CliConfig, build_config, run


def invoke(ctx: click.Context, **values) -> None:
    """Validate ``values`` into a CliConfig, run it and exit with its code."""
    config = build_config(**values)
    if not isinstance(config, CliConfig):
        finish(ctx, config)
    finish(ctx, run(config, ctx.obj), values.get("output_path"))
