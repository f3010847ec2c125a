#!/usr/bin/env python3
"""
nullcert 主命令行入口
"""

import click

from ..errors import ConfigError
from ..log.logger import configure_logging
from ..utils.load_config import load_settings
from .commands.documents import certify, mindeg, reduce, verify
from .commands.numbers import demo_group, lucas
from .common.utils import set_logger_config


@click.group()
@click.version_option(package_name="nullcert")
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              default=None, help='TOML or JSON settings file')
@click.option('--verbose', '-v', is_flag=True, help='debug logging on stderr')
@click.pass_context
def main(ctx, config_path, verbose):
    """Exact Nullstellensatz certificates over finite fields and finite sets."""
    try:
        settings = load_settings(config_path)
    except ConfigError as exc:
        raise click.UsageError(str(exc)) from exc
    configure_logging("DEBUG" if verbose else settings.log_level)
    set_logger_config(verbose=verbose)
    ctx.obj = settings


# 注册子命令
main.add_command(certify, name='certify')
main.add_command(verify, name='verify')
main.add_command(reduce, name='reduce')
main.add_command(mindeg, name='mindeg')
main.add_command(lucas, name='lucas')
main.add_command(demo_group, name='demo')


if __name__ == "__main__":
    main()
