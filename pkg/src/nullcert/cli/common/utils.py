"""
CLI 通用工具函数 - 集成 rich 支持
"""

from pathlib import Path
from typing import Optional

import click
from rich.console import Console

from ...errors import ParseError


class Logger:
    """stderr reporter for CLI messages; stdout carries command output only."""

    def __init__(self, verbose: bool = False):
        """
        初始化对象。

        Args:
            verbose: Show debug messages.
        """
        self.verbose = verbose

    @property
    def console(self) -> Console:
        # fresh console per call: follows the current sys.stderr
        return Console(stderr=True, soft_wrap=True, highlight=False)

    def warning(self, message: str):
        """警告日志"""
        self.console.print(message, style="bold yellow", markup=False)

    def error(self, message: str):
        """错误日志"""
        self.console.print(f"error: {message}", style="bold red", markup=False)

    def debug(self, message: str):
        """调试日志"""
        if self.verbose:
            self.console.print(message, style="dim", markup=False)


# 全局日志器实例
logger = Logger()


def set_logger_config(verbose: bool = False):
    """设置日志器配置"""
    global logger
    logger = Logger(verbose=verbose)


def read_input(path: str) -> bytes:
    """Read a document from ``path`` or stdin (``-``) as raw bytes."""
    if path == '-':
        return click.get_binary_stream('stdin').read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def write_output(content: str, output_path: Optional[str] = None):
    """统一的输出处理"""
    if output_path:
        output_file = Path(output_path)
        output_file.parent.mkdir(parents=True, exist_ok=True)
        output_file.write_text(content, encoding='utf-8')
        logger.debug(f"wrote {len(content)} characters to {output_path}")
    else:
        click.echo(content, nl=False)


def finish(ctx: click.Context, response, output_path: Optional[str] = None):
    """Write ``response.data``, report failures on stderr and exit with ``response.code``."""
    if response.data:
        write_output(response.data, output_path)
    if response.code == 1:
        logger.warning(response.msg)
    elif response.code:
        logger.error(response.msg)
    if response.witness:
        logger.error(f"witness: {response.witness}")
    ctx.exit(response.code)
