"""
lucas and the demo group: commands driven by integer arguments
"""

import click

from ..common.options import cap_option, dmax_option, format_option, oracle_option, output_option
from . import invoke


@click.command()
@click.argument('n', type=int)
@click.argument('m', type=int)
@click.argument('p', type=int)
@output_option
@format_option
@click.pass_context
def lucas(ctx, n, m, p, output_path, output_format):
    """Whether binom(N, M) is nonzero mod P, by base-P digits."""
    invoke(ctx, command="lucas", args=(n, m, p), output_path=output_path, output_format=output_format)


@click.group()
def demo_group():
    """Sharpness demos for the degree bounds."""


@demo_group.command('field-size')
@click.argument('q', type=int)
@oracle_option
@cap_option
@output_option
@format_option
@click.pass_context
def field_size(ctx, q, oracle, cap, output_path, output_format):
    """P = x^2+1 over GF(Q) needs degree Q-1."""
    invoke(ctx, command="demo-field-size", args=(q,), oracle=oracle, cap=cap,
           output_path=output_path, output_format=output_format)


@demo_group.command('degree')
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.argument('q', type=int)
@oracle_option
@dmax_option
@cap_option
@output_option
@format_option
@click.pass_context
def degree(ctx, n, k, q, oracle, dmax, cap, output_path, output_format):
    """P = H^2+1, H elementary symmetric of degree K in N variables."""
    invoke(ctx, command="demo-degree", args=(n, k, q), oracle=oracle, dmax=dmax, cap=cap,
           output_path=output_path, output_format=output_format)


@demo_group.command('interp')
@click.argument('f', type=int)
@oracle_option
@cap_option
@output_option
@format_option
@click.pass_context
def interp(ctx, f, oracle, cap, output_path, output_format):
    """Leading coefficient of the interpolant of 1/x on {-F..-1, 1..F}."""
    invoke(ctx, command="demo-interp", args=(f,), oracle=oracle, cap=cap,
           output_path=output_path, output_format=output_format)
