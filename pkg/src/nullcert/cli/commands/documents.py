"""
certify / verify / reduce / mindeg: commands that read a system document
"""

import click

from ..common.options import cap_option, dmax_option, format_option, input_argument, output_option
from . import invoke


@click.command()
@input_argument
@output_option
@format_option
@cap_option
@click.option('--reduced', is_flag=True, help='emit reduced cofactors (finite fields)')
@click.option('--no-check', 'no_check', is_flag=True, help='skip the Z(P) ⊆ Z(Q) check on X')
@click.option('--mode', type=click.Choice(['t1', 't2']), default=None,
              help='force the construction (default: t1 for finite fields with X = all)')
@click.pass_context
def certify(ctx, input_path, output_path, output_format, cap, reduced, no_check, mode):
    """Build a certificate Q ≡ Σ R_i P_i for a system document."""
    invoke(ctx, command="certify", input_path=input_path, output_path=output_path, output_format=output_format,
           cap=cap, reduced=reduced, check=not no_check, mode=mode)


@click.command()
@click.argument('input_path', type=click.Path(dir_okay=False, allow_dash=True))
@click.argument('cert_path', type=click.Path(dir_okay=False, allow_dash=True))
@output_option
@format_option
@cap_option
@click.pass_context
def verify(ctx, input_path, cert_path, output_path, output_format, cap):
    """Check a certificate document against a system document."""
    invoke(ctx, command="verify", input_path=input_path, cert_path=cert_path, output_path=output_path,
           output_format=output_format, cap=cap)


@click.command()
@input_argument
@output_option
@format_option
@click.pass_context
def reduce(ctx, input_path, output_path, output_format):
    """Replace every polynomial by its normal form modulo x^q - x."""
    invoke(ctx, command="reduce", input_path=input_path, output_path=output_path, output_format=output_format)


@click.command()
@input_argument
@output_option
@format_option
@cap_option
@dmax_option
@click.pass_context
def mindeg(ctx, input_path, output_path, output_format, cap, dmax):
    """Least D admitting a certificate with every deg(R_i) <= D."""
    invoke(ctx, command="mindeg", input_path=input_path, output_path=output_path, output_format=output_format,
           cap=cap, dmax=dmax)
