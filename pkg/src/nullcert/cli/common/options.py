"""
通用的 Click 选项定义
"""

import click

FORMATS = ['text', 'record', 'json', 'toml', 'yaml']

output_option = click.option(
    '--output', '-o', 'output_path',
    type=click.Path(dir_okay=False),
    help='write output to a file instead of stdout'
)

format_option = click.option(
    '--format', 'output_format',
    type=click.Choice(FORMATS),
    default='text',
    show_default=True,
    help='output format'
)

cap_option = click.option(
    '--cap',
    type=click.IntRange(min=1),
    default=None,
    help='enumeration cap (default from settings, 10^6)'
)

dmax_option = click.option(
    '--dmax',
    type=click.IntRange(min=0),
    default=None,
    help='oracle sweep limit (default from settings)'
)

oracle_option = click.option(
    '--oracle',
    is_flag=True,
    help='also run the minimal-degree oracle'
)

input_argument = click.argument(
    'input_path',
    type=click.Path(dir_okay=False, allow_dash=True),
    default='-',
)
