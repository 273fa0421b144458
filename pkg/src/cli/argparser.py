#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Argument Parser Module

Command-line argument parsing for motivic-ts.
"""

import argparse
import sys
from typing import List, Optional, Sequence

from .. import __version__
from ..core.fields import is_prime_power
from ..utils.colors import Colors


def q_list(text: str) -> List[int]:
    """argparse type for `7,13,19`."""
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list of field sizes")
    return values


def tag_list(text: str) -> List[str]:
    """argparse type for `ARCS,RING`."""
    return [t.strip().upper() for t in text.split(",") if t.strip()]


def _add_field_options(parser: argparse.ArgumentParser, twists: bool = True) -> None:
    group = parser.add_argument_group('Realization')
    group.add_argument(
        '--q',
        type=q_list,
        metavar='Q[,Q...]',
        help='Field sizes to realize at (default: q_list from config)'
    )
    if twists:
        group.add_argument(
            '--all-twists',
            action='store_true',
            help='Also realize at every twist k modulo the action order'
        )


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser.

    Returns:
        Configured ArgumentParser instance
    """
    parser = argparse.ArgumentParser(
        prog='motivic-ts',
        allow_abbrev=False,
        description='Motivic zeta functions, Milnor fibres and the Thom-Sebastiani identity',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Milnor fibre of a pure power
  %(prog)s milnor --poly "x1^3"

  # Thom-Sebastiani for the cusp, checked at every twist
  %(prog)s verify-ts --a 2 --b 3 --q 7,13 --all-twists

  # Compare with a resolution of the cusp
  %(prog)s verify-ts --a 2 --b 3 --strata data/cusp_minimal.strata --all-twists

  # Brute-force arc count
  %(prog)s arc-count --poly "x1^2" --m 2 --q 3

  # Euler characteristic of a value-group set
  %(prog)s gamma chi --set "(0,1)"

  # Randomised property suites
  %(prog)s selfcheck --seed 7 --pairs 50

  # Write an example configuration, then inspect the effective one
  %(prog)s config init config.json
  %(prog)s --config config.json config show
        """
    )

    # Configuration file (primary option)
    parser.add_argument(
        '--config', '-c',
        metavar='FILE',
        help='Path to JSON configuration file'
    )

    output_group = parser.add_argument_group('Output Settings')
    output_group.add_argument(
        '--format',
        choices=('text', 'json'),
        help='Report format on standard output (default: text)'
    )
    output_group.add_argument(
        '--log-file',
        metavar='FILE',
        help='Also write console output to FILE (colors stripped)'
    )

    limit_group = parser.add_argument_group('Limits')
    limit_group.add_argument(
        '--budget',
        type=int,
        metavar='N',
        help='Maximum number of points enumerated (env: MOTIVIC_ENUM_BUDGET)'
    )
    limit_group.add_argument(
        '--field-budget',
        type=int,
        metavar='N',
        help='Largest finite field constructed'
    )
    limit_group.add_argument(
        '--jobs', '-j',
        type=int,
        metavar='N',
        help='Worker processes for full arc enumeration'
    )

    parser.add_argument(
        '--bindings',
        metavar='FILE',
        help='Realization values for Opaque classes (`name q k value` per line)'
    )

    debug_group = parser.add_argument_group('Debug Options')
    debug_group.add_argument(
        '--debug',
        action='store_true',
        help='Enable debug tracing on stderr'
    )
    debug_group.add_argument(
        '--debug-tags',
        type=tag_list,
        metavar='TAG[,TAG...]',
        help='Only trace these tags (CFG, RUN, RING, ARCS, FIELD, CONV, STRATA, GAMMA)'
    )

    parser.add_argument(
        '--version',
        action='version',
        version=f'%(prog)s {__version__}'
    )

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('zeta', allow_abbrev=False, help='Motivic zeta series of f at the origin')
    p.add_argument('--poly', required=True, help='Polynomial, e.g. "x1^3"')
    p.add_argument('--terms', type=int, default=6, metavar='N',
                   help='Number of coefficients to list (default: 6)')

    p = sub.add_parser('milnor', allow_abbrev=False, help='Motivic Milnor fibre of f at the origin')
    p.add_argument('--poly', required=True, help='Polynomial, e.g. "x1^2 + x2^3"')
    _add_field_options(p)

    p = sub.add_parser('convolve', allow_abbrev=False, help='Convolution product of two classes')
    p.add_argument('left', help='Class expression, e.g. "Mu(2)"')
    p.add_argument('right', help='Class expression')
    _add_field_options(p)

    p = sub.add_parser('verify-ts', allow_abbrev=False, help='Check the Thom-Sebastiani identity for x^a + y^b')
    p.add_argument('--a', type=int, required=True, help='Exponent of x')
    p.add_argument('--b', type=int, required=True, help='Exponent of y')
    p.add_argument('--strata', metavar='FILE',
                   help='Compare against the resolution formula on this strata file')
    _add_field_options(p)

    p = sub.add_parser('arc-count', allow_abbrev=False, help='Count truncated arcs over F_q')
    p.add_argument('--poly', required=True, help='Polynomial f')
    p.add_argument('--poly2', metavar='G', help='Second polynomial g for the z1/z0 sets')
    p.add_argument('--set', dest='arc_set', default='milnor',
                   choices=('milnor', 'z1', 'z0', 'z0-literal'),
                   help='Arc set to count (default: milnor)')
    p.add_argument('--m', type=int, required=True, help='Arc level')
    p.add_argument('--strategy', choices=('full', 'structured'), default='full',
                   help='Enumeration strategy (default: full)')
    p.add_argument('--twist', type=int, metavar='K',
                   help='Count arcs fixed by Frobenius composed with t -> xi^K t')
    _add_field_options(p, twists=False)

    p = sub.add_parser('strata-eval', allow_abbrev=False, help='Milnor fibre from resolution strata data')
    p.add_argument('file', help='Strata file')
    p.add_argument('--localize', action='store_true', help='Report the class in the localized ring')
    _add_field_options(p)

    p = sub.add_parser('realize', allow_abbrev=False, help='Realize a class at q (and twist k)')
    p.add_argument('expr', help='Class expression')
    p.add_argument('--k', type=int, default=0, help='Twist (default: 0)')
    p.add_argument('--euler', action='store_true', help='Also report the L -> 1 realization')
    _add_field_options(p)

    p = sub.add_parser('gamma', allow_abbrev=False, help='Value-group computations')
    gamma = p.add_subparsers(dest='gamma_command', metavar='ACTION')
    gamma.required = True
    g = gamma.add_parser('chi', allow_abbrev=False, help='o-minimal Euler characteristic')
    g.add_argument('--set', dest='gamma_set', required=True, help='Set, e.g. "(0,1) U {2}"')
    g = gamma.add_parser('alpha', allow_abbrev=False, help='Lattice sum L^(-l) over the level-m points')
    g.add_argument('--set', dest='gamma_set', required=True, help='Set, e.g. "(0,1)"')
    g.add_argument('--m', type=int, required=True, help='Level')
    g.add_argument('--functional', default=None,
                   help='Affine functional, e.g. "x1 + 1/2" (default: 0)')
    g.add_argument('--strict', action='store_true',
                   help='Reject non-integral functional values')
    g.add_argument('--tilde', action='store_true',
                   help='Ignore --functional and sum with l = 0')

    p = sub.add_parser('selfcheck', allow_abbrev=False, help='Seeded randomised property suites')
    p.add_argument('--seed', type=int, help='Random seed (default: seed from config)')
    p.add_argument('--pairs', type=int, metavar='K', help='Random pairs per suite')
    p.add_argument('--cases', type=int, default=20, metavar='N',
                   help='Random polynomials for the truncation suite (default: 20)')
    p.add_argument('--suite', action='append', dest='suites',
                   choices=('ring', 'homomorphism', 'commutativity', 'truncation'),
                   help='Run only this suite (repeatable)')
    _add_field_options(p, twists=False)

    p = sub.add_parser('config', allow_abbrev=False, help='Show or write the configuration')
    cfg = p.add_subparsers(dest='config_command', metavar='ACTION')
    cfg.required = True
    cfg.add_parser('show', allow_abbrev=False, help='Print the effective configuration')
    c = cfg.add_parser('init', allow_abbrev=False, help='Write an example configuration file')
    c.add_argument('path', metavar='FILE', help='Where to write the example, e.g. config.json')

    return parser


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Returns:
        Parsed arguments namespace
    """
    parser = create_parser()
    return parser.parse_args(argv)


def validate_arguments(args: argparse.Namespace) -> bool:
    """
    Validate parsed arguments beyond what argparse checks.

    Args:
        args: Parsed arguments

    Returns:
        True if valid, False otherwise
    """
    def fail(message: str) -> bool:
        print(Colors.error(f"Error: {message}"), file=sys.stderr)
        return False

    for name in ('budget', 'field_budget', 'jobs', 'pairs', 'cases', 'terms'):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            return fail(f"--{name.replace('_', '-')} must be positive")

    qs = getattr(args, 'q', None)
    if qs:
        bad = [q for q in qs if not is_prime_power(q)]
        if bad:
            return fail(f"--q entries must be prime powers, got {bad}")

    m = getattr(args, 'm', None)
    if m is not None and m < 1:
        return fail("--m must be at least 1")

    for name in ('a', 'b'):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            return fail(f"--{name} must be at least 1")

    if getattr(args, 'command', None) == 'arc-count':
        if args.arc_set != 'milnor' and not args.poly2:
            return fail(f"--set {args.arc_set} needs --poly2")
        if args.twist is not None and args.strategy != 'full':
            return fail("--twist counts by enumeration; use --strategy full")

    k = getattr(args, 'k', None)
    if k is not None and k < 0:
        return fail("--k must be non-negative")

    return True
