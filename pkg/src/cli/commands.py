#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command Handlers

One handler per subcommand. Handlers build a Report and let core errors
propagate; run() renders the report and maps the outcome to an exit code:
0 on success, 2 on a verification mismatch, 1 on error.
"""

import sys
from functools import reduce
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from .report import Report, render
from ..core.arcspaces import (
    Milnor,
    Z0Literal,
    Z0Set,
    Z1Star,
    arc_class_monomial,
    arc_count,
    milnor_from_poly,
    milnor_monomial,
    twisted_arc_count,
    zeta_from_poly,
)
from ..core.classexpr import ClassParser
from ..core.convolution import conv, conv_commutativity_check, ts_routes
from ..core.errors import MotivicError
from ..core.fields import DEFAULT_FIELD_BUDGET
from ..core.gammatools import (
    AffineFunctional,
    alpha_by_fibers,
    alpha_m,
    ominimal_chi,
    parse_functional,
    parse_gamma_set,
)
from ..core.gring import (
    DEFAULT_ENUM_BUDGET,
    MotClass,
    OpaqueBindings,
    lcm,
    realize_at,
    realize_euler,
    realize_plain,
    realize_twisted,
)
from ..core.polyfn import parse_poly
from ..core.propcheck import SUITES, run_suites
from ..core.resolution import load_strata, localized_milnor, milnor_from_strata
from ..core.series import coefficient, limit_at_infinity
from ..utils.colors import Colors, ProgressIndicator
from ..utils.config_loader import ConfigLoader
from ..utils.debug import dprint

Config = Dict
Handler = Callable[..., Report]


# ========== Helpers ==========


def _budget(config: Config) -> int:
    return config.get('enumeration_budget', DEFAULT_ENUM_BUDGET)


def _bindings(config: Config) -> Optional[OpaqueBindings]:
    path = config.get('bindings')
    if not path:
        return None
    dprint(f"loading bindings from {path}", tag="RUN")
    return OpaqueBindings.from_file(path)


def twist_grid(classes: Iterable[MotClass], qs: Sequence[int],
               all_twists: bool) -> List[Tuple[int, int]]:
    """
    (q, k) points, sorted by q then k; every twist modulo the common action
    order where it divides q-1, the plain point elsewhere.
    """
    order = reduce(lcm, (x.action_order() for x in classes), 1)
    points = []
    for q in sorted(set(qs)):
        if all_twists and (q - 1) % order == 0:
            points.extend((q, k) for k in range(order))
        else:
            points.append((q, 0))
    return points


def _wants_realization(args) -> bool:
    return bool(getattr(args, 'q', None) or getattr(args, 'all_twists', False))


def _realization_table(report: Report, x: MotClass, config: Config, all_twists: bool) -> None:
    bindings = _bindings(config)
    table = report.table("Realizations", ("q", "k", "value"))
    for q, k in twist_grid([x], config['q_list'], all_twists):
        table.add(q, k, realize_at(x, q, k, bindings, _budget(config)))


# ========== Handlers ==========


def cmd_zeta(args, config: Config) -> Report:
    f = parse_poly(args.poly)
    series = zeta_from_poly(f)
    report = Report('zeta')
    report.add('poly', str(f))
    report.add('zeta', series)
    report.add('milnor_fibre', -limit_at_infinity(series))
    table = report.table("Coefficients", ("m", "coefficient"))
    for m in range(1, args.terms + 1):
        table.add(m, coefficient(series, m))
    return report


def cmd_milnor(args, config: Config) -> Report:
    f = parse_poly(args.poly)
    report = Report('milnor')
    report.add('poly', str(f))
    fibre = milnor_from_poly(f)
    report.add('milnor_fibre', fibre)
    if _wants_realization(args):
        _realization_table(report, fibre, config, args.all_twists)
    return report


def cmd_convolve(args, config: Config) -> Report:
    parser = ClassParser()
    x, y = parser.parse(args.left), parser.parse(args.right)
    result = conv(x, y)
    report = Report('convolve')
    report.add('left', x)
    report.add('right', y)
    report.add('convolution', result)
    report.add('commutative', conv_commutativity_check(x, y))
    if _wants_realization(args):
        _realization_table(report, result, config, args.all_twists)
    return report


def cmd_verify_ts(args, config: Config) -> Report:
    """
    Compare the Thom-Sebastiani combination of Mu(a) and Mu(b) with the
    twisted route, or with a resolution of x^a + y^b when --strata is given.
    """
    s_f, s_g = milnor_monomial(args.a), milnor_monomial(args.b)
    direct, via_twist = ts_routes(s_f, s_g, 1, 1)
    report = Report('verify-ts')
    report.add('a', args.a)
    report.add('b', args.b)
    report.add('left', direct)
    if args.strata:
        right = milnor_from_strata(load_strata(args.strata))
        report.add('right_source', args.strata)
    else:
        right = via_twist
        report.add('right_source', 'vanishing-cycle route')
    report.add('right', right)
    structural = direct == right
    report.add('structurally_equal', structural)

    bindings = _bindings(config)
    budget = _budget(config)
    table = report.table("Realizations", ("q", "k", "left", "right", "match"))
    agree = True
    for q, k in twist_grid([direct, right], config['q_list'], args.all_twists):
        left_value = realize_at(direct, q, k, bindings, budget)
        right_value = realize_at(right, q, k, bindings, budget)
        match = left_value == right_value
        agree = agree and match
        table.add(q, k, left_value, right_value, match)
    # two resolutions need not give the same expression, only the same values
    report.verdict = agree and (structural or bool(args.strata))
    return report


def _arc_spec(args):
    f = parse_poly(args.poly)
    if args.arc_set == 'milnor':
        return Milnor(f, args.m)
    g = parse_poly(args.poly2)
    kinds = {'z1': Z1Star, 'z0': Z0Set, 'z0-literal': Z0Literal}
    return kinds[args.arc_set](f, g, args.m)


def _predicted_class(spec) -> Optional[MotClass]:
    """Closed form for the Milnor arcs of a monic one-variable pure power."""
    if not isinstance(spec, Milnor) or spec.f.nvars != 1:
        return None
    shape = spec.f.pure_power()
    if shape is None or shape[2] != 1:
        return None
    return arc_class_monomial(shape[1], spec.m)


def cmd_arc_count(args, config: Config) -> Report:
    spec = _arc_spec(args)
    budget = _budget(config)
    predicted = _predicted_class(spec)
    report = Report('arc-count')
    report.add('set', type(spec).__name__)
    report.add('poly', args.poly)
    if args.poly2:
        report.add('poly2', args.poly2)
    report.add('m', spec.m)
    report.add('strategy', args.strategy)
    if args.twist is not None:
        report.add('twist', args.twist)
    if predicted is not None:
        report.add('closed_form', predicted)

    columns = ("q", "count") + (("predicted", "match") if predicted is not None else ())
    table = report.table("Counts", columns)
    agree = True
    for q in sorted(set(config['q_list'])):
        if args.twist is not None:
            count = twisted_arc_count(spec, q, args.twist, budget,
                                      config.get('field_budget', DEFAULT_FIELD_BUDGET))
        else:
            count = arc_count(spec, q, args.strategy, budget, config.get('jobs', 1))
        if predicted is None:
            table.add(q, count)
            continue
        if args.twist is not None:
            value = realize_twisted(predicted, q, args.twist, budget=budget)
        else:
            value = realize_plain(predicted, q, budget=budget)
        agree = agree and value == count
        table.add(q, count, value, value == count)
    if predicted is not None:
        report.verdict = agree
    return report


def cmd_strata_eval(args, config: Config) -> Report:
    data = load_strata(args.file)
    fibre = localized_milnor(data) if args.localize else milnor_from_strata(data)
    report = Report('strata-eval')
    report.add('file', args.file)
    report.add('dimension', data.dimension)
    report.add('entries', len(data.entries))
    report.add('milnor_fibre', fibre)
    strata = report.table("Strata", ("components", "m", "class"))
    for entry in data.entries:
        strata.add(list(entry.id_set), entry.m, entry.stratum_class)
    if _wants_realization(args):
        _realization_table(report, fibre, config, args.all_twists)
    return report


def cmd_realize(args, config: Config) -> Report:
    x = ClassParser().parse(args.expr)
    report = Report('realize')
    report.add('class', x)
    report.add('action_order', x.action_order())
    if args.euler:
        report.add('euler', realize_euler(x))
    bindings = _bindings(config)
    budget = _budget(config)
    table = report.table("Realizations", ("q", "k", "value"))
    if args.all_twists:
        points = twist_grid([x], config['q_list'], True)
    else:
        points = [(q, args.k) for q in sorted(set(config['q_list']))]
    for q, k in points:
        table.add(q, k, realize_at(x, q, k, bindings, budget))
    return report


def cmd_gamma(args, config: Config) -> Report:
    s = parse_gamma_set(args.gamma_set)
    report = Report(f'gamma {args.gamma_command}')
    report.add('set', args.gamma_set)
    report.add('dimension', s.dimension)
    if args.gamma_command == 'chi':
        report.add('chi', ominimal_chi(s))
        return report
    if args.tilde or args.functional is None:
        functional = AffineFunctional.zero(s.dimension)
    else:
        functional = parse_functional(args.functional, s.dimension)
    value = alpha_m(s, functional, args.m, args.strict)
    by_fibers = alpha_by_fibers(s, functional, args.m)
    report.add('m', args.m)
    report.add('alpha', value)
    report.add('alpha_by_fibers', by_fibers)
    report.verdict = value == by_fibers
    return report


def cmd_selfcheck(args, config: Config) -> Report:
    names = args.suites or list(SUITES)
    progress = ProgressIndicator(len(names), prefix="selfcheck")
    results = run_suites(config['seed'], config['random_pairs'], config['q_list'],
                         cases=args.cases, names=names,
                         progress=lambda name: progress.increment(name))
    report = Report('selfcheck')
    report.add('seed', config['seed'])
    report.add('pairs', config['random_pairs'])
    report.add('q', config['q_list'])
    table = report.table("Suites", ("suite", "checks", "failures", "passed"))
    failures = []
    for result in results:
        table.add(result.name, result.checked, len(result.failures), result.passed)
        failures.extend(f"{result.name}: {detail}" for detail in result.failures)
    if failures:
        report.add('first_failures', failures[:10])
    report.verdict = not failures
    return report


HANDLERS: Dict[str, Handler] = {
    'zeta': cmd_zeta,
    'milnor': cmd_milnor,
    'convolve': cmd_convolve,
    'verify-ts': cmd_verify_ts,
    'arc-count': cmd_arc_count,
    'strata-eval': cmd_strata_eval,
    'realize': cmd_realize,
    'gamma': cmd_gamma,
    'selfcheck': cmd_selfcheck,
}


def run_config(args, config: Config, stream: Optional[TextIO] = None) -> int:
    """
    `config show` prints the effective configuration; `config init FILE`
    writes an example configuration file.

    Returns:
        Exit code: 0 success, 1 if the file could not be written
    """
    if args.config_command == 'init':
        return 0 if ConfigLoader.save_config(ConfigLoader.create_example_config(), args.path) else 1
    ConfigLoader.print_config({key: config[key] for key in sorted(config)}, stream=stream)
    return 0


def run(args, config: Config, stream: Optional[TextIO] = None) -> int:
    """
    Execute one command and print its report.

    Returns:
        Exit code: 0 success, 2 verification mismatch, 1 error
    """
    if args.command == 'config':
        return run_config(args, config, stream)
    handler = HANDLERS[args.command]
    dprint(f"running {args.command}", tag="RUN")
    try:
        report = handler(args, config)
    except MotivicError as e:
        print(Colors.error(f"Error in {e.module}: {e}"), file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(Colors.error(f"Error: {e}"), file=sys.stderr)
        return 1
    print(render(report, config.get('format', 'text')), file=stream or sys.stdout)
    if report.verdict is False:
        dprint(f"{args.command} reported a mismatch", tag="RUN")
        return 2
    return 0
