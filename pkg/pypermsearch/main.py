# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Main entry-points for PYPERMSEARCH.
"""

import sys
from sys import stderr

from optparse import OptionParser, OptionGroup

from pypermsearch.cmd_grover_scan import cmd_grover_scan
from pypermsearch.cmd_sampling_tests import cmd_sampling_tests
from pypermsearch.cmd_verify_reduction import cmd_verify_reduction
from pypermsearch.errors import InstanceError, EnumerationError, \
    CapacityError, LayoutError, ErrorBudgetError
from pypermsearch.printreport import printreport
from pypermsearch.psoption import psoption, EXPERIMENT_OPTIONS, \
    ENGINE_OPTIONS, STATS_OPTIONS, OUTPUT_OPTIONS
from pypermsearch.psver import psver


TYPE_MAP = {float: 'float', int: 'int'}

SUBCOMMANDS = {
    'verify_reduction': cmd_verify_reduction,
    'grover_scan': cmd_grover_scan,
    'sampling_tests': cmd_sampling_tests
}

MODES = ('exact', 'mc')
FORMATS = ('json', 'csv')

USAGE_ERRORS = (InstanceError, EnumerationError, CapacityError, LayoutError,
                ErrorBudgetError)


def option_callback(option, opt, value, parser, *args, **kw_args):
    opt_name = opt[2:].upper()

    psopt = args[0]
    psopt[opt_name] = value


def add_options(group, options, *callback_args, **callback_kwargs):
    for name, default_val, help in options:
        long_opt = '--%s' % name

        kw_args = {
            'default': default_val,
            'help': '%s [default: %%default]' % help,
            'type': TYPE_MAP.get(type(default_val), 'string'),
            'action': "callback",
            'callback': option_callback,
            'callback_args': callback_args,
            'callback_kwargs': callback_kwargs
        }

        if name == 'mode':
            kw_args['type'] = 'choice'
            kw_args['choices'] = MODES
        elif name == 'format':
            kw_args['type'] = 'choice'
            kw_args['choices'] = FORMATS

        group.add_option(long_opt, **kw_args)


def parse_options(args):
    """Parse command line options.

    Returns the parser, the options, the subcommand name and the options
    dict.
    """
    v = psver('all')
    parser = OptionParser(
        usage="""usage: %%prog [options] subcommand

Runs one of the seeded PYPERMSEARCH experiments and writes its report.

subcommands: %s""" % ', '.join(sorted(SUBCOMMANDS)),
        version='PYPERMSEARCH (%%prog) Version %s, %s' % (v["Version"],
                                                         v["Date"])
    )

    parser.add_option("-t", "--test", action="store_true", dest="test",
        default=False, help="run tests and exit")

    psopt = psoption()

    experiment_options = OptionGroup(parser, 'Experiment Options')
    engine_options = OptionGroup(parser, 'Engine Options')
    stats_options = OptionGroup(parser, 'Statistics Options')
    output_options = OptionGroup(parser, 'Output Options')

    add_options(experiment_options, EXPERIMENT_OPTIONS, psopt)
    add_options(engine_options, ENGINE_OPTIONS, psopt)
    add_options(stats_options, STATS_OPTIONS, psopt)
    add_options(output_options, OUTPUT_OPTIONS, psopt)

    parser.add_option_group(experiment_options)
    parser.add_option_group(engine_options)
    parser.add_option_group(stats_options)
    parser.add_option_group(output_options)

    options, args = parser.parse_args(args)

    if options.test:
        return parser, options, None, psopt

    if len(args) != 1:
        parser.print_usage(stderr)
        stderr.write('expected exactly one subcommand\n')
        sys.exit(2)
    if args[0] not in SUBCOMMANDS:
        stderr.write("Invalid subcommand: %r (choose from %s)\n" %
                     (args[0], ', '.join(sorted(SUBCOMMANDS))))
        sys.exit(2)

    return parser, options, args[0], psopt


def run(args=sys.argv[1:]):
    """Command line entry point: parses C{args}, runs the subcommand and
    writes its report. Exits with status 0 when every check passes, 1 when
    a check fails and 2 on a usage error.
    """
    parser, options, name, psopt = parse_options(args)

    if options.test:
        from pypermsearch.t.test_pypermsearch import test_pypermsearch
        sys.exit(test_pypermsearch())

    try:
        report = SUBCOMMANDS[name](psopt)
    except USAGE_ERRORS as e:
        parser.print_usage(stderr)
        stderr.write('%s: error: %s\n' % (name, e))
        sys.exit(2)

    printreport(report, psopt['OUT'], psopt['FORMAT'])
    sys.exit(0 if report['pass'] else 1)


if __name__ == '__main__':
    run()
