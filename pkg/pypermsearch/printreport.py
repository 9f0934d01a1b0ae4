# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Writes experiment reports as JSON or CSV.
"""

import csv
import json
import sys

from fractions import Fraction

from numpy import generic

from pypermsearch.psver import psver


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, generic):
        return x.item()
    raise TypeError('printreport: cannot serialize %r' % (x,))


def new_report(subcommand, psopt):
    """Returns the report skeleton of a subcommand: schema version, the
    options that determine the output, an empty record list and the overall
    pass flag.
    """
    v = psver()
    return {
        'schema': v['Schema'],
        'version': v['Version'],
        'subcommand': subcommand,
        'config': {'n': psopt['N'], 'seed': psopt['SEED'],
                   'mode': psopt['MODE'], 'trials': psopt['TRIALS'],
                   'draws': psopt['DRAWS']},
        'records': [],
        'pass': True
    }


def printreport(report, fname='', fmt='json'):
    """Writes C{report} to the file C{fname}, or to stdout if C{fname} is
    empty.

    C{'json'} writes the whole report with sorted keys; C{'csv'} writes one
    row per record, the columns being the union of the record fields in
    sorted order. Output bytes depend only on the report.
    """
    if fmt == 'json':
        text = json.dumps(report, sort_keys=True, indent=2,
                          default=_plain) + '\n'
    elif fmt == 'csv':
        text = None
    else:
        raise ValueError('printreport: unknown format %r' % (fmt,))

    fd = open(fname, 'w', newline='') if fname else sys.stdout
    try:
        if text is not None:
            fd.write(text)
        else:
            fields = sorted(set(k for rec in report['records'] for k in rec))
            writer = csv.DictWriter(fd, fields, restval='',
                                    lineterminator='\n')
            writer.writeheader()
            for rec in report['records']:
                writer.writerow(dict((k, '' if v is None else _cell(v))
                                     for k, v in rec.items()))
    finally:
        if fname:
            fd.close()


def _cell(v):
    if isinstance(v, (Fraction, generic)):
        return _plain(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, default=_plain)
    return v
