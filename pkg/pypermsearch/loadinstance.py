# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Reads instances from their canonical one-line text form.
"""

from os.path import exists

from pypermsearch.errors import InstanceError
from pypermsearch.genfunction import GeneralFunction
from pypermsearch.permutation import Permutation
from pypermsearch.searchinstance import SearchInstance


def loadinstance(source):
    """Returns the instance described by C{source}, either a line such as
    C{'perm n=4 map=2,1,3,4'} or the name of a file whose first non-blank
    line is one. See L{saveinstance} for the grammar.
    """
    text = source.strip()
    if exists(source):
        with open(source) as fd:
            lines = [l.strip() for l in fd if l.strip()]
        if not lines:
            raise InstanceError('loadinstance: %s is empty' % source)
        text = lines[0]

    tokens = text.split()
    if not tokens:
        raise InstanceError('loadinstance: empty instance description')
    kind, fields = tokens[0], {}
    for tok in tokens[1:]:
        key, sep, val = tok.partition('=')
        if not sep:
            raise InstanceError('loadinstance: malformed field %r' % tok)
        fields[key] = val

    try:
        n = int(fields['n'])
        if kind in ('perm', 'func'):
            values = [int(v) for v in fields['map'].split(',')]
            if len(values) != n:
                raise InstanceError('loadinstance: map has %d values, n = %d'
                                    % (len(values), n))
            return Permutation(values) if kind == 'perm' \
                else GeneralFunction(values)
        elif kind == 'search':
            m = fields['marked']
            return SearchInstance(n, None if m == '-' else int(m))
    except KeyError as e:
        raise InstanceError('loadinstance: missing field %s in %r' % (e, text))
    except ValueError as e:
        if isinstance(e, InstanceError):
            raise
        raise InstanceError('loadinstance: %s in %r' % (e, text))

    raise InstanceError('loadinstance: unknown instance kind %r' % kind)
