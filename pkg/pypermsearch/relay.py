# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Generator combinator for classical reductions.
"""

from pypermsearch.idx_step import QUERY


def relay(gen, on_query):
    """Drives the inner algorithm generator C{gen} from inside an outer
    one.

    Randomness requests are passed up unchanged. Each query M{i} is handed to
    the generator function C{on_query(i)}, which may itself yield requests
    (typically queries to the outer oracle) and returns the answer for the
    inner algorithm. Returns the inner algorithm's output.

    Example::
        def behavior(n):
            out = yield from relay(a.start(), lambda i: ask(sigma(i)))
            return out
    """
    send = None
    while True:
        try:
            kind, arg = gen.send(send)
        except StopIteration as e:
            return e.value
        if kind == QUERY:
            send = yield from on_query(arg)
        else:
            send = yield (kind, arg)


def ask(i):
    """Query forwarded unchanged, for use as or inside C{on_query}.
    """
    v = yield (QUERY, i)
    return v


def answer(v):
    """Answers a query locally, without touching the outer oracle.
    """
    return v
    yield
