# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""PYPERMSEARCH relates inverting a permutation to unordered search, and
checks the error and query-count guarantees of every reduction between the
two problems by exact enumeration and statevector simulation.
"""
