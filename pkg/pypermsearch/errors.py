# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Exceptions raised by PYPERMSEARCH.
"""


class InstanceError(ValueError):
    """Malformed instance, size or parity mismatch, or a violated
    precondition of an instance operation.
    """
    pass


class QueryError(IndexError):
    """Oracle queried outside its domain.
    """
    pass


class RandomnessExhausted(RuntimeError):
    """An explicit list of randomness symbols ran out.
    """
    pass


class EnumerationError(ValueError):
    """Exact enumeration impossible: undeclared randomness space or a cap
    on the number of instances or randomness paths was exceeded.
    """
    pass


class CapacityError(ValueError):
    """Simulation would need more qubits than the configured cap.
    """
    pass


class LayoutError(ValueError):
    """Register layout does not fit the operation.
    """
    pass


class ErrorBudgetError(ValueError):
    pass
