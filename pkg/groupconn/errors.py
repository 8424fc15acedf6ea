# -*- coding: utf-8 -*-
"""
Exceptions raised by groupconn. Every library error derives from
GroupConnError so that the command line can report it in one place.
"""


class GroupConnError(Exception):
    pass


#%% --------------------------------------------------------------------------------------------------------------------
# GROUP CONSTRUCTION
# ----------------------------------------------------------------------------------------------------------------------
class CayleyTableError(GroupConnError):
    """Base class for tables that do not define a group."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(int(i) for i in indices)


class NotClosedError(CayleyTableError):
    pass


class NoIdentityError(CayleyTableError):
    pass


class NoInverseError(CayleyTableError):
    pass


class NotAssociativeError(CayleyTableError):
    pass


class CayleyTableFormatError(GroupConnError):

    def __init__(self, message, path=None, line=None):
        where = ''
        if path is not None: where = f'{path}'
        if line is not None: where = f'{where}:{line}'
        super().__init__(f'{where}: {message}' if where else message)
        self.path = path
        self.line = line


#%% --------------------------------------------------------------------------------------------------------------------
# PARAMETERS
# ----------------------------------------------------------------------------------------------------------------------
class InvalidParameterError(GroupConnError, ValueError):
    pass


class OrderCapExceededError(GroupConnError):

    def __init__(self, order, cap, what='group'):
        super().__init__(f'{what} of order {order} exceeds the order cap {cap}')
        self.order = order
        self.cap = cap


class IndexOutOfRangeError(GroupConnError, IndexError):
    pass


class GroupSpecSyntaxError(GroupConnError, ValueError):
    pass


#%% --------------------------------------------------------------------------------------------------------------------
# GRAPHS AND ORACLES
# ----------------------------------------------------------------------------------------------------------------------
class EdgeNotPresentError(GroupConnError, KeyError):

    def __init__(self, edge):
        super().__init__(f'edge {tuple(edge)} is not in the graph')
        self.edge = tuple(edge)

    def __str__(self):
        return self.args[0]


class TooLargeForOracleError(GroupConnError):

    def __init__(self, n, limit, oracle):
        super().__init__(f'{oracle} oracle is limited to {limit} vertices, got {n}')
        self.n = n
        self.limit = limit


#%% --------------------------------------------------------------------------------------------------------------------
# CORPUS
# ----------------------------------------------------------------------------------------------------------------------
class CorpusBuildError(GroupConnError):

    def __init__(self, spec, cause):
        super().__init__(f'cannot build {spec}: {cause}')
        self.spec = spec
        self.cause = cause
