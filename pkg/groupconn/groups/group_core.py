# -*- coding: utf-8 -*-
"""
Finite groups given by their Cayley table.

Elements are the integers 0..n-1 and table[i, j] is the index of x_i * x_j.
The identity always sits at index 0. Everything the classification claims
ask about a group (element orders, inverses, center, centralizers,
conjugacy classes and the derived predicates collected in GroupProfile) is
computed here from the table alone.
"""
import os
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from sympy import factorint, isprime

from ..errors import (CayleyTableFormatError, IndexOutOfRangeError, InvalidParameterError,
                      NoIdentityError, NoInverseError, NotAssociativeError, NotClosedError,
                      OrderCapExceededError)

logger = logging.getLogger(__name__)

ORDER_CAP_ENV = 'GROUPCONN_ORDER_CAP'
DEFAULT_ORDER_CAP = 200


#%% --------------------------------------------------------------------------------------------------------------------
# CONFIGURATION
# ----------------------------------------------------------------------------------------------------------------------
def get_default_order_cap():
    """
        Largest group order the builders accept. The GROUPCONN_ORDER_CAP
        environment variable overrides the built-in default of 200.
    """
    value = os.environ.get(ORDER_CAP_ENV)
    if value is None or value.strip() == '': return DEFAULT_ORDER_CAP

    try:
        cap = int(value)
    except ValueError:
        raise InvalidParameterError(f'{ORDER_CAP_ENV} must be a positive integer, got {value!r}')

    if cap < 1:
        raise InvalidParameterError(f'{ORDER_CAP_ENV} must be a positive integer, got {value!r}')

    return cap


def check_order_cap(order, order_cap=None, what='group'):
    if order_cap is None: order_cap = get_default_order_cap()
    if order > order_cap:
        raise OrderCapExceededError(order, order_cap, what=what)


#%% --------------------------------------------------------------------------------------------------------------------
# GROUP TYPES
# ----------------------------------------------------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
        Validated Cayley-table group. All arrays are read-only.

        Attributes
        ----------
        table : (n, n) numpy.ndarray
            table[i, j] is the index of x_i * x_j
        inverse : (n,) numpy.ndarray
            inverse[i] is the index of the inverse of x_i
        element_order : (n,) numpy.ndarray
            order of each element; element_order[0] == 1
        center_mask : (n,) numpy.ndarray
            True for the elements of the center
        label : str
            short tag used in graphs and reports
    """
    table: np.ndarray
    inverse: np.ndarray
    element_order: np.ndarray
    center_mask: np.ndarray
    label: str = ''

    identity_index = 0

    @property
    def order(self):
        return len(self.table)

    def __repr__(self):
        return f'FiniteGroup({self.label!r}, order={self.order})'


@dataclass(frozen=True)
class GroupProfile:
    order: int
    is_abelian: bool
    center_size: int
    exponent: int
    is_full_exponent: bool
    is_p_group: bool
    prime: Optional[int]
    is_prime_order: bool
    is_prime_power_order: bool
    is_eppo: bool
    is_even_order: bool
    all_nonidentity_self_inverse: bool
    no_nonidentity_self_inverse: bool
    count_order_two: int
    is_cyclic: bool


@dataclass(frozen=True)
class ClassEquation:
    """|G| = |Z(G)| + sum of the sizes of the non-central conjugacy classes."""
    holds: bool
    order: int
    center_size: int
    class_sizes: Tuple[int, ...]
    representatives: Tuple[int, ...]

    def __str__(self):
        terms = ' + '.join(str(t) for t in (self.center_size,) + self.class_sizes)
        return f'{self.order} = {terms}'


#%% --------------------------------------------------------------------------------------------------------------------
# CONSTRUCTION
# ----------------------------------------------------------------------------------------------------------------------
def _readonly(a):
    a.setflags(write=False)
    return a


def _as_square_table(raw):
    try:
        table = np.asarray(raw)
    except (TypeError, ValueError) as exc:
        raise InvalidParameterError(f'Cayley table is not a rectangular array: {exc}')

    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidParameterError(f'Cayley table must be a non-empty square array, got shape {table.shape}')

    if table.dtype.kind not in 'iu':
        if table.dtype.kind != 'f' or not np.all(np.mod(table, 1) == 0):
            raise InvalidParameterError('Cayley table entries must be integers')

    return table.astype(np.int64)


def _check_closed(table):
    n = len(table)
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        i, j = bad[0]
        raise NotClosedError(f'table[{i}][{j}] = {table[i, j]} is not an element index in [0, {n})', (i, j))


def _check_associative(table):
    # (x_i x_j) x_k against x_i (x_j x_k), one i-slice at a time
    for i in range(len(table)):
        lhs = table[table[i]]
        rhs = table[i][table]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, k = bad[0]
            raise NotAssociativeError(f'(x{i} x{j}) x{k} != x{i} (x{j} x{k})', (i, j, k))


def _find_identity(table):
    idx = np.arange(len(table))
    rows_ok = np.all(table == idx[np.newaxis, :], axis=1)
    cols_ok = np.all(table == idx[:, np.newaxis], axis=0)
    candidates = np.flatnonzero(rows_ok & cols_ok)
    if len(candidates) == 0:
        raise NoIdentityError('no element acts as a two-sided identity')
    return int(candidates[0])


def _move_identity_to_zero(table, e):
    if e == 0: return table
    perm = np.arange(len(table))
    perm[[0, e]] = perm[[e, 0]]
    # perm is an involution, so it is its own inverse relabeling
    return perm[table[np.ix_(perm, perm)]]


def _compute_inverses(table):
    is_id = table == 0
    counts = is_id.sum(axis=1)
    bad = np.flatnonzero(counts != 1)
    if len(bad):
        raise NoInverseError(f'x{bad[0]} has {counts[bad[0]]} right inverses', (bad[0],))

    inv = np.argmax(is_id, axis=1)
    left = table[inv, np.arange(len(table))]
    bad = np.flatnonzero(left != 0)
    if len(bad):
        raise NoInverseError(f'right inverse of x{bad[0]} is not a left inverse', (bad[0],))

    return inv


def _compute_orders(table):
    n = len(table)
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    power = idx.copy()
    for k in range(1, n + 1):
        hit = (power == 0) & (orders == 0)
        orders[hit] = k
        if np.all(orders): break
        power = table[power, idx]
    return orders


def from_cayley_table(raw, label=''):
    """
        Validates a Cayley table and returns the group it defines.

        Checks run in the order closure, associativity, identity, inverses;
        each error names the first offending indices of the table as given.
        The identity is relabeled to index 0 by swapping it with element 0.

        Parameters
        ----------
        raw : (n, n) array-like of int
            Cayley table
        label : str
            tag carried by the group

        Returns
        -------
        FiniteGroup
    """
    table = _as_square_table(raw)
    n = len(table)

    _check_closed(table)
    _check_associative(table)
    e = _find_identity(table)
    table = _move_identity_to_zero(table, e)
    inv = _compute_inverses(table)
    orders = _compute_orders(table)
    center_mask = np.all(table == table.T, axis=1)

    if not label: label = f'table:{n}'
    logger.debug(f'validated Cayley table {label} of order {n}')

    return FiniteGroup(table=_readonly(table),
                       inverse=_readonly(inv),
                       element_order=_readonly(orders),
                       center_mask=_readonly(center_mask),
                       label=label)


def parse_cayley_table(text, path=None):
    """
        Parses the text format: first line n, then n rows of n integers.
        Anything after '#' on a line is a comment; blank lines are ignored.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line: continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise CayleyTableFormatError('non-integer entry', path=path, line=lineno)

    if not rows:
        raise CayleyTableFormatError('empty Cayley table file', path=path)

    lineno, header = rows[0]
    if len(header) != 1 or header[0] < 1:
        raise CayleyTableFormatError('first line must hold the group order n >= 1', path=path, line=lineno)

    n = header[0]
    body = rows[1:]
    if len(body) != n:
        raise CayleyTableFormatError(f'expected {n} table rows, found {len(body)}', path=path)

    for lineno, row in body:
        if len(row) != n:
            raise CayleyTableFormatError(f'ragged row: expected {n} entries, found {len(row)}',
                                         path=path, line=lineno)

    return np.array([row for _, row in body], dtype=np.int64)


def read_cayley_table(path, label=None):
    with open(path) as f:
        text = f.read()
    table = parse_cayley_table(text, path=path)
    return from_cayley_table(table, label=label or f'file:{path}')


def write_cayley_table(group, path):
    lines = [f'# {group.label}', str(group.order)]
    lines += [' '.join(str(x) for x in row) for row in group.table]
    with open(path, 'w') as f:
        f.write('\n'.join(lines) + '\n')


#%% --------------------------------------------------------------------------------------------------------------------
# ELEMENT QUERIES
# ----------------------------------------------------------------------------------------------------------------------
def _check_index(group, i):
    if not (0 <= i < group.order):
        raise IndexOutOfRangeError(f'element index {i} outside [0, {group.order}) for {group.label}')


def element_order(group, i):
    _check_index(group, i)
    return int(group.element_order[i])


def inverse(group, i):
    _check_index(group, i)
    return int(group.inverse[i])


def center(group):
    return frozenset(int(i) for i in np.flatnonzero(group.center_mask))


def centralizer(group, i):
    _check_index(group, i)
    t = group.table
    return frozenset(int(j) for j in np.flatnonzero(t[i, :] == t[:, i]))


def conjugacy_classes(group):
    """Conjugacy classes as sorted tuples, ordered by their smallest element."""
    t = group.table
    seen = np.zeros(group.order, dtype=bool)
    classes = []
    for x in range(group.order):
        if seen[x]: continue
        # g x g^-1 for every g
        orbit = np.unique(t[t[:, x], group.inverse])
        seen[orbit] = True
        classes.append(tuple(int(y) for y in orbit))
    return classes


def class_equation_holds(group):
    """
        Checks |G| = |Z(G)| + sum |G| / |C_G(x)| over representatives x of the
        non-central classes, and that every class has size |G| / |C_G(x)|.
    """
    n = group.order
    z = int(group.center_mask.sum())

    sizes, reps = [], []
    orbit_stabilizer = True
    for cls in conjugacy_classes(group):
        x = cls[0]
        if group.center_mask[x]: continue
        index = n // len(centralizer(group, x))
        orbit_stabilizer &= (index == len(cls))
        sizes.append(index)
        reps.append(x)

    holds = orbit_stabilizer and (n == z + sum(sizes))
    if not holds:
        logger.warning(f'class equation fails for {group.label}: {n} != {z} + {sizes}')

    return ClassEquation(holds=holds, order=n, center_size=z,
                         class_sizes=tuple(sizes), representatives=tuple(reps))


#%% --------------------------------------------------------------------------------------------------------------------
# GROUP PROFILE
# ----------------------------------------------------------------------------------------------------------------------
def _is_prime_power(k):
    # 1 = p^0 counts as a prime power for element orders
    return k == 1 or len(factorint(int(k))) == 1


def profile(group):
    n = group.order
    orders = group.element_order
    exponent = int(np.lcm.reduce(orders))
    factors = factorint(n)
    is_p_group = len(factors) == 1
    count_order_two = int(np.sum(orders == 2))
    nonidentity = orders[1:]

    return GroupProfile(order=n,
                        is_abelian=bool(np.all(group.center_mask)),
                        center_size=int(group.center_mask.sum()),
                        exponent=exponent,
                        is_full_exponent=bool(np.any(orders == exponent)),
                        is_p_group=is_p_group,
                        prime=int(next(iter(factors))) if is_p_group else None,
                        is_prime_order=bool(isprime(n)),
                        is_prime_power_order=is_p_group,
                        is_eppo=all(_is_prime_power(k) for k in np.unique(orders)),
                        is_even_order=(n % 2 == 0),
                        all_nonidentity_self_inverse=bool(np.all(nonidentity <= 2)),
                        no_nonidentity_self_inverse=(count_order_two == 0),
                        count_order_two=count_order_two,
                        is_cyclic=bool(np.any(orders == n)),
                        )
