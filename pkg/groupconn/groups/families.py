# -*- coding: utf-8 -*-
"""
Named families of finite groups and the group-spec grammar used on the
command line and in corpus files:

    cyclic:6   dihedral:5   dicyclic:2   symmetric:4   ea:2,3
    product:cyclic:3*cyclic:5   file:PATH

Element numbering is fixed per family so that vertex i of every derived
graph is the same element across runs:

    Cyclic(n)            k          <-> a^k
    Dihedral(n)          f*n + k    <-> r^k s^f          (order 2n)
    Dicyclic(n)          f*2n + k   <-> a^k b^f          (order 4n)
    Symmetric(n)         lexicographic one-line notation, identity first
    DirectProduct        mixed radix, first factor most significant
"""
import math
import logging
import itertools
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from sympy import isprime

from ..errors import GroupSpecSyntaxError, InvalidParameterError
from .group_core import check_order_cap, from_cayley_table, read_cayley_table

logger = logging.getLogger(__name__)


#%% --------------------------------------------------------------------------------------------------------------------
# FAMILY SPECS
# ----------------------------------------------------------------------------------------------------------------------
@dataclass(frozen=True)
class Cyclic:
    n: int

    @property
    def order(self): return self.n

    @property
    def label(self): return f'cyclic:{self.n}'


@dataclass(frozen=True)
class Dihedral:
    n: int

    @property
    def order(self): return 2 * self.n

    @property
    def label(self): return f'dihedral:{self.n}'


@dataclass(frozen=True)
class Dicyclic:
    n: int

    @property
    def order(self): return 4 * self.n

    @property
    def label(self): return f'dicyclic:{self.n}'


@dataclass(frozen=True)
class Symmetric:
    n: int

    @property
    def order(self): return math.factorial(self.n) if self.n >= 1 else 0

    @property
    def label(self): return f'symmetric:{self.n}'


@dataclass(frozen=True)
class ElementaryAbelian:
    p: int
    k: int

    @property
    def order(self): return self.p ** self.k

    @property
    def label(self): return f'ea:{self.p},{self.k}'


@dataclass(frozen=True)
class DirectProduct:
    factors: Tuple

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple(self.factors))

    @property
    def order(self):
        orders = [f.order for f in self.factors]
        if any(o is None for o in orders): return None
        return math.prod(orders)

    @property
    def label(self):
        return 'product:' + '*'.join(f.label for f in self.flat_factors())

    def flat_factors(self):
        flat = []
        for f in self.factors:
            if isinstance(f, DirectProduct): flat.extend(f.flat_factors())
            else: flat.append(f)
        return flat


@dataclass(frozen=True)
class FromFile:
    path: str

    @property
    def order(self): return None

    @property
    def label(self): return f'file:{self.path}'


FAMILY_TYPES = (Cyclic, Dihedral, Dicyclic, Symmetric, ElementaryAbelian, DirectProduct, FromFile)


#%% --------------------------------------------------------------------------------------------------------------------
# CAYLEY TABLES
# ----------------------------------------------------------------------------------------------------------------------
def cyclic_table(n):
    idx = np.arange(n)
    return (idx[:, np.newaxis] + idx[np.newaxis, :]) % n


def dihedral_table(n):
    idx = np.arange(2 * n)
    k, f = idx % n, idx // n
    k1, f1 = k[:, np.newaxis], f[:, np.newaxis]
    k2, f2 = k[np.newaxis, :], f[np.newaxis, :]

    # (r^k1 s^f1)(r^k2 s^f2) = r^(k1 + (-1)^f1 k2) s^(f1 + f2)
    sign = np.where(f1 == 1, -1, 1)
    k_new = (k1 + sign * k2) % n
    f_new = (f1 + f2) % 2

    return f_new * n + k_new


def dicyclic_table(n):
    m = 2 * n
    idx = np.arange(2 * m)
    k, f = idx % m, idx // m
    k1, f1 = k[:, np.newaxis], f[:, np.newaxis]
    k2, f2 = k[np.newaxis, :], f[np.newaxis, :]

    # b a^k = a^-k b and b^2 = a^n
    sign = np.where(f1 == 1, -1, 1)
    k_new = (k1 + sign * k2 + n * (f1 & f2)) % m
    f_new = f1 ^ f2

    return f_new * m + k_new


def symmetric_table(n):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = perms @ weights

    # x_i x_j applies x_j first: (x_i x_j)(v) = x_i(x_j(v))
    composed = perms[:, perms]
    return np.searchsorted(codes, composed @ weights)


def direct_product_table(first, second):
    a, b = len(first), len(second)
    table = first[:, np.newaxis, :, np.newaxis] * b + second[np.newaxis, :, np.newaxis, :]
    return table.reshape(a * b, a * b)


#%% --------------------------------------------------------------------------------------------------------------------
# BUILDERS
# ----------------------------------------------------------------------------------------------------------------------
def _check_positive(spec, **params):
    for name, value in params.items():
        if not isinstance(value, (int, np.integer)) or value < 1:
            raise InvalidParameterError(f'{spec.label}: {name} must be a positive integer, got {value!r}')


def validate_family(spec):
    if isinstance(spec, (Cyclic, Dihedral, Dicyclic, Symmetric)):
        _check_positive(spec, n=spec.n)

    elif isinstance(spec, ElementaryAbelian):
        _check_positive(spec, p=spec.p, k=spec.k)
        if not isprime(spec.p):
            raise InvalidParameterError(f'{spec.label}: p = {spec.p} is not prime')

    elif isinstance(spec, DirectProduct):
        if not spec.factors:
            raise InvalidParameterError('a direct product needs at least one factor')
        for factor in spec.factors: validate_family(factor)

    elif isinstance(spec, FromFile):
        if not spec.path:
            raise InvalidParameterError('file spec needs a path')

    else:
        raise InvalidParameterError(f'unknown group family {spec!r}')


def _family_table(spec, order_cap):
    if isinstance(spec, Cyclic):
        return cyclic_table(spec.n)

    elif isinstance(spec, Dihedral):
        return dihedral_table(spec.n)

    elif isinstance(spec, Dicyclic):
        return dicyclic_table(spec.n)

    elif isinstance(spec, Symmetric):
        return symmetric_table(spec.n)

    elif isinstance(spec, ElementaryAbelian):
        return _family_table(DirectProduct([Cyclic(spec.p)] * spec.k), order_cap)

    elif isinstance(spec, DirectProduct):
        tables = [build_family(f, order_cap=order_cap).table for f in spec.flat_factors()]
        table = tables[0]
        for other in tables[1:]:
            table = direct_product_table(table, other)
        return table


def build_family(spec, order_cap=None):
    """
        Builds the group named by a family spec.

        The order cap is checked before any table is materialized (files are
        checked after reading, since their order is only known then). Every
        table goes through from_cayley_table, so family groups are validated
        exactly like imported ones.

        Parameters
        ----------
        spec : one of FAMILY_TYPES
        order_cap : int, optional
            defaults to get_default_order_cap()

        Returns
        -------
        FiniteGroup
    """
    validate_family(spec)

    if isinstance(spec, FromFile):
        group = read_cayley_table(spec.path, label=spec.label)
        check_order_cap(group.order, order_cap, what=spec.label)
        return group

    order = spec.order
    if isinstance(spec, DirectProduct):
        for factor in spec.flat_factors():
            if isinstance(factor, FromFile):
                order = None
    if order is not None:
        check_order_cap(order, order_cap, what=spec.label)

    table = _family_table(spec, order_cap)
    check_order_cap(len(table), order_cap, what=spec.label)

    group = from_cayley_table(table, label=spec.label)
    logger.info(f'built {spec.label} (order {group.order})')

    return group


#%% --------------------------------------------------------------------------------------------------------------------
# GROUP-SPEC GRAMMAR
# ----------------------------------------------------------------------------------------------------------------------
def _parse_int(text, spec):
    try:
        return int(text)
    except ValueError:
        raise GroupSpecSyntaxError(f'{spec!r}: expected an integer, got {text!r}')


def parse_group_spec(text):
    """
        Parses 'cyclic:6', 'dihedral:5', 'dicyclic:2', 'symmetric:4',
        'ea:2,3', 'product:cyclic:3*cyclic:5' and 'file:PATH'.
    """
    text = text.strip()
    name, sep, arg = text.partition(':')
    name = name.strip().lower()
    if not sep or not arg.strip():
        raise GroupSpecSyntaxError(f'{text!r}: expected <family>:<parameters>')

    if name == 'file':
        return FromFile(arg.strip())

    if name == 'product':
        return DirectProduct([parse_group_spec(part) for part in arg.split('*')])

    if name == 'ea':
        parts = arg.split(',')
        if len(parts) != 2:
            raise GroupSpecSyntaxError(f'{text!r}: expected ea:<p>,<k>')
        return ElementaryAbelian(_parse_int(parts[0].strip(), text), _parse_int(parts[1].strip(), text))

    families = {'cyclic': Cyclic, 'dihedral': Dihedral, 'dicyclic': Dicyclic, 'symmetric': Symmetric}
    if name not in families:
        raise GroupSpecSyntaxError(f'{text!r}: unknown family {name!r}')

    return families[name](_parse_int(arg.strip(), text))
