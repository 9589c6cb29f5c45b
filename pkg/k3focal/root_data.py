#!/usr/bin/env python
# coding: utf-8

"""
Exact root-system and weight-lattice data for the six Lie algebras used by the
focal manifolds: su(2), su(3), sp(2), sp(3), spin(9) and f4.

Coordinates are the standard orthonormal ones: A_n lives in the sum-zero
hyperplane of an (n+1)-vector, B, C and F in rank-many coordinates. Simple
roots are the only hard-coded data; roots are recovered as the Weyl orbit of
the simple roots and fundamental weights by inverting the Cartan matrix.
"""

import enum
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import InputError
from .errors import InternalError

logger = logging.getLogger(__name__)


class RootSystemId(enum.Enum):
    A1 = 'A1'
    A2 = 'A2'
    C2 = 'C2'
    C3 = 'C3'
    B4 = 'B4'
    F4 = 'F4'


_h = Fraction(1, 2)

_simple_roots = {
    RootSystemId.A1: ((1, -1),),
    RootSystemId.A2: ((1, -1, 0),
                      (0, 1, -1)),
    RootSystemId.C2: ((1, -1),
                      (0, 2)),
    RootSystemId.C3: ((1, -1, 0),
                      (0, 1, -1),
                      (0, 0, 2)),
    RootSystemId.B4: ((1, -1, 0, 0),
                      (0, 1, -1, 0),
                      (0, 0, 1, -1),
                      (0, 0, 0, 1)),
    RootSystemId.F4: ((0, 1, -1, 0),
                      (0, 0, 1, -1),
                      (0, 0, 0, 1),
                      (_h, -_h, -_h, -_h)),
}


class WeightVector(tuple):
    """
    An exact rational coordinate vector. It is a `tuple` of `Fraction`, so it
    hashes and compares like one, with vector arithmetic on top.
    """

    def __new__(cls, coords):
        return super(WeightVector, cls).__new__(cls, (Fraction(x) for x in coords))

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    def __add__(self, other):
        _same_length(self, other)
        return WeightVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _same_length(self, other)
        return WeightVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return WeightVector(-a for a in self)

    def __mul__(self, k):
        return WeightVector(a * k for a in self)

    __rmul__ = __mul__

    def dot(self, other):
        _same_length(self, other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def __repr__(self):
        return 'WeightVector(' + ', '.join(str(a) for a in self) + ')'


def _same_length(v, w):
    if len(v) != len(w):
        raise InputError('vector', (v, w), 'dimension mismatch: {} != {}'.format(len(v), len(w)))


@dataclass(frozen=True, order=True)
class DominantWeight(object):
    """
    A highest weight given by its levels: `levels[i]` is the coefficient of
    the i-th fundamental weight.
    """

    levels: tuple

    def __post_init__(self):
        levels = tuple(self.levels)
        for n in levels:
            if isinstance(n, bool) or int(n) != n or n < 0:
                raise InputError('levels', levels, 'levels must be non-negative integers')
        object.__setattr__(self, 'levels', tuple(int(n) for n in levels))

    @classmethod
    def of(cls, *levels):
        return cls(tuple(levels))

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)

    def is_zero(self):
        return not any(self.levels)

    def __str__(self):
        terms = []
        for i, n in enumerate(self.levels):
            if n == 1:
                terms.append('w{}'.format(i + 1))
            elif n:
                terms.append('{}w{}'.format(n, i + 1))
        return '+'.join(terms) or '0'


@dataclass(frozen=True)
class RootSystem(object):
    """
    Attributes:
        id(RootSystemId):           which of the six systems.
        ambient_dim(int):           length of coordinate vectors.
        rank(int):                  number of simple roots.
        simple_roots(tuple):        of `WeightVector`.
        simple_coroots(tuple):      `2 * alpha / <alpha, alpha>` per simple root.
        positive_roots(tuple):      of `WeightVector`, highest first.
        fundamental_weights(tuple): of `WeightVector`, dual to the simple coroots.
        weyl_vector(WeightVector):  half the sum of the positive roots.
        algebra_dim(int):           dimension of the Lie algebra.
    """

    id: RootSystemId
    ambient_dim: int
    rank: int
    simple_roots: tuple
    simple_coroots: tuple
    positive_roots: tuple
    fundamental_weights: tuple
    weyl_vector: WeightVector
    algebra_dim: int

    @property
    def roots(self):
        return self.positive_roots + tuple(-a for a in self.positive_roots)


def coroot(alpha):
    return alpha * (Fraction(2) / alpha.dot(alpha))


def reflect(v, alpha):
    """
    Reflect `v` through the hyperplane orthogonal to the root `alpha`.
    """
    return v - alpha * v.dot(coroot(alpha))


def simple_reflection(rs, v, i):
    return v - rs.simple_roots[i] * v.dot(rs.simple_coroots[i])


def _fundamental_weights(simple, coroots):
    rank = len(simple)
    def entry(k, j):
        x = simple[k].dot(coroots[j])
        return sympy.Rational(x.numerator, x.denominator)

    cartan = sympy.Matrix(rank, rank, entry)
    inv = cartan.inv()

    weights = []
    for i in range(rank):
        w = WeightVector.zero(len(simple[0]))
        for k in range(rank):
            c = inv[i, k]
            w = w + simple[k] * Fraction(int(c.p), int(c.q))
        weights.append(w)

    return tuple(weights)


def _weyl_orbit_of_simple_roots(simple, coroots):
    found = set(simple)
    todo = list(simple)
    while todo:
        v = todo.pop()
        for a, ac in zip(simple, coroots):
            w = v - a * v.dot(ac)
            if w not in found:
                found.add(w)
                todo.append(w)
    return found


def build_root_system(rs_id):
    """
    Build the standard-coordinate root system of `rs_id`.

    Args:
        rs_id(RootSystemId): one of the six supported systems. A plain string
            such as ``"F4"`` is accepted too.

    Returns:
        RootSystem
    """

    if not isinstance(rs_id, RootSystemId):
        try:
            rs_id = RootSystemId(rs_id)
        except (ValueError, TypeError):
            raise InputError('rs_id', rs_id, 'unknown root system')

    return _build(rs_id)


@functools.lru_cache(maxsize=None)
def _build(rs_id):
    simple = tuple(WeightVector(a) for a in _simple_roots[rs_id])
    coroots = tuple(coroot(a) for a in simple)
    fundamental = _fundamental_weights(simple, coroots)

    regular = sum(fundamental[1:], fundamental[0])

    roots = _weyl_orbit_of_simple_roots(simple, coroots)
    positive = [a for a in roots if a.dot(regular) > 0]
    if 2 * len(positive) != len(roots):
        raise InternalError('{}: root orbit is not split by a regular weight'.format(rs_id.value))

    positive.sort(key=lambda a: (-a.dot(regular), tuple(-x for x in a)))
    positive = tuple(positive)

    rho = sum(positive[1:], positive[0]) * _h
    if rho != regular:
        raise InternalError('{}: half sum of positive roots {} differs from sum of '
                            'fundamental weights {}'.format(rs_id.value, rho, regular))

    rank = len(simple)
    rs = RootSystem(id=rs_id,
                    ambient_dim=len(simple[0]),
                    rank=rank,
                    simple_roots=simple,
                    simple_coroots=coroots,
                    positive_roots=positive,
                    fundamental_weights=fundamental,
                    weyl_vector=rho,
                    algebra_dim=rank + 2 * len(positive),
                    )

    logger.debug('built root system %s: rank=%d positive roots=%d dim=%d',
                 rs_id.value, rank, len(positive), rs.algebra_dim)
    return rs


def weight_of(rs, dw):
    """
    Convert levels into coordinates: `sum(n_i * omega_i)`.
    """

    if len(dw.levels) != rs.rank:
        raise InputError('levels', dw.levels,
                         'expected {} levels for {}'.format(rs.rank, rs.id.value))

    w = WeightVector.zero(rs.ambient_dim)
    for n, omega in zip(dw.levels, rs.fundamental_weights):
        if n:
            w = w + omega * n
    return w


def inner_product(rs, v, w):
    """
    The standard coordinate dot product. Every metric rescaling lives in
    `k3focal.normalization`.
    """

    for x in (v, w):
        if len(x) != rs.ambient_dim:
            raise InputError('vector', x, '{} needs {} coordinates'.format(rs.id.value, rs.ambient_dim))

    return WeightVector(v).dot(WeightVector(w))
