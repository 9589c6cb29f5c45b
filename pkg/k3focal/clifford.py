#!/usr/bin/env python
# coding: utf-8

"""
Clifford systems `P_0, ..., P_{d/2}` on `R^d` for `d = 4, 8, 16`: symmetric
involutions that pairwise anticommute. They model `sqrt(3)` times the shape
operators of a cubic focal manifold.

Generators are Kronecker products of the integer 2x2 blocks::

    I = [[1, 0], [0, 1]]    X = [[0, 1], [1, 0]]
    Z = [[1, 0], [0, -1]]   Y = [[0, -1], [1, 0]]

On `R^d` the system is `X(x)1, Z(x)1` and `Y(x)J` for every complex structure
`J` of an anticommuting family on `R^{d/2}`.
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError
from .errors import InternalError
from .errors import InvariantViolation

logger = logging.getLogger(__name__)

_block = {
    'I': np.array([[1, 0], [0, 1]], dtype=np.int64),
    'X': np.array([[0, 1], [1, 0]], dtype=np.int64),
    'Z': np.array([[1, 0], [0, -1]], dtype=np.int64),
    'Y': np.array([[0, -1], [1, 0]], dtype=np.int64),
}

# Pairwise anticommuting skew words, each with an odd number of Y so that
# J^2 = -1. On R^2k there are k-1 of them.
_complex_structures = {
    2: ('Y',),
    4: ('YI', 'XY', 'ZY'),
    8: ('YII', 'XYX', 'XYZ', 'XIY', 'ZXY', 'ZZY', 'ZYI'),
}


@dataclass(frozen=True)
class CliffordSystem(object):
    """
    Attributes:
        d(int):             size of the matrices.
        matrices(tuple):    `d/2 + 1` integer `numpy` arrays.
        words(tuple):       the tensor words the matrices were built from.
    """

    d: int
    matrices: tuple
    words: tuple

    def __hash__(self):
        return hash((self.d, self.words))

    def __eq__(self, other):
        return (isinstance(other, CliffordSystem)
                and self.d == other.d
                and all(np.array_equal(a, b) for a, b in zip(self.matrices, other.matrices)))


def word_matrix(word):
    """
    Kronecker product of the 2x2 blocks named by the letters of `word`.
    """
    return functools.reduce(np.kron, [_block[c] for c in word])


def clifford_failures(cs):
    """
    List every violated Clifford identity of `cs` as a string. Empty means
    `cs` is a Clifford system.
    """

    eye = np.eye(cs.d, dtype=np.int64)
    zero = np.zeros((cs.d, cs.d), dtype=np.int64)

    failures = []
    for i, p in enumerate(cs.matrices):
        if not np.array_equal(p, p.T):
            failures.append('P{} is not symmetric'.format(i))
        if not np.array_equal(p @ p, eye):
            failures.append('P{}^2 != Id'.format(i))

    for i in range(len(cs.matrices)):
        for j in range(i + 1, len(cs.matrices)):
            p, q = cs.matrices[i], cs.matrices[j]
            if not np.array_equal(p @ q + q @ p, zero):
                failures.append('P{} and P{} do not anticommute'.format(i, j))

    return failures


@functools.lru_cache(maxsize=None)
def build_clifford_system(d):
    """
    Build `d/2 + 1` symmetric anticommuting involutions on `R^d`.

    Args:
        d(int): 4, 8 or 16.

    Returns:
        CliffordSystem

    Raises:
        InputError: for any other `d`.
    """

    if d not in (4, 8, 16):
        raise InputError('d', d, 'Clifford systems are built for d = 4, 8, 16')

    half = d // 2
    rest = 'I' * (half.bit_length() - 1)
    words = ['X' + rest, 'Z' + rest]
    words.extend('Y' + w for w in _complex_structures[half])

    cs = CliffordSystem(d=d,
                        matrices=tuple(word_matrix(w) for w in words),
                        words=tuple(words))

    failures = clifford_failures(cs)
    if failures:
        raise InternalError('d={}: {}'.format(d, '; '.join(failures)))

    logger.debug('built Clifford system on R^%d: %s', d, ' '.join(words))
    return cs


def combine(cs, coeffs):
    """
    `sum(c_k * P_k)` with exact rational entries, as an object array of
    `Fraction`.
    """

    if len(coeffs) != len(cs.matrices):
        raise InputError('coeffs', coeffs, 'expected {} coefficients'.format(len(cs.matrices)))

    total = np.full((cs.d, cs.d), Fraction(0), dtype=object)
    for c, p in zip(coeffs, cs.matrices):
        total = total + p.astype(object) * Fraction(c)
    return total


def trace_form(cs):
    """
    Matrix of `tr(A_k A_j)` for the shape operators `A_k = P_k / sqrt(3)`.
    """
    m = len(cs.matrices)
    return [[Fraction(int(np.trace(cs.matrices[k] @ cs.matrices[j])), 3)
             for j in range(m)]
            for k in range(m)]


def shape_trace_sum(cs):
    """
    `sum_k sum_ij <A_k X_i, X_j>^2 = sum_k tr(A_k A_k^T)`, which equals
    `d/3 * (d/2 + 1)`.
    """
    return sum((Fraction(int(np.trace(p @ p.T)), 3) for p in cs.matrices), Fraction(0))


def jacobi_curvature_constants(space):
    """
    The constants of `Ric_perp = -d * Id` and `A = d/3 * Id` on the normal
    bundle.

    `A(xi_j) = sum_k tr(A_k A_j) xi_k`, read off the Clifford system: the
    trace form must be `d/3` times the identity, and its trace must be the
    shape trace sum.

    Returns:
        (Fraction, Fraction)

    Raises:
        InvariantViolation: if the Clifford system does not give a scalar
            second fundamental form term.
    """

    d = space.d
    cs = build_clifford_system(d)
    form = trace_form(cs)

    a = form[0][0]
    for k, row in enumerate(form):
        for j, x in enumerate(row):
            expected = a if k == j else 0
            if x != expected:
                raise InvariantViolation('{}: tr(A_{} A_{})'.format(space.name, k, j), expected, x)

    if a * len(form) != shape_trace_sum(cs):
        raise InvariantViolation('{}: trace of the second fundamental form term'.format(space.name),
                                 shape_trace_sum(cs), a * len(form))

    return Fraction(-d), a
